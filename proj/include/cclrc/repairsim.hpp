// Copyright 2026 The cclrc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CCLRC_REPAIRSIM_HPP_
#define CCLRC_REPAIRSIM_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "cclrc/codes.hpp"

namespace cclrc {

// Disjoint repair groups of size r+1 with one shared linear relation.
// Group j (j in [0, n/(r+1))) holds positions {j + i*stride : i in [0, r]}
// with stride = n/(r+1), and every codeword satisfies
//   sum_i coeffs[i] * c_{j + i*stride} = 0.
// The same coefficient vector serves every group: the relation comes from
// reducing codewords mod the locality factor (x^stride - xi), which is
// position-shift invariant inside [0, stride).
struct RepairPlan {
  FieldSpec big;
  std::uint64_t q = 0;
  std::uint64_t n = 0;
  unsigned r = 0;
  std::uint64_t stride = 0;            // n/(r+1); also the group count
  std::vector<std::uint32_t> coeffs;   // r+1 packed values, all in F_q*

  std::uint64_t group_of(std::uint64_t pos) const { return pos % stride; }
  std::vector<std::uint64_t> group_positions(std::uint64_t group) const;
};

// Builds the plan through the structural locality detection and validates it
// with check_plan. Throws std::invalid_argument when the code has no
// disjoint-coset locality r.
RepairPlan make_plan(const ConstacyclicCode& code, unsigned r);

// Validates the defining relation on every group for a sample of encoded
// random messages (plus the generator word itself); throws std::logic_error
// on a violation.
void check_plan(const ConstacyclicCode& code, const RepairPlan& plan,
                std::uint64_t sample = 100, std::uint64_t seed = 1);

// Erasures are marked out-of-band: word holds packed symbols, erased[i] says
// position i is unavailable. Repairs position pos from the r survivors in
// its group. Returns the restored packed symbol, or nullopt when another
// position of the group is also erased (locally unrepairable).
std::optional<std::uint32_t> repair_symbol(const RepairPlan& plan,
                                           const std::vector<std::uint32_t>& word,
                                           const std::vector<bool>& erased,
                                           std::uint64_t pos);

struct SimReport {
  std::uint64_t trials = 0;
  std::uint64_t erasures_per_trial = 0;
  std::uint64_t total_erasures = 0;
  std::uint64_t repaired = 0;            // locally repaired symbols
  std::uint64_t unrepairable = 0;        // symbols lacking r live group mates
  std::uint64_t trials_fully_repaired = 0;
  double average_repair_degree = 0.0;    // survivors read per repaired symbol
  std::uint64_t seed = 0;
  unsigned jobs = 1;
};

// Deterministic local-repair simulation: per trial, a uniform random message
// is encoded, erasure_count distinct positions are erased uniformly, and
// each erased symbol is repaired from its group when possible. Restored
// values are checked against the original (mismatch throws). The per-trial
// RNG stream depends only on (seed, trial index), so the report is
// independent of the worker count.
SimReport simulate(const ConstacyclicCode& code, const RepairPlan& plan,
                   std::uint64_t erasure_count, std::uint64_t trials,
                   std::uint64_t seed, unsigned jobs = 1);

// SplitMix64: the fixed RNG behind simulate. Public for tests.
struct SplitMix64 {
  std::uint64_t state;
  explicit SplitMix64(std::uint64_t s) : state(s) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }
  // Uniform in [0, bound) by rejection; bound > 0.
  std::uint64_t below(std::uint64_t bound) {
    std::uint64_t limit = ~std::uint64_t{0} - ~std::uint64_t{0} % bound;
    std::uint64_t v = next();
    while (v >= limit) v = next();
    return v % bound;
  }
};

}  // namespace cclrc

#endif  // CCLRC_REPAIRSIM_HPP_
