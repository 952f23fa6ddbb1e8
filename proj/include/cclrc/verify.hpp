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

#ifndef CCLRC_VERIFY_HPP_
#define CCLRC_VERIFY_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cclrc/codes.hpp"
#include "cclrc/repairsim.hpp"

namespace cclrc {

// Sparse codeword: (exponent, packed coefficient) terms, coefficients in F_q.
using SparseWord = std::vector<std::pair<std::uint64_t, std::uint32_t>>;

struct BoundCertificate {
  enum class Kind { BCH, HT };
  Kind kind = Kind::BCH;
  std::uint64_t u = 0;
  std::uint64_t b1 = 1;      // progression step; BCH uses b1 only
  std::uint64_t b2 = 0;      // HT second step (0 when unused)
  std::uint64_t delta = 1;   // run length + 1
  std::uint64_t gamma = 0;   // HT extra offsets
  std::uint64_t bound = 1;   // delta (BCH) or delta + gamma (HT)
  // The HT search ran in restricted mode and found nothing beyond BCH; the
  // returned parameters are the BCH certificate.
  bool bch_fallback = false;
};

// Re-derives the bound from the certificate parameters against the code's
// root set: every cited exponent must be a root and the gcd side conditions
// must hold.
bool certificate_valid(const ConstacyclicCode& code,
                       const BoundCertificate& cert);

// Largest delta such that {u + i*b : i in [0, delta-1]} lies in the root set
// for some u and some b coprime to n; delta capped at n + 1 (full root set).
// Returns delta >= 2 with its certificate, or delta = 1 when no progression
// of length 2 exists.
std::pair<std::uint64_t, BoundCertificate> bch_lower_bound(
    const ConstacyclicCode& code);

// Best delta + gamma over u, b1, b2 (both steps coprime to n) such that
// u + i1*b1 + i2*b2 is a root for all i1 in [0, delta-2], i2 in [0, gamma].
// Full scan over both steps when n <= search_limit; otherwise b1 is
// restricted to {1, BCH step} and the result is flagged bch_fallback if the
// restricted search cannot beat plain BCH.
std::pair<std::uint64_t, BoundCertificate> ht_lower_bound(
    const ConstacyclicCode& code, std::uint64_t search_limit = 256);

// Minimum weight over all q^k - 1 nonzero codewords by message enumeration.
// Requires q^k <= cap (throws std::invalid_argument otherwise). For k = 0
// returns n + 1 (no nonzero codeword). When min_word is non-null it receives
// one codeword attaining the minimum.
std::uint64_t exact_distance_enumerate(const ConstacyclicCode& code,
                                       std::uint64_t cap = std::uint64_t{1}
                                                           << 24,
                                       SparseWord* min_word = nullptr);

// True iff every (d_target - 1)-subset of parity-check columns is linearly
// independent over the big field, using one row per root (the full root set;
// representative rows are not sufficient). Since the big-field extension
// preserves minimum distance, this certifies d >= d_target exactly.
// Requires C(n, d_target - 1) <= cap (throws std::invalid_argument).
bool distance_at_least_subset_rank(const ConstacyclicCode& code,
                                   std::uint64_t d_target,
                                   std::uint64_t cap = 100000000,
                                   unsigned jobs = 1);

// Exhaustive search for codewords of weight <= w_max through the residue
// class structure mod n/3: requires the locality factor (x^{n/3} - xi) | g
// with xi in F_q (throws std::invalid_argument otherwise). Any codeword
// then satisfies c_v + xi c_{v+n/3} + xi^2 c_{v+2n/3} = 0 per class v, so
// every touched class carries 2 or 3 nonzero positions and supports of
// weight w decompose into parts {2,3}. Patterns are scanned in ascending
// weight with exact, early-exit enumeration; the returned word (if any) has
// minimum weight among all codewords of weight <= w_max. Runs single
// threaded; output is deterministic.
std::optional<SparseWord> structured_low_weight_search(
    const ConstacyclicCode& code, unsigned w_max);

// Structural locality via the root set: if some residue j mod (r+1) has its
// full stride-(r+1) coset inside the root set, then (x^{n/(r+1)} - xi) | g
// for xi = (theta alpha^j)^{n/(r+1)} and the code has locality r with
// disjoint groups {j', j'+n/(r+1), ...}. Returns the plan (relation
// coefficients (1, xi, ..., xi^r)) after checking xi in F_q and the dual
// membership of the relation word, or nullopt when no coset qualifies.
// Throws std::invalid_argument unless (r+1) | n.
std::optional<RepairPlan> locality_structural(const ConstacyclicCode& code,
                                              unsigned r);

// Exact locality by dual-codeword search: position i has locality w - 1 iff
// some size-w support S containing i admits a dual codeword nonzero at i,
// i.e. rank(G_{S minus i}) = rank(G_S) for the generator matrix G. Returns
// max over positions of the per-position minimum, or nullopt if some
// position exceeds r_max. Throws std::invalid_argument when the estimated
// work exceeds cap.
std::optional<unsigned> locality_exhaustive(const ConstacyclicCode& code,
                                            unsigned r_max,
                                            std::uint64_t cap = 100000000);

// (n - k + 2 - ceil(k/r)) - d.
std::int64_t singleton_defect(std::uint64_t n, std::uint64_t k,
                              std::uint64_t d, unsigned r);

// Number of weight-i words in the [r+1, r] single-parity-check code over
// F_q: ((q-1)^i + (-1)^i (q-1)) C(r+1, i) / q. Always an integer (checked).
// Throws std::invalid_argument for i > r + 1.
std::uint64_t beta(unsigned r, unsigned i, std::uint64_t q);

// |{v in V : wt(v) <= t}| where V is the ell-fold product of [r+1, r]
// single-parity-check codes: the degree <= t truncation of
// (sum_i beta(r,i,q) z^i)^ell, summed. Throws std::overflow_error if the
// count leaves 64 bits.
std::uint64_t bv_count(std::uint64_t q, unsigned r, std::uint64_t ell,
                       unsigned t);

// Hamming-type perfection: q^{rn/(r+1) - k} == ell * C(r+1,2) * (q-1) + 1
// (the t = 2 ball count), requiring d in {5, 6} and (r+1) | n; false
// otherwise. Exact integer comparison on the small side.
bool is_perfect(std::uint64_t n, std::uint64_t k, std::uint64_t q, unsigned r,
                std::uint64_t d);

struct LrcProfile {
  std::uint64_t n = 0;
  std::uint64_t k = 0;
  std::uint64_t q = 0;
  std::optional<std::uint64_t> d_exact;
  std::uint64_t d_lower = 1;
  std::uint64_t d_upper = 0;
  unsigned r = 0;                       // 0 = locality not determined
  bool locality_disjoint = false;       // structural plan found
  std::optional<std::int64_t> defect;   // singleton_defect at the reported r
  bool is_singleton_optimal = false;
  bool perfect = false;
  std::vector<std::string> methods_used;
  std::optional<BoundCertificate> bch;
  std::optional<BoundCertificate> ht;
  std::optional<SparseWord> min_weight_word;
};

struct ClassifyOptions {
  enum class Method { automatic, enumerate, subset_rank, structured };
  Method method = Method::automatic;
  std::uint64_t enumeration_cap = std::uint64_t{1} << 24;  // on q^k
  std::uint64_t subset_rank_cap = 100000000;               // on C(n, t-1)
  std::uint64_t structured_cost_cap = 200000000;           // candidate evals
  unsigned structured_wmax = 6;
  std::uint64_t ht_search_limit = 256;
  unsigned r = 2;
  unsigned jobs = 1;
};

// Fills the profile from (n, lambda, g) alone, never trusting construction
// metadata. d_exact is reported only with an explicit minimum-weight
// codeword or an exhaustive enumeration; upper bounds otherwise come from
// the classic Singleton bound and, once locality is verified, the
// Singleton-type locality bound.
LrcProfile classify(const ConstacyclicCode& code,
                    const ClassifyOptions& options = {});

}  // namespace cclrc

#endif  // CCLRC_VERIFY_HPP_
