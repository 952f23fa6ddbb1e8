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

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cclrc/codes.hpp"

namespace cclrc {

enum class Family { thm_even, thm_odd, remark_odd, thm3, thm4 };

const char* family_name(Family f);
std::optional<Family> family_from_name(const std::string& name);

// Thrown when construction parameters violate an admissibility condition;
// what() names the violated condition.
class AdmissibilityError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

struct ConstructionParams {
  Family family;
  std::uint64_t q = 0;
  std::uint64_t m = 0;  // used by thm3 / thm4 only
  // Derived on admission:
  std::uint64_t n = 0;
  std::uint64_t k_expected = 0;
  std::uint64_t d_expected = 0;  // 0 when the family does not pin a distance
  std::uint64_t r = 2;
};

// Validates admissibility and derives (n, k, d, r). Throws AdmissibilityError
// with the violated condition named. Notes:
// - thm_even admits both parities of q (3 | q - 1 required); even q expects
//   d = 6, odd q is the degenerate d = 5 regime with its weight-5 witness.
// - remark_odd requires the odd part b of q + 1 to exceed 1; b = 1 collapses
//   to n = 3 <= deg g and is rejected as degenerate.
ConstructionParams admit(Family family, std::uint64_t q, std::uint64_t m = 0);
// Non-throwing variant: reason is filled with the violated condition.
bool admissible(Family family, std::uint64_t q, std::uint64_t m,
                std::string* reason);

// Sparse codeword over F_q in big-field packed coefficients.
struct WitnessCodeword {
  std::vector<std::pair<std::uint64_t, std::uint32_t>> terms;  // (exp, coeff)
  std::uint64_t claimed_weight = 0;
};

// The cyclic families. `selector` relabels the primitive n-th root used as
// alpha' = alpha^selector (gcd(selector, n) = 1); the canonical build is
// selector = 1. Different selectors give different (equivalent) codes; the
// reference generator polynomials frozen in the tests are recovered by
// searching selectors.
ConstacyclicCode thm_even_construct(std::uint64_t q, std::uint64_t selector = 1);
ConstacyclicCode thm_odd_construct(std::uint64_t q, std::uint64_t selector = 1);
ConstacyclicCode remark_construct(std::uint64_t q, std::uint64_t selector = 1);

// Weight-5 witness for the odd-q thm_even shape; member of
// thm_even_construct(q, selector)'s code. Hard errors if the internal
// sixth-root identity pi^2 - pi + 1 = 0 fails or membership does not verify.
WitnessCodeword prop3_witness(std::uint64_t q, std::uint64_t selector = 1);

// The perfect families, with their weight-5 witnesses (verified members).
std::pair<ConstacyclicCode, WitnessCodeword> thm3_construct(
    std::uint64_t q, std::uint64_t m, std::uint64_t selector = 1);
// For thm4 the selector relabels the big-field primitive element
// pi' = pi^selector (gcd(selector, Q - 1) = 1).
std::pair<ConstacyclicCode, WitnessCodeword> thm4_construct(
    std::uint64_t q, std::uint64_t m, std::uint64_t selector = 1);

// Convenience: build the code for any admitted family (witness discarded).
ConstacyclicCode construct_code(const ConstructionParams& params,
                                std::uint64_t selector = 1);

}  // namespace cclrc
