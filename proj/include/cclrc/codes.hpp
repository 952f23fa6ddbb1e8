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
#include <utility>
#include <vector>

#include "cclrc/gf.hpp"
#include "cclrc/poly.hpp"

namespace cclrc {

// A length-n lambda-constacyclic code over F_q, all arithmetic carried out in
// one splitting field ("big field") that contains every root of x^n - lambda.
// With pi the big-field generator: theta = pi^theta_exp, alpha = pi^alpha_exp
// is the canonical primitive n-th root of unity (alpha_exp = (Q-1)/n), and the
// roots of x^n - lambda are theta * alpha^i. The code is the ideal generated
// by g = prod_{i in roots} (x - theta alpha^i), with g over F_q.
class ConstacyclicCode {
public:
  const FieldSpec& big() const { return big_; }
  std::uint64_t q() const { return q_; }
  std::uint64_t n() const { return n_; }
  std::uint64_t theta_exp() const { return theta_exp_; }
  std::uint64_t alpha_exp() const { return alpha_exp_; }
  std::uint32_t lambda_() const { return lambda_v_; }
  FieldElement lambda() const { return FieldElement(big_, lambda_v_); }
  const Poly& g() const { return g_; }
  const std::vector<std::uint64_t>& roots() const { return roots_; }
  std::uint64_t k() const { return n_ - roots_.size(); }
  bool is_cyclic() const { return lambda_v_ == 1; }

  // Packed value of theta * alpha^i.
  std::uint32_t root_value(std::uint64_t i) const;
  // Exponent action of x -> x^q on root exponents: i -> (q i + f0) mod n.
  std::uint64_t frob_exp(std::uint64_t i) const;
  // Smallest exponent of each Frobenius orbit of the root set, ascending.
  std::vector<std::uint64_t> orbit_reps() const;

  // Membership by exact division (word = packed F_q values, length n).
  bool is_codeword(const std::vector<std::uint32_t>& word) const;
  // Membership by evaluation at one root per Frobenius orbit. Agrees with
  // is_codeword on every F_q word; this is the cheap path for sparse words.
  bool is_codeword_roots(const std::vector<std::uint32_t>& word) const;
  bool is_codeword_sparse(
      const std::vector<std::pair<std::uint64_t, std::uint32_t>>& terms) const;

  // Non-systematic encoding: message digits (length <= k, values in [0, q))
  // index subfield_elements(q); the codeword is m(x) * g(x).
  std::vector<std::uint32_t> encode(const std::vector<std::uint32_t>& digits) const;

  friend ConstacyclicCode build_code(const FieldSpec& big, std::uint64_t q,
                                     std::uint64_t n, std::int64_t theta_exp,
                                     std::vector<std::uint64_t> root_exponents);

private:
  ConstacyclicCode(FieldSpec big, Poly g)
      : big_(std::move(big)), g_(std::move(g)) {}
  FieldSpec big_;
  std::uint64_t q_ = 0;
  std::uint64_t n_ = 0;
  std::uint64_t theta_exp_ = 0;  // normalized to [0, Q-1)
  std::uint64_t alpha_exp_ = 0;
  std::uint32_t lambda_v_ = 0;
  Poly g_;
  std::vector<std::uint64_t> roots_;
  std::uint64_t frob_offset_ = 0;  // f0 = theta_exp (q-1) / alpha_exp mod n
};

// Validates: q a prime power with F_q inside big, gcd(n, q) = 1, n | Q-1,
// lambda = theta^n in F_q*, root set nonempty and Frobenius-closed.
// Computes g and checks g | x^n - lambda and g over F_q.
ConstacyclicCode build_code(const FieldSpec& big, std::uint64_t q,
                            std::uint64_t n, std::int64_t theta_exp,
                            std::vector<std::uint64_t> root_exponents);

// Euclidean dual: with h = (x^n - lambda)/g, the dual code is the
// lambda^{-1}-constacyclic code generated by monic_reciprocal(h). Returns
// (h-bar, lambda^{-1} packed).
std::pair<Poly, std::uint32_t> dual_generator(const ConstacyclicCode& code);

// (lambda c_{n-1}, c_0, ..., c_{n-2})
std::vector<std::uint32_t> constacyclic_shift(const ConstacyclicCode& code,
                                              const std::vector<std::uint32_t>& word);

// Columns of the evaluation parity check: column j = ((theta alpha^i)^j) for
// i in row_exponents. Rows must cover every Frobenius orbit of the root set.
std::vector<std::vector<std::uint32_t>> parity_check_columns(
    const ConstacyclicCode& code, const std::vector<std::uint64_t>& row_exponents);

}  // namespace cclrc
