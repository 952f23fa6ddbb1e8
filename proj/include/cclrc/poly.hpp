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

namespace cclrc {

// Dense univariate polynomial over one field. Coefficients are packed field
// values in ascending degree, always normalized: no trailing zeros, the zero
// polynomial is the empty vector. The zero polynomial has no degree (degree()
// throws); use is_zero() first.
class Poly {
public:
  explicit Poly(FieldSpec f) : f_(std::move(f)) {}
  Poly(FieldSpec f, std::vector<std::uint32_t> packed);

  static Poly constant(const FieldSpec& f, std::uint32_t c);
  // Sum of c * x^exp terms; exponents need not be sorted but must be distinct.
  static Poly sparse(
      const FieldSpec& f,
      const std::vector<std::pair<std::uint64_t, std::uint32_t>>& terms);
  // x^n - c
  static Poly x_pow_minus(const FieldSpec& f, std::uint64_t n, std::uint32_t c);
  // Monic product of (x - r) over the multiset of packed roots; empty -> 1.
  static Poly product_from_roots(const FieldSpec& f,
                                 const std::vector<std::uint32_t>& roots);

  const FieldSpec& field() const { return f_; }
  const std::vector<std::uint32_t>& packed() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  std::size_t degree() const;  // throws std::domain_error on zero
  std::size_t weight() const;
  std::uint32_t coeff_(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  FieldElement coeff(std::size_t i) const { return FieldElement(f_, coeff_(i)); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Poly scaled(std::uint32_t c) const;
  Poly monic() const;  // throws std::domain_error on zero
  Poly times_x_pow(std::uint64_t k) const;

  // (quotient, remainder) with deg r < deg divisor. Divisor must be nonzero.
  static std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b);
  Poly operator%(const Poly& o) const { return divrem(*this, o).second; }
  Poly operator/(const Poly& o) const { return divrem(*this, o).first; }
  bool divides(const Poly& o) const;  // this | o

  FieldElement eval(const FieldElement& x) const;
  std::uint32_t eval_(std::uint32_t x) const;

  // Monic greatest common divisor; gcd(0, 0) = 0.
  static Poly gcd(Poly a, Poly b);

  // f~: coefficients reversed (x^deg * f(1/x)), then normalized.
  Poly reciprocal() const;
  // f-bar = f(0)^{-1} * f~; monic by construction. Requires f(0) != 0.
  Poly monic_reciprocal() const;

  bool is_over_subfield(std::uint64_t q) const;

private:
  FieldSpec f_;
  std::vector<std::uint32_t> c_;
  void trim();
};

}  // namespace cclrc
