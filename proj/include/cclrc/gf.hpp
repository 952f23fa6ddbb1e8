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
#include <memory>
#include <string>
#include <vector>

namespace cclrc {

class FieldElement;

// Largest supported field order; log/exp tables are built up to kTableLimit,
// above that multiplication falls back to polynomial arithmetic and discrete
// logs to baby-step giant-step.
inline constexpr std::uint64_t kTableLimit = 1u << 20;
inline constexpr std::uint64_t kFieldLimit = 1u << 24;

bool is_prime(std::uint64_t n);
// Distinct prime factors, ascending. Valid for n < 2^48 via trial division.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);
// q = p^e with p prime, e >= 1.
bool is_prime_power(std::uint64_t q, std::uint64_t* p_out = nullptr,
                    unsigned* e_out = nullptr);

// Runtime description of F_{p^e} = F_p[x]/(modulus). Elements are coefficient
// vectors packed in base p, digit i = coefficient of x^i. The class of x is
// always a multiplicative generator (the modulus is primitive). Copies share
// one immutable table set.
class FieldSpec {
public:
  // Canonical field: modulus is the first primitive monic polynomial of
  // degree e in ascending packed order (equivalently, lexicographic from the
  // leading coefficient down). For e = 1 the modulus is x - a with a the
  // smallest primitive root mod p.
  static FieldSpec make_field(std::uint64_t p, unsigned e);
  // Same field arithmetic with a caller-supplied primitive modulus
  // (ascending coefficients, monic, length e + 1). Throws if not primitive.
  static FieldSpec with_modulus(std::uint64_t p,
                                const std::vector<std::uint32_t>& modulus);

  std::uint64_t p() const;
  unsigned e() const;
  std::uint64_t order() const;  // p^e
  const std::vector<std::uint32_t>& modulus() const;
  bool operator==(const FieldSpec& o) const;
  bool operator!=(const FieldSpec& o) const { return !(*this == o); }
  const std::vector<std::uint64_t>& order_prime_factors() const;

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement generator() const;  // class of x
  FieldElement element(const std::vector<std::uint32_t>& coeffs) const;
  FieldElement from_int(std::uint64_t r) const;  // (r mod p) * 1
  FieldElement from_packed(std::uint32_t v) const;
  FieldElement gen_pow(std::int64_t k) const;

  // Packed-value arithmetic. These skip the FieldElement wrapper and are the
  // interface used by polynomial and linear-algebra inner loops.
  std::uint32_t add_(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t sub_(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t neg_(std::uint32_t a) const;
  std::uint32_t mul_(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t inv_(std::uint32_t a) const;
  std::uint32_t div_(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t pow_(std::uint32_t a, std::int64_t k) const;
  std::uint32_t gen_pow_(std::int64_t k) const;
  std::uint64_t dlog_(std::uint32_t a) const;  // generator^result == a

  // Subfield of order q = p^d requires d | e.
  bool has_subfield(std::uint64_t q) const;
  bool in_subfield_(std::uint32_t a, std::uint64_t q) const;
  // All q subfield elements: index 0 is 0, index i > 0 is gsub^(i-1) where
  // gsub = generator^((p^e-1)/(q-1)). This fixed enumeration is the contract
  // used for message-symbol indexing.
  std::vector<std::uint32_t> subfield_elements(std::uint64_t q) const;

  std::vector<std::uint32_t> unpack_(std::uint32_t a) const;
  std::uint32_t pack_(const std::vector<std::uint32_t>& c) const;

private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
  explicit FieldSpec(std::shared_ptr<const Impl> impl);
  static std::shared_ptr<const Impl> build_impl(std::uint64_t p, unsigned e,
                                                std::vector<std::uint32_t> modulus);
};

// Value type pairing a packed element with its field. Binary operators throw
// std::invalid_argument when the operands' fields differ.
class FieldElement {
public:
  FieldElement(FieldSpec f, std::uint32_t packed)
      : f_(std::move(f)), v_(packed) {}

  const FieldSpec& field() const { return f_; }
  std::uint32_t packed() const { return v_; }
  std::vector<std::uint32_t> coeffs() const { return f_.unpack_(v_); }
  bool is_zero() const { return v_ == 0; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const;
  bool operator==(const FieldElement& o) const;
  bool operator!=(const FieldElement& o) const { return !(*this == o); }

  FieldElement pow(std::int64_t k) const;
  FieldElement inv() const;
  std::uint64_t dlog() const;
  bool in_subfield(std::uint64_t q) const;

private:
  FieldSpec f_;
  std::uint32_t v_;
};

// Field isomorphism from a standalone F_q onto the q-element subfield of a
// larger field with the same characteristic. The base generator maps to the
// root of the base modulus with the smallest discrete log in the big field.
class SubfieldEmbedding {
public:
  SubfieldEmbedding(FieldSpec base, FieldSpec big);
  const FieldSpec& base() const { return base_; }
  const FieldSpec& big() const { return big_; }
  FieldElement root() const { return FieldElement(big_, root_); }
  FieldElement map(const FieldElement& x) const;
  std::uint32_t map_(std::uint32_t base_packed) const;

private:
  FieldSpec base_;
  FieldSpec big_;
  std::uint32_t root_;
};

// x + x^p + ... + x^(p^(e-1)); lands in the prime subfield.
FieldElement trace_to_prime(const FieldElement& x);
// x + x^q + ... + x^(q^(e/d - 1)) for q = p^d, d | e; lands in F_q.
FieldElement trace_to_subfield(const FieldElement& x, std::uint64_t q);

// Roots of x^2 + a1 x + a0 in the coefficients' field, ascending packed
// order. Exhaustive scan; the field order must be at most kTableLimit.
std::vector<FieldElement> solve_quadratic(const FieldElement& a1,
                                          const FieldElement& a0);
// Same, restricted to the subfield of order q.
std::vector<FieldElement> solve_quadratic_in_subfield(const FieldElement& a1,
                                                      const FieldElement& a0,
                                                      std::uint64_t q);

}  // namespace cclrc
