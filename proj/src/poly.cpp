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

#include "cclrc/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace cclrc {

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly::Poly(FieldSpec f, std::vector<std::uint32_t> packed)
    : f_(std::move(f)), c_(std::move(packed)) {
  for (auto v : c_)
    if (v >= f_.order())
      throw std::invalid_argument("poly: packed coefficient out of range");
  trim();
}

Poly Poly::constant(const FieldSpec& f, std::uint32_t c) {
  Poly p(f);
  if (c) p.c_ = {c};
  return p;
}

Poly Poly::sparse(
    const FieldSpec& f,
    const std::vector<std::pair<std::uint64_t, std::uint32_t>>& terms) {
  Poly p(f);
  std::uint64_t top = 0;
  for (const auto& [e, c] : terms)
    if (c) top = std::max(top, e + 1);
  p.c_.assign(top, 0);
  for (const auto& [e, c] : terms) {
    if (!c) continue;
    if (p.c_[e] != 0)
      throw std::invalid_argument("poly: duplicate exponent in sparse terms");
    p.c_[e] = c;
  }
  p.trim();
  return p;
}

Poly Poly::x_pow_minus(const FieldSpec& f, std::uint64_t n, std::uint32_t c) {
  Poly p(f);
  p.c_.assign(n + 1, 0);
  p.c_[0] = f.neg_(c);
  p.c_[n] = f.add_(p.c_[n], 1);  // n = 0 degenerates to 1 - c
  p.trim();
  return p;
}

Poly Poly::product_from_roots(const FieldSpec& f,
                              const std::vector<std::uint32_t>& roots) {
  std::vector<std::uint32_t> acc = {1};
  for (std::uint32_t r : roots) {
    acc.push_back(0);
    std::uint32_t nr = f.neg_(r);
    for (std::size_t i = acc.size(); i-- > 1;)
      acc[i] = f.add_(acc[i - 1], f.mul_(acc[i], nr));
    acc[0] = f.mul_(acc[0], nr);
  }
  Poly p(f);
  p.c_ = std::move(acc);
  return p;
}

std::size_t Poly::degree() const {
  if (c_.empty()) throw std::domain_error("poly: zero polynomial has no degree");
  return c_.size() - 1;
}

std::size_t Poly::weight() const {
  return static_cast<std::size_t>(
      std::count_if(c_.begin(), c_.end(), [](std::uint32_t v) { return v != 0; }));
}

namespace {
void require_same(const FieldSpec& a, const FieldSpec& b) {
  if (!(a == b)) throw std::invalid_argument("poly: mixed fields");
}
}  // namespace

Poly Poly::operator+(const Poly& o) const {
  require_same(f_, o.f_);
  Poly r(f_);
  r.c_.assign(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < r.c_.size(); ++i)
    r.c_[i] = f_.add_(coeff_(i), o.coeff_(i));
  r.trim();
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  require_same(f_, o.f_);
  Poly r(f_);
  r.c_.assign(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < r.c_.size(); ++i)
    r.c_[i] = f_.sub_(coeff_(i), o.coeff_(i));
  r.trim();
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  require_same(f_, o.f_);
  Poly r(f_);
  if (c_.empty() || o.c_.empty()) return r;
  r.c_.assign(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (!c_[i]) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j)
      r.c_[i + j] = f_.add_(r.c_[i + j], f_.mul_(c_[i], o.c_[j]));
  }
  r.trim();
  return r;
}

bool Poly::operator==(const Poly& o) const { return f_ == o.f_ && c_ == o.c_; }

Poly Poly::scaled(std::uint32_t c) const {
  Poly r(f_);
  if (!c) return r;
  r.c_ = c_;
  for (auto& v : r.c_) v = f_.mul_(v, c);
  return r;
}

Poly Poly::monic() const {
  if (c_.empty()) throw std::domain_error("poly: cannot normalize zero");
  return scaled(f_.inv_(c_.back()));
}

Poly Poly::times_x_pow(std::uint64_t k) const {
  Poly r(f_);
  if (c_.empty()) return r;
  r.c_.assign(c_.size() + k, 0);
  std::copy(c_.begin(), c_.end(), r.c_.begin() + static_cast<std::ptrdiff_t>(k));
  return r;
}

std::pair<Poly, Poly> Poly::divrem(const Poly& a, const Poly& b) {
  require_same(a.f_, b.f_);
  if (b.c_.empty()) throw std::domain_error("poly: division by zero polynomial");
  const FieldSpec& f = a.f_;
  if (a.c_.size() < b.c_.size()) return {Poly(f), a};
  std::vector<std::uint32_t> rem = a.c_;
  std::vector<std::uint32_t> quo(a.c_.size() - b.c_.size() + 1, 0);
  std::uint32_t lead_inv = f.inv_(b.c_.back());
  for (std::size_t sh = quo.size(); sh-- > 0;) {
    std::uint32_t top = rem[sh + b.c_.size() - 1];
    if (!top) continue;
    std::uint32_t q = f.mul_(top, lead_inv);
    quo[sh] = q;
    for (std::size_t i = 0; i < b.c_.size(); ++i)
      rem[sh + i] = f.sub_(rem[sh + i], f.mul_(q, b.c_[i]));
  }
  Poly qp(f), rp(f);
  qp.c_ = std::move(quo);
  qp.trim();
  rem.resize(b.c_.size() - 1);
  rp.c_ = std::move(rem);
  rp.trim();
  return {std::move(qp), std::move(rp)};
}

bool Poly::divides(const Poly& o) const {
  if (c_.empty()) return o.c_.empty();
  return divrem(o, *this).second.is_zero();
}

std::uint32_t Poly::eval_(std::uint32_t x) const {
  std::uint32_t acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;)
    acc = f_.add_(f_.mul_(acc, x), c_[i]);
  return acc;
}

FieldElement Poly::eval(const FieldElement& x) const {
  require_same(f_, x.field());
  return FieldElement(f_, eval_(x.packed()));
}

Poly Poly::gcd(Poly a, Poly b) {
  require_same(a.f_, b.f_);
  while (!b.c_.empty()) {
    Poly r = divrem(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.c_.empty()) return a;
  return a.monic();
}

Poly Poly::reciprocal() const {
  Poly r(f_);
  r.c_.assign(c_.rbegin(), c_.rend());
  r.trim();
  return r;
}

Poly Poly::monic_reciprocal() const {
  if (c_.empty() || c_[0] == 0)
    throw std::domain_error("poly: monic reciprocal needs nonzero constant term");
  return reciprocal().scaled(f_.inv_(c_[0]));
}

bool Poly::is_over_subfield(std::uint64_t q) const {
  for (auto v : c_)
    if (!f_.in_subfield_(v, q)) return false;
  return true;
}

}  // namespace cclrc
