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

#include "cclrc/gf.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_map>
#include <utility>

namespace cclrc {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

bool is_prime_power(std::uint64_t q, std::uint64_t* p_out, unsigned* e_out) {
  if (q < 2) return false;
  auto f = prime_factors(q);
  if (f.size() != 1) return false;
  std::uint64_t p = f[0];
  unsigned e = 0;
  std::uint64_t m = q;
  while (m > 1) {
    if (m % p != 0) return false;
    m /= p;
    ++e;
  }
  if (p_out) *p_out = p;
  if (e_out) *e_out = e;
  return true;
}

namespace {

// Dense F_p polynomials (ascending coefficients, not packed) used only for
// the modulus search in make_field / with_modulus.
using PPoly = std::vector<std::uint32_t>;

PPoly ptrim(PPoly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

PPoly pmul(const PPoly& a, const PPoly& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  PPoly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      c[i + j] = static_cast<std::uint32_t>(
          (c[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
  }
  return ptrim(std::move(c));
}

PPoly pmod(PPoly a, const PPoly& m, std::uint64_t p) {
  a = ptrim(std::move(a));
  std::uint64_t lead_inv = 1;
  {
    // m is monic everywhere we call this; keep the general inverse anyway.
    std::uint64_t lead = m.back() % p, t = 1, acc = lead, k = p - 2;
    while (k) {
      if (k & 1) t = t * acc % p;
      acc = acc * acc % p;
      k >>= 1;
    }
    lead_inv = t;
  }
  while (a.size() >= m.size()) {
    std::uint64_t c = a.back() % p * lead_inv % p;
    std::size_t shift = a.size() - m.size();
    if (c) {
      for (std::size_t i = 0; i < m.size(); ++i) {
        std::uint64_t sub = c * m[i] % p;
        a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
      }
    }
    a.pop_back();
    a = ptrim(std::move(a));
    if (a.empty()) break;
  }
  return a;
}

PPoly psub(const PPoly& a, const PPoly& b, std::uint64_t p) {
  PPoly c(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) {
    std::uint64_t x = i < a.size() ? a[i] : 0;
    std::uint64_t y = i < b.size() ? b[i] : 0;
    c[i] = static_cast<std::uint32_t>((x + p - y % p) % p);
  }
  return ptrim(std::move(c));
}

PPoly pgcd(PPoly a, PPoly b, std::uint64_t p) {
  a = ptrim(std::move(a));
  b = ptrim(std::move(b));
  while (!b.empty()) {
    PPoly r = pmod(a, b, p);
    // pmod needs monic-ish handling; normalize b to monic first.
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

PPoly pmonic(PPoly a, std::uint64_t p) {
  a = ptrim(std::move(a));
  if (a.empty()) return a;
  std::uint64_t lead = a.back(), t = 1, acc = lead, k = p - 2;
  while (k) {
    if (k & 1) t = t * acc % p;
    acc = acc * acc % p;
    k >>= 1;
  }
  for (auto& c : a) c = static_cast<std::uint32_t>(c * t % p);
  return a;
}

// x^(p^reps) mod m via repeated Frobenius exponentiation.
PPoly frob_pow_x(const PPoly& m, std::uint64_t p, unsigned reps) {
  PPoly x = {0, 1};
  PPoly cur = pmod(x, m, p);
  for (unsigned r = 0; r < reps; ++r) {
    // cur <- cur^p mod m, square-and-multiply on the exponent p.
    PPoly result = {1};
    PPoly base = cur;
    std::uint64_t k = p;
    while (k) {
      if (k & 1) result = pmod(pmul(result, base, p), m, p);
      base = pmod(pmul(base, base, p), m, p);
      k >>= 1;
    }
    cur = std::move(result);
  }
  return cur;
}

bool p_irreducible(const PPoly& m, std::uint64_t p) {
  unsigned e = static_cast<unsigned>(m.size() - 1);
  if (e == 0) return false;
  if (e == 1) return true;
  PPoly x = {0, 1};
  if (psub(frob_pow_x(m, p, e), pmod(x, m, p), p) != PPoly{}) return false;
  for (std::uint64_t r : prime_factors(e)) {
    PPoly diff = psub(frob_pow_x(m, p, static_cast<unsigned>(e / r)),
                      pmod(x, m, p), p);
    PPoly g = pgcd(pmonic(m, p), pmonic(std::move(diff), p), p);
    if (ptrim(std::move(g)).size() != 1) return false;
  }
  return true;
}

PPoly ppowmod(PPoly base, std::uint64_t k, const PPoly& m, std::uint64_t p) {
  PPoly result = {1};
  base = pmod(std::move(base), m, p);
  while (k) {
    if (k & 1) result = pmod(pmul(result, base, p), m, p);
    base = pmod(pmul(base, base, p), m, p);
    k >>= 1;
  }
  return result;
}

bool p_primitive(const PPoly& m, std::uint64_t p, std::uint64_t order,
                 const std::vector<std::uint64_t>& order_factors) {
  // order = p^e - 1; the class of x is primitive iff its order is exactly
  // that, i.e. x^(order/r) != 1 for every prime r | order.
  PPoly x = {0, 1};
  if (ppowmod(x, order, m, p) != PPoly{1}) return false;
  for (std::uint64_t r : order_factors)
    if (ppowmod(x, order / r, m, p) == PPoly{1}) return false;
  return true;
}

}  // namespace

struct FieldSpec::Impl {
  std::uint64_t p = 0;
  unsigned e = 0;
  std::uint64_t N = 0;  // p^e
  std::vector<std::uint32_t> modulus;
  std::vector<std::uint32_t> ppow;  // p^0 .. p^(e-1) as packed strides
  std::vector<std::uint64_t> ofac;  // distinct primes of N - 1
  std::uint32_t gen = 0;            // packed class of x
  std::uint32_t mod_packed = 0;     // packed lower e coefficients (p = 2 path)
  bool tables = false;
  std::vector<std::uint32_t> exp;  // size 2(N-1), exp[i] = gen^i
  std::vector<std::uint32_t> log;  // size N, log[exp[i]] = i for i < N-1

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    if (p == 2) return a ^ b;
    std::uint32_t r = 0;
    for (unsigned i = 0; i < e; ++i) {
      std::uint32_t s = a % p + b % p;
      if (s >= p) s -= static_cast<std::uint32_t>(p);
      r += s * ppow[i];
      a /= static_cast<std::uint32_t>(p);
      b /= static_cast<std::uint32_t>(p);
    }
    return r;
  }

  std::uint32_t neg(std::uint32_t a) const {
    if (p == 2) return a;
    std::uint32_t r = 0;
    for (unsigned i = 0; i < e; ++i) {
      std::uint32_t d = a % p;
      if (d) d = static_cast<std::uint32_t>(p) - d;
      r += d * ppow[i];
      a /= static_cast<std::uint32_t>(p);
    }
    return r;
  }

  // Multiply by the class of x (shift one digit up, reduce the overflow).
  std::uint32_t mulx(std::uint32_t a) const {
    if (e == 1) return static_cast<std::uint32_t>(
        static_cast<std::uint64_t>(a) * gen % p);
    if (p == 2) {
      a <<= 1;
      if (a & (1u << e)) a = (a ^ (1u << e)) ^ mod_packed;
      return a;
    }
    std::uint32_t top = a / ppow[e - 1];
    std::uint32_t shifted = (a - top * ppow[e - 1]) * static_cast<std::uint32_t>(p);
    if (!top) return shifted;
    std::uint32_t r = 0;
    for (unsigned i = 0; i < e; ++i) {
      std::uint32_t d = shifted % p;
      std::uint64_t sub = static_cast<std::uint64_t>(top) * modulus[i] % p;
      d = static_cast<std::uint32_t>((d + p - sub) % p);
      r += d * ppow[i];
      shifted /= static_cast<std::uint32_t>(p);
    }
    return r;
  }

  std::uint32_t mul_nt(std::uint32_t a, std::uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    if (e == 1)
      return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
    std::uint32_t da[32], db[32];
    std::uint64_t acc[63] = {0};
    for (unsigned i = 0; i < e; ++i) {
      da[i] = a % p;
      db[i] = b % p;
      a /= static_cast<std::uint32_t>(p);
      b /= static_cast<std::uint32_t>(p);
    }
    for (unsigned i = 0; i < e; ++i) {
      if (!da[i]) continue;
      for (unsigned j = 0; j < e; ++j)
        acc[i + j] += static_cast<std::uint64_t>(da[i]) * db[j];
    }
    // Reduce degrees 2e-2 .. e using x^e = -(m_0 + ... + m_{e-1} x^{e-1}).
    for (unsigned d = 2 * e - 2; d >= e; --d) {
      std::uint64_t c = acc[d] % p;
      acc[d] = 0;
      if (c) {
        std::uint64_t cneg = p - c;
        for (unsigned i = 0; i < e; ++i)
          acc[d - e + i] += cneg * modulus[i];
      }
    }
    std::uint32_t r = 0;
    for (unsigned i = 0; i < e; ++i)
      r += static_cast<std::uint32_t>(acc[i] % p) * ppow[i];
    return r;
  }

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    if (tables) return (a && b) ? exp[log[a] + log[b]] : 0;
    return mul_nt(a, b);
  }

  std::uint32_t powu(std::uint32_t a, std::uint64_t k) const {
    if (tables && a) {
      std::uint64_t la = log[a];
      return exp[la * (k % (N - 1)) % (N - 1)];
    }
    std::uint32_t result = 1, base = a;
    while (k) {
      if (k & 1) result = mul(result, base);
      base = mul(base, base);
      k >>= 1;
    }
    return result;
  }
};

FieldSpec::FieldSpec(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

std::shared_ptr<const FieldSpec::Impl> FieldSpec::build_impl(
    std::uint64_t p, unsigned e, std::vector<std::uint32_t> modulus) {
  auto impl = std::make_shared<FieldSpec::Impl>();
  impl->p = p;
  impl->e = e;
  impl->N = 1;
  for (unsigned i = 0; i < e; ++i) impl->N *= p;
  impl->modulus = std::move(modulus);
  impl->ppow.resize(e);
  std::uint32_t stride = 1;
  for (unsigned i = 0; i < e; ++i) {
    impl->ppow[i] = stride;
    if (i + 1 < e) stride *= static_cast<std::uint32_t>(p);
  }
  impl->ofac = prime_factors(impl->N - 1);
  impl->gen = (e == 1)
                  ? static_cast<std::uint32_t>((p - impl->modulus[0]) % p)
                  : static_cast<std::uint32_t>(p);
  if (p == 2) {
    std::uint32_t mp = 0;
    for (unsigned i = 0; i < e; ++i) mp |= impl->modulus[i] << i;
    impl->mod_packed = mp;
  }
  impl->tables = impl->N <= kTableLimit;
  if (impl->tables) {
    std::uint64_t m = impl->N - 1;
    impl->exp.resize(2 * m);
    impl->log.assign(impl->N, 0);
    std::uint32_t cur = 1;
    for (std::uint64_t i = 0; i < m; ++i) {
      impl->exp[i] = cur;
      impl->exp[i + m] = cur;
      impl->log[cur] = static_cast<std::uint32_t>(i);
      cur = impl->mulx(cur);
    }
    if (cur != 1)
      throw std::logic_error("gf: generator cycle did not close");
  }
  return impl;
}

FieldSpec FieldSpec::make_field(std::uint64_t p, unsigned e) {
  if (!is_prime(p)) throw std::invalid_argument("gf: p must be prime");
  if (e < 1) throw std::invalid_argument("gf: e must be at least 1");
  std::uint64_t N = 1;
  for (unsigned i = 0; i < e; ++i) {
    N *= p;
    if (N > kFieldLimit) throw std::invalid_argument("gf: field too large");
  }
  if (e == 1) {
    auto fac = prime_factors(p - 1);
    std::uint64_t a = 1;
    for (;; ++a) {
      bool prim = a % p != 0;
      for (std::uint64_t r : prim ? fac : std::vector<std::uint64_t>{}) {
        std::uint64_t t = 1, acc = a % p, k = (p - 1) / r;
        while (k) {
          if (k & 1) t = t * acc % p;
          acc = acc * acc % p;
          k >>= 1;
        }
        if (t == 1) {
          prim = false;
          break;
        }
      }
      if (prim) break;
    }
    std::vector<std::uint32_t> m = {static_cast<std::uint32_t>((p - a % p) % p),
                                    1};
    return FieldSpec(build_impl(p, e, std::move(m)));
  }
  auto ofac = prime_factors(N - 1);
  for (std::uint64_t w = 0;; ++w) {
    if (w % p == 0) continue;  // constant term 0 means x divides it
    PPoly m(e + 1, 0);
    std::uint64_t t = w;
    for (unsigned i = 0; i < e; ++i) {
      m[i] = static_cast<std::uint32_t>(t % p);
      t /= p;
    }
    if (t != 0) throw std::logic_error("gf: no primitive modulus found");
    m[e] = 1;
    if (!p_irreducible(m, p)) continue;
    if (!p_primitive(m, p, N - 1, ofac)) continue;
    return FieldSpec(build_impl(p, e, std::move(m)));
  }
}

FieldSpec FieldSpec::with_modulus(std::uint64_t p,
                                  const std::vector<std::uint32_t>& modulus) {
  if (!is_prime(p)) throw std::invalid_argument("gf: p must be prime");
  if (modulus.size() < 2 || modulus.back() != 1)
    throw std::invalid_argument("gf: modulus must be monic of degree >= 1");
  for (auto c : modulus)
    if (c >= p) throw std::invalid_argument("gf: modulus coefficient out of range");
  unsigned e = static_cast<unsigned>(modulus.size() - 1);
  std::uint64_t N = 1;
  for (unsigned i = 0; i < e; ++i) {
    N *= p;
    if (N > kFieldLimit) throw std::invalid_argument("gf: field too large");
  }
  PPoly m(modulus.begin(), modulus.end());
  if (e > 1 && !p_irreducible(m, p))
    throw std::invalid_argument("gf: modulus not irreducible");
  if (!p_primitive(m, p, N - 1, prime_factors(N - 1)))
    throw std::invalid_argument("gf: modulus not primitive");
  return FieldSpec(build_impl(p, e, modulus));
}

std::uint64_t FieldSpec::p() const { return impl_->p; }
unsigned FieldSpec::e() const { return impl_->e; }
std::uint64_t FieldSpec::order() const { return impl_->N; }
const std::vector<std::uint32_t>& FieldSpec::modulus() const {
  return impl_->modulus;
}
const std::vector<std::uint64_t>& FieldSpec::order_prime_factors() const {
  return impl_->ofac;
}

bool FieldSpec::operator==(const FieldSpec& o) const {
  if (impl_ == o.impl_) return true;
  return impl_->p == o.impl_->p && impl_->e == o.impl_->e &&
         impl_->modulus == o.impl_->modulus;
}

FieldElement FieldSpec::zero() const { return FieldElement(*this, 0); }
FieldElement FieldSpec::one() const { return FieldElement(*this, 1); }
FieldElement FieldSpec::generator() const {
  return FieldElement(*this, impl_->gen);
}

FieldElement FieldSpec::element(const std::vector<std::uint32_t>& coeffs) const {
  return FieldElement(*this, pack_(coeffs));
}

FieldElement FieldSpec::from_int(std::uint64_t r) const {
  return FieldElement(*this, static_cast<std::uint32_t>(r % impl_->p));
}

FieldElement FieldSpec::from_packed(std::uint32_t v) const {
  if (v >= impl_->N) throw std::invalid_argument("gf: packed value out of range");
  return FieldElement(*this, v);
}

FieldElement FieldSpec::gen_pow(std::int64_t k) const {
  return FieldElement(*this, gen_pow_(k));
}

std::uint32_t FieldSpec::add_(std::uint32_t a, std::uint32_t b) const {
  return impl_->add(a, b);
}
std::uint32_t FieldSpec::neg_(std::uint32_t a) const { return impl_->neg(a); }
std::uint32_t FieldSpec::sub_(std::uint32_t a, std::uint32_t b) const {
  return impl_->add(a, impl_->neg(b));
}
std::uint32_t FieldSpec::mul_(std::uint32_t a, std::uint32_t b) const {
  return impl_->mul(a, b);
}

std::uint32_t FieldSpec::inv_(std::uint32_t a) const {
  if (a == 0) throw std::domain_error("gf: division by zero");
  if (impl_->tables)
    return impl_->exp[(impl_->N - 1) - impl_->log[a]];
  return impl_->powu(a, impl_->N - 2);
}

std::uint32_t FieldSpec::div_(std::uint32_t a, std::uint32_t b) const {
  return impl_->mul(a, inv_(b));
}

std::uint32_t FieldSpec::pow_(std::uint32_t a, std::int64_t k) const {
  if (a == 0) {
    if (k > 0) return 0;
    if (k == 0) return 1;
    throw std::domain_error("gf: zero to a negative power");
  }
  std::uint64_t m = impl_->N - 1;
  std::int64_t r = k % static_cast<std::int64_t>(m);
  if (r < 0) r += static_cast<std::int64_t>(m);
  return impl_->powu(a, static_cast<std::uint64_t>(r));
}

std::uint32_t FieldSpec::gen_pow_(std::int64_t k) const {
  return pow_(impl_->gen, k);
}

std::uint64_t FieldSpec::dlog_(std::uint32_t a) const {
  if (a == 0) throw std::domain_error("gf: dlog of zero");
  if (impl_->tables) return impl_->log[a];
  // Baby-step giant-step on the full multiplicative group.
  std::uint64_t m = impl_->N - 1;
  std::uint64_t s = static_cast<std::uint64_t>(std::sqrt(double(m))) + 1;
  std::unordered_map<std::uint32_t, std::uint64_t> baby;
  baby.reserve(s * 2);
  std::uint32_t cur = 1;
  for (std::uint64_t j = 0; j < s; ++j) {
    baby.emplace(cur, j);
    cur = impl_->mul(cur, impl_->gen);
  }
  std::uint32_t factor = impl_->powu(impl_->gen, m - (s % m));  // gen^(-s)
  std::uint32_t gamma = a;
  for (std::uint64_t i = 0; i * s <= m; ++i) {
    auto it = baby.find(gamma);
    if (it != baby.end()) return (i * s + it->second) % m;
    gamma = impl_->mul(gamma, factor);
  }
  throw std::logic_error("gf: dlog search failed");
}

bool FieldSpec::has_subfield(std::uint64_t q) const {
  std::uint64_t m = q;
  unsigned d = 0;
  while (m > 1 && m % impl_->p == 0) {
    m /= impl_->p;
    ++d;
  }
  return q >= 2 && m == 1 && d >= 1 && impl_->e % d == 0;
}

bool FieldSpec::in_subfield_(std::uint32_t a, std::uint64_t q) const {
  if (!has_subfield(q)) throw std::invalid_argument("gf: not a subfield order");
  return pow_(a, static_cast<std::int64_t>(q)) == a || a == 0;
}

std::vector<std::uint32_t> FieldSpec::subfield_elements(std::uint64_t q) const {
  if (!has_subfield(q)) throw std::invalid_argument("gf: not a subfield order");
  std::uint64_t step = (impl_->N - 1) / (q - 1);
  std::vector<std::uint32_t> out;
  out.reserve(q);
  out.push_back(0);
  std::uint32_t g = gen_pow_(static_cast<std::int64_t>(step));
  std::uint32_t cur = 1;
  for (std::uint64_t i = 0; i + 1 < q; ++i) {
    out.push_back(cur);
    cur = impl_->mul(cur, g);
  }
  return out;
}

std::vector<std::uint32_t> FieldSpec::unpack_(std::uint32_t a) const {
  std::vector<std::uint32_t> c(impl_->e);
  for (unsigned i = 0; i < impl_->e; ++i) {
    c[i] = a % impl_->p;
    a /= static_cast<std::uint32_t>(impl_->p);
  }
  return c;
}

std::uint32_t FieldSpec::pack_(const std::vector<std::uint32_t>& c) const {
  if (c.size() > impl_->e)
    throw std::invalid_argument("gf: coefficient vector too long");
  std::uint32_t v = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] >= impl_->p)
      throw std::invalid_argument("gf: coefficient out of range");
    v += c[i] * impl_->ppow[i];
  }
  return v;
}

namespace {
void require_same(const FieldSpec& a, const FieldSpec& b) {
  if (!(a == b)) throw std::invalid_argument("gf: mixed fields");
}
}  // namespace

FieldElement FieldElement::operator+(const FieldElement& o) const {
  require_same(f_, o.f_);
  return FieldElement(f_, f_.add_(v_, o.v_));
}
FieldElement FieldElement::operator-(const FieldElement& o) const {
  require_same(f_, o.f_);
  return FieldElement(f_, f_.sub_(v_, o.v_));
}
FieldElement FieldElement::operator*(const FieldElement& o) const {
  require_same(f_, o.f_);
  return FieldElement(f_, f_.mul_(v_, o.v_));
}
FieldElement FieldElement::operator/(const FieldElement& o) const {
  require_same(f_, o.f_);
  return FieldElement(f_, f_.div_(v_, o.v_));
}
FieldElement FieldElement::operator-() const {
  return FieldElement(f_, f_.neg_(v_));
}
bool FieldElement::operator==(const FieldElement& o) const {
  return f_ == o.f_ && v_ == o.v_;
}
FieldElement FieldElement::pow(std::int64_t k) const {
  return FieldElement(f_, f_.pow_(v_, k));
}
FieldElement FieldElement::inv() const { return FieldElement(f_, f_.inv_(v_)); }
std::uint64_t FieldElement::dlog() const { return f_.dlog_(v_); }
bool FieldElement::in_subfield(std::uint64_t q) const {
  return f_.in_subfield_(v_, q);
}

SubfieldEmbedding::SubfieldEmbedding(FieldSpec base, FieldSpec big)
    : base_(std::move(base)), big_(std::move(big)), root_(0) {
  if (base_.p() != big_.p())
    throw std::invalid_argument("gf: embedding needs equal characteristic");
  std::uint64_t q = base_.order();
  if (!big_.has_subfield(q))
    throw std::invalid_argument("gf: no subfield of that order");
  const auto& m = base_.modulus();
  std::uint64_t step = (big_.order() - 1) / (q - 1);
  bool found = false;
  for (std::uint64_t j = 0; j + 1 < q && !found; ++j) {
    std::uint32_t z = big_.gen_pow_(static_cast<std::int64_t>(j * step));
    std::uint32_t acc = 0;
    for (std::size_t i = m.size(); i-- > 0;)
      acc = big_.add_(big_.mul_(acc, z), m[i] % big_.p());
    if (acc == 0) {
      root_ = z;
      found = true;
    }
  }
  if (!found) throw std::logic_error("gf: embedding root not found");
}

std::uint32_t SubfieldEmbedding::map_(std::uint32_t base_packed) const {
  auto digits = base_.unpack_(base_packed);
  std::uint32_t acc = 0;
  for (std::size_t i = digits.size(); i-- > 0;)
    acc = big_.add_(big_.mul_(acc, root_), digits[i]);
  return acc;
}

FieldElement SubfieldEmbedding::map(const FieldElement& x) const {
  if (!(x.field() == base_)) throw std::invalid_argument("gf: mixed fields");
  return FieldElement(big_, map_(x.packed()));
}

FieldElement trace_to_prime(const FieldElement& x) {
  const FieldSpec& f = x.field();
  std::uint32_t acc = 0, t = x.packed();
  for (unsigned i = 0; i < f.e(); ++i) {
    acc = f.add_(acc, t);
    t = f.pow_(t, static_cast<std::int64_t>(f.p()));
  }
  return FieldElement(f, acc);
}

FieldElement trace_to_subfield(const FieldElement& x, std::uint64_t q) {
  const FieldSpec& f = x.field();
  if (!f.has_subfield(q))
    throw std::invalid_argument("gf: not a subfield order");
  unsigned d = 0;
  std::uint64_t m = q;
  while (m > 1) {
    m /= f.p();
    ++d;
  }
  std::uint32_t acc = 0, t = x.packed();
  for (unsigned i = 0; i < f.e() / d; ++i) {
    acc = f.add_(acc, t);
    t = f.pow_(t, static_cast<std::int64_t>(q));
  }
  return FieldElement(f, acc);
}

std::vector<FieldElement> solve_quadratic(const FieldElement& a1,
                                          const FieldElement& a0) {
  require_same(a1.field(), a0.field());
  const FieldSpec& f = a1.field();
  if (f.order() > kTableLimit)
    throw std::invalid_argument("gf: quadratic scan field too large");
  std::vector<FieldElement> roots;
  for (std::uint32_t v = 0; v < f.order(); ++v) {
    std::uint32_t val = f.add_(f.mul_(v, f.add_(v, a1.packed())), a0.packed());
    if (val == 0) roots.emplace_back(f, v);
  }
  return roots;
}

std::vector<FieldElement> solve_quadratic_in_subfield(const FieldElement& a1,
                                                      const FieldElement& a0,
                                                      std::uint64_t q) {
  require_same(a1.field(), a0.field());
  const FieldSpec& f = a1.field();
  std::vector<FieldElement> roots;
  for (std::uint32_t v : f.subfield_elements(q)) {
    std::uint32_t val = f.add_(f.mul_(v, f.add_(v, a1.packed())), a0.packed());
    if (val == 0) roots.emplace_back(f, v);
  }
  std::sort(roots.begin(), roots.end(),
            [](const FieldElement& a, const FieldElement& b) {
              return a.packed() < b.packed();
            });
  return roots;
}

}  // namespace cclrc
