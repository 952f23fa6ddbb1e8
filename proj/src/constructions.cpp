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

#include "cclrc/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cclrc {

const char* family_name(Family f) {
  switch (f) {
    case Family::thm_even: return "thm-even";
    case Family::thm_odd: return "thm-odd";
    case Family::remark_odd: return "remark";
    case Family::thm3: return "thm3";
    case Family::thm4: return "thm4";
  }
  return "?";
}

std::optional<Family> family_from_name(const std::string& name) {
  if (name == "thm-even") return Family::thm_even;
  if (name == "thm-odd") return Family::thm_odd;
  if (name == "remark") return Family::remark_odd;
  if (name == "thm3") return Family::thm3;
  if (name == "thm4") return Family::thm4;
  return std::nullopt;
}

namespace {

std::uint64_t mul_order_mod(std::uint64_t a, std::uint64_t n) {
  std::uint64_t cur = a % n, ord = 1;
  while (cur != 1) {
    cur = cur * (a % n) % n;
    ++ord;
    if (ord > n) throw std::logic_error("constructions: order search overflow");
  }
  return ord;
}

std::uint64_t pow_u64_capped(std::uint64_t q, std::uint64_t m, bool* over) {
  std::uint64_t v = 1;
  *over = false;
  for (std::uint64_t i = 0; i < m; ++i) {
    if (v > kFieldLimit / q) {
      *over = true;
      return 0;
    }
    v *= q;
  }
  return v;
}

[[noreturn]] void reject(const std::string& msg) { throw AdmissibilityError(msg); }

}  // namespace

bool admissible(Family family, std::uint64_t q, std::uint64_t m,
                std::string* reason) {
  try {
    admit(family, q, m);
    return true;
  } catch (const AdmissibilityError& e) {
    if (reason) *reason = e.what();
    return false;
  }
}

ConstructionParams admit(Family family, std::uint64_t q, std::uint64_t m) {
  ConstructionParams p;
  p.family = family;
  p.q = q;
  p.m = m;
  std::uint64_t pp = 0;
  unsigned pe = 0;
  if (!is_prime_power(q, &pp, &pe)) reject("q must be a prime power");

  auto cyclic_field_cap = [&](std::uint64_t n) {
    std::uint64_t s = mul_order_mod(q % n, n);
    bool over = false;
    pow_u64_capped(q, s, &over);
    if (over) reject("splitting field q^s exceeds the field cap");
  };

  switch (family) {
    case Family::thm_even:
      if (q < 4) reject("thm-even requires q >= 4");
      if ((q - 1) % 3 != 0) reject("thm-even requires 3 | q - 1");
      p.n = 3 * (q + 1);
      p.k_expected = 2 * q - 1;
      p.d_expected = (q % 2 == 0) ? 6 : 5;
      cyclic_field_cap(p.n);
      break;
    case Family::thm_odd:
      if (q % 2 == 0 || q % 4 != 1) reject("thm-odd requires q = 1 (mod 4)");
      if ((q - 1) % 3 != 0) reject("thm-odd requires 3 | q - 1");
      p.n = 3 * (q + 1) / 2;
      p.k_expected = q - 2;
      p.d_expected = 6;
      cyclic_field_cap(p.n);
      break;
    case Family::remark_odd: {
      if (q % 2 == 0) reject("remark requires q odd");
      if ((q - 1) % 3 != 0) reject("remark requires 3 | q - 1");
      std::uint64_t b = q + 1;
      while (b % 2 == 0) b /= 2;
      if (b <= 1) reject("remark is degenerate: the odd part of q + 1 is 1");
      p.n = 3 * b;
      p.k_expected = 2 * b - 3;
      p.d_expected = 0;  // not pinned by the family
      cyclic_field_cap(p.n);
      break;
    }
    case Family::thm3: {
      if (q % 2 != 0 || q < 4) reject("thm3 requires q >= 4 even");
      if (m < 2 || m % 2 != 0) reject("thm3 requires m even (m >= 2)");
      if (std::gcd(m, q - 1) != 1) reject("thm3 requires gcd(m, q - 1) = 1");
      if ((q + 1) % 3 != 0) reject("thm3 requires 3 | q + 1");
      bool over = false;
      std::uint64_t Q = pow_u64_capped(q, m, &over);
      if (over) reject("q^m exceeds the field cap");
      p.n = (Q - 1) / (q - 1);
      p.k_expected = 2 * p.n / 3 - m;
      p.d_expected = 5;
      break;
    }
    case Family::thm4: {
      if (q <= 2) reject("thm4 requires q > 2");
      if ((q + 1) % 3 != 0) reject("thm4 requires 3 | q + 1");
      if (m < 2 || m % 2 != 0) reject("thm4 requires m even (m >= 2)");
      bool over = false;
      std::uint64_t Q = pow_u64_capped(q, m, &over);
      if (over) reject("q^m exceeds the field cap");
      p.n = (Q - 1) / (q - 1);
      p.k_expected = 2 * p.n / 3 - m;
      p.d_expected = 5;
      break;
    }
  }
  return p;
}

namespace {

FieldSpec splitting_field(std::uint64_t q, std::uint64_t n) {
  std::uint64_t p = 0;
  unsigned e = 0;
  is_prime_power(q, &p, &e);
  std::uint64_t s = mul_order_mod(q % n, n);
  return FieldSpec::make_field(p, e * static_cast<unsigned>(s));
}

void check_selector(std::uint64_t selector, std::uint64_t modulus,
                    const char* what) {
  if (selector == 0 || std::gcd(selector, modulus) != 1)
    throw std::invalid_argument(std::string("constructions: selector must be "
                                            "coprime to ") + what);
}

// L u D relabeled by the selector, for the cyclic families.
std::vector<std::uint64_t> cyclic_roots(std::uint64_t n, std::uint64_t q,
                                        std::uint64_t selector) {
  std::vector<std::uint64_t> r;
  for (std::uint64_t i = 0; i < n; i += 3) r.push_back(i * selector % n);
  for (std::uint64_t d : {std::uint64_t{1}, q % n, (q + 1) % n})
    r.push_back(d * selector % n);
  return r;
}

ConstacyclicCode build_cyclic_family(const ConstructionParams& p,
                                     std::uint64_t selector) {
  check_selector(selector, p.n, "n");
  FieldSpec big = splitting_field(p.q, p.n);
  ConstacyclicCode code =
      build_code(big, p.q, p.n, 0, cyclic_roots(p.n, p.q, selector));
  if (code.k() != p.k_expected)
    throw std::logic_error("constructions: dimension mismatch");
  return code;
}

}  // namespace

ConstacyclicCode thm_even_construct(std::uint64_t q, std::uint64_t selector) {
  return build_cyclic_family(admit(Family::thm_even, q), selector);
}

ConstacyclicCode thm_odd_construct(std::uint64_t q, std::uint64_t selector) {
  return build_cyclic_family(admit(Family::thm_odd, q), selector);
}

ConstacyclicCode remark_construct(std::uint64_t q, std::uint64_t selector) {
  return build_cyclic_family(admit(Family::remark_odd, q), selector);
}

WitnessCodeword prop3_witness(std::uint64_t q, std::uint64_t selector) {
  ConstructionParams p = admit(Family::thm_even, q);
  if (q % 2 == 0)
    reject("prop3 requires q odd");
  ConstacyclicCode code = build_cyclic_family(p, selector);
  const FieldSpec& f = code.big();
  std::uint64_t n = p.n;

  // pi = alpha'^{(q+1)/2} is a primitive sixth root of unity in F_q.
  std::uint64_t u = code.alpha_exp();
  std::uint32_t pi = f.gen_pow_(static_cast<std::int64_t>(
      u * (selector % n) % (f.order() - 1) * ((q + 1) / 2) % (f.order() - 1)));
  if (f.add_(f.sub_(f.mul_(pi, pi), pi), 1) != 0)
    throw std::logic_error("constructions: pi^2 - pi + 1 != 0");
  if (!f.in_subfield_(pi, q))
    throw std::logic_error("constructions: pi not in F_q");

  std::uint32_t two = f.from_int(2).packed();
  std::uint32_t three = f.from_int(3).packed();
  std::uint32_t s = f.div_(three, f.sub_(f.mul_(two, pi), 1));  // 3/(2 pi - 1)

  WitnessCodeword w;
  w.terms = {{0, 1},
             {(q + 1) / 2, f.neg_(s)},
             {q + 1, f.neg_(two)},
             {3 * (q + 1) / 2, s},
             {2 * (q + 1), 1}};
  w.claimed_weight = 5;
  for (const auto& [e, c] : w.terms)
    if (c == 0) throw std::logic_error("constructions: witness coefficient vanished");
  if (!code.is_codeword_sparse(w.terms))
    throw std::logic_error("constructions: witness is not a codeword");
  return w;
}

std::pair<ConstacyclicCode, WitnessCodeword> thm3_construct(
    std::uint64_t q, std::uint64_t m, std::uint64_t selector) {
  ConstructionParams p = admit(Family::thm3, q, m);
  check_selector(selector, p.n, "n");
  std::uint64_t pp = 0;
  unsigned pe = 0;
  is_prime_power(q, &pp, &pe);
  FieldSpec big = FieldSpec::make_field(pp, pe * static_cast<unsigned>(m));
  std::uint64_t n = p.n;

  std::vector<std::uint64_t> roots;
  for (std::uint64_t i = 0; i < n; i += 3) roots.push_back(i * selector % n);
  std::uint64_t d = 1;
  for (std::uint64_t i = 0; i < m; ++i) {
    roots.push_back(d * selector % n);
    d = d * (q % n) % n;
  }
  ConstacyclicCode code = build_code(big, q, n, 0, roots);
  if (code.k() != p.k_expected)
    throw std::logic_error("constructions: dimension mismatch");

  // Witness constants, all relative to alpha' = alpha^selector.
  const FieldSpec& f = big;
  std::uint64_t group = f.order() - 1;
  std::uint64_t ue = code.alpha_exp() * (selector % n) % group;  // alpha' exponent
  auto apow = [&](std::uint64_t e) {
    return f.gen_pow_(static_cast<std::int64_t>(ue * (e % group) % group));
  };
  std::uint32_t beta = apow(n / (q + 1));
  std::uint32_t a = f.add_(beta, f.pow_(beta, static_cast<std::int64_t>(q)));
  std::uint32_t b = f.pow_(beta, static_cast<std::int64_t>(q + 1));
  if (!f.in_subfield_(a, q) || !f.in_subfield_(b, q) || a == 0)
    throw std::logic_error("constructions: beta invariants failed");

  // c0 in F_q* with c0^2 + a c0 + (a^2 + b) = 0 and c0 != a; smallest
  // discrete log on ties.
  std::uint32_t aab = f.add_(f.mul_(a, a), b);
  auto roots_c0 = solve_quadratic_in_subfield(FieldElement(f, a),
                                              FieldElement(f, aab), q);
  std::uint32_t c0 = 0;
  std::uint64_t best = 0;
  bool have = false;
  for (const auto& r : roots_c0) {
    if (r.is_zero() || r.packed() == a) continue;
    std::uint64_t dl = r.dlog();
    if (!have || dl < best) {
      have = true;
      best = dl;
      c0 = r.packed();
    }
  }
  if (!have) throw std::logic_error("constructions: no valid c0 root");

  // rho = a/(beta + c0) must be a primitive cube root of unity.
  std::uint32_t rho = f.div_(a, f.add_(beta, c0));
  std::uint64_t e1;
  if (rho == apow(n / 3))
    e1 = n / 3;
  else if (rho == apow(2 * n / 3))
    e1 = 2 * n / 3;
  else
    throw std::logic_error("constructions: rho is not a cube root of unity");
  std::uint64_t e2 = 2 * e1 % n;
  std::uint64_t pe1 = n / (q + 1);

  WitnessCodeword w;
  w.terms = {{0, c0},
             {e1, a},
             {e2, f.add_(c0, a)},
             {pe1, 1},
             {(pe1 + e2) % n, 1}};
  w.claimed_weight = 5;
  for (const auto& [e, c] : w.terms)
    if (c == 0) throw std::logic_error("constructions: witness coefficient vanished");
  if (!code.is_codeword_sparse(w.terms))
    throw std::logic_error("constructions: witness is not a codeword");
  return {std::move(code), std::move(w)};
}

std::pair<ConstacyclicCode, WitnessCodeword> thm4_construct(
    std::uint64_t q, std::uint64_t m, std::uint64_t selector) {
  ConstructionParams p = admit(Family::thm4, q, m);
  std::uint64_t pp = 0;
  unsigned pe = 0;
  is_prime_power(q, &pp, &pe);
  FieldSpec big = FieldSpec::make_field(pp, pe * static_cast<unsigned>(m));
  std::uint64_t n = p.n;
  std::uint64_t group = big.order() - 1;
  check_selector(selector, group, "Q - 1");
  std::uint64_t t = selector % group;

  // theta = pi^{2 - q} for pi = gen^t; roots are relabeled by t since
  // alpha' = pi^{q-1} = alpha^t.
  std::int64_t theta_exp =
      -static_cast<std::int64_t>(t * ((q - 2) % group) % group);
  std::vector<std::uint64_t> roots;
  for (std::uint64_t i = 0; i < n; i += 3) roots.push_back(i * t % n);
  std::uint64_t acc = 0;  // (q^i - 1)/(q - 1) mod n
  std::uint64_t qpow = 1;
  for (std::uint64_t i = 0; i < m; ++i) {
    roots.push_back((1 + acc) % n * t % n);
    acc = (acc + qpow) % n;
    qpow = qpow * (q % n) % n;
  }
  ConstacyclicCode code = build_code(big, q, n, theta_exp, roots);
  if (code.k() != p.k_expected)
    throw std::logic_error("constructions: dimension mismatch");

  const FieldSpec& f = big;
  // Smallest admissible a in generator-power order of F_q*.
  std::uint64_t step = group / (q - 1);
  std::uint32_t a = 0;
  bool found = false;
  for (std::uint64_t i = 0; i < q - 1 && !found; ++i) {
    std::uint32_t cand = f.gen_pow_(static_cast<std::int64_t>(i * step));
    if (f.add_(cand, 1) == 0) continue;                       // a != -1
    if (f.sub_(cand, f.from_int(2).packed()) == 0) continue;  // a != 2
    std::uint32_t two_a_1 = f.sub_(f.add_(cand, cand), 1);
    if (two_a_1 == 0) continue;  // 2a - 1 != 0
    a = cand;
    found = true;
  }
  if (!found) throw std::logic_error("constructions: no admissible a");

  // omega = alpha'^{n/3}; pi^{kbar3} = -(1 + (1 + a) omega).
  std::uint64_t omega_exp = t * ((q - 1) % group) % group * ((n / 3) % group) % group;
  std::uint32_t omega = f.gen_pow_(static_cast<std::int64_t>(omega_exp));
  std::uint32_t v = f.neg_(f.add_(1, f.mul_(f.add_(1, a), omega)));
  if (v == 0) throw std::logic_error("constructions: witness value vanished");
  // Convert dlog base gen to dlog base pi = gen^t.
  std::uint64_t dv = f.dlog_(v);
  std::uint64_t tinv = 0;
  {
    // Extended Euclid for t^{-1} mod group; gcd(t, group) = 1 by selector check.
    std::int64_t r0 = static_cast<std::int64_t>(group), r1 = static_cast<std::int64_t>(t);
    std::int64_t s0 = 0, s1 = 1;
    while (r1) {
      std::int64_t qq = r0 / r1;
      std::int64_t r2 = r0 - qq * r1, s2 = s0 - qq * s1;
      r0 = r1; r1 = r2; s0 = s1; s1 = s2;
    }
    std::int64_t si = s0 % static_cast<std::int64_t>(group);
    if (si < 0) si += static_cast<std::int64_t>(group);
    tinv = static_cast<std::uint64_t>(si);
  }
  std::uint64_t kbar3 = dv % group * tinv % group;
  std::uint64_t k3 = kbar3 % n;
  std::uint64_t s = (kbar3 - k3) / n;
  if (k3 % (n / 3) == 0)
    throw std::logic_error("constructions: n/3 divides kbar3");
  std::uint32_t b = f.gen_pow_(static_cast<std::int64_t>(t * (s * n % group) % group));
  if (!f.in_subfield_(b, q) || b == 0)
    throw std::logic_error("constructions: b outside F_q*");
  std::uint64_t k4 = (k3 + n / 3) % n;

  auto theta_pow = [&](std::int64_t e) {
    return f.gen_pow_(theta_exp % static_cast<std::int64_t>(group) * (e % static_cast<std::int64_t>(group)) % static_cast<std::int64_t>(group));
  };
  WitnessCodeword w;
  w.terms = {{0, 1},
             {n / 3, f.mul_(a, theta_pow(-static_cast<std::int64_t>(n / 3)))},
             {2 * n / 3, f.neg_(f.mul_(f.add_(1, a),
                                       theta_pow(-static_cast<std::int64_t>(2 * n / 3))))},
             {k3, b},
             {k4, f.neg_(f.mul_(b, theta_pow(static_cast<std::int64_t>(k3) -
                                             static_cast<std::int64_t>(k4))))}};
  w.claimed_weight = 5;
  for (const auto& [e, c] : w.terms) {
    if (c == 0) throw std::logic_error("constructions: witness coefficient vanished");
    if (!f.in_subfield_(c, q))
      throw std::logic_error("constructions: witness coefficient outside F_q");
  }
  if (!code.is_codeword_sparse(w.terms))
    throw std::logic_error("constructions: witness is not a codeword");
  return {std::move(code), std::move(w)};
}

ConstacyclicCode construct_code(const ConstructionParams& params,
                                std::uint64_t selector) {
  switch (params.family) {
    case Family::thm_even: return thm_even_construct(params.q, selector);
    case Family::thm_odd: return thm_odd_construct(params.q, selector);
    case Family::remark_odd: return remark_construct(params.q, selector);
    case Family::thm3: return thm3_construct(params.q, params.m, selector).first;
    case Family::thm4: return thm4_construct(params.q, params.m, selector).first;
  }
  throw std::logic_error("constructions: unknown family");
}

}  // namespace cclrc
