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

#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "cclrc/gf.hpp"
#include "doctest.h"

using namespace cclrc;

namespace {
using U32V = std::vector<std::uint32_t>;
}

TEST_CASE("canonical moduli are reproducible") {
  // Frozen against an independent reference implementation of the
  // lexicographic-primitive search.
  CHECK(FieldSpec::make_field(2, 2).modulus() == U32V{1, 1, 1});
  CHECK(FieldSpec::make_field(3, 1).modulus() == U32V{1, 1});
  CHECK(FieldSpec::make_field(2, 4).modulus() == U32V{1, 1, 0, 0, 1});
  CHECK(FieldSpec::make_field(7, 1).modulus() == U32V{4, 1});
  CHECK(FieldSpec::make_field(7, 2).modulus() == U32V{3, 1, 1});
  CHECK(FieldSpec::make_field(13, 2).modulus() == U32V{2, 1, 1});
  CHECK(FieldSpec::make_field(5, 2).modulus() == U32V{2, 1, 1});
  CHECK(FieldSpec::make_field(5, 6).modulus() == U32V{2, 1, 0, 0, 0, 0, 1});
  CHECK(FieldSpec::make_field(2, 6).modulus() == U32V{1, 1, 0, 0, 0, 0, 1});
  CHECK(FieldSpec::make_field(2, 8).modulus() == U32V{1, 0, 1, 1, 1, 0, 0, 0, 1});
  CHECK(FieldSpec::make_field(2, 12).modulus() ==
        U32V{1, 1, 0, 0, 1, 0, 1, 0, 0, 0, 0, 0, 1});
}

TEST_CASE("make_field rejects bad input") {
  CHECK_THROWS_AS(FieldSpec::make_field(4, 1), std::invalid_argument);
  CHECK_THROWS_AS(FieldSpec::make_field(6, 2), std::invalid_argument);
  CHECK_THROWS_AS(FieldSpec::make_field(2, 0), std::invalid_argument);
  CHECK_THROWS_AS(FieldSpec::make_field(2, 25), std::invalid_argument);
}

TEST_CASE("with_modulus validates primitivity") {
  FieldSpec f = FieldSpec::with_modulus(2, {1, 1, 0, 0, 1});
  CHECK(f == FieldSpec::make_field(2, 4));
  // x^4 + x^3 + x^2 + x + 1 is irreducible but its root has order 5.
  CHECK_THROWS_AS(FieldSpec::with_modulus(2, {1, 1, 1, 1, 1}),
                  std::invalid_argument);
  // x^4 + 1 = (x+1)^4 over F_2.
  CHECK_THROWS_AS(FieldSpec::with_modulus(2, {1, 0, 0, 0, 1}),
                  std::invalid_argument);
  CHECK_THROWS_AS(FieldSpec::with_modulus(2, {1, 1, 0, 0, 0}),
                  std::invalid_argument);  // not monic
  CHECK_THROWS_AS(FieldSpec::with_modulus(3, {5, 1}), std::invalid_argument);
}

TEST_CASE("field axioms hold exhaustively on small fields") {
  for (auto [p, e] : std::vector<std::pair<std::uint64_t, unsigned>>{
           {2, 1}, {3, 1}, {5, 1}, {7, 1}, {2, 2}, {3, 2}, {2, 3}, {2, 4},
           {5, 2}, {2, 6}, {3, 3}}) {
    FieldSpec f = FieldSpec::make_field(p, e);
    std::uint64_t N = f.order();
    REQUIRE(N <= 64);
    for (std::uint32_t a = 0; a < N; ++a) {
      CHECK(f.add_(a, 0) == a);
      CHECK(f.mul_(a, 1) == a);
      CHECK(f.add_(a, f.neg_(a)) == 0);
      if (a) CHECK(f.mul_(a, f.inv_(a)) == 1);
      for (std::uint32_t b = 0; b < N; ++b) {
        CHECK(f.add_(a, b) == f.add_(b, a));
        CHECK(f.mul_(a, b) == f.mul_(b, a));
        for (std::uint32_t c = 0; c < N; ++c) {
          CHECK(f.add_(f.add_(a, b), c) == f.add_(a, f.add_(b, c)));
          CHECK(f.mul_(f.mul_(a, b), c) == f.mul_(a, f.mul_(b, c)));
          CHECK(f.mul_(a, f.add_(b, c)) == f.add_(f.mul_(a, b), f.mul_(a, c)));
        }
      }
    }
  }
}

TEST_CASE("field axioms hold on random samples of larger fields") {
  std::mt19937 rng(7);
  for (auto [p, e] : std::vector<std::pair<std::uint64_t, unsigned>>{
           {13, 2}, {5, 6}, {2, 12}}) {
    FieldSpec f = FieldSpec::make_field(p, e);
    std::uniform_int_distribution<std::uint32_t> pick(
        0, static_cast<std::uint32_t>(f.order() - 1));
    for (int i = 0; i < 500; ++i) {
      std::uint32_t a = pick(rng), b = pick(rng), c = pick(rng);
      CHECK(f.add_(a, b) == f.add_(b, a));
      CHECK(f.mul_(f.mul_(a, b), c) == f.mul_(a, f.mul_(b, c)));
      CHECK(f.mul_(a, f.add_(b, c)) == f.add_(f.mul_(a, b), f.mul_(a, c)));
      CHECK(f.add_(a, f.neg_(a)) == 0);
      if (a) {
        CHECK(f.mul_(a, f.inv_(a)) == 1);
        CHECK(f.gen_pow_(static_cast<std::int64_t>(f.dlog_(a))) == a);
      }
    }
  }
}

TEST_CASE("generator has exact multiplicative order") {
  for (auto [p, e] : std::vector<std::pair<std::uint64_t, unsigned>>{
           {2, 4}, {7, 1}, {13, 2}, {5, 6}, {2, 12}}) {
    FieldSpec f = FieldSpec::make_field(p, e);
    std::uint64_t N = f.order();
    CHECK(f.gen_pow_(static_cast<std::int64_t>(N - 1)) == 1);
    for (std::uint64_t r : f.order_prime_factors())
      CHECK(f.gen_pow_(static_cast<std::int64_t>((N - 1) / r)) != 1);
  }
}

TEST_CASE("F_4 arithmetic matches the worked identities") {
  FieldSpec f4 = FieldSpec::make_field(2, 2);
  FieldElement w = f4.generator();
  CHECK(w * w.pow(2) == f4.one());    // w^3 = 1
  CHECK(w + w.pow(2) == f4.one());    // w^2 = w + 1
  CHECK(f4.one().inv() == f4.one());
  CHECK(w.pow(3) == f4.one());
  CHECK(w != f4.one());
}

TEST_CASE("F_25 generator and discrete log examples") {
  FieldSpec f = FieldSpec::make_field(5, 2);
  FieldElement pi = f.generator();
  CHECK(pi.pow(24) == f.one());
  CHECK(pi.pow(12) == -f.one());
  CHECK(f.one().dlog() == 0);
  CHECK(pi.pow(3).dlog() == 3);
  CHECK((-f.one()).dlog() == 12);
  CHECK_THROWS_AS(f.zero().dlog(), std::domain_error);
  CHECK_THROWS_AS(f.zero().inv(), std::domain_error);
}

TEST_CASE("F_7 generator is the smallest primitive root") {
  FieldSpec f = FieldSpec::make_field(7, 1);
  CHECK(f.generator().packed() == 3);
}

TEST_CASE("dlog inverts gen_pow on every exponent of a small field") {
  FieldSpec f = FieldSpec::make_field(2, 4);
  for (std::uint64_t i = 0; i < 15; ++i)
    CHECK(f.gen_pow(static_cast<std::int64_t>(i)).dlog() == i);
  CHECK(f.generator().pow(-1) == f.generator().inv());
  CHECK(f.generator().pow(-7) == f.generator().inv().pow(7));
}

TEST_CASE("subfield membership in F_16") {
  FieldSpec f = FieldSpec::make_field(2, 4);
  FieldElement g = f.generator();
  CHECK(f.zero().in_subfield(4));
  CHECK(f.one().in_subfield(4));
  CHECK(g.pow(5).in_subfield(4));
  CHECK_FALSE(g.in_subfield(4));
  CHECK_THROWS_AS(f.in_subfield_(1, 8), std::invalid_argument);

  auto sub = f.subfield_elements(4);
  CHECK(sub == U32V{0, 1, 6, 7});  // 0, 1, g^5, g^10
  for (auto a : sub)
    for (auto b : sub) {
      CHECK(f.in_subfield_(f.add_(a, b), 4));
      CHECK(f.in_subfield_(f.mul_(a, b), 4));
    }
}

TEST_CASE("subfield embedding F_4 into F_16") {
  FieldSpec f4 = FieldSpec::make_field(2, 2);
  FieldSpec f16 = FieldSpec::make_field(2, 4);
  SubfieldEmbedding emb(f4, f16);
  CHECK(emb.root().dlog() == 5);  // smallest-dlog root of x^2 + x + 1
  CHECK(emb.root().packed() == 6);
  for (std::uint32_t a = 0; a < 4; ++a)
    for (std::uint32_t b = 0; b < 4; ++b) {
      FieldElement x = f4.from_packed(a), y = f4.from_packed(b);
      CHECK(emb.map(x * y) == emb.map(x) * emb.map(y));
      CHECK(emb.map(x + y) == emb.map(x) + emb.map(y));
    }
  CHECK(emb.map(f4.one()) == f16.one());
}

TEST_CASE("prime-subfield embedding is the identity on integers") {
  FieldSpec f7 = FieldSpec::make_field(7, 1);
  FieldSpec f49 = FieldSpec::make_field(7, 2);
  SubfieldEmbedding emb(f7, f49);
  for (std::uint64_t i = 0; i < 7; ++i)
    CHECK(emb.map(f7.from_int(i)) == f49.from_int(i));
}

TEST_CASE("traces") {
  FieldSpec f4 = FieldSpec::make_field(2, 2);
  CHECK(trace_to_prime(f4.zero()) == f4.zero());
  CHECK(trace_to_prime(f4.generator()) == f4.one());
  CHECK(trace_to_prime(f4.one()) == f4.zero());

  FieldSpec f16 = FieldSpec::make_field(2, 4);
  for (std::uint32_t a = 0; a < 16; ++a) {
    FieldElement t = trace_to_subfield(f16.from_packed(a), 4);
    CHECK(t.in_subfield(4));
    FieldElement tp = trace_to_prime(f16.from_packed(a));
    CHECK((tp == f16.zero() || tp == f16.one()));
  }
  CHECK_THROWS_AS(trace_to_subfield(f16.one(), 8), std::invalid_argument);
}

TEST_CASE("solve_quadratic") {
  FieldSpec f2 = FieldSpec::make_field(2, 1);
  CHECK(solve_quadratic(f2.zero(), f2.zero()).size() == 1);  // x^2 = 0
  CHECK(solve_quadratic(f2.one(), f2.one()).empty());        // x^2 + x + 1

  FieldSpec f4 = FieldSpec::make_field(2, 2);
  FieldSpec f16 = FieldSpec::make_field(2, 4);
  SubfieldEmbedding emb(f4, f16);
  // x^2 + x + w has no roots in F_4 but two in F_16.
  CHECK(solve_quadratic(f4.one(), f4.generator()).empty());
  auto roots16 = solve_quadratic(f16.one(), emb.map(f4.generator()));
  CHECK(roots16.size() == 2);
  for (const auto& r : roots16)
    CHECK(r * r + r + emb.map(f4.generator()) == f16.zero());
  // Restriction to the subfield agrees.
  CHECK(solve_quadratic_in_subfield(f16.one(), emb.map(f4.generator()), 4).empty());
}

TEST_CASE("geometric subgroup sums vanish or count the subgroup") {
  // In a field with a primitive N-th root of unity zeta and M | N, the sum
  // of (zeta^{N/M})^{ik} over i < M is M (mod p) when M | k and 0 otherwise.
  for (std::uint64_t N = 1; N <= 63; ++N) {
    std::uint64_t p = 0;
    unsigned e = 0;
    [&] {
      for (std::uint64_t pp = 2; pp < 1000; ++pp) {
        if (!is_prime(pp)) continue;
        std::uint64_t pe = pp;
        for (unsigned ee = 1; pe <= (1u << 20); ++ee, pe *= pp)
          if ((pe - 1) % N == 0) {
            p = pp;
            e = ee;
            return;
          }
      }
    }();
    REQUIRE(p != 0);
    FieldSpec f = FieldSpec::make_field(p, e);
    std::uint32_t zeta = f.gen_pow_(static_cast<std::int64_t>((f.order() - 1) / N));
    for (std::uint64_t M = 1; M <= N; ++M) {
      if (N % M != 0) continue;
      std::uint32_t eta = f.pow_(zeta, static_cast<std::int64_t>(N / M));
      for (std::uint64_t k = 0; k < N; ++k) {
        std::uint32_t sum = 0;
        for (std::uint64_t i = 0; i < M; ++i)
          sum = f.add_(sum, f.pow_(eta, static_cast<std::int64_t>(i * k)));
        std::uint32_t expect = (k % M == 0) ? f.from_int(M).packed() : 0;
        CHECK(sum == expect);
      }
    }
  }
}

TEST_CASE("arithmetic above the table limit uses the fallback paths") {
  FieldSpec f = FieldSpec::make_field(2, 21);
  CHECK(f.order() == (1u << 21));
  std::uint32_t a = f.gen_pow_(12345);
  CHECK(f.dlog_(a) == 12345);
  CHECK(f.mul_(a, f.inv_(a)) == 1);
  CHECK(f.gen_pow_(static_cast<std::int64_t>(f.order() - 1)) == 1);
  std::uint32_t b = f.gen_pow_(54321);
  CHECK(f.mul_(a, b) == f.gen_pow_(12345 + 54321));
}

TEST_CASE("mixed-field operations are rejected") {
  FieldSpec f4 = FieldSpec::make_field(2, 2);
  FieldSpec f16 = FieldSpec::make_field(2, 4);
  CHECK_THROWS_AS(f4.one() + f16.one(), std::invalid_argument);
  CHECK_THROWS_AS(f4.one() * f16.one(), std::invalid_argument);
  CHECK_THROWS_AS(SubfieldEmbedding(f16, f4), std::invalid_argument);
}
