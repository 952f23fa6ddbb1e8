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

// Acceptance gate: one pass/fail line per criterion, with timings checked
// against each criterion's runtime budget. Criterion 10 drives the CLI
// binary, whose path is argv[1].

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "cclrc/constructions.hpp"
#include "cclrc/repairsim.hpp"
#include "cclrc/verify.hpp"

namespace {

using namespace cclrc;

bool req(bool cond, const char* msg, std::string& why) {
  if (!cond && why.empty()) why = msg;
  return cond;
}

Poly ints_to_poly(const FieldSpec& f, const std::vector<std::uint64_t>& cs) {
  std::vector<std::uint32_t> packed;
  for (std::uint64_t c : cs) packed.push_back(f.from_int(c).packed());
  return Poly(f, std::move(packed));
}

// Next base-q digit vector; false once it wraps to all zeros.
bool next_digits(std::vector<std::uint32_t>& digits, std::uint64_t q) {
  for (auto& d : digits) {
    if (++d < q) return true;
    d = 0;
  }
  return false;
}

struct Harness {
  int failures = 0;

  void run(int id, const char* desc, double budget_s,
           const std::function<bool(std::string&)>& body) {
    auto t0 = std::chrono::steady_clock::now();
    std::string why;
    bool ok = false;
    try {
      ok = body(why);
    } catch (const std::exception& e) {
      ok = false;
      why = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
    if (ok && budget_s > 0 && secs > budget_s) {
      ok = false;
      why = "runtime budget of " + std::to_string((int)budget_s) +
            "s exceeded";
    }
    std::printf("%s %2d  %s  (%.2fs)\n", ok ? "PASS" : "FAIL", id, desc,
                secs);
    if (!ok) {
      std::printf("        %s\n", why.empty() ? "(no detail)" : why.c_str());
      ++failures;
    }
    std::fflush(stdout);
  }
};

bool criterion1(std::string& why) {
  ConstacyclicCode c = thm_even_construct(4);
  bool ok = req(c.n() == 15 && c.k() == 7, "wrong (n, k)", why);
  std::uint64_t d = exact_distance_enumerate(c);
  ok &= req(d == 6, "enumerated distance is not 6", why);
  ok &= req(singleton_defect(15, 7, 6, 2) == 0, "defect is not 0", why);
  return ok;
}

bool criterion2(std::string& why) {
  ConstacyclicCode c = thm_even_construct(7);
  bool ok = req(c.n() == 24 && c.k() == 13, "wrong (n, k)", why);
  ok &= req(distance_at_least_subset_rank(c, 5),
            "subset rank does not certify d >= 5", why);
  WitnessCodeword w = prop3_witness(7);
  ok &= req(w.terms.size() == 5 && c.is_codeword_sparse(w.terms),
            "no weight-5 member witness", why);
  ok &= req(singleton_defect(24, 13, 5, 2) == 1, "defect is not 1", why);

  Poly expected = ints_to_poly(c.big(), {4, 1, 4, 6, 0, 0, 0, 0, 3, 6, 3, 1});
  bool hit = false;
  for (std::uint64_t j = 1; j < 24 && !hit; ++j)
    if (std::gcd(j, std::uint64_t{24}) == 1)
      hit = thm_even_construct(7, j).g() == expected;
  ok &= req(hit, "no selector reproduces the reference generator", why);
  return ok;
}

bool criterion3(std::string& why) {
  ConstacyclicCode c = thm_odd_construct(13);
  bool ok = req(c.n() == 21 && c.k() == 11, "wrong (n, k)", why);
  ok &= req(distance_at_least_subset_rank(c, 6),
            "subset rank does not certify d >= 6", why);
  // 21 - 11 + 2 - ceil(11/2) = 6, so d = 6 exactly and the defect is 0.
  ok &= req(singleton_defect(21, 11, 6, 2) == 0, "defect is not 0", why);

  Poly expected = ints_to_poly(c.big(), {3, 10, 4, 12, 0, 0, 0, 10, 3, 9, 1});
  bool hit = false;
  for (std::uint64_t j = 1; j < 21 && !hit; ++j)
    if (std::gcd(j, std::uint64_t{21}) == 1)
      hit = thm_odd_construct(13, j).g() == expected;
  ok &= req(hit, "no selector reproduces the reference generator", why);
  return ok;
}

bool criterion4(std::string& why) {
  auto [c, w] = thm3_construct(8, 4);
  bool ok = req(c.n() == 585 && c.k() == 386, "wrong (n, k)", why);
  const FieldSpec& f = c.big();
  ok &= req(c.alpha_exp() == 7, "alpha is not pi^7", why);
  // alpha's Frobenius orbit under q = 8 is {1, 8, 64, 512}.
  Poly factored =
      Poly::x_pow_minus(f, 195, 1) *
      Poly::product_from_roots(f, {f.gen_pow_(7), f.gen_pow_(7 * 8),
                                   f.gen_pow_(7 * 64), f.gen_pow_(7 * 512)});
  ok &= req(c.g() == factored, "generator does not match the factored form",
            why);
  ok &= req(ht_lower_bound(c).first >= 4, "HT bound below 4", why);
  ok &= req(!structured_low_weight_search(c, 4).has_value(),
            "structured search found weight <= 4", why);
  ok &= req(w.terms.size() == 5 && c.is_codeword_sparse(w.terms),
            "no weight-5 member witness", why);
  ok &= req(is_perfect(585, 386, 8, 2, 5), "perfection check failed", why);
  ok &= req(std::uint64_t{4096} == 585 * 7 + 1, "4096 != 585*7+1", why);
  return ok;
}

bool criterion5(std::string& why) {
  auto [c, w] = thm4_construct(5, 6, 14485);
  const FieldSpec& f = c.big();
  bool ok = req(c.n() == 3906 && c.k() == 2598, "wrong (n, k)", why);
  ok &= req(c.g().degree() == 1308, "deg g is not 1308", why);
  ok &= req(c.lambda_() == f.from_int(2).packed(), "lambda is not 2", why);

  // pi is a primitive root of x^6 + x^4 + 4x^3 + x^2 + 2 and theta^1302 = 3.
  std::uint32_t pi = f.gen_pow_(14485);
  Poly mod = ints_to_poly(f, {2, 0, 1, 4, 1, 0, 1});
  ok &= req(mod.eval_(pi) == 0, "pi is not a root of the reference modulus",
            why);
  std::uint32_t theta = f.gen_pow_(static_cast<std::int64_t>(c.theta_exp()));
  ok &= req(theta == f.pow_(pi, -3), "theta is not pi^(2-q)", why);
  ok &= req(f.pow_(theta, 1302) == f.from_int(3).packed(),
            "theta^1302 is not 3", why);

  Poly factored =
      Poly::x_pow_minus(f, 1302, f.from_int(3).packed()) * mod;
  ok &= req(c.g() == factored, "generator does not match the factored form",
            why);
  ok &= req(!structured_low_weight_search(c, 4).has_value(),
            "structured search found weight <= 4", why);
  ok &= req(w.terms.size() == 5 && c.is_codeword_sparse(w.terms),
            "no weight-5 member witness", why);
  ok &= req(is_perfect(3906, 2598, 5, 2, 5), "perfection check failed", why);
  ok &= req(std::uint64_t{15625} == 3906 * 4 + 1, "15625 != 3906*4+1", why);
  return ok;
}

bool criterion6(std::string& why) {
  auto [c3, w3] = thm3_construct(8, 2);
  bool ok = req(exact_distance_enumerate(c3) == 5,
                "thm3 (8,2) enumeration is not 5", why);
  ok &= req(is_perfect(9, 4, 8, 2, 5) && std::uint64_t{64} == 9 * 7 + 1,
            "thm3 (8,2) perfection failed", why);
  ok &= req(!structured_low_weight_search(c3, 4).has_value(),
            "thm3 (8,2): structured found weight <= 4", why);
  auto found3 = structured_low_weight_search(c3, 5);
  ok &= req(found3 && found3->size() == 5,
            "thm3 (8,2): structured missed the weight-5 word", why);

  auto [c4, w4] = thm4_construct(5, 2);
  ok &= req(exact_distance_enumerate(c4) == 5,
            "thm4 (5,2) enumeration is not 5", why);
  ok &= req(is_perfect(6, 2, 5, 2, 5) && std::uint64_t{25} == 6 * 4 + 1,
            "thm4 (5,2) perfection failed", why);
  ok &= req(!structured_low_weight_search(c4, 4).has_value(),
            "thm4 (5,2): structured found weight <= 4", why);
  auto found4 = structured_low_weight_search(c4, 5);
  ok &= req(found4 && found4->size() == 5,
            "thm4 (5,2): structured missed the weight-5 word", why);
  return ok;
}

struct SuiteEntry {
  ConstacyclicCode code;
  std::uint64_t witness_weight;  // 0 = no witness
};

std::vector<SuiteEntry> suite() {
  std::vector<SuiteEntry> out;
  out.push_back({thm_even_construct(4), 0});
  for (std::uint64_t q : {7, 13}) {
    WitnessCodeword w = prop3_witness(q);
    out.push_back({thm_even_construct(q), w.terms.size()});
  }
  out.push_back({thm_even_construct(16), 0});
  out.push_back({thm_odd_construct(13), 0});
  out.push_back({remark_construct(13), 0});
  for (std::uint64_t m : {2, 4}) {
    auto [c, w] = thm3_construct(8, m);
    out.push_back({std::move(c), w.terms.size()});
  }
  for (std::uint64_t m : {2, 6}) {
    auto [c, w] = thm4_construct(5, m);
    out.push_back({std::move(c), w.terms.size()});
  }
  return out;
}

bool criterion7(std::string& why) {
  bool ok = true;
  for (const SuiteEntry& entry : suite()) {
    const ConstacyclicCode& c = entry.code;
    std::uint64_t bch = bch_lower_bound(c).first;
    std::uint64_t ht = ht_lower_bound(c).first;
    ok &= req(bch <= ht, "BCH exceeds HT", why);

    // Exact distance: enumeration when q^k fits, otherwise the structured
    // search (every suite code has d <= 6).
    std::uint64_t d;
    double logsize = static_cast<double>(c.k()) * std::log2((double)c.q());
    if (logsize <= 24) {
      d = exact_distance_enumerate(c);
    } else {
      auto found = structured_low_weight_search(c, 6);
      ok &= req(found.has_value(), "no codeword of weight <= 6", why);
      if (!found) continue;
      d = found->size();
    }
    ok &= req(ht <= d, "HT exceeds the exact distance", why);
    if (entry.witness_weight > 0)
      ok &= req(d <= entry.witness_weight, "distance exceeds witness weight",
                why);
    ok &= req(singleton_defect(c.n(), c.k(), d, 2) >= 0, "negative defect",
              why);
    // Perfection-denominator identity at t = 2.
    ok &= req(bv_count(c.q(), 2, c.n() / 3, 2) == c.n() * (c.q() - 1) + 1,
              "ball count identity failed", why);
  }

  // beta is integral across the sweep (checked internally on every call).
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9})
    for (unsigned r = 1; r <= 12; ++r)
      for (unsigned i = 0; i <= r + 1 && i <= 12; ++i) (void)beta(r, i, q);

  // bv_count against direct enumeration of the ell-fold product of [3, 2]
  // single-parity-check codes (prime q, so mod-q integers are the field).
  for (std::uint64_t q : {2, 3}) {
    for (unsigned ell = 1; ell <= 3; ++ell) {
      std::vector<std::uint64_t> by_weight(3 * ell + 1, 0);
      std::vector<std::uint32_t> free_digits(2 * ell, 0);
      do {
        unsigned wt = 0;
        for (unsigned b = 0; b < ell; ++b) {
          std::uint32_t x = free_digits[2 * b], y = free_digits[2 * b + 1];
          std::uint32_t z = (2 * q - x - y) % q;
          wt += (x != 0) + (y != 0) + (z != 0);
        }
        ++by_weight[wt];
      } while (next_digits(free_digits, q));
      std::uint64_t cum = 0;
      for (unsigned t = 0; t <= 3 * ell; ++t) {
        cum += by_weight[t];
        ok &= req(bv_count(q, 2, ell, t) == cum,
                  "bv_count disagrees with direct enumeration", why);
      }
    }
  }
  return ok;
}

bool criterion8(std::string& why) {
  bool ok = true;
  SplitMix64 rng(0x5eed);
  std::vector<FieldSpec> fields = {FieldSpec::make_field(2, 2),
                                   FieldSpec::make_field(7, 1),
                                   FieldSpec::make_field(13, 1)};
  for (int trial = 0; trial < 1000; ++trial) {
    const FieldSpec& f = fields[trial % fields.size()];
    auto random_poly = [&](unsigned deg) {
      std::vector<std::uint32_t> cs(deg + 1);
      for (auto& c : cs) c = (std::uint32_t)rng.below(f.order());
      // Nonzero ends keep the degree and make the reciprocal exact.
      cs[0] = 1 + (std::uint32_t)rng.below(f.order() - 1);
      cs[deg] = 1 + (std::uint32_t)rng.below(f.order() - 1);
      return Poly(f, std::move(cs));
    };
    Poly a = random_poly(1 + (unsigned)rng.below(10));
    Poly b = random_poly(1 + (unsigned)rng.below(10));
    Poly ra = a.monic_reciprocal();
    ok &= req(ra.degree() == a.degree(), "reciprocal changed the degree",
              why);
    ok &= req(ra.weight() == a.weight(), "reciprocal changed the weight",
              why);
    // Divisibility transport: a | ab implies a-bar | (ab)-bar.
    Poly rab = (a * b).monic_reciprocal();
    ok &= req(rab == ra * b.monic_reciprocal(),
              "reciprocal is not multiplicative", why);
    ok &= req(ra.divides(rab), "divisibility did not transport", why);
    if (!ok) return ok;
  }

  auto dot = [](const FieldSpec& f, const std::vector<std::uint32_t>& a,
                const std::vector<std::uint32_t>& b) {
    std::uint32_t s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
      s = f.add_(s, f.mul_(a[i], b[i]));
    return s;
  };
  auto poly_word = [](const Poly& p, std::uint64_t n) {
    std::vector<std::uint32_t> w = p.packed();
    w.resize(n, 0);
    return w;
  };

  // Exhaustive orthogonality on the q=4, n=15 code: every one of the 4^7
  // codewords against a basis of the dual (bilinearity covers all pairs).
  {
    ConstacyclicCode c = thm_even_construct(4);
    auto [hbar, lam_inv] = dual_generator(c);
    (void)lam_inv;
    std::vector<std::vector<std::uint32_t>> dual_basis;
    for (std::uint64_t i = 0; i + hbar.degree() < c.n(); ++i)
      dual_basis.push_back(
          poly_word(Poly::sparse(c.big(), {{i, 1}}) * hbar, c.n()));
    std::vector<std::uint32_t> digits(c.k(), 0);
    do {
      std::vector<std::uint32_t> word = c.encode(digits);
      for (const auto& row : dual_basis)
        ok &= req(dot(c.big(), word, row) == 0, "codeword not orthogonal",
                  why);
      if (!ok) return ok;
    } while (next_digits(digits, c.q()));
  }

  // Randomized pairs on larger codes, plus a properly constacyclic one.
  for (ConstacyclicCode c :
       {thm_even_construct(7), thm_even_construct(16),
        thm4_construct(5, 2).first}) {
    auto [hbar, lam_inv] = dual_generator(c);
    (void)lam_inv;
    std::vector<std::uint32_t> elems = c.big().subfield_elements(c.q());
    std::uint64_t dual_k = c.n() - hbar.degree();
    for (int t = 0; t < 10000; ++t) {
      std::vector<std::uint32_t> digits(c.k());
      for (auto& d : digits) d = (std::uint32_t)rng.below(c.q());
      std::vector<std::uint32_t> word = c.encode(digits);
      std::vector<std::uint32_t> mcs(dual_k);
      for (auto& m : mcs) m = elems[rng.below(c.q())];
      std::vector<std::uint32_t> dual =
          poly_word(Poly(c.big(), std::move(mcs)) * hbar, c.n());
      ok &= req(dot(c.big(), word, dual) == 0, "random pair not orthogonal",
                why);
      if (!ok) return ok;
    }
  }
  return ok;
}

bool criterion9(std::string& why) {
  ConstacyclicCode c = thm_even_construct(4);
  RepairPlan plan = make_plan(c, 2);
  bool ok = true;

  std::vector<std::uint32_t> digits(c.k(), 0);
  std::vector<bool> erased(c.n(), false);
  do {
    std::vector<std::uint32_t> word = c.encode(digits);
    for (std::uint64_t pos = 0; pos < c.n(); ++pos) {
      erased[pos] = true;
      auto got = repair_symbol(plan, word, erased, pos);
      erased[pos] = false;
      ok &= req(got.has_value() && *got == word[pos],
                "single-erasure repair failed", why);
    }
    if (!ok) return ok;
  } while (next_digits(digits, c.q()));

  SimReport rep = simulate(c, plan, 2, 100000, 42, 1);
  // Both erasures land in one group with probability 15/C(15,2) = 1/7.
  double p = 1.0 / 7.0;
  double frac =
      1.0 - (double)rep.trials_fully_repaired / (double)rep.trials;
  double sigma = std::sqrt(p * (1 - p) / (double)rep.trials);
  ok &= req(std::fabs(frac - p) <= 3 * sigma,
            "same-group fraction outside 3 sigma", why);
  ok &= req(rep.repaired + rep.unrepairable == rep.total_erasures,
            "erasure tallies do not add up", why);
  return ok;
}

bool criterion10(const std::string& cli, std::string& why) {
  if (cli.empty()) {
    why = "no CLI binary path was passed as argv[1]";
    return false;
  }
  struct Neg {
    const char* args;
    const char* needle;
  };
  const Neg negs[] = {
      {"construct --family thm-even --q 5", "3 | q - 1"},
      {"construct --family thm-even --q 8", "3 | q - 1"},
      {"construct --family thm3 --q 8 --m 3", "m even"},
      {"construct --family thm3 --q 16 --m 6", "gcd(m, q - 1) = 1"},
      {"construct --family thm4 --q 2 --m 2", "q > 2"},
  };
  const std::string errfile = "acceptance_cli_stderr.txt";
  bool ok = true;
  for (const Neg& neg : negs) {
    std::string cmd = "\"" + cli + "\" " + neg.args + " >/dev/null 2>" +
                      errfile;
    int rc = std::system(cmd.c_str());
    bool exited2 = rc != -1 && WIFEXITED(rc) && WEXITSTATUS(rc) == 2;
    std::ifstream in(errfile);
    std::stringstream buf;
    buf << in.rdbuf();
    bool named = buf.str().find(neg.needle) != std::string::npos;
    if (!exited2 || !named) {
      ok = false;
      if (why.empty())
        why = std::string(neg.args) +
              (exited2 ? ": condition not named" : ": exit code is not 2");
    }
  }
  std::remove(errfile.c_str());
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli = argc > 1 ? argv[1] : "";
  Harness h;
  h.run(1, "thm-even q=4: n=15 k=7, enumerated d=6, defect 0", 5, criterion1);
  h.run(2, "thm-even q=7: subset rank + witness pin d=5, defect 1",
        10, criterion2);
  h.run(3, "thm-odd q=13: subset rank + Singleton bound pin d=6, defect 0",
        10, criterion3);
  h.run(4, "thm3 q=8 m=4: factored g, HT >= 4, witness d=5, perfect", 60,
        criterion4);
  h.run(5, "thm4 q=5 m=6: lambda=2, factored g, witness d=5, perfect", 300,
        criterion5);
  h.run(6, "small siblings (8,2)/(5,2): enumeration d=5, perfect, structured",
        5, criterion6);
  h.run(7, "bound stack, defect, beta, ball counts on the whole suite", 10,
        criterion7);
  h.run(8, "duality: reciprocal transport and C.C-dual orthogonality", 10,
        criterion8);
  h.run(9, "repair: exhaustive single erasure, 2-erasure fraction", 30,
        criterion9);
  h.run(10, "negative controls exit 2 and name the condition", 0,
        [&cli](std::string& why) { return criterion10(cli, why); });

  std::printf("acceptance: %d/10 passed\n", 10 - h.failures);
  return h.failures == 0 ? 0 : 1;
}
