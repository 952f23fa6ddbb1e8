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

#include "cclrc/verify.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace cclrc {

namespace {

std::vector<char> root_mask(const ConstacyclicCode& code) {
  std::vector<char> mask(code.n(), 0);
  for (std::uint64_t r : code.roots()) mask[r] = 1;
  return mask;
}

// C(n, k), or cap + 1 as soon as the running value exceeds cap.
std::uint64_t binom_capped(std::uint64_t n, std::uint64_t k,
                           std::uint64_t cap) {
  if (k > n) return 0;
  if (n - k < k) k = n - k;
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;  // exact: r is C(n-k+i, i) after each step
    if (r > cap) return cap + 1;
  }
  return static_cast<std::uint64_t>(r);
}

bool pow_leq(std::uint64_t q, std::uint64_t k, std::uint64_t cap) {
  std::uint64_t v = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    if (v > cap / q) return false;
    v *= q;
  }
  return v <= cap;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("verify: 64-bit overflow");
  return r;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_add_overflow(a, b, &r))
    throw std::overflow_error("verify: 64-bit overflow");
  return r;
}

}  // namespace

bool certificate_valid(const ConstacyclicCode& code,
                       const BoundCertificate& cert) {
  std::uint64_t n = code.n();
  std::vector<char> mask = root_mask(code);
  if (cert.kind == BoundCertificate::Kind::BCH) {
    if (cert.bound != cert.delta) return false;
    if (cert.delta <= 1) return cert.delta == 1;
    if (std::gcd(cert.b1, n) != 1) return false;
    for (std::uint64_t i = 0; i + 2 <= cert.delta; ++i)
      if (!mask[(cert.u + i * cert.b1) % n]) return false;
    return true;
  }
  if (cert.bound != cert.delta + cert.gamma) return false;
  if (cert.delta < 2) return false;
  if (std::gcd(cert.b1, n) != 1 || std::gcd(cert.b2, n) != 1) return false;
  for (std::uint64_t i1 = 0; i1 + 2 <= cert.delta; ++i1)
    for (std::uint64_t i2 = 0; i2 <= cert.gamma; ++i2)
      if (!mask[(cert.u + i1 * cert.b1 + i2 * cert.b2) % n]) return false;
  return true;
}

std::pair<std::uint64_t, BoundCertificate> bch_lower_bound(
    const ConstacyclicCode& code) {
  std::uint64_t n = code.n();
  std::vector<char> mask = root_mask(code);
  BoundCertificate best;
  best.kind = BoundCertificate::Kind::BCH;
  std::uint64_t best_d = 1;
  for (std::uint64_t b = 1; b < n; ++b) {
    if (std::gcd(b, n) != 1) continue;
    // The sequence u, u+b, ... is one n-cycle; find the longest run of roots.
    std::uint64_t zero = n;
    for (std::uint64_t t = 0, s = 0; t < n; ++t, s = (s + b) % n)
      if (!mask[s]) {
        zero = t;
        break;
      }
    if (zero == n) {
      // Full root set: delta = n + 1 with any u.
      if (n + 1 > best_d) {
        best_d = n + 1;
        best = {BoundCertificate::Kind::BCH, 0, b, 0, n + 1, 0, n + 1, false};
      }
      continue;
    }
    std::uint64_t run = 0, run_start = 0;
    std::uint64_t s = (zero * b) % n;
    for (std::uint64_t step = 0; step < n; ++step) {
      s = (s + b) % n;  // walk the cycle once starting just past the zero
      if (mask[s]) {
        if (run == 0) run_start = s;
        ++run;
        if (run + 1 > best_d) {
          best_d = run + 1;
          best = {BoundCertificate::Kind::BCH, run_start, b, 0,
                  run + 1,                     0,         run + 1, false};
        }
      } else {
        run = 0;
      }
    }
  }
  if (best_d == 1) best = BoundCertificate{};
  return {best_d, best};
}

std::pair<std::uint64_t, BoundCertificate> ht_lower_bound(
    const ConstacyclicCode& code, std::uint64_t search_limit) {
  std::uint64_t n = code.n();
  auto [bch_d, bch_c] = bch_lower_bound(code);
  if (bch_d >= n + 1) return {bch_d, bch_c};  // full root set; nothing to add
  std::vector<char> mask = root_mask(code);

  bool full = n <= search_limit;
  std::vector<std::uint64_t> b1s;
  if (full) {
    for (std::uint64_t b = 1; b < n; ++b)
      if (std::gcd(b, n) == 1) b1s.push_back(b);
  } else {
    b1s.push_back(1);
    if (bch_c.b1 != 1 && bch_d > 1) b1s.push_back(bch_c.b1);
  }

  std::uint64_t best_d = bch_d;
  BoundCertificate best = bch_c;
  bool beat_bch = false;
  std::vector<std::uint64_t> rl(n);
  for (std::uint64_t b1 : b1s) {
    // rl[s]: consecutive roots from s stepping +b1 (0 when s is not a root).
    std::uint64_t zero = 0;
    for (std::uint64_t t = 0, s = 0; t < n; ++t, s = (s + b1) % n)
      if (!mask[s]) {
        zero = s;
        break;
      }
    rl[zero] = 0;
    std::uint64_t binv_step = n - b1;  // step backwards along the cycle
    std::uint64_t s = zero;
    for (std::uint64_t t = 1; t < n; ++t) {
      s = (s + binv_step) % n;
      rl[s] = mask[s] ? rl[(s + b1) % n] + 1 : 0;
    }
    for (std::uint64_t b2 = 1; b2 < n; ++b2) {
      if (std::gcd(b2, n) != 1) continue;
      for (std::uint64_t u = 0; u < n; ++u) {
        std::uint64_t mn = rl[u];
        if (mn == 0) continue;
        for (std::uint64_t gamma = 1; gamma < n; ++gamma) {
          std::uint64_t r2 = rl[(u + gamma * b2) % n];
          if (r2 == 0) break;
          mn = std::min(mn, r2);
          std::uint64_t cand = mn + 1 + gamma;
          if (cand > best_d) {
            best_d = cand;
            best = {BoundCertificate::Kind::HT, u,     b1,   b2,
                    mn + 1,                     gamma, cand, false};
            beat_bch = true;
          }
        }
      }
    }
  }
  if (!full && !beat_bch) {
    best = bch_c;
    best.bch_fallback = true;
    return {bch_d, best};
  }
  return {best_d, best};
}

std::uint64_t exact_distance_enumerate(const ConstacyclicCode& code,
                                       std::uint64_t cap,
                                       SparseWord* min_word) {
  std::uint64_t n = code.n(), q = code.q(), k = code.k();
  if (min_word) min_word->clear();
  if (k == 0) return n + 1;  // no nonzero codeword
  if (!pow_leq(q, k, cap))
    throw std::invalid_argument("verify: enumeration cap exceeded");

  const FieldSpec& f = code.big();
  std::vector<std::uint32_t> elems = f.subfield_elements(q);
  const std::vector<std::uint32_t>& gc = code.g().packed();
  std::vector<std::uint32_t> word(n, 0);
  std::vector<std::uint32_t> digit(k, 0);

  auto apply = [&](std::uint64_t i, std::uint32_t from, std::uint32_t to) {
    std::uint32_t delta = f.sub_(elems[to], elems[from]);
    for (std::size_t j = 0; j < gc.size(); ++j)
      word[i + j] = f.add_(word[i + j], f.mul_(delta, gc[j]));
  };

  std::uint64_t best = n + 1;
  for (;;) {
    // odometer increment
    std::uint64_t i = 0;
    while (i < k && digit[i] == q - 1) {
      apply(i, q - 1, 0);
      digit[i] = 0;
      ++i;
    }
    if (i == k) break;  // wrapped: all messages done
    apply(i, digit[i], digit[i] + 1);
    ++digit[i];

    std::uint64_t w = 0;
    for (std::uint32_t v : word) w += (v != 0);
    if (w < best) {
      best = w;
      if (min_word) {
        min_word->clear();
        for (std::uint64_t j = 0; j < n; ++j)
          if (word[j]) min_word->emplace_back(j, word[j]);
      }
    }
  }
  return best;
}

namespace {

struct RankState {
  const FieldSpec* f;
  // Reduced basis rows, each normalized to pivot value 1.
  std::vector<std::vector<std::uint32_t>> rows;
  std::vector<std::size_t> pivots;

  // Reduces v in place; returns false if it vanishes (dependent).
  bool reduce(std::vector<std::uint32_t>& v) const {
    for (std::size_t r = 0; r < rows.size(); ++r) {
      std::uint32_t c = v[pivots[r]];
      if (c == 0) continue;
      const auto& row = rows[r];
      for (std::size_t j = 0; j < v.size(); ++j)
        if (row[j]) v[j] = f->sub_(v[j], f->mul_(c, row[j]));
    }
    for (std::uint32_t x : v)
      if (x) return true;
    return false;
  }

  void push(std::vector<std::uint32_t> v) {
    std::size_t p = 0;
    while (v[p] == 0) ++p;
    std::uint32_t inv = f->inv_(v[p]);
    for (auto& x : v) x = f->mul_(x, inv);
    rows.push_back(std::move(v));
    pivots.push_back(p);
  }

  void pop() {
    rows.pop_back();
    pivots.pop_back();
  }
};

// DFS over column subsets c0 < c1 < ... of size depth_target; returns true
// if some subset is dependent.
bool dependent_subset_dfs(const FieldSpec& f,
                          const std::vector<std::vector<std::uint32_t>>& cols,
                          std::uint64_t first_lo, std::uint64_t first_hi,
                          std::uint64_t depth_target,
                          std::atomic<bool>* stop) {
  std::uint64_t n = cols.size();
  RankState st;
  st.f = &f;
  // explicit stack of column choices
  std::vector<std::uint64_t> choice;
  std::function<bool(std::uint64_t, std::uint64_t)> rec =
      [&](std::uint64_t start, std::uint64_t depth) -> bool {
    if (stop && stop->load(std::memory_order_relaxed)) return false;
    std::uint64_t lo = (depth == 0) ? std::max(start, first_lo) : start;
    std::uint64_t hi = (depth == 0) ? std::min(n, first_hi)
                                    : n - (depth_target - depth - 1);
    for (std::uint64_t c = lo; c < hi; ++c) {
      std::vector<std::uint32_t> v = cols[c];
      if (!st.reduce(v)) return true;  // dependent subset found
      if (depth + 1 < depth_target) {
        st.push(std::move(v));
        if (rec(c + 1, depth + 1)) return true;
        st.pop();
      }
    }
    return false;
  };
  return rec(0, 0);
}

}  // namespace

bool distance_at_least_subset_rank(const ConstacyclicCode& code,
                                   std::uint64_t d_target, std::uint64_t cap,
                                   unsigned jobs) {
  if (d_target <= 1) return true;
  std::uint64_t n = code.n();
  std::uint64_t t1 = d_target - 1;
  if (t1 > n) return code.k() == 0;  // only the zero code has d > n + 1
  if (binom_capped(n, t1, cap) > cap)
    throw std::invalid_argument("verify: subset-rank cap exceeded");

  std::vector<std::vector<std::uint32_t>> cols =
      parity_check_columns(code, code.roots());
  const FieldSpec& f = code.big();

  if (jobs <= 1) {
    return !dependent_subset_dfs(f, cols, 0, n, t1, nullptr);
  }
  std::atomic<bool> dependent{false};
  std::atomic<bool> stop{false};
  std::vector<std::thread> workers;
  std::uint64_t share = (n + jobs - 1) / jobs;
  for (unsigned w = 0; w < jobs; ++w) {
    std::uint64_t lo = w * share, hi = std::min<std::uint64_t>(n, lo + share);
    if (lo >= hi) break;
    workers.emplace_back([&, lo, hi] {
      if (dependent_subset_dfs(f, cols, lo, hi, t1, &stop)) {
        dependent.store(true);
        stop.store(true);
      }
    });
  }
  for (auto& th : workers) th.join();
  return !dependent.load();
}

namespace {

// Context for the residue-class search mod n/3.
struct StructuredCtx {
  const ConstacyclicCode* code;
  const FieldSpec* f;
  std::uint64_t n, q, C;
  std::uint32_t xi, xi_inv, xi2_inv;
  std::vector<std::uint64_t> reps;      // orbit reps fully outside the coset
  std::vector<std::uint32_t> z, zC, z2C;  // per rep
  std::vector<std::uint32_t> units;     // F_q* packed
  // 2-nonzero class patterns, first nonzero normalized to 1; [p] has slot p
  // zero.
  std::uint32_t pat[3][3];
};

StructuredCtx structured_prepare(const ConstacyclicCode& code) {
  StructuredCtx cx;
  cx.code = &code;
  cx.f = &code.big();
  cx.n = code.n();
  cx.q = code.q();
  if (cx.n % 3 != 0)
    throw std::invalid_argument("verify: structured search requires 3 | n");
  cx.C = cx.n / 3;
  const FieldSpec& f = *cx.f;
  std::vector<char> mask = root_mask(code);

  std::uint64_t j0 = 3;
  for (std::uint64_t j = 0; j < 3 && j0 == 3; ++j) {
    bool all = true;
    for (std::uint64_t i = j; i < cx.n; i += 3)
      if (!mask[i]) {
        all = false;
        break;
      }
    if (!all) continue;
    std::uint32_t xi = f.pow_(code.root_value(j), static_cast<std::int64_t>(cx.C));
    if (!f.in_subfield_(xi, cx.q)) continue;
    j0 = j;
    cx.xi = xi;
  }
  if (j0 == 3)
    throw std::invalid_argument(
        "verify: structured search requires the locality factor "
        "(x^{n/3} - xi) with xi in F_q");
  cx.xi_inv = f.inv_(cx.xi);
  cx.xi2_inv = f.mul_(cx.xi_inv, cx.xi_inv);

  // Orbits entirely outside the coset contribute the residual conditions;
  // orbits meeting the coset vanish automatically for F_q words.
  for (std::uint64_t rep : code.orbit_reps()) {
    bool touches = false;
    std::uint64_t e = rep;
    do {
      if (e % 3 == j0) touches = true;
      e = code.frob_exp(e);
    } while (e != rep);
    if (!touches) cx.reps.push_back(rep);
  }
  for (std::uint64_t e : cx.reps) {
    std::uint32_t zv = code.root_value(e);
    cx.z.push_back(zv);
    std::uint32_t zc = f.pow_(zv, static_cast<std::int64_t>(cx.C));
    cx.zC.push_back(zc);
    cx.z2C.push_back(f.mul_(zc, zc));
  }
  std::vector<std::uint32_t> elems = f.subfield_elements(cx.q);
  cx.units.assign(elems.begin() + 1, elems.end());

  std::uint32_t one = 1;
  cx.pat[0][0] = 0;
  cx.pat[0][1] = one;
  cx.pat[0][2] = f.neg_(cx.xi_inv);
  cx.pat[1][0] = one;
  cx.pat[1][1] = 0;
  cx.pat[1][2] = f.neg_(cx.xi2_inv);
  cx.pat[2][0] = one;
  cx.pat[2][1] = f.neg_(cx.xi_inv);
  cx.pat[2][2] = 0;
  return cx;
}

std::uint32_t class_eval(const StructuredCtx& cx, const std::uint32_t* a,
                         std::size_t t) {
  const FieldSpec& f = *cx.f;
  std::uint32_t v = a[0];
  if (a[1]) v = f.add_(v, f.mul_(a[1], cx.zC[t]));
  if (a[2]) v = f.add_(v, f.mul_(a[2], cx.z2C[t]));
  return v;
}

// Assembles the sparse word sum_j x^{v_j} A_j, ascending exponents.
SparseWord assemble_word(const StructuredCtx& cx,
                         const std::vector<std::pair<std::uint64_t,
                                                     std::array<std::uint32_t, 3>>>&
                             parts) {
  SparseWord w;
  for (const auto& [v, a] : parts)
    for (int i = 0; i < 3; ++i)
      if (a[i]) w.emplace_back(v + i * cx.C, a[i]);
  std::sort(w.begin(), w.end());
  if (!cx.code->is_codeword_sparse(w))
    throw std::logic_error("verify: structured search produced a non-codeword");
  return w;
}

// Total candidate evaluations for each weight stage; used to police w_max.
std::uint64_t structured_stage_cost(const StructuredCtx& cx, unsigned w) {
  std::uint64_t C = cx.C, qm1 = cx.q - 1;
  std::uint64_t re = std::max<std::uint64_t>(1, cx.reps.size());
  switch (w) {
    case 2: return 3 * re;
    case 3: return qm1 * re;
    case 4: return checked_mul(3 * C + 3 * C * qm1, re);
    case 5: return checked_mul(3 * C + C * qm1 * qm1, re);
    case 6:
      return checked_add(
          checked_mul(C * qm1 + C * qm1 * qm1, re),
          checked_mul(checked_mul(C * C / 2 * 9, qm1 * qm1), re));
    default: return ~std::uint64_t{0};
  }
}

constexpr std::uint64_t kStructuredBudget = 400000000;

using JoinKey = std::vector<std::uint32_t>;

}  // namespace

std::optional<SparseWord> structured_low_weight_search(
    const ConstacyclicCode& code, unsigned w_max) {
  StructuredCtx cx = structured_prepare(code);
  const FieldSpec& f = *cx.f;
  std::size_t R = cx.reps.size();
  std::uint64_t C = cx.C;

  for (unsigned w = 2; w <= w_max; ++w)
    if (structured_stage_cost(cx, w) > kStructuredBudget)
      throw std::invalid_argument(
          "verify: structured search stage too large; lower w_max");

  using Part = std::pair<std::uint64_t, std::array<std::uint32_t, 3>>;

  // Weight 2: one class, one zero slot; shift-invariant, so v = 0 suffices.
  if (w_max >= 2) {
    for (int p = 0; p < 3; ++p) {
      bool ok = true;
      for (std::size_t t = 0; t < R && ok; ++t)
        ok = class_eval(cx, cx.pat[p], t) == 0;
      if (ok)
        return assemble_word(
            cx, {Part{0, {cx.pat[p][0], cx.pat[p][1], cx.pat[p][2]}}});
    }
  }

  // Weight 3: one full class, c0 normalized to 1; v = 0 suffices.
  if (w_max >= 3) {
    for (std::uint32_t s : cx.units) {
      std::uint32_t c2 =
          f.neg_(f.mul_(cx.xi2_inv, f.add_(1, f.mul_(cx.xi, s))));
      if (c2 == 0) continue;
      std::uint32_t a[3] = {1, s, c2};
      bool ok = true;
      for (std::size_t t = 0; t < R && ok; ++t) ok = class_eval(cx, a, t) == 0;
      if (ok) return assemble_word(cx, {Part{0, {1, s, c2}}});
    }
  }
  if (w_max < 4) return std::nullopt;

  // Two-class patterns are solved by an exact hash join on the vector of
  // residual evaluations: x^v A + x^{v'} B vanishes at every rep iff the
  // key of (v, A) equals the negated key of (v', B).
  std::vector<std::vector<std::uint32_t>> zpow(R);  // zpow[t][v] = z_t^v
  for (std::size_t t = 0; t < R; ++t) {
    zpow[t].resize(C);
    std::uint32_t cur = 1;
    for (std::uint64_t v = 0; v < C; ++v) {
      zpow[t][v] = cur;
      cur = f.mul_(cur, cx.z[t]);
    }
  }
  std::vector<std::array<std::uint32_t, 3>> pat2 = {
      {cx.pat[0][0], cx.pat[0][1], cx.pat[0][2]},
      {cx.pat[1][0], cx.pat[1][1], cx.pat[1][2]},
      {cx.pat[2][0], cx.pat[2][1], cx.pat[2][2]}};
  std::vector<std::uint32_t> ev2(3 * R);  // pattern evals at v = 0
  for (int p = 0; p < 3; ++p)
    for (std::size_t t = 0; t < R; ++t)
      ev2[p * R + t] = class_eval(cx, pat2[p].data(), t);

  auto lhs_key = [&](std::uint64_t v, int p) {
    JoinKey key(R);
    for (std::size_t t = 0; t < R; ++t)
      key[t] = f.mul_(zpow[t][v], ev2[p * R + t]);
    return key;
  };

  // Weight 4: classes v (pattern, scale 1) and v' (pattern, scale s).
  if (w_max >= 4) {
    std::map<JoinKey, std::pair<std::uint64_t, int>> lhs;
    for (std::uint64_t v = 0; v < C; ++v)
      for (int p = 0; p < 3; ++p)
        lhs.emplace(lhs_key(v, p), std::make_pair(v, p));
    for (std::uint64_t v2 = 0; v2 < C; ++v2)
      for (int p2 = 0; p2 < 3; ++p2)
        for (std::uint32_t s : cx.units) {
          JoinKey key(R);
          for (std::size_t t = 0; t < R; ++t)
            key[t] =
                f.neg_(f.mul_(s, f.mul_(zpow[t][v2], ev2[p2 * R + t])));
          auto it = lhs.find(key);
          if (it != lhs.end() && it->second.first != v2) {
            auto [v1, p1] = it->second;
            std::array<std::uint32_t, 3> b{};
            for (int i = 0; i < 3; ++i) b[i] = f.mul_(s, pat2[p2][i]);
            return assemble_word(cx, {Part{v1, pat2[p1]}, Part{v2, b}});
          }
        }
  }
  if (w_max < 5) return std::nullopt;

  // Full 3-coefficient class blocks (b0, b1 free, b2 pinned by the class
  // relation and required nonzero).
  auto block3 = [&](std::uint32_t b0,
                    std::uint32_t b1) -> std::optional<std::array<std::uint32_t, 3>> {
    std::uint32_t b2 =
        f.neg_(f.mul_(cx.xi2_inv, f.add_(b0, f.mul_(cx.xi, b1))));
    if (b2 == 0) return std::nullopt;
    return std::array<std::uint32_t, 3>{b0, b1, b2};
  };

  // Weight 5: 2-class (scale 1) against full 3-class.
  if (w_max >= 5) {
    std::map<JoinKey, std::pair<std::uint64_t, int>> lhs;
    for (std::uint64_t v = 0; v < C; ++v)
      for (int p = 0; p < 3; ++p)
        lhs.emplace(lhs_key(v, p), std::make_pair(v, p));
    for (std::uint64_t v3 = 0; v3 < C; ++v3)
      for (std::uint32_t b0 : cx.units)
        for (std::uint32_t b1 : cx.units) {
          auto blk = block3(b0, b1);
          if (!blk) continue;
          JoinKey key(R);
          for (std::size_t t = 0; t < R; ++t)
            key[t] = f.neg_(
                f.mul_(zpow[t][v3], class_eval(cx, blk->data(), t)));
          auto it = lhs.find(key);
          if (it != lhs.end() && it->second.first != v3) {
            auto [v1, p1] = it->second;
            return assemble_word(cx, {Part{v1, pat2[p1]}, Part{v3, *blk}});
          }
        }
  }
  if (w_max < 6) return std::nullopt;

  // Weight 6, two classes: normalized 3-class (a0 = 1) against full 3-class.
  {
    std::map<JoinKey, std::pair<std::uint64_t, std::array<std::uint32_t, 3>>>
        lhs;
    for (std::uint64_t v = 0; v < C; ++v)
      for (std::uint32_t s : cx.units) {
        auto blk = block3(1, s);
        if (!blk) continue;
        JoinKey key(R);
        for (std::size_t t = 0; t < R; ++t)
          key[t] = f.mul_(zpow[t][v], class_eval(cx, blk->data(), t));
        lhs.emplace(std::move(key), std::make_pair(v, *blk));
      }
    for (std::uint64_t v2 = 0; v2 < C; ++v2)
      for (std::uint32_t b0 : cx.units)
        for (std::uint32_t b1 : cx.units) {
          auto blk = block3(b0, b1);
          if (!blk) continue;
          JoinKey key(R);
          for (std::size_t t = 0; t < R; ++t)
            key[t] = f.neg_(
                f.mul_(zpow[t][v2], class_eval(cx, blk->data(), t)));
          auto it = lhs.find(key);
          if (it != lhs.end() && it->second.first != v2) {
            auto& [v1, a] = it->second;
            return assemble_word(cx, {Part{v1, a}, Part{v2, *blk}});
          }
        }
  }

  // Weight 6, three 2-classes: first class scale 1, the others scaled.
  {
    std::map<JoinKey, std::pair<std::uint64_t, int>> lhs;
    for (std::uint64_t v = 0; v < C; ++v)
      for (int p = 0; p < 3; ++p)
        lhs.emplace(lhs_key(v, p), std::make_pair(v, p));
    for (std::uint64_t v2 = 0; v2 < C; ++v2)
      for (std::uint64_t v3 = v2 + 1; v3 < C; ++v3)
        for (int p2 = 0; p2 < 3; ++p2)
          for (int p3 = 0; p3 < 3; ++p3)
            for (std::uint32_t s2 : cx.units)
              for (std::uint32_t s3 : cx.units) {
                JoinKey key(R);
                for (std::size_t t = 0; t < R; ++t) {
                  std::uint32_t sum = f.add_(
                      f.mul_(s2, f.mul_(zpow[t][v2], ev2[p2 * R + t])),
                      f.mul_(s3, f.mul_(zpow[t][v3], ev2[p3 * R + t])));
                  key[t] = f.neg_(sum);
                }
                auto it = lhs.find(key);
                if (it == lhs.end()) continue;
                auto [v1, p1] = it->second;
                if (v1 == v2 || v1 == v3) continue;
                std::array<std::uint32_t, 3> b2{}, b3{};
                for (int i = 0; i < 3; ++i) {
                  b2[i] = f.mul_(s2, pat2[p2][i]);
                  b3[i] = f.mul_(s3, pat2[p3][i]);
                }
                return assemble_word(cx, {Part{v1, pat2[p1]}, Part{v2, b2},
                                          Part{v3, b3}});
              }
  }
  return std::nullopt;
}

std::optional<RepairPlan> locality_structural(const ConstacyclicCode& code,
                                              unsigned r) {
  std::uint64_t n = code.n();
  if (r == 0 || n % (r + 1) != 0)
    throw std::invalid_argument("verify: locality needs (r+1) | n, r >= 1");
  std::uint64_t C = n / (r + 1);
  const FieldSpec& f = code.big();
  std::vector<char> mask = root_mask(code);
  for (std::uint64_t j = 0; j <= r; ++j) {
    bool all = true;
    for (std::uint64_t i = j; i < n; i += r + 1)
      if (!mask[i]) {
        all = false;
        break;
      }
    if (!all) continue;
    std::uint32_t xi = f.pow_(code.root_value(j), static_cast<std::int64_t>(C));
    if (!f.in_subfield_(xi, code.q())) continue;

    RepairPlan plan{f, code.q(), n, r, C, {}};
    std::uint32_t p = 1;
    for (unsigned i = 0; i <= r; ++i) {
      plan.coeffs.push_back(p);
      p = f.mul_(p, xi);
    }
    // The relation word sum_i xi^i x^{iC} must lie in the dual code.
    SparseWord terms;
    for (unsigned i = 0; i <= r; ++i)
      terms.emplace_back(i * C, plan.coeffs[i]);
    Poly fword = Poly::sparse(f, terms);
    auto [hbar, lam_inv] = dual_generator(code);
    (void)lam_inv;
    if (!hbar.divides(fword))
      throw std::logic_error("verify: locality relation fails the dual check");
    return plan;
  }
  return std::nullopt;
}

std::optional<unsigned> locality_exhaustive(const ConstacyclicCode& code,
                                            unsigned r_max,
                                            std::uint64_t cap) {
  std::uint64_t n = code.n(), k = code.k();
  const FieldSpec& f = code.big();
  if (k == 0) return 0;

  unsigned __int128 work = 0;
  for (unsigned w = 2; w <= r_max + 1; ++w)
    work += static_cast<unsigned __int128>(n) *
            binom_capped(n - 1, w - 1, cap) * k * w * w;
  if (work > cap)
    throw std::invalid_argument("verify: locality_exhaustive cap exceeded");

  // Generator matrix rows x^i g, i in [0, k); column j entry_i = g_{j-i}.
  const std::vector<std::uint32_t>& gc = code.g().packed();
  std::uint64_t dg = gc.size() - 1;
  std::vector<std::vector<std::uint32_t>> col(n,
                                              std::vector<std::uint32_t>(k, 0));
  for (std::uint64_t j = 0; j < n; ++j)
    for (std::uint64_t i = 0; i < k; ++i)
      if (j >= i && j - i <= dg) col[j][i] = gc[j - i];

  unsigned worst = 1;
  for (std::uint64_t pos = 0; pos < n; ++pos) {
    unsigned found = 0;
    std::vector<std::uint64_t> univ;
    for (std::uint64_t j = 0; j < n; ++j)
      if (j != pos) univ.push_back(j);
    for (unsigned w = 2; w <= r_max + 1 && !found; ++w) {
      // all (w-1)-subsets T of the other positions
      std::uint64_t m = w - 1;
      if (univ.size() < m) break;
      std::vector<std::uint64_t> idx(m);
      for (std::uint64_t i = 0; i < m; ++i) idx[i] = i;
      for (;;) {
        RankState st;
        st.f = &f;
        for (std::uint64_t i = 0; i < m; ++i) {
          std::vector<std::uint32_t> v = col[univ[idx[i]]];
          // a dependent T column adds nothing to the span; skip it
          if (st.reduce(v)) st.push(std::move(v));
        }
        std::vector<std::uint32_t> v = col[pos];
        if (!st.reduce(v)) {  // col[pos] in span(T): dual word hits pos
          found = w - 1;
          break;
        }
        std::int64_t i = static_cast<std::int64_t>(m) - 1;
        while (i >= 0 && idx[i] == univ.size() - m + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (std::uint64_t j2 = i + 1; j2 < m; ++j2) idx[j2] = idx[j2 - 1] + 1;
      }
    }
    if (!found) return std::nullopt;
    worst = std::max(worst, found);
  }
  return worst;
}

std::int64_t singleton_defect(std::uint64_t n, std::uint64_t k,
                              std::uint64_t d, unsigned r) {
  if (r == 0) throw std::invalid_argument("verify: r must be positive");
  std::int64_t ceil_kr = static_cast<std::int64_t>((k + r - 1) / r);
  return static_cast<std::int64_t>(n) - static_cast<std::int64_t>(k) + 2 -
         ceil_kr - static_cast<std::int64_t>(d);
}

std::uint64_t beta(unsigned r, unsigned i, std::uint64_t q) {
  if (i > r + 1) throw std::invalid_argument("verify: beta needs i <= r + 1");
  std::uint64_t qm1 = q - 1;
  std::uint64_t p = 1;
  for (unsigned j = 0; j < i; ++j) p = checked_mul(p, qm1);
  std::uint64_t num = (i % 2 == 0) ? checked_add(p, qm1) : p - qm1;
  if (num % q != 0) throw std::logic_error("verify: beta not integral");
  return checked_mul(num / q, binom_capped(r + 1, i, ~std::uint64_t{0} >> 1));
}

std::uint64_t bv_count(std::uint64_t q, unsigned r, std::uint64_t ell,
                       unsigned t) {
  if (ell == 0) throw std::invalid_argument("verify: ell must be positive");
  std::vector<std::uint64_t> base(t + 1, 0);
  for (unsigned i = 0; i <= t && i <= r + 1; ++i) base[i] = beta(r, i, q);
  std::vector<std::uint64_t> acc(t + 1, 0);
  acc[0] = 1;
  for (std::uint64_t rep = 0; rep < ell; ++rep) {
    std::vector<std::uint64_t> nxt(t + 1, 0);
    for (unsigned a = 0; a <= t; ++a) {
      if (acc[a] == 0) continue;
      for (unsigned b = 0; a + b <= t; ++b) {
        if (base[b] == 0) continue;
        nxt[a + b] = checked_add(nxt[a + b], checked_mul(acc[a], base[b]));
      }
    }
    acc.swap(nxt);
  }
  std::uint64_t sum = 0;
  for (std::uint64_t c : acc) sum = checked_add(sum, c);
  return sum;
}

bool is_perfect(std::uint64_t n, std::uint64_t k, std::uint64_t q, unsigned r,
                std::uint64_t d) {
  if (d != 5 && d != 6) return false;
  if (r == 0 || n % (r + 1) != 0) return false;
  std::uint64_t ell = n / (r + 1);
  std::uint64_t rn = r * n;
  if (rn < k * (r + 1)) return false;  // k exceeds the information positions
  std::uint64_t t = ell * r - k;       // rn/(r+1) - k
  std::uint64_t denom =
      checked_add(checked_mul(checked_mul(ell, r * (r + 1) / 2), q - 1), 1);
  // q^t == denom, computed without overflow: denom < 2^64.
  std::uint64_t v = 1;
  for (std::uint64_t i = 0; i < t; ++i) {
    if (v > denom / q) return false;  // v*q would already exceed denom
    v *= q;
  }
  return v == denom;
}

LrcProfile classify(const ConstacyclicCode& code,
                    const ClassifyOptions& opts) {
  LrcProfile p;
  p.n = code.n();
  p.k = code.k();
  p.q = code.q();
  std::uint64_t n = p.n, k = p.k, q = p.q;

  p.d_upper = (k == 0) ? n + 1 : n - k + 1;
  p.methods_used.push_back("singleton-classic");

  // Locality: exact when exhaustive search is affordable, else the
  // structural coset detection.
  unsigned r_used = 0;
  if (n % (opts.r + 1) == 0) {
    auto plan = locality_structural(code, opts.r);
    if (plan) {
      p.locality_disjoint = true;
      r_used = opts.r;
      p.methods_used.push_back("locality-structural");
    }
  }
  try {
    auto le = locality_exhaustive(code, opts.r, opts.subset_rank_cap);
    if (le && *le > 0) {
      r_used = *le;
      p.methods_used.push_back("locality-exhaustive");
    }
  } catch (const std::invalid_argument&) {
    // too large; keep the structural answer
  }
  p.r = r_used;
  if (r_used && k > 0) {
    std::uint64_t eq1 =
        n - k + 2 - (k + r_used - 1) / r_used;  // Singleton-type bound
    p.d_upper = std::min(p.d_upper, eq1);
    p.methods_used.push_back("singleton-upper");
  }

  auto [bch_d, bch_c] = bch_lower_bound(code);
  p.bch = bch_c;
  p.methods_used.push_back("bch");
  auto [ht_d, ht_c] = ht_lower_bound(code, opts.ht_search_limit);
  p.ht = ht_c;
  p.methods_used.push_back(n <= opts.ht_search_limit ? "ht" : "ht-restricted");
  p.d_lower = std::max<std::uint64_t>(1, std::max(bch_d, ht_d));

  auto set_exact = [&](std::uint64_t d, SparseWord word) {
    p.d_exact = d;
    p.d_lower = d;
    p.d_upper = d;
    if (!word.empty()) p.min_weight_word = std::move(word);
  };

  auto run_enumerate = [&]() {
    SparseWord word;
    std::uint64_t d = exact_distance_enumerate(code, opts.enumeration_cap, &word);
    p.methods_used.push_back("enumeration");
    set_exact(d, std::move(word));
  };

  auto structured_affordable = [&]() -> unsigned {
    unsigned w_ok = 0;
    try {
      StructuredCtx cx = structured_prepare(code);
      std::uint64_t total = 0;
      for (unsigned w = 2; w <= opts.structured_wmax; ++w) {
        total = checked_add(total, structured_stage_cost(cx, w));
        if (total > opts.structured_cost_cap) break;
        w_ok = w;
      }
    } catch (const std::invalid_argument&) {
      return 0;
    } catch (const std::overflow_error&) {
      return w_ok;
    }
    return w_ok;
  };

  auto run_structured = [&](unsigned w_hi) {
    auto found = structured_low_weight_search(code, w_hi);
    if (found) {
      std::uint64_t w = found->size();
      p.methods_used.push_back("structured-search(w<=" +
                               std::to_string(w_hi) + ")");
      set_exact(w, std::move(*found));
    } else {
      p.methods_used.push_back("structured-none(w<=" + std::to_string(w_hi) +
                               ")");
      p.d_lower = std::max(p.d_lower, static_cast<std::uint64_t>(w_hi) + 1);
    }
  };

  auto run_subset_rank = [&]() {
    while (!p.d_exact && p.d_lower < p.d_upper) {
      std::uint64_t t = p.d_lower + 1;
      if (binom_capped(n, t - 1, opts.subset_rank_cap) > opts.subset_rank_cap)
        break;
      if (distance_at_least_subset_rank(code, t, opts.subset_rank_cap,
                                        opts.jobs)) {
        p.d_lower = t;
        p.methods_used.push_back("subset-rank(d>=" + std::to_string(t) + ")");
      } else {
        p.d_upper = std::min(p.d_upper, t - 1);
        p.methods_used.push_back("subset-rank-dependency(d<" +
                                 std::to_string(t) + ")");
        break;
      }
    }
  };

  switch (opts.method) {
    case ClassifyOptions::Method::enumerate:
      run_enumerate();
      break;
    case ClassifyOptions::Method::structured: {
      unsigned w_hi = structured_affordable();
      if (w_hi >= 2) run_structured(w_hi);
      break;
    }
    case ClassifyOptions::Method::subset_rank:
      run_subset_rank();
      break;
    case ClassifyOptions::Method::automatic: {
      if (k > 0 && pow_leq(q, k, opts.enumeration_cap)) {
        run_enumerate();
        break;
      }
      unsigned w_hi = structured_affordable();
      if (w_hi >= 2) run_structured(w_hi);
      if (!p.d_exact) run_subset_rank();
      break;
    }
  }

  // Defect and classification need a pinned distance: an explicit d_exact,
  // or matching bounds (value certain without a witness word).
  std::optional<std::uint64_t> d_known;
  if (p.d_exact)
    d_known = p.d_exact;
  else if (p.d_lower == p.d_upper)
    d_known = p.d_lower;
  if (d_known && r_used && k > 0) {
    p.defect = singleton_defect(n, k, *d_known, r_used);
    p.is_singleton_optimal = (*p.defect == 0);
  }
  if (d_known && p.locality_disjoint)
    p.perfect = is_perfect(n, k, q, opts.r, *d_known);
  if (p.perfect) p.methods_used.push_back("perfect-check");
  return p;
}

}  // namespace cclrc
