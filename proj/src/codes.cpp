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

#include "cclrc/codes.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cclrc {

std::uint32_t ConstacyclicCode::root_value(std::uint64_t i) const {
  std::int64_t exp = static_cast<std::int64_t>(theta_exp_) +
                     static_cast<std::int64_t>(alpha_exp_ * (i % n_));
  return big_.gen_pow_(exp);
}

std::uint64_t ConstacyclicCode::frob_exp(std::uint64_t i) const {
  return (i % n_ * (q_ % n_) % n_ + frob_offset_) % n_;
}

std::vector<std::uint64_t> ConstacyclicCode::orbit_reps() const {
  std::vector<std::uint64_t> reps;
  std::vector<bool> seen(n_, false);
  for (std::uint64_t r : roots_) {
    if (seen[r]) continue;
    reps.push_back(r);
    std::uint64_t c = r;
    do {
      seen[c] = true;
      c = frob_exp(c);
    } while (c != r);
  }
  return reps;
}

namespace {
void check_word(const ConstacyclicCode& code, const std::vector<std::uint32_t>& w) {
  if (w.size() != code.n())
    throw std::invalid_argument("codes: word length mismatch");
  for (auto v : w)
    if (!code.big().in_subfield_(v, code.q()))
      throw std::invalid_argument("codes: word coefficient outside F_q");
}
}  // namespace

bool ConstacyclicCode::is_codeword(const std::vector<std::uint32_t>& word) const {
  check_word(*this, word);
  Poly c(big_, word);
  return g_.divides(c);
}

bool ConstacyclicCode::is_codeword_roots(const std::vector<std::uint32_t>& word) const {
  check_word(*this, word);
  Poly c(big_, word);
  for (std::uint64_t rep : orbit_reps())
    if (c.eval_(root_value(rep)) != 0) return false;
  return true;
}

bool ConstacyclicCode::is_codeword_sparse(
    const std::vector<std::pair<std::uint64_t, std::uint32_t>>& terms) const {
  for (const auto& [e, c] : terms) {
    if (e >= n_) throw std::invalid_argument("codes: exponent out of range");
    if (!big_.in_subfield_(c, q_))
      throw std::invalid_argument("codes: word coefficient outside F_q");
  }
  std::uint64_t group = big_.order() - 1;
  for (std::uint64_t rep : orbit_reps()) {
    std::uint32_t acc = 0;
    std::uint64_t ze = (theta_exp_ + alpha_exp_ * rep) % group;
    for (const auto& [e, c] : terms) {
      std::uint32_t z = big_.gen_pow_(
          static_cast<std::int64_t>(ze * (e % group) % group));
      acc = big_.add_(acc, big_.mul_(c, z));
    }
    if (acc != 0) return false;
  }
  return true;
}

std::vector<std::uint32_t> ConstacyclicCode::encode(
    const std::vector<std::uint32_t>& digits) const {
  if (digits.size() > k())
    throw std::invalid_argument("codes: message too long");
  auto sub = big_.subfield_elements(q_);
  std::vector<std::uint32_t> m(digits.size());
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (digits[i] >= q_)
      throw std::invalid_argument("codes: message digit out of range");
    m[i] = sub[digits[i]];
  }
  Poly c = Poly(big_, std::move(m)) * g_;
  std::vector<std::uint32_t> word(n_, 0);
  std::copy(c.packed().begin(), c.packed().end(), word.begin());
  return word;
}

ConstacyclicCode build_code(const FieldSpec& big, std::uint64_t q,
                            std::uint64_t n, std::int64_t theta_exp,
                            std::vector<std::uint64_t> root_exponents) {
  std::uint64_t Q = big.order();
  if (!big.has_subfield(q))
    throw std::invalid_argument("codes: q is not a subfield order of the big field");
  if (n < 2 || (Q - 1) % n != 0)
    throw std::invalid_argument("codes: n must divide Q - 1");
  if (std::gcd(n, q) != 1)
    throw std::invalid_argument("codes: gcd(n, q) must be 1");
  if (root_exponents.empty())
    throw std::invalid_argument("codes: empty root set");

  std::uint64_t group = Q - 1;
  std::int64_t tr = theta_exp % static_cast<std::int64_t>(group);
  if (tr < 0) tr += static_cast<std::int64_t>(group);
  std::uint64_t t = static_cast<std::uint64_t>(tr);
  std::uint64_t u = group / n;

  std::uint32_t lambda = big.gen_pow_(static_cast<std::int64_t>(t * (n % group) % group));
  if (!big.in_subfield_(lambda, q) || lambda == 0)
    throw std::invalid_argument("codes: theta^n is not in F_q*");

  std::sort(root_exponents.begin(), root_exponents.end());
  root_exponents.erase(
      std::unique(root_exponents.begin(), root_exponents.end()),
      root_exponents.end());
  if (root_exponents.back() >= n)
    throw std::invalid_argument("codes: root exponent out of range");

  // lambda in F_q* forces (Q-1) | t n (q-1), hence u | t (q-1).
  std::uint64_t f0 = t % group * ((q - 1) % group) % group;
  if (f0 % u != 0)
    throw std::invalid_argument("codes: inconsistent theta exponent");
  f0 = f0 / u % n;

  std::vector<bool> in_r(n, false);
  for (auto r : root_exponents) in_r[r] = true;
  for (auto r : root_exponents) {
    std::uint64_t s = (r * (q % n) + f0) % n;
    if (!in_r[s])
      throw std::invalid_argument("codes: root set not Frobenius-closed");
  }

  std::vector<std::uint32_t> root_vals;
  root_vals.reserve(root_exponents.size());
  for (auto r : root_exponents)
    root_vals.push_back(big.gen_pow_(static_cast<std::int64_t>((t + u * r) % group)));
  Poly g = Poly::product_from_roots(big, root_vals);
  if (!g.is_over_subfield(q))
    throw std::invalid_argument("codes: generator polynomial not over F_q");
  if (!g.divides(Poly::x_pow_minus(big, n, lambda)))
    throw std::logic_error("codes: g does not divide x^n - lambda");

  ConstacyclicCode code(big, std::move(g));
  code.q_ = q;
  code.n_ = n;
  code.theta_exp_ = t;
  code.alpha_exp_ = u;
  code.lambda_v_ = lambda;
  code.roots_ = std::move(root_exponents);
  code.frob_offset_ = f0;
  return code;
}

std::pair<Poly, std::uint32_t> dual_generator(const ConstacyclicCode& code) {
  Poly h = Poly::x_pow_minus(code.big(), code.n(), code.lambda_()) / code.g();
  return {h.monic_reciprocal(), code.big().inv_(code.lambda_())};
}

std::vector<std::uint32_t> constacyclic_shift(const ConstacyclicCode& code,
                                              const std::vector<std::uint32_t>& word) {
  if (word.size() != code.n())
    throw std::invalid_argument("codes: word length mismatch");
  std::vector<std::uint32_t> out(word.size());
  out[0] = code.big().mul_(code.lambda_(), word.back());
  std::copy(word.begin(), word.end() - 1, out.begin() + 1);
  return out;
}

std::vector<std::vector<std::uint32_t>> parity_check_columns(
    const ConstacyclicCode& code, const std::vector<std::uint64_t>& row_exponents) {
  const auto& R = code.roots();
  std::vector<bool> covered(code.n(), false);
  for (auto r : row_exponents) {
    if (!std::binary_search(R.begin(), R.end(), r))
      throw std::invalid_argument("codes: row exponent not a root");
    std::uint64_t c = r;
    do {
      covered[c] = true;
      c = code.frob_exp(c);
    } while (c != r);
  }
  for (auto r : R)
    if (!covered[r])
      throw std::invalid_argument("codes: rows do not cover every orbit");

  const FieldSpec& f = code.big();
  std::vector<std::vector<std::uint32_t>> cols(
      code.n(), std::vector<std::uint32_t>(row_exponents.size()));
  for (std::size_t ri = 0; ri < row_exponents.size(); ++ri) {
    std::uint32_t z = code.root_value(row_exponents[ri]);
    std::uint32_t cur = 1;
    for (std::uint64_t j = 0; j < code.n(); ++j) {
      cols[j][ri] = cur;
      cur = f.mul_(cur, z);
    }
  }
  return cols;
}

}  // namespace cclrc
