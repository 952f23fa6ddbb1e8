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

#include "cclrc/repairsim.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "cclrc/verify.hpp"

namespace cclrc {

namespace {

// One stream per (seed, index); streams for different indices are unrelated.
SplitMix64 stream(std::uint64_t seed, std::uint64_t index) {
  return SplitMix64(seed ^ ((index + 1) * 0x9E3779B97F4A7C15ull));
}

std::vector<std::uint32_t> random_codeword(const ConstacyclicCode& code,
                                           SplitMix64& rng) {
  std::vector<std::uint32_t> digits(code.k());
  for (auto& d : digits)
    d = static_cast<std::uint32_t>(rng.below(code.q()));
  return code.encode(digits);
}

}  // namespace

std::vector<std::uint64_t> RepairPlan::group_positions(
    std::uint64_t group) const {
  std::vector<std::uint64_t> pos;
  for (unsigned i = 0; i <= r; ++i) pos.push_back(group + i * stride);
  return pos;
}

RepairPlan make_plan(const ConstacyclicCode& code, unsigned r) {
  auto plan = locality_structural(code, r);
  if (!plan)
    throw std::invalid_argument(
        "repairsim: code has no disjoint-coset locality at this r");
  check_plan(code, *plan);
  return *plan;
}

void check_plan(const ConstacyclicCode& code, const RepairPlan& plan,
                std::uint64_t sample, std::uint64_t seed) {
  std::uint64_t n = code.n();
  if (plan.n != n || plan.stride * (plan.r + 1) != n ||
      plan.coeffs.size() != plan.r + 1)
    throw std::logic_error("repairsim: malformed plan");
  for (std::uint32_t c : plan.coeffs)
    if (c == 0 || !plan.big.in_subfield_(c, plan.q))
      throw std::logic_error("repairsim: plan coefficient outside F_q*");

  const FieldSpec& f = code.big();
  auto check_word = [&](const std::vector<std::uint32_t>& word) {
    for (std::uint64_t g = 0; g < plan.stride; ++g) {
      std::uint32_t acc = 0;
      for (unsigned i = 0; i <= plan.r; ++i)
        acc = f.add_(acc, f.mul_(plan.coeffs[i], word[g + i * plan.stride]));
      if (acc != 0)
        throw std::logic_error("repairsim: relation violated on a codeword");
    }
  };

  if (code.k() > 0) {
    std::vector<std::uint32_t> unit(code.k(), 0);
    unit[0] = 1;
    check_word(code.encode(unit));  // the generator word itself
  }
  for (std::uint64_t s = 0; s < sample; ++s) {
    SplitMix64 rng = stream(seed, s);
    check_word(random_codeword(code, rng));
  }
}

std::optional<std::uint32_t> repair_symbol(const RepairPlan& plan,
                                           const std::vector<std::uint32_t>& word,
                                           const std::vector<bool>& erased,
                                           std::uint64_t pos) {
  const FieldSpec& f = plan.big;
  std::uint64_t group = plan.group_of(pos);
  std::uint32_t acc = 0;
  unsigned self = plan.r + 1;
  for (unsigned i = 0; i <= plan.r; ++i) {
    std::uint64_t p = group + i * plan.stride;
    if (p == pos) {
      self = i;
      continue;
    }
    if (erased[p]) return std::nullopt;  // a group mate is also missing
    acc = f.add_(acc, f.mul_(plan.coeffs[i], word[p]));
  }
  return f.div_(f.neg_(acc), plan.coeffs[self]);
}

SimReport simulate(const ConstacyclicCode& code, const RepairPlan& plan,
                   std::uint64_t erasure_count, std::uint64_t trials,
                   std::uint64_t seed, unsigned jobs) {
  std::uint64_t n = code.n();
  if (erasure_count > n)
    throw std::invalid_argument("repairsim: erasure_count exceeds n");
  if (jobs == 0) jobs = 1;

  struct Tally {
    std::uint64_t repaired = 0, unrepairable = 0, fully = 0, reads = 0;
  };
  auto run_range = [&](std::uint64_t lo, std::uint64_t hi, Tally& t) {
    std::vector<std::uint64_t> perm(n);
    std::vector<bool> erased(n);
    for (std::uint64_t trial = lo; trial < hi; ++trial) {
      SplitMix64 rng = stream(seed, trial);
      std::vector<std::uint32_t> word = random_codeword(code, rng);
      std::iota(perm.begin(), perm.end(), 0);
      std::fill(erased.begin(), erased.end(), false);
      for (std::uint64_t i = 0; i < erasure_count; ++i) {
        std::uint64_t j = i + rng.below(n - i);
        std::swap(perm[i], perm[j]);
        erased[perm[i]] = true;
      }
      bool all = true;
      for (std::uint64_t i = 0; i < erasure_count; ++i) {
        std::uint64_t pos = perm[i];
        auto got = repair_symbol(plan, word, erased, pos);
        if (!got) {
          ++t.unrepairable;
          all = false;
          continue;
        }
        if (*got != word[pos])
          throw std::logic_error("repairsim: repaired value mismatch");
        ++t.repaired;
        t.reads += plan.r;
      }
      if (all) ++t.fully;
    }
  };

  Tally total;
  if (jobs == 1 || trials < 2 * jobs) {
    run_range(0, trials, total);
  } else {
    std::vector<Tally> parts(jobs);
    std::vector<std::thread> workers;
    std::exception_ptr fail;
    std::mutex fail_mu;
    std::uint64_t share = (trials + jobs - 1) / jobs;
    for (unsigned w = 0; w < jobs; ++w) {
      std::uint64_t lo = w * share, hi = std::min(trials, lo + share);
      if (lo >= hi) break;
      workers.emplace_back([&, w, lo, hi] {
        try {
          run_range(lo, hi, parts[w]);
        } catch (...) {
          std::lock_guard<std::mutex> lk(fail_mu);
          if (!fail) fail = std::current_exception();
        }
      });
    }
    for (auto& th : workers) th.join();
    if (fail) std::rethrow_exception(fail);
    for (const Tally& t : parts) {
      total.repaired += t.repaired;
      total.unrepairable += t.unrepairable;
      total.fully += t.fully;
      total.reads += t.reads;
    }
  }

  SimReport rep;
  rep.trials = trials;
  rep.erasures_per_trial = erasure_count;
  rep.total_erasures = trials * erasure_count;
  rep.repaired = total.repaired;
  rep.unrepairable = total.unrepairable;
  rep.trials_fully_repaired = total.fully;
  rep.average_repair_degree =
      total.repaired ? static_cast<double>(total.reads) /
                           static_cast<double>(total.repaired)
                     : 0.0;
  rep.seed = seed;
  rep.jobs = jobs;
  return rep;
}

}  // namespace cclrc
