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

// cclrc command line front end.
//
// JSON on stdout is the machine interface (sorted keys, byte-stable);
// human-readable summaries go to stderr. Exit codes: 0 success, 2 bad
// input or inadmissible parameters (the message names the violated
// condition), 3 verification failure, 1 internal error.

#include <cstdint>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cclrc/constructions.hpp"
#include "cclrc/json_io.hpp"

namespace {

using nlohmann::json;

cclrc::Family parse_family(const std::string& name) {
  auto f = cclrc::family_from_name(name);
  if (!f) throw std::invalid_argument("unknown family: " + name);
  return *f;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

int run_construct(const std::string& family, std::uint64_t q, std::uint64_t m,
                  const std::string& out) {
  cclrc::ConstructionParams params = cclrc::admit(parse_family(family), q, m);
  cclrc::ConstacyclicCode code = cclrc::construct_code(params);
  if (!out.empty()) cclrc::save_code(code, out);
  emit(cclrc::code_to_json(code));
  std::cerr << family << " q=" << q;
  if (params.family == cclrc::Family::thm3 ||
      params.family == cclrc::Family::thm4)
    std::cerr << " m=" << m;
  std::cerr << ": n=" << code.n() << " k=" << code.k()
            << " lambda=" << code.lambda_() << " deg_g=" << code.g().degree();
  if (!out.empty()) std::cerr << " -> " << out;
  std::cerr << "\n";
  return 0;
}

int run_verify(const std::string& path, const std::string& method, unsigned r,
               unsigned jobs) {
  cclrc::ConstacyclicCode code = cclrc::load_code(path);
  cclrc::ClassifyOptions opts;
  using Method = cclrc::ClassifyOptions::Method;
  if (method == "auto") opts.method = Method::automatic;
  else if (method == "enumerate") opts.method = Method::enumerate;
  else if (method == "subset-rank") opts.method = Method::subset_rank;
  else opts.method = Method::structured;
  opts.r = r;
  opts.jobs = jobs;
  cclrc::LrcProfile prof = cclrc::classify(code, opts);
  emit(cclrc::profile_to_json(prof, code.big()));
  std::cerr << "n=" << prof.n << " k=" << prof.k << " q=" << prof.q
            << " d_lower=" << prof.d_lower << " d_upper=" << prof.d_upper;
  if (prof.d_exact) std::cerr << " d=" << *prof.d_exact;
  std::cerr << " r=" << prof.r;
  if (prof.defect) std::cerr << " defect=" << *prof.defect;
  std::cerr << (prof.is_singleton_optimal ? " optimal" : "")
            << (prof.perfect ? " perfect" : "") << "\n";
  if (prof.d_lower > prof.d_upper) {
    std::cerr << "verification failure: distance bounds cross\n";
    return 3;
  }
  return 0;
}

int run_witness(const std::string& family, std::uint64_t q, std::uint64_t m) {
  cclrc::WitnessCodeword wit;
  cclrc::ConstacyclicCode code = [&] {
    if (family == "prop3") {
      wit = cclrc::prop3_witness(q);
      return cclrc::thm_even_construct(q);
    }
    if (family == "thm3") {
      auto [c, w] = cclrc::thm3_construct(q, m);
      wit = std::move(w);
      return c;
    }
    auto [c, w] = cclrc::thm4_construct(q, m);
    wit = std::move(w);
    return c;
  }();
  bool member = code.is_codeword_sparse(wit.terms);
  json j = cclrc::witness_to_json(code.big(), wit.terms);
  j["family"] = family;
  j["q"] = q;
  if (family != "prop3") j["m"] = m;
  j["n"] = code.n();
  j["weight"] = wit.terms.size();
  j["claimed_weight"] = wit.claimed_weight;
  j["member"] = member;
  emit(j);
  std::cerr << family << " q=" << q << ": weight " << wit.terms.size()
            << " word, member=" << (member ? "true" : "false") << "\n";
  return member ? 0 : 3;
}

bool is_prime_power(std::uint64_t q) {
  if (q < 2) return false;
  std::uint64_t p = 2;
  while (p * p <= q && q % p != 0) ++p;
  if (p * p > q) return true;  // prime
  while (q % p == 0) q /= p;
  return q == 1;
}

int run_search(std::uint64_t max_q, const std::vector<std::string>& families) {
  json rows = json::array();
  for (const std::string& name : families) {
    cclrc::Family fam = parse_family(name);
    bool uses_m =
        fam == cclrc::Family::thm3 || fam == cclrc::Family::thm4;
    for (std::uint64_t q = 2; q <= max_q; ++q) {
      if (!is_prime_power(q)) continue;
      std::vector<std::uint64_t> ms;
      if (uses_m) {
        // Even m up to the splitting-field cap; admissibility decides.
        for (std::uint64_t m = 2, pw = q * q; pw <= cclrc::kFieldLimit;
             m += 2) {
          ms.push_back(m);
          if (pw > cclrc::kFieldLimit / (q * q)) break;
          pw *= q * q;
        }
      } else {
        ms.push_back(0);
      }
      for (std::uint64_t m : ms) {
        std::string reason;
        if (!cclrc::admissible(fam, q, m, &reason)) continue;
        cclrc::ConstructionParams p = cclrc::admit(fam, q, m);
        json row;
        row["family"] = name;
        row["q"] = q;
        row["m"] = uses_m ? json(m) : json(nullptr);
        row["n"] = p.n;
        row["k"] = p.k_expected;
        row["d"] = p.d_expected ? json(p.d_expected) : json(nullptr);
        row["r"] = p.r;
        rows.push_back(row);
      }
    }
  }
  emit(rows);
  std::ostringstream table;
  table << std::left << std::setw(10) << "family" << std::right
        << std::setw(6) << "q" << std::setw(4) << "m" << std::setw(9) << "n"
        << std::setw(9) << "k" << std::setw(4) << "d" << std::setw(4) << "r"
        << "\n";
  for (const json& row : rows) {
    table << std::left << std::setw(10) << row["family"].get<std::string>()
          << std::right << std::setw(6) << row["q"].get<std::uint64_t>()
          << std::setw(4)
          << (row["m"].is_null() ? "-"
                                 : std::to_string(row["m"].get<std::uint64_t>()))
          << std::setw(9) << row["n"].get<std::uint64_t>() << std::setw(9)
          << row["k"].get<std::uint64_t>() << std::setw(4)
          << (row["d"].is_null() ? "-"
                                 : std::to_string(row["d"].get<std::uint64_t>()))
          << std::setw(4) << row["r"].get<std::uint64_t>() << "\n";
  }
  std::cerr << table.str();
  return 0;
}

int run_simulate(const std::string& path, std::uint64_t erasures,
                 std::uint64_t trials, std::uint64_t seed, unsigned r,
                 unsigned jobs) {
  cclrc::ConstacyclicCode code = cclrc::load_code(path);
  cclrc::RepairPlan plan = cclrc::make_plan(code, r);
  cclrc::SimReport rep = cclrc::simulate(code, plan, erasures, trials, seed, jobs);
  emit(cclrc::report_to_json(rep));
  std::cerr << "trials=" << rep.trials << " erasures=" << rep.total_erasures
            << " repaired=" << rep.repaired << " unrepairable="
            << rep.unrepairable << " fully_repaired="
            << rep.trials_fully_repaired << " avg_degree="
            << rep.average_repair_degree << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"constacyclic locally repairable codes"};
  app.require_subcommand(1);

  std::string family, out, code_path, method = "auto";
  std::uint64_t q = 0, m = 0, max_q = 0, erasures = 0, trials = 0, seed = 1;
  unsigned r = 2, jobs = 1;
  std::vector<std::string> families;

  CLI::App* construct = app.add_subcommand("construct", "build a code file");
  construct->add_option("--family", family, "construction family")
      ->required()
      ->check(CLI::IsMember({"thm-even", "thm-odd", "remark", "thm3", "thm4"}));
  construct->add_option("--q", q, "base field size")->required();
  construct->add_option("--m", m, "extension degree (thm3/thm4)");
  construct->add_option("--out", out, "write the code file here");

  CLI::App* verify = app.add_subcommand("verify", "classify a code file");
  verify->add_option("--code", code_path, "code file")->required();
  verify->add_option("--method", method, "distance method")
      ->check(CLI::IsMember({"auto", "enumerate", "subset-rank", "structured"}));
  verify->add_option("--r", r, "locality to certify");
  verify->add_option("--jobs", jobs, "worker threads");

  CLI::App* witness = app.add_subcommand("witness", "low-weight witness word");
  witness->add_option("--family", family, "witness family")
      ->required()
      ->check(CLI::IsMember({"prop3", "thm3", "thm4"}));
  witness->add_option("--q", q, "base field size")->required();
  witness->add_option("--m", m, "extension degree (thm3/thm4)");

  CLI::App* search = app.add_subcommand("search", "admissible parameter table");
  search->add_option("--max-q", max_q, "largest base field size")->required();
  search->add_option("--families", families, "comma-separated families")
      ->required()
      ->delimiter(',');

  CLI::App* simulate = app.add_subcommand("simulate", "erasure repair trials");
  simulate->add_option("--code", code_path, "code file")->required();
  simulate->add_option("--erasures", erasures, "erasures per trial")->required();
  simulate->add_option("--trials", trials, "number of trials")->required();
  simulate->add_option("--seed", seed, "RNG seed");
  simulate->add_option("--r", r, "repair-group locality");
  simulate->add_option("--jobs", jobs, "worker threads");

  try {
    app.parse(argc, argv);
    if (construct->parsed()) return run_construct(family, q, m, out);
    if (verify->parsed()) return run_verify(code_path, method, r, jobs);
    if (witness->parsed()) return run_witness(family, q, m);
    if (search->parsed()) return run_search(max_q, families);
    if (simulate->parsed())
      return run_simulate(code_path, erasures, trials, seed, r, jobs);
    return 2;
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return 3;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
