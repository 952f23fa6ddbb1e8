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

#include "cclrc/json_io.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cclrc/constructions.hpp"
#include "doctest.h"

namespace cclrc {
namespace {

using nlohmann::json;

ConstacyclicCode sample(Family fam, std::uint64_t q, std::uint64_t m = 0) {
  return construct_code(admit(fam, q, m));
}

TEST_CASE("field spec and element round trip") {
  FieldSpec f16 = FieldSpec::make_field(2, 4);
  json j = field_spec_to_json(f16);
  CHECK(field_spec_from_json(j) == f16);
  CHECK(j["p"] == 2);
  CHECK(j["e"] == 4);
  CHECK(j["modulus"].size() == 5);

  for (std::uint32_t v = 0; v < 16; ++v) {
    json e = element_to_json(f16, v);
    CHECK(e.is_array());
    CHECK(e.size() == 4);
    CHECK(element_from_json(f16, e) == v);
  }

  // Non-canonical but primitive modulus survives the trip intact.
  FieldSpec alt = FieldSpec::with_modulus(2, {1, 0, 0, 1, 1});
  CHECK(field_spec_from_json(field_spec_to_json(alt)) == alt);
  CHECK(alt != f16);

  CHECK_THROWS_AS(field_spec_from_json(json{{"p", 2}, {"e", 4}}),
                  std::runtime_error);
  CHECK_THROWS_AS(
      field_spec_from_json(json{
          {"p", 2}, {"e", 4}, {"modulus", json::array({1, 1, 1, 1, 1})}}),
      std::runtime_error);  // reducible
  CHECK_THROWS_AS(element_from_json(f16, json::array({0, 1})),
                  std::runtime_error);
  CHECK_THROWS_AS(element_from_json(f16, json::array({2, 0, 0, 0})),
                  std::runtime_error);
}

TEST_CASE("polynomial round trip") {
  FieldSpec f9 = FieldSpec::make_field(3, 2);
  Poly p(f9, {4, 0, 7, 1});
  json j = poly_to_json(p);
  CHECK(j.is_array());
  CHECK(j.size() == 4);
  Poly back = poly_from_json(f9, j);
  CHECK(back.packed() == p.packed());
  CHECK_THROWS_AS(poly_from_json(f9, json{{"not", "array"}}),
                  std::runtime_error);
}

TEST_CASE("code files round trip byte for byte") {
  // One cyclic and two constacyclic codes, including the degree-6 big field.
  for (const ConstacyclicCode& code :
       {sample(Family::thm_even, 4), sample(Family::thm4, 5, 2),
        sample(Family::thm3, 8, 2)}) {
    json j = code_to_json(code);
    std::string bytes = j.dump(2);
    ConstacyclicCode back = code_from_json(json::parse(bytes));
    CHECK(back.n() == code.n());
    CHECK(back.q() == code.q());
    CHECK(back.theta_exp() == code.theta_exp());
    CHECK(back.lambda_() == code.lambda_());
    CHECK(back.g().packed() == code.g().packed());
    CHECK(back.roots() == code.roots());
    CHECK(code_to_json(back).dump(2) == bytes);
  }
}

TEST_CASE("save and load through a file") {
  ConstacyclicCode code = sample(Family::thm4, 5, 2);
  std::string path = "json_io_test_code.json";
  save_code(code, path);
  ConstacyclicCode back = load_code(path);
  CHECK(code_to_json(back) == code_to_json(code));

  // Truncated file.
  {
    std::ofstream out(path, std::ios::trunc);
    out << code_to_json(code).dump(2).substr(0, 40);
  }
  CHECK_THROWS_AS(load_code(path), std::runtime_error);
  CHECK_THROWS_AS(load_code("does_not_exist.json"), std::runtime_error);
  std::remove(path.c_str());
}

TEST_CASE("tampered code files are rejected") {
  ConstacyclicCode code = sample(Family::thm_even, 4);
  json good = code_to_json(code);

  json j = good;
  j["g"][0] = element_to_json(code.big(), code.g().packed()[0] ^ 1u);
  CHECK_THROWS_WITH_AS(code_from_json(j),
                       doctest::Contains("generator polynomial"),
                       std::runtime_error);

  j = good;
  j["lambda"] = element_to_json(code.big(), 3);
  CHECK_THROWS_WITH_AS(code_from_json(j), doctest::Contains("lambda"),
                       std::runtime_error);

  // Breaking Frobenius closure fails inside the rebuild.
  j = good;
  j["roots"] = json::array({1});
  CHECK_THROWS_AS(code_from_json(j), std::runtime_error);

  j = good;
  j.erase("roots");
  CHECK_THROWS_AS(code_from_json(j), std::runtime_error);

  j = good;
  j["base"] = field_spec_to_json(FieldSpec::make_field(3, 1));
  CHECK_THROWS_AS(code_from_json(j), std::runtime_error);

  CHECK_THROWS_AS(code_from_json(json::array()), std::runtime_error);
}

TEST_CASE("witness serialization") {
  auto [code, wit] = thm4_construct(5, 2);
  SparseWord w(wit.terms.begin(), wit.terms.end());
  json j = witness_to_json(code.big(), w);
  CHECK(j["terms"].size() == w.size());
  CHECK(j["terms"][0].contains("exp"));
  CHECK(j["terms"][0].contains("coeff"));
  SparseWord back = witness_from_json(code.big(), j);
  CHECK(back == w);
  CHECK_THROWS_AS(witness_from_json(code.big(), json::object()),
                  std::runtime_error);
}

TEST_CASE("profile and certificate serialization") {
  ConstacyclicCode code = sample(Family::thm_even, 4);
  LrcProfile prof = classify(code, ClassifyOptions{});
  json j = profile_to_json(prof, code.big());
  CHECK(j["n"] == 15);
  CHECK(j["k"] == 7);
  CHECK(j["d_lower"] == 6);
  CHECK(j["d_exact"] == 6);
  CHECK(j["r"] == 2);
  CHECK(j["singleton_defect"] == 0);
  CHECK(j["perfect"] == false);
  CHECK(j["certificates"].is_array());
  CHECK(j["certificates"].size() == 2);
  for (const json& c : j["certificates"]) {
    CHECK((c["kind"] == "bch" || c["kind"] == "ht"));
    CHECK(c["bound"].is_number());
  }
  CHECK(j["min_weight_word"]["terms"].size() == 6);
  // Keys come out sorted, so serialization is byte-stable.
  std::string bytes = j.dump();
  CHECK(json::parse(bytes).dump() == bytes);
  CHECK(bytes.find("\"d_exact\"") < bytes.find("\"d_lower\""));
}

TEST_CASE("simulation report serialization") {
  ConstacyclicCode code = sample(Family::thm_even, 4);
  RepairPlan plan = make_plan(code, 2);
  SimReport rep = simulate(code, plan, 1, 50, 7, 1);
  json j = report_to_json(rep);
  CHECK(j["trials"] == 50);
  CHECK(j["erasures_per_trial"] == 1);
  CHECK(j["repaired"] == 50);
  CHECK(j["unrepairable"] == 0);
  CHECK(j["average_repair_degree"] == 2.0);
  CHECK(j["seed"] == 7);
  CHECK(j["jobs"] == 1);
}

}  // namespace
}  // namespace cclrc
