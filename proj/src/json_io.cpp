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

#include <fstream>
#include <stdexcept>

namespace cclrc {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& what) {
  throw std::runtime_error("json_io: " + what);
}

std::uint64_t get_u64(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_unsigned())
    bad(std::string("missing or invalid \"") + key + "\"");
  return j[key].get<std::uint64_t>();
}

}  // namespace

json field_spec_to_json(const FieldSpec& f) {
  json j;
  j["p"] = f.p();
  j["e"] = f.e();
  j["modulus"] = f.modulus();
  return j;
}

FieldSpec field_spec_from_json(const json& j) {
  std::uint64_t p = get_u64(j, "p");
  std::uint64_t e = get_u64(j, "e");
  if (!j.contains("modulus") || !j["modulus"].is_array())
    bad("missing or invalid \"modulus\"");
  std::vector<std::uint32_t> mod =
      j["modulus"].get<std::vector<std::uint32_t>>();
  if (mod.size() != e + 1) bad("modulus length must be e + 1");
  try {
    return FieldSpec::with_modulus(p, mod);
  } catch (const std::exception& ex) {
    bad(std::string("field spec rejected: ") + ex.what());
  }
}

json element_to_json(const FieldSpec& f, std::uint32_t packed) {
  return json(f.unpack_(packed));
}

std::uint32_t element_from_json(const FieldSpec& f, const json& j) {
  if (!j.is_array() || j.size() != f.e()) bad("element must have e digits");
  std::vector<std::uint32_t> digits = j.get<std::vector<std::uint32_t>>();
  for (std::uint32_t d : digits)
    if (d >= f.p()) bad("element digit out of range");
  return f.pack_(digits);
}

json poly_to_json(const Poly& p) {
  json arr = json::array();
  for (std::uint32_t c : p.packed())
    arr.push_back(element_to_json(p.field(), c));
  return arr;
}

Poly poly_from_json(const FieldSpec& f, const json& j) {
  if (!j.is_array()) bad("polynomial must be an array");
  std::vector<std::uint32_t> packed;
  packed.reserve(j.size());
  for (const json& c : j) packed.push_back(element_from_json(f, c));
  return Poly(f, std::move(packed));
}

json code_to_json(const ConstacyclicCode& code) {
  const FieldSpec& big = code.big();
  json j;
  std::uint64_t p = big.p();
  j["base"] = field_spec_to_json(FieldSpec::make_field(p, 1));
  j["q"] = code.q();
  j["big_field"] = field_spec_to_json(big);
  j["n"] = code.n();
  j["theta_exp"] = code.theta_exp();
  j["lambda"] = element_to_json(big, code.lambda_());
  j["g"] = poly_to_json(code.g());
  j["roots"] = code.roots();
  return j;
}

ConstacyclicCode code_from_json(const json& j) {
  if (!j.is_object()) bad("code file must be a JSON object");
  for (const char* key :
       {"base", "q", "big_field", "n", "theta_exp", "lambda", "g", "roots"})
    if (!j.contains(key)) bad(std::string("code file lacks \"") + key + "\"");

  FieldSpec big = field_spec_from_json(j["big_field"]);
  FieldSpec base = field_spec_from_json(j["base"]);
  if (base.p() != big.p() || base.e() != 1)
    bad("base field must be the prime field of big_field");
  std::uint64_t q = get_u64(j, "q");
  std::uint64_t n = get_u64(j, "n");
  std::uint64_t theta_exp = get_u64(j, "theta_exp");
  if (!j["roots"].is_array()) bad("\"roots\" must be an array");
  std::vector<std::uint64_t> roots =
      j["roots"].get<std::vector<std::uint64_t>>();

  ConstacyclicCode code = [&] {
    try {
      return build_code(big, q, n, static_cast<std::int64_t>(theta_exp),
                        std::move(roots));
    } catch (const std::exception& e) {
      bad(std::string("code file rejected: ") + e.what());
    }
  }();

  // The stored g and lambda are redundant; demand exact agreement so silent
  // corruption cannot pass.
  Poly g = poly_from_json(big, j["g"]);
  if (g.packed() != code.g().packed())
    bad("stored generator polynomial does not match the root set");
  if (element_from_json(big, j["lambda"]) != code.lambda_())
    bad("stored lambda does not match theta_exp");
  return code;
}

void save_code(const ConstacyclicCode& code, const std::string& path) {
  std::ofstream out(path);
  if (!out) bad("cannot open \"" + path + "\" for writing");
  out << code_to_json(code).dump(2) << "\n";
  if (!out) bad("write to \"" + path + "\" failed");
}

ConstacyclicCode load_code(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open \"" + path + "\"");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    bad(std::string("parse error: ") + e.what());
  }
  return code_from_json(j);
}

json witness_to_json(const FieldSpec& f, const SparseWord& w) {
  json terms = json::array();
  for (const auto& [exp, coeff] : w) {
    json t;
    t["exp"] = exp;
    t["coeff"] = element_to_json(f, coeff);
    terms.push_back(t);
  }
  json j;
  j["terms"] = terms;
  return j;
}

SparseWord witness_from_json(const FieldSpec& f, const json& j) {
  if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
    bad("witness must be {\"terms\": [...]}");
  SparseWord w;
  for (const json& t : j["terms"]) {
    if (!t.is_object() || !t.contains("exp") || !t.contains("coeff"))
      bad("witness term must have \"exp\" and \"coeff\"");
    w.emplace_back(get_u64(t, "exp"), element_from_json(f, t["coeff"]));
  }
  return w;
}

json certificate_to_json(const BoundCertificate& c) {
  json j;
  j["kind"] = (c.kind == BoundCertificate::Kind::BCH) ? "bch" : "ht";
  j["u"] = c.u;
  j["b1"] = c.b1;
  j["b2"] = c.b2;
  j["delta"] = c.delta;
  j["gamma"] = c.gamma;
  j["bound"] = c.bound;
  j["bch_fallback"] = c.bch_fallback;
  return j;
}

json profile_to_json(const LrcProfile& p, const FieldSpec& f) {
  json j;
  j["n"] = p.n;
  j["k"] = p.k;
  j["q"] = p.q;
  j["d_lower"] = p.d_lower;
  j["d_upper"] = p.d_upper;
  j["d_exact"] = p.d_exact ? json(*p.d_exact) : json(nullptr);
  j["r"] = p.r;
  j["locality_disjoint"] = p.locality_disjoint;
  j["singleton_defect"] = p.defect ? json(*p.defect) : json(nullptr);
  j["singleton_optimal"] = p.is_singleton_optimal;
  j["perfect"] = p.perfect;
  j["methods"] = p.methods_used;
  json certs = json::array();
  if (p.bch) certs.push_back(certificate_to_json(*p.bch));
  if (p.ht) certs.push_back(certificate_to_json(*p.ht));
  j["certificates"] = certs;
  j["min_weight_word"] =
      p.min_weight_word ? witness_to_json(f, *p.min_weight_word)
                        : json(nullptr);
  return j;
}

json report_to_json(const SimReport& r) {
  json j;
  j["trials"] = r.trials;
  j["erasures_per_trial"] = r.erasures_per_trial;
  j["total_erasures"] = r.total_erasures;
  j["repaired"] = r.repaired;
  j["unrepairable"] = r.unrepairable;
  j["trials_fully_repaired"] = r.trials_fully_repaired;
  j["average_repair_degree"] = r.average_repair_degree;
  j["seed"] = r.seed;
  j["jobs"] = r.jobs;
  return j;
}

}  // namespace cclrc
