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

#pragma once

#include <string>

#include "cclrc/repairsim.hpp"
#include "cclrc/verify.hpp"
#include "json.hpp"

namespace cclrc {

// Serialization conventions (all emitters produce objects whose keys are
// written in sorted order, so output is byte-stable):
//   FieldSpec:    {"p": p, "e": e, "modulus": [c0, ..., ce]} (ascending).
//   FieldElement: array of e integers, ascending basis coefficients.
//   Poly:         array of FieldElement arrays, ascending degree.
//   Code file:    {"base", "q", "big_field", "n", "theta_exp", "lambda",
//                  "g", "roots"}; load rebuilds the code from (n, theta_exp,
//                  roots) and then demands bit-exact agreement with the
//                  stored g and lambda, so a tampered file cannot load.
//   Witness:      {"terms": [{"exp": e, "coeff": [...]}, ...]}.
// Parse or validation failures throw std::runtime_error naming the issue.

nlohmann::json field_spec_to_json(const FieldSpec& f);
FieldSpec field_spec_from_json(const nlohmann::json& j);

nlohmann::json element_to_json(const FieldSpec& f, std::uint32_t packed);
std::uint32_t element_from_json(const FieldSpec& f, const nlohmann::json& j);

nlohmann::json poly_to_json(const Poly& p);
Poly poly_from_json(const FieldSpec& f, const nlohmann::json& j);

nlohmann::json code_to_json(const ConstacyclicCode& code);
ConstacyclicCode code_from_json(const nlohmann::json& j);

void save_code(const ConstacyclicCode& code, const std::string& path);
ConstacyclicCode load_code(const std::string& path);

nlohmann::json witness_to_json(const FieldSpec& f, const SparseWord& w);
SparseWord witness_from_json(const FieldSpec& f, const nlohmann::json& j);

nlohmann::json certificate_to_json(const BoundCertificate& c);
nlohmann::json profile_to_json(const LrcProfile& p, const FieldSpec& f);
nlohmann::json report_to_json(const SimReport& r);

}  // namespace cclrc
