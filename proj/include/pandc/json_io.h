// Copyright 2026 The pandc Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// JSON forms of every public value. Rationals are always written as
// "num/den" strings; on input integers, "n", "n/d" and finite decimal
// strings are accepted. Non-integer JSON numbers are rejected so that no
// binary float ever enters the exact core.

#ifndef PANDC_JSON_IO_H_
#define PANDC_JSON_IO_H_

#include <string>
#include <vector>

#include "json.hpp"
#include "pandc/mechanism.h"
#include "pandc/model.h"
#include "pandc/oracle.h"
#include "pandc/rational.h"
#include "pandc/solver.h"
#include "pandc/transform.h"

namespace pandc {

using Json = nlohmann::json;

Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);
Json to_json(const std::vector<Rational>& rs);
std::vector<Rational> rationals_from_json(const Json& j);

// {"options": [...], "players": [...], "utilities": [[...], ...]}
Json to_json(const UtilityProfile& u);
UtilityProfile profile_from_json(const Json& j);
UtilityProfile load_profile(const std::string& path);
void save_profile(const UtilityProfile& u, const std::string& path);

Json to_json(const PriceVector& p);
Json to_json(const Allocation& x);
Allocation allocation_from_json(const Json& j);

// {"breakpoints": [...], "values": [...]}
Json to_json(const MonotoneTransform& f);
MonotoneTransform transform_from_json(const Json& j);

Json to_json(const MechanismConfig& c);
MechanismConfig config_from_json(const Json& j);

// {"player": 0, "kind": "price", "prices": [...]}; kinds bid/alpha/role/
// price/choice with fields amount/alpha/role/prices/option.
Json to_json(const Move& m);
Move move_from_json(const Json& j);

Json to_json(const Stage& s);
Json to_json(const SessionState& s);

Json to_json(const EquilibriumReport& r);
Json to_json(const oracle::VerificationReport& r);

}  // namespace pandc

#endif  // PANDC_JSON_IO_H_
