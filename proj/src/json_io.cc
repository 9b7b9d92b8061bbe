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

#include "pandc/json_io.h"

#include <fstream>
#include <sstream>

#include "pandc/error.h"

namespace pandc {
namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    fail(ErrorCode::kParseError, std::string("missing field \"") + key + "\"");
  }
  return j.at(key);
}

template <typename T>
T get_as(const Json& j, const char* what) {
  try {
    return j.get<T>();
  } catch (const Json::exception&) {
    fail(ErrorCode::kParseError, std::string("bad value for ") + what);
  }
}

std::vector<std::string> strings_from_json(const Json& j, const char* what) {
  if (!j.is_array()) fail(ErrorCode::kParseError, std::string(what) + " must be an array");
  std::vector<std::string> out;
  for (const auto& e : j) out.push_back(get_as<std::string>(e, what));
  return out;
}

}  // namespace

Json to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_number_unsigned()) return Rational::parse(std::to_string(j.get<std::uint64_t>()));
  if (j.is_number_float()) {
    fail(ErrorCode::kParseError, "fractional JSON number " + j.dump() +
                                     "; write rationals as \"num/den\" strings");
  }
  fail(ErrorCode::kParseError, "expected a rational, got " + j.dump());
}

Json to_json(const std::vector<Rational>& rs) {
  Json out = Json::array();
  for (const auto& r : rs) out.push_back(to_json(r));
  return out;
}

std::vector<Rational> rationals_from_json(const Json& j) {
  if (!j.is_array()) fail(ErrorCode::kParseError, "expected an array of rationals");
  std::vector<Rational> out;
  out.reserve(j.size());
  for (const auto& e : j) out.push_back(rational_from_json(e));
  return out;
}

Json to_json(const UtilityProfile& u) {
  Json rows = Json::array();
  for (const auto& row : u.values()) rows.push_back(to_json(row));
  return Json{{"options", u.options()}, {"players", u.players()}, {"utilities", rows}};
}

UtilityProfile profile_from_json(const Json& j) {
  const Json& rows = field(j, "utilities");
  if (!rows.is_array()) fail(ErrorCode::kParseError, "utilities must be an array of rows");
  std::vector<std::vector<Rational>> values;
  for (const auto& row : rows) values.push_back(rationals_from_json(row));
  if (!j.contains("options") && !j.contains("players")) {
    return UtilityProfile::from_values(std::move(values));
  }
  return UtilityProfile(strings_from_json(field(j, "options"), "options"),
                        strings_from_json(field(j, "players"), "players"), std::move(values));
}

UtilityProfile load_profile(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::kParseError, "cannot read " + path);
  Json j;
  try {
    in >> j;
  } catch (const Json::exception& e) {
    fail(ErrorCode::kParseError, path + ": " + e.what());
  }
  return profile_from_json(j);
}

void save_profile(const UtilityProfile& u, const std::string& path) {
  std::ofstream out(path);
  if (!out) fail(ErrorCode::kInvalidArgument, "cannot write " + path);
  out << to_json(u).dump(2) << "\n";
}

Json to_json(const PriceVector& p) {
  return Json{{"prices", to_json(p.prices())}, {"target_sum", to_json(p.target_sum())}};
}

Json to_json(const Allocation& x) {
  return Json{{"option", x.option}, {"transfers", to_json(x.transfers)}};
}

Allocation allocation_from_json(const Json& j) {
  return Allocation{get_as<int>(field(j, "option"), "option"),
                    rationals_from_json(field(j, "transfers"))};
}

Json to_json(const MonotoneTransform& f) {
  return Json{{"breakpoints", to_json(f.breakpoints())}, {"values", to_json(f.values())}};
}

MonotoneTransform transform_from_json(const Json& j) {
  return MonotoneTransform(rationals_from_json(field(j, "breakpoints")),
                           rationals_from_json(field(j, "values")));
}

Json to_json(const MechanismConfig& c) {
  Json j{{"variant", variant_name(c.variant)},
         {"players", c.num_players},
         {"rng_seed", c.rng_seed}};
  if (c.variant == Variant::kPcAlpha || c.alpha.sign() != 0) j["alpha"] = to_json(c.alpha);
  if (c.epsilon) j["epsilon"] = to_json(*c.epsilon);
  if (c.variant == Variant::kPc2NonQl || !c.zeta.is_identity() || !c.eta.is_identity()) {
    j["zeta"] = to_json(c.zeta);
    j["eta"] = to_json(c.eta);
  }
  return j;
}

MechanismConfig config_from_json(const Json& j) {
  MechanismConfig c;
  c.variant = parse_variant(get_as<std::string>(field(j, "variant"), "variant"));
  if (j.contains("players")) c.num_players = get_as<int>(j.at("players"), "players");
  if (j.contains("alpha")) c.alpha = rational_from_json(j.at("alpha"));
  if (j.contains("epsilon") && !j.at("epsilon").is_null()) {
    c.epsilon = rational_from_json(j.at("epsilon"));
  }
  if (j.contains("zeta")) c.zeta = transform_from_json(j.at("zeta"));
  if (j.contains("eta")) c.eta = transform_from_json(j.at("eta"));
  if (j.contains("rng_seed")) c.rng_seed = get_as<std::uint64_t>(j.at("rng_seed"), "rng_seed");
  return c;
}

Json to_json(const Move& m) {
  Json j{{"player", m.player}, {"kind", move_kind_name(m.payload)}};
  std::visit(
      [&](const auto& p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, BidMove>) {
          j["amount"] = to_json(p.amount);
        } else if constexpr (std::is_same_v<T, AlphaMove>) {
          j["alpha"] = to_json(p.alpha);
        } else if constexpr (std::is_same_v<T, RoleMove>) {
          j["role"] = p.role == Role::kProposer ? "proposer" : "chooser";
        } else if constexpr (std::is_same_v<T, PriceMove>) {
          j["prices"] = to_json(p.prices);
        } else {
          j["option"] = p.option;
        }
      },
      m.payload);
  return j;
}

Move move_from_json(const Json& j) {
  Move m;
  m.player = get_as<int>(field(j, "player"), "player");
  const auto kind = get_as<std::string>(field(j, "kind"), "kind");
  if (kind == "bid") {
    m.payload = BidMove{rational_from_json(field(j, "amount"))};
  } else if (kind == "alpha") {
    m.payload = AlphaMove{rational_from_json(field(j, "alpha"))};
  } else if (kind == "role") {
    const auto role = get_as<std::string>(field(j, "role"), "role");
    if (role != "proposer" && role != "chooser") {
      fail(ErrorCode::kParseError, "role must be \"proposer\" or \"chooser\"");
    }
    m.payload = RoleMove{role == "proposer" ? Role::kProposer : Role::kChooser};
  } else if (kind == "price") {
    m.payload = PriceMove{rationals_from_json(field(j, "prices"))};
  } else if (kind == "choice") {
    m.payload = ChoiceMove{get_as<int>(field(j, "option"), "option")};
  } else {
    fail(ErrorCode::kParseError, "unknown move kind \"" + kind + "\"");
  }
  return m;
}

Json to_json(const Stage& s) {
  Json j{{"kind", stage_kind_name(s.kind)}};
  j["player"] = s.player >= 0 ? Json(s.player) : Json(nullptr);
  return j;
}

Json to_json(const SessionState& s) {
  Json j;
  j["config"] = to_json(s.config());
  j["profile"] = to_json(s.profile());
  j["stage"] = to_json(s.stage());
  Json log = Json::array();
  for (const auto& m : s.move_log()) log.push_back(to_json(m));
  j["move_log"] = std::move(log);
  Json posted = Json::array();
  for (const auto& p : s.posted_prices()) posted.push_back(to_json(p));
  j["posted_prices"] = std::move(posted);
  j["price_target"] = to_json(s.price_target());
  if (!s.bids().empty()) {
    Json bids = Json::array();
    for (const auto& b : s.bids()) bids.push_back(b ? to_json(*b) : Json(nullptr));
    j["bids"] = std::move(bids);
  }
  j["order"] = s.order();
  if (s.bid_winner()) j["bid_winner"] = *s.bid_winner();
  if (s.proposed_alpha()) j["alpha"] = to_json(*s.proposed_alpha());
  if (s.result()) {
    j["result"] = to_json(*s.result());
    j["payoffs"] = to_json(payoffs(s));
  }
  return j;
}

Json to_json(const EquilibriumReport& r) {
  Json j;
  j["variant"] = variant_name(r.variant);
  Json prices = Json::array();
  for (const auto& p : r.star_prices) prices.push_back(to_json(p));
  j["star_prices"] = std::move(prices);
  j["predicted_outcomes"] = r.predicted_outcomes;
  j["predicted_payoffs"] = to_json(r.predicted_payoffs);
  if (r.alpha_star) j["alpha_star"] = to_json(*r.alpha_star);
  if (r.b_star) j["b_star"] = to_json(*r.b_star);
  if (r.surplus) j["surplus"] = to_json(*r.surplus);
  if (r.epsilon) j["epsilon"] = to_json(*r.epsilon);
  if (r.epsilon_bound) j["epsilon_bound"] = to_json(*r.epsilon_bound);
  if (r.chooser_floor_tight) j["chooser_floor_tight"] = to_json(*r.chooser_floor_tight);
  if (r.chooser_floor_loose) j["chooser_floor_loose"] = to_json(*r.chooser_floor_loose);
  if (r.variant == Variant::kPc2Robust) j["robust_singleton"] = r.robust_singleton;
  if (!r.normalized_prices.empty()) j["normalized_prices"] = to_json(r.normalized_prices);
  if (r.chooser_level) j["chooser_level"] = to_json(*r.chooser_level);
  if (r.variant == Variant::kPc2NonQl) j["outcomes_in_pareto_set"] = r.outcomes_in_pareto_set;
  if (r.variant == Variant::kPcEndogenousAlpha) j["role_indifferent"] = r.role_indifferent;
  if (!r.notes.empty()) j["notes"] = r.notes;
  return j;
}

Json to_json(const oracle::VerificationReport& r) {
  Json j;
  j["claim"] = oracle::claim_name(r.claim);
  j["verdict"] = r.pass ? "pass" : "fail";
  j["slack"] = to_json(r.slack);
  j["points_checked"] = r.points_checked;
  if (r.witness) {
    Json w;
    if (r.witness->prices) w["prices"] = to_json(*r.witness->prices);
    if (r.witness->option) w["option"] = *r.witness->option;
    if (!r.witness->allocations.empty()) {
      Json xs = Json::array();
      for (const auto& x : r.witness->allocations) xs.push_back(to_json(x));
      w["allocations"] = std::move(xs);
    }
    w["description"] = r.witness->description;
    j["witness"] = std::move(w);
  }
  if (r.outcome) j["outcome"] = *r.outcome;
  if (!r.path_prices.empty()) {
    Json path = Json::array();
    for (const auto& p : r.path_prices) path.push_back(to_json(p));
    j["path_prices"] = std::move(path);
  }
  if (!r.payoffs.empty()) j["payoffs"] = to_json(r.payoffs);
  if (r.min_chooser_payoff) j["min_chooser_payoff"] = to_json(*r.min_chooser_payoff);
  if (!r.notes.empty()) j["notes"] = r.notes;
  return j;
}

}  // namespace pandc
