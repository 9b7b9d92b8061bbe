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


#include "doctest.h"
#include "pandc/bots.h"
#include "pandc/error.h"
#include "pandc/instance_gen.h"
#include "pandc/json_io.h"
#include "pandc/random.h"
#include "test_util.h"

namespace pandc {
namespace {

using testing::mirror_profile;
using testing::q;
using testing::row;

TEST_CASE("rationals serialize as num/den") {
  CHECK(to_json(Rational(3)) == Json("3/1"));
  CHECK(to_json(Rational(-5, 3)) == Json("-5/3"));
  CHECK(rational_from_json(Json(4)) == Rational(4));
  CHECK(rational_from_json(Json("0.25")) == Rational(1, 4));
  CHECK_THROWS_AS(rational_from_json(Json(0.5)), Error);
  CHECK_THROWS_AS(rational_from_json(Json(nullptr)), Error);
}

TEST_CASE("instance format") {
  const auto j = Json::parse(R"({"options": ["x", "y", "z"], "players": ["ann", "bob"],
                                 "utilities": [["1", 0, "-1"], ["1/1", "0/3", -1]]})");
  const auto u = profile_from_json(j);
  CHECK(u.options()[1] == "y");
  CHECK(u.values() == mirror_profile().values());
  CHECK(profile_from_json(to_json(u)) == u);
  CHECK(to_json(u)["utilities"][0][2] == "-1/1");

  const auto bare = profile_from_json(Json::parse(R"({"utilities": [[1, 2], [3, 4]]})"));
  CHECK(bare.options() == std::vector<std::string>{"a1", "a2"});
  CHECK_THROWS_AS(profile_from_json(Json::parse(R"({"options": ["x"]})")), Error);
  try {
    profile_from_json(Json::parse(R"({"utilities": [[1, 2], [3]]})"));
    FAIL("expected error");
  } catch (const Error& e) {
    CHECK(e.code() != ErrorCode::kParseError);
  }
}

TEST_CASE("config and move round trips") {
  Rng rng(1);
  MechanismConfig c;
  c.variant = Variant::kPc2NonQl;
  c.zeta = random_transform(rng);
  c.eta = random_transform(rng);
  c.rng_seed = 99;
  CHECK(config_from_json(to_json(c)) == c);
  c = MechanismConfig{};
  c.variant = Variant::kPc2Robust;
  c.epsilon = Rational(1, 2);
  CHECK(config_from_json(to_json(c)) == c);
  CHECK_THROWS_AS(config_from_json(Json::parse(R"({"variant": "pc9"})")), Error);

  const std::vector<Move> moves{{0, BidMove{q("3/2")}},    {1, AlphaMove{q("-3")}},
                                {1, RoleMove{Role::kProposer}}, {0, PriceMove{row({"1", "0", "-1"})}},
                                {1, ChoiceMove{2}}};
  for (const auto& m : moves) CHECK(move_from_json(to_json(m)) == m);
  CHECK_THROWS_AS(move_from_json(Json::parse(R"({"player": 0, "kind": "dance"})")), Error);
  CHECK_THROWS_AS(move_from_json(Json::parse(R"({"player": 0, "kind": "role", "role": "x"})")),
                  Error);
}

TEST_CASE("session state carries the settled allocation") {
  MechanismConfig c;
  auto s = new_session(c, mirror_profile());
  s = apply_move(s, {0, PriceMove{row({"1", "0", "-1"})}});
  s = apply_move(s, {1, ChoiceMove{0}});
  const auto j = to_json(s);
  CHECK(j["stage"]["kind"] == "settled");
  CHECK(j["result"]["option"] == 0);
  CHECK(j["result"]["transfers"] == Json::array({"1/1", "-1/1"}));
  CHECK(j["payoffs"] == Json::array({"2/1", "0/1"}));
  std::vector<Move> log;
  for (const auto& m : j["move_log"]) log.push_back(move_from_json(m));
  CHECK(replay(config_from_json(j["config"]), profile_from_json(j["profile"]), log) == s);
}

TEST_CASE("reports serialize") {
  const auto r = to_json(solve_pc2(mirror_profile()));
  CHECK(r["star_prices"][0]["prices"] == Json::array({"1/1", "0/1", "-1/1"}));
  CHECK(r["predicted_payoffs"] == Json::array({"2/1", "0/1"}));
  const auto v = to_json(oracle::verify_chooser_indifference(mirror_profile(),
                                                             PriceVector(row({"1", "0", "-1"}))));
  CHECK(v["verdict"] == "pass");
  CHECK(v["claim"] == "chooser-indifference");
}

}  // namespace
}  // namespace pandc
