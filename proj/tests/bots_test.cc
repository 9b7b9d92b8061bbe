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


#include <algorithm>

#include "doctest.h"
#include "pandc/bots.h"
#include "pandc/error.h"
#include "pandc/instance_gen.h"
#include "pandc/random.h"
#include "pandc/solver.h"
#include "test_util.h"

namespace pandc {
namespace {

using testing::mirror_profile;
using testing::row;

bool contains(const std::vector<OptionIndex>& xs, OptionIndex x) {
  return std::find(xs.begin(), xs.end(), x) != xs.end();
}

TEST_CASE("policy names") {
  for (const char* name : {"equilibrium", "naive", "adversarial:1/2", "random:17"}) {
    const auto p = parse_bot_policy(name);
    CHECK(parse_bot_policy(bot_policy_name(p)) == p);
  }
  CHECK(parse_bot_policy("adversarial:1/2").epsilon == Rational(1, 2));
  CHECK_THROWS_AS(parse_bot_policy("adversarial"), Error);
  CHECK_THROWS_AS(parse_bot_policy("random:x"), Error);
  CHECK_THROWS_AS(parse_bot_policy("sneaky"), Error);
}

TEST_CASE("equilibrium bots settle efficiently within the stage count") {
  Rng rng(31);
  for (int trial = 0; trial < 105; ++trial) {
    const Variant v = all_variants()[trial % all_variants().size()];
    MechanismConfig c;
    c.variant = v;
    c.num_players = (v == Variant::kPcN || v == Variant::kBidPc) ? 2 + trial % 3 : 2;
    c.rng_seed = rng.next();
    UtilityProfile u = random_profile(rng, c.num_players, 2 + trial % 4, Rational(-6), Rational(6), 8);
    if (v == Variant::kPcAlpha) c.alpha = Rational(static_cast<std::int64_t>(rng.uniform(-8, 8)), 3);
    if (v == Variant::kPc2Robust) {
      GenOptions o;
      o.seed = rng.next();
      o.options = u.num_options();
      o.unique_efficient = true;
      u = generate_profile(o);
      c.epsilon = robust_epsilon_bound(u) / Rational(2);
    }
    if (v == Variant::kPc2NonQl) {
      c.zeta = random_transform(rng);
      c.eta = random_transform(rng);
    }
    const std::vector<BotPolicy> seats(c.num_players, BotPolicy::equilibrium());
    const auto done = play_out(new_session(c, u), seats, stage_count(c));
    const auto report = solve(c, u);
    if (v == Variant::kPc2NonQl) {
      CHECK(contains(pareto_set(u), done.result()->option));
      CHECK(contains(report.predicted_outcomes, done.result()->option));
    } else {
      CHECK(contains(efficient_set(u), done.result()->option));
      CHECK(sum(payoffs(done)) == compute_welfare_stats(u).max_welfare);
    }
    if (v != Variant::kBidPc) CHECK(payoffs(done) == report.predicted_payoffs);
  }
}

TEST_CASE("pc2 equilibrium bots land on (MAX - Avg2, Avg2)") {
  MechanismConfig c;
  const std::vector<BotPolicy> seats(2, BotPolicy::equilibrium());
  const auto done = play_out(new_session(c, mirror_profile()), seats);
  CHECK(*done.result() == Allocation{0, row({"1", "-1"})});
  CHECK(payoffs(done) == row({"2", "0"}));
}

TEST_CASE("adversarial chooser facing q* takes the efficient option") {
  const auto u = mirror_profile();
  MechanismConfig c;
  c.variant = Variant::kPc2Robust;
  c.epsilon = Rational(1, 2);
  auto s = new_session(c, u);
  s = apply_move(s, {0, PriceMove{robust_prices(u, Rational(1, 2)).prices()}});
  const auto m = bot_move(BotPolicy::adversarial(Rational(1, 2)), s, 1);
  CHECK(std::get<ChoiceMove>(m.payload).option == 0);
}

TEST_CASE("adversarial chooser against a naive proposer") {
  Rng rng(4);
  for (int trial = 0; trial < 50; ++trial) {
    const auto u = random_profile(rng, 2, 2 + trial % 4, Rational(-5), Rational(5), 4);
    const Rational eps(rng.uniform(0, 8), 4);
    MechanismConfig c;
    const std::vector<BotPolicy> seats{BotPolicy::naive(), BotPolicy::adversarial(eps)};
    const auto done = play_out(new_session(c, u), seats);
    const PriceVector zero(std::vector<Rational>(u.num_options()));
    CHECK(done.result()->option == adversarial_chooser(u, zero, eps));
  }
}

TEST_CASE("random bots are reproducible and legal") {
  MechanismConfig c;
  c.variant = Variant::kBidPc;
  c.num_players = 3;
  c.rng_seed = 5;
  Rng rng(2);
  const auto u = random_profile(rng, 3, 4, Rational(-3), Rational(3), 4);
  const std::vector<BotPolicy> seats{BotPolicy::random(1), BotPolicy::random(2),
                                     BotPolicy::random(3)};
  const auto a = play_out(new_session(c, u), seats);
  const auto b = play_out(new_session(c, u), seats);
  CHECK(a == b);
  CHECK(a.move_log().size() == 6);
}

TEST_CASE("bots refuse to move out of turn") {
  MechanismConfig c;
  const auto s = new_session(c, mirror_profile());
  CHECK_THROWS_AS(bot_move(BotPolicy::equilibrium(), s, 1), Error);
}

TEST_CASE("advice") {
  MechanismConfig c;
  auto s = new_session(c, mirror_profile());
  const auto a = advise(s, 0);
  CHECK(std::get<PriceMove>(a.move.payload).prices == row({"1", "0", "-1"}));
  CHECK(a.predicted_payoffs == row({"2", "0"}));
  s = apply_move(s, a.move);
  const auto b = advise(s, 1);
  CHECK(std::get<ChoiceMove>(b.move.payload).option == 0);
  CHECK(std::find(b.notes.begin(), b.notes.end(), "indifferent across all options") != b.notes.end());

  MechanismConfig bc;
  bc.variant = Variant::kBidPc;
  bc.num_players = 3;
  const auto u3 = testing::profile({{"1", "0", "-1"}, {"1", "0", "-1"}, {"1", "0", "-1"}});
  const auto bid = advise(new_session(bc, u3), 2);
  CHECK(std::get<BidMove>(bid.move.payload).amount == Rational(2));

  MechanismConfig ec;
  ec.variant = Variant::kPcEndogenousAlpha;
  auto e = new_session(ec, mirror_profile());
  e = apply_move(e, advise(e, 0).move);
  const auto role = advise(e, 1);
  CHECK(std::find(role.notes.begin(), role.notes.end(), "indifferent at alpha*") != role.notes.end());
}

}  // namespace
}  // namespace pandc
