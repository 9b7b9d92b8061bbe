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
#include "pandc/error.h"
#include "pandc/instance_gen.h"
#include "pandc/model.h"
#include "pandc/random.h"
#include "test_util.h"

namespace pandc {
namespace {

using testing::mirror_profile;
using testing::profile;
using testing::q;
using testing::row;

TEST_CASE("rational parse and print") {
  CHECK(q("3").str() == "3/1");
  CHECK(q("-6/4").str() == "-3/2");
  CHECK(q("-0.125") == Rational(-1, 8));
  CHECK_THROWS_AS(q("2/-4"), Error);
  CHECK(Rational(5, 3).pretty() == "5/3");
  CHECK(Rational(4).pretty() == "4");
  CHECK_THROWS_AS(q("1/0"), Error);
  CHECK_THROWS_AS(q("abc"), Error);
  CHECK_THROWS_AS(q(""), Error);
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(1, 3) < Rational(1, 2));
}

TEST_CASE("welfare stats on the mirror profile") {
  const auto s = compute_welfare_stats(mirror_profile());
  CHECK(s.avg == row({"0", "0"}));
  CHECK(s.welfare == row({"2", "0", "-2"}));
  CHECK(s.max_welfare == Rational(2));
  CHECK(s.efficient_set == std::vector<OptionIndex>{0});
  CHECK(s.pareto_set == std::vector<OptionIndex>{0});
}

TEST_CASE("constant utilities make every option efficient and undominated") {
  const auto s = compute_welfare_stats(profile({{"3/2", "3/2", "3/2"}, {"3/2", "3/2", "3/2"}}));
  CHECK(s.max_welfare == Rational(3));
  CHECK(s.efficient_set == std::vector<OptionIndex>{0, 1, 2});
  CHECK(s.pareto_set == std::vector<OptionIndex>{0, 1, 2});
}

TEST_CASE("pareto set of opposed preferences") {
  CHECK(pareto_set(profile({{"1", "0"}, {"0", "1"}})) == std::vector<OptionIndex>{0, 1});
}

TEST_CASE("efficient set matches an exhaustive column scan on random 3x4 profiles") {
  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const auto u = random_profile(rng, 3, 4, Rational(-10), Rational(10), 8);
    Rational best = u.value(0, 0) + u.value(1, 0) + u.value(2, 0);
    for (int j = 1; j < 4; ++j) best = std::max(best, u.value(0, j) + u.value(1, j) + u.value(2, j));
    std::vector<OptionIndex> expect;
    for (int j = 0; j < 4; ++j) {
      if (u.value(0, j) + u.value(1, j) + u.value(2, j) == best) expect.push_back(j);
    }
    const auto s = compute_welfare_stats(u);
    CHECK(s.efficient_set == expect);
    CHECK(!s.pareto_set.empty());
    CHECK(std::includes(s.pareto_set.begin(), s.pareto_set.end(), s.efficient_set.begin(),
                        s.efficient_set.end()));
  }
}

TEST_CASE("scaling utilities scales statistics and keeps the sets") {
  Rng rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const auto u = random_profile(rng, 2, 5, Rational(-4), Rational(4), 6);
    const Rational lambda(static_cast<std::int64_t>(rng.uniform(1, 9)), 4);
    std::vector<std::vector<Rational>> scaled = u.values();
    for (auto& r : scaled) {
      for (auto& v : r) v *= lambda;
    }
    const auto a = compute_welfare_stats(u);
    const auto b = compute_welfare_stats(UtilityProfile::from_values(scaled));
    CHECK(b.max_welfare == a.max_welfare * lambda);
    CHECK(b.avg[0] == a.avg[0] * lambda);
    CHECK(b.efficient_set == a.efficient_set);
    CHECK(b.pareto_set == a.pareto_set);
  }
}

TEST_CASE("profile validation") {
  CHECK_THROWS_AS(profile({{"1", "2"}}), Error);
  CHECK_THROWS_AS(profile({{"1"}, {"2"}}), Error);
  CHECK_THROWS_AS(profile({{"1", "2"}, {"1"}}), Error);
  CHECK_THROWS_AS(UtilityProfile({"a", "a"}, {"x", "y"}, {row({"1", "2"}), row({"1", "2"})}),
                  Error);
}

TEST_CASE("price vectors enforce their sum exactly") {
  CHECK_NOTHROW(PriceVector(row({"1", "0", "-1"})));
  try {
    PriceVector(row({"1", "0", "-999/1000"}));
    FAIL("expected sum violation");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kSumConstraintViolated);
  }
  const auto p = PriceVector::balanced_by_last(row({"1", "1/2", "0"}), Rational(-3));
  CHECK(p[2] == Rational(-9, 2));
  CHECK(p.target_sum() == Rational(-3));
}

TEST_CASE("generator is deterministic and validates its range") {
  GenOptions o;
  o.players = 2;
  o.options = 3;
  o.seed = 7;
  CHECK(generate_profile(o) == generate_profile(o));
  o.seed = 8;
  const auto other = generate_profile(o);
  o.seed = 7;
  CHECK(!(generate_profile(o) == other));
  o.unique_efficient = true;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    o.seed = seed;
    CHECK(efficient_set(generate_profile(o)).size() == 1);
  }
  o.options = 1;
  CHECK_THROWS_AS(generate_profile(o), Error);
  o.options = 3;
  o.lo = Rational(2);
  o.hi = Rational(2);
  CHECK_THROWS_AS(generate_profile(o), Error);
}

TEST_CASE("generated values respect range and denominator") {
  GenOptions o;
  o.players = 3;
  o.options = 6;
  o.lo = Rational(-1, 2);
  o.hi = Rational(3, 4);
  o.max_den = 5;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    o.seed = seed;
    const auto u = generate_profile(o);
    for (const auto& r : u.values()) {
      for (const auto& v : r) {
        CHECK(v >= o.lo);
        CHECK(v <= o.hi);
        CHECK(v.denominator() <= 5);
      }
    }
  }
}

}  // namespace
}  // namespace pandc
