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

#ifndef PANDC_MODEL_H_
#define PANDC_MODEL_H_

#include <span>
#include <string>
#include <vector>

#include "pandc/rational.h"

namespace pandc {

using OptionIndex = int;
using PlayerIndex = int;

// n players' utilities over k labelled options: values[i][j] = u_i(a_j).
// Immutable once constructed; construction validates shape and labels.
class UtilityProfile {
 public:
  UtilityProfile(std::vector<std::string> options,
                 std::vector<std::string> players,
                 std::vector<std::vector<Rational>> values);

  // Anonymous labels "a1..ak" / "p1..pn".
  static UtilityProfile from_values(std::vector<std::vector<Rational>> values);

  int num_players() const { return static_cast<int>(values_.size()); }
  int num_options() const { return static_cast<int>(options_.size()); }

  const Rational& value(PlayerIndex i, OptionIndex j) const { return values_[i][j]; }
  std::span<const Rational> row(PlayerIndex i) const { return values_[i]; }
  const std::vector<std::vector<Rational>>& values() const { return values_; }

  const std::vector<std::string>& options() const { return options_; }
  const std::vector<std::string>& players() const { return players_; }

  // Same labels, one player's row replaced.
  UtilityProfile with_row(PlayerIndex i, std::vector<Rational> row) const;

  friend bool operator==(const UtilityProfile&, const UtilityProfile&) = default;

 private:
  std::vector<std::string> options_;
  std::vector<std::string> players_;
  std::vector<std::vector<Rational>> values_;
};

struct WelfareStats {
  std::vector<Rational> avg;      // per player
  std::vector<Rational> welfare;  // per option, sum over players
  Rational max_welfare;
  std::vector<OptionIndex> efficient_set;  // ascending
  std::vector<OptionIndex> pareto_set;     // ascending
};

WelfareStats compute_welfare_stats(const UtilityProfile& u);

// Options not weakly dominated (with one strict inequality) by another option.
std::vector<OptionIndex> pareto_set(const UtilityProfile& u);

std::vector<OptionIndex> efficient_set(const UtilityProfile& u);

// Lowest-index efficient option; the canonical representative.
OptionIndex canonical_efficient_option(const UtilityProfile& u);

// k prices whose sum is exactly target_sum.
class PriceVector {
 public:
  // Throws kSumConstraintViolated when sum(prices) != target_sum.
  explicit PriceVector(std::vector<Rational> prices, Rational target_sum = Rational(0));

  // Lets the last entry absorb the residual so the sum hits target_sum.
  static PriceVector balanced_by_last(std::vector<Rational> prices,
                                      Rational target_sum = Rational(0));

  int size() const { return static_cast<int>(prices_.size()); }
  const Rational& operator[](OptionIndex j) const { return prices_[j]; }
  const std::vector<Rational>& prices() const { return prices_; }
  const Rational& target_sum() const { return target_sum_; }

  friend bool operator==(const PriceVector&, const PriceVector&) = default;

 private:
  std::vector<Rational> prices_;
  Rational target_sum_;
};

struct Allocation {
  OptionIndex option = 0;
  std::vector<Rational> transfers;

  friend bool operator==(const Allocation&, const Allocation&) = default;
};

Rational transfer_sum(const Allocation& x);

}  // namespace pandc

#endif  // PANDC_MODEL_H_
