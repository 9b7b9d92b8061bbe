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

#include "pandc/model.h"

#include <algorithm>
#include <set>
#include <utility>

#include "pandc/error.h"

namespace pandc {

UtilityProfile::UtilityProfile(std::vector<std::string> options,
                               std::vector<std::string> players,
                               std::vector<std::vector<Rational>> values)
    : options_(std::move(options)),
      players_(std::move(players)),
      values_(std::move(values)) {
  if (options_.size() < 2) {
    fail(ErrorCode::kInvalidProfile, "a profile needs at least 2 options");
  }
  if (values_.size() < 2) {
    fail(ErrorCode::kInvalidProfile, "a profile needs at least 2 players");
  }
  if (players_.size() != values_.size()) {
    fail(ErrorCode::kInvalidProfile, "player labels do not match utility rows");
  }
  std::set<std::string> seen(options_.begin(), options_.end());
  if (seen.size() != options_.size()) {
    fail(ErrorCode::kInvalidProfile, "option labels must be unique");
  }
  for (const auto& row : values_) {
    if (row.size() != options_.size()) {
      fail(ErrorCode::kInvalidProfile, "every utility row needs one entry per option");
    }
  }
}

UtilityProfile UtilityProfile::from_values(std::vector<std::vector<Rational>> values) {
  std::vector<std::string> options;
  std::vector<std::string> players;
  const std::size_t k = values.empty() ? 0 : values.front().size();
  for (std::size_t j = 0; j < k; ++j) options.push_back("a" + std::to_string(j + 1));
  for (std::size_t i = 0; i < values.size(); ++i) players.push_back("p" + std::to_string(i + 1));
  return UtilityProfile(std::move(options), std::move(players), std::move(values));
}

UtilityProfile UtilityProfile::with_row(PlayerIndex i, std::vector<Rational> row) const {
  auto values = values_;
  values.at(i) = std::move(row);
  return UtilityProfile(options_, players_, std::move(values));
}

std::vector<OptionIndex> efficient_set(const UtilityProfile& u) {
  return compute_welfare_stats(u).efficient_set;
}

OptionIndex canonical_efficient_option(const UtilityProfile& u) {
  return efficient_set(u).front();
}

std::vector<OptionIndex> pareto_set(const UtilityProfile& u) {
  const int n = u.num_players();
  const int k = u.num_options();
  std::vector<OptionIndex> out;
  for (int j = 0; j < k; ++j) {
    bool dominated = false;
    for (int other = 0; other < k && !dominated; ++other) {
      if (other == j) continue;
      bool weakly_better = true;
      bool strictly_better = false;
      for (int i = 0; i < n; ++i) {
        if (u.value(i, other) < u.value(i, j)) {
          weakly_better = false;
          break;
        }
        if (u.value(i, other) > u.value(i, j)) strictly_better = true;
      }
      dominated = weakly_better && strictly_better;
    }
    if (!dominated) out.push_back(j);
  }
  return out;
}

WelfareStats compute_welfare_stats(const UtilityProfile& u) {
  const int n = u.num_players();
  const int k = u.num_options();
  WelfareStats s;
  s.avg.reserve(n);
  for (int i = 0; i < n; ++i) s.avg.push_back(mean(u.row(i)));
  s.welfare.assign(k, Rational(0));
  for (int j = 0; j < k; ++j) {
    for (int i = 0; i < n; ++i) s.welfare[j] += u.value(i, j);
  }
  s.max_welfare = *std::max_element(s.welfare.begin(), s.welfare.end());
  for (int j = 0; j < k; ++j) {
    if (s.welfare[j] == s.max_welfare) s.efficient_set.push_back(j);
  }
  s.pareto_set = pareto_set(u);
  return s;
}

PriceVector::PriceVector(std::vector<Rational> prices, Rational target_sum)
    : prices_(std::move(prices)), target_sum_(std::move(target_sum)) {
  const Rational total = sum(prices_);
  if (total != target_sum_) {
    fail(ErrorCode::kSumConstraintViolated,
         "prices sum to " + total.pretty() + ", expected " + target_sum_.pretty());
  }
}

PriceVector PriceVector::balanced_by_last(std::vector<Rational> prices, Rational target_sum) {
  if (prices.empty()) fail(ErrorCode::kInvalidArgument, "empty price vector");
  Rational head;
  for (std::size_t j = 0; j + 1 < prices.size(); ++j) head += prices[j];
  prices.back() = target_sum - head;
  return PriceVector(std::move(prices), std::move(target_sum));
}

Rational transfer_sum(const Allocation& x) { return sum(x.transfers); }

}  // namespace pandc
