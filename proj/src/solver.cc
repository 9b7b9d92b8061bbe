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

#include "pandc/solver.h"

#include <algorithm>
#include <numeric>
#include <utility>

#include "pandc/error.h"

namespace pandc {
namespace {

void require_two_players(const UtilityProfile& u, std::string_view what) {
  if (u.num_players() != 2) {
    fail(ErrorCode::kWrongPlayerCount, std::string(what) + " needs exactly 2 players, got " +
                                           std::to_string(u.num_players()));
  }
}

Rational k_of(const UtilityProfile& u) { return Rational(u.num_options()); }

// Indifference prices for a chooser with utility `row`, shifted so they sum
// to alpha.
std::vector<Rational> indifference_prices(std::span<const Rational> row, const Rational& alpha) {
  const Rational shift = alpha / Rational(static_cast<std::int64_t>(row.size())) - mean(row);
  std::vector<Rational> p;
  p.reserve(row.size());
  for (const auto& v : row) p.push_back(v + shift);
  return p;
}

// Payoffs of a two-seat round: proposer receives p_a from the chooser.
std::vector<Rational> two_seat_payoffs(const UtilityProfile& u, PlayerIndex proposer,
                                       const PriceVector& p, OptionIndex a) {
  std::vector<Rational> out(2);
  out[proposer] = u.value(proposer, a) + p[a];
  out[1 - proposer] = u.value(1 - proposer, a) - p[a];
  return out;
}

}  // namespace

EquilibriumReport solve_pc2(const UtilityProfile& u) {
  require_two_players(u, "pc2");
  const WelfareStats stats = compute_welfare_stats(u);
  EquilibriumReport r;
  r.variant = Variant::kPc2;
  r.star_prices.emplace_back(indifference_prices(u.row(1), Rational(0)));
  r.predicted_outcomes = stats.efficient_set;
  r.predicted_payoffs = two_seat_payoffs(u, 0, r.star_prices[0], stats.efficient_set.front());
  return r;
}

EquilibriumReport solve_pc2_alpha(const UtilityProfile& u, const Rational& alpha) {
  require_two_players(u, "pc-alpha");
  const WelfareStats stats = compute_welfare_stats(u);
  EquilibriumReport r;
  r.variant = Variant::kPcAlpha;
  r.star_prices.emplace_back(indifference_prices(u.row(1), alpha), alpha);
  r.predicted_outcomes = stats.efficient_set;
  r.predicted_payoffs = two_seat_payoffs(u, 0, r.star_prices[0], stats.efficient_set.front());
  return r;
}

EquilibriumReport solve_endogenous_alpha(const UtilityProfile& u) {
  require_two_players(u, "pc-endogenous-alpha");
  const WelfareStats stats = compute_welfare_stats(u);
  const Rational alpha = k_of(u) / Rational(2) * (stats.avg[0] + stats.avg[1] - stats.max_welfare);
  const OptionIndex a = stats.efficient_set.front();

  EquilibriumReport r;
  r.variant = Variant::kPcEndogenousAlpha;
  r.alpha_star = alpha;
  PriceVector p1_proposes(indifference_prices(u.row(1), alpha), alpha);
  PriceVector p2_proposes(indifference_prices(u.row(0), alpha), alpha);
  const auto as_chooser = two_seat_payoffs(u, 0, p1_proposes, a);
  const auto as_proposer = two_seat_payoffs(u, 1, p2_proposes, a);
  r.star_prices = {p1_proposes, p2_proposes};
  r.predicted_outcomes = stats.efficient_set;
  r.predicted_payoffs = as_chooser;
  r.role_indifferent = as_chooser[1] == as_proposer[1];
  r.notes.push_back("player 2 receives " + as_chooser[1].pretty() + " as chooser and " +
                    as_proposer[1].pretty() + " as proposer");
  return r;
}

std::vector<PriceVector> pc_n_chain(const UtilityProfile& u, std::span<const PlayerIndex> order) {
  const int n = u.num_players();
  const int k = u.num_options();
  std::vector<Rational> prev(k, Rational(0));
  std::vector<PriceVector> chain;
  // Position m faces a two-player round against a fictitious chooser whose
  // utility is the sum over all later seats.
  for (int m = 0; m + 1 < n; ++m) {
    std::vector<Rational> proposer_row(k);
    std::vector<Rational> fictitious_row(k, Rational(0));
    for (int j = 0; j < k; ++j) {
      proposer_row[j] = u.value(order[m], j) - prev[j];
      for (int later = m + 1; later < n; ++later) fictitious_row[j] += u.value(order[later], j);
    }
    const EquilibriumReport level =
        solve_pc2(UtilityProfile::from_values({std::move(proposer_row), std::move(fictitious_row)}));
    chain.push_back(level.star_prices.front());
    prev = chain.back().prices();
  }
  return chain;
}

EquilibriumReport solve_pc_n(const UtilityProfile& u) {
  const int n = u.num_players();
  std::vector<PlayerIndex> order(n);
  std::iota(order.begin(), order.end(), 0);
  const WelfareStats stats = compute_welfare_stats(u);

  EquilibriumReport r;
  r.variant = Variant::kPcN;
  r.star_prices = pc_n_chain(u, order);
  r.predicted_outcomes = stats.efficient_set;
  const OptionIndex a = stats.efficient_set.front();
  const auto t = chain_transfers(r.star_prices, order, a);
  for (PlayerIndex i = 0; i < n; ++i) r.predicted_payoffs.push_back(u.value(i, a) + t[i]);
  return r;
}

Rational nonql_indifference_level(std::span<const Rational> chooser_row,
                                  const MonotoneTransform& eta) {
  const MonotoneTransform eta_inv = eta.inverse();
  auto excess = [&](const Rational& theta) {
    Rational s;
    for (const auto& v : chooser_row) s += eta_inv(v - theta);
    return s;
  };
  // excess() is strictly decreasing and linear between the kinks
  // theta = row_a - eta_value_b, so the root is found by exact interpolation.
  std::vector<Rational> kinks;
  for (const auto& v : chooser_row) {
    for (const auto& y : eta.values()) kinks.push_back(v - y);
  }
  std::sort(kinks.begin(), kinks.end());
  kinks.erase(std::unique(kinks.begin(), kinks.end()), kinks.end());
  kinks.insert(kinks.begin(), kinks.front() - Rational(1));
  kinks.push_back(kinks.back() + Rational(1));

  std::vector<Rational> values;
  values.reserve(kinks.size());
  for (const auto& c : kinks) values.push_back(excess(c));

  std::size_t hi = 0;
  while (hi < kinks.size() && values[hi].sign() > 0) ++hi;
  if (hi < kinks.size() && values[hi].sign() == 0) return kinks[hi];
  std::size_t lo;
  if (hi == 0) {
    lo = 0;
    hi = 1;
  } else if (hi == kinks.size()) {
    lo = kinks.size() - 2;
    hi = kinks.size() - 1;
  } else {
    lo = hi - 1;
  }
  return kinks[lo] + values[lo] * (kinks[hi] - kinks[lo]) / (values[lo] - values[hi]);
}

EquilibriumReport solve_pc2_nonql(const UtilityProfile& u, const MonotoneTransform& eta,
                                  const MonotoneTransform& zeta) {
  require_two_players(u, "pc2-nonql");
  const int k = u.num_options();
  const MonotoneTransform eta_inv = eta.inverse();
  const MonotoneTransform beta = compose(zeta, eta_inv);

  EquilibriumReport r;
  r.variant = Variant::kPc2NonQl;
  const Rational theta = nonql_indifference_level(u.row(1), eta);
  std::vector<Rational> posted;
  for (int j = 0; j < k; ++j) {
    r.normalized_prices.push_back(u.value(1, j) - theta);
    posted.push_back(eta_inv(r.normalized_prices.back()));
  }
  r.star_prices.emplace_back(std::move(posted));
  r.chooser_level = theta;

  std::vector<Rational> proposer_value(k);
  for (int j = 0; j < k; ++j) proposer_value[j] = u.value(0, j) + beta(r.normalized_prices[j]);
  const Rational best = *std::max_element(proposer_value.begin(), proposer_value.end());
  for (int j = 0; j < k; ++j) {
    if (proposer_value[j] == best) r.predicted_outcomes.push_back(j);
  }
  const OptionIndex a = r.predicted_outcomes.front();
  const Rational& price = r.star_prices[0][a];
  r.predicted_payoffs = {u.value(0, a) + zeta(price), u.value(1, a) - eta(price)};

  const auto pareto = pareto_set(u);
  r.outcomes_in_pareto_set = std::all_of(
      r.predicted_outcomes.begin(), r.predicted_outcomes.end(),
      [&](OptionIndex j) { return std::find(pareto.begin(), pareto.end(), j) != pareto.end(); });
  return r;
}

Rational robust_epsilon_bound(const UtilityProfile& u) {
  const WelfareStats stats = compute_welfare_stats(u);
  if (stats.efficient_set.size() != 1) {
    fail(ErrorCode::kNonUniqueEfficientOption,
         "the robust mechanism needs a unique efficient option; found " +
             std::to_string(stats.efficient_set.size()));
  }
  const Rational k = k_of(u);
  const Rational denom = Rational(2) + (k - Rational(1)) / k;
  std::optional<Rational> gap;
  for (int j = 0; j < u.num_options(); ++j) {
    if (j == stats.efficient_set.front()) continue;
    const Rational g = stats.max_welfare - stats.welfare[j];
    if (!gap || g < *gap) gap = g;
  }
  return *gap / denom;
}

PriceVector robust_prices(const UtilityProfile& u, const Rational& epsilon) {
  require_two_players(u, "pc2-robust");
  const OptionIndex e = canonical_efficient_option(u);
  const Rational k = k_of(u);
  std::vector<Rational> q = indifference_prices(u.row(1), Rational(0));
  for (int j = 0; j < u.num_options(); ++j) {
    q[j] += j == e ? -epsilon : epsilon / (k - Rational(1));
  }
  return PriceVector(std::move(q));
}

std::vector<OptionIndex> epsilon_maximizers(const UtilityProfile& u, const PriceVector& p,
                                            const Rational& epsilon) {
  const int k = u.num_options();
  std::vector<Rational> g2(k);
  for (int j = 0; j < k; ++j) g2[j] = u.value(1, j) - p[j];
  const Rational best = *std::max_element(g2.begin(), g2.end());
  std::vector<OptionIndex> out;
  for (int j = 0; j < k; ++j) {
    if (g2[j] + epsilon >= best) out.push_back(j);
  }
  return out;
}

OptionIndex adversarial_chooser(const UtilityProfile& u, const PriceVector& p,
                                const Rational& epsilon) {
  require_two_players(u, "adversarial chooser");
  const auto candidates = epsilon_maximizers(u, p, epsilon);
  OptionIndex pick = candidates.front();
  Rational worst = u.value(0, pick) + p[pick];
  for (OptionIndex j : candidates) {
    const Rational g1 = u.value(0, j) + p[j];
    if (g1 < worst) {
      worst = g1;
      pick = j;
    }
  }
  return pick;
}

OptionIndex cooperative_chooser(const UtilityProfile& u, const PriceVector& p) {
  require_two_players(u, "cooperative chooser");
  OptionIndex pick = 0;
  for (int j = 1; j < u.num_options(); ++j) {
    const Rational g2 = u.value(1, j) - p[j];
    const Rational best2 = u.value(1, pick) - p[pick];
    if (g2 > best2 || (g2 == best2 && u.value(0, j) + p[j] > u.value(0, pick) + p[pick])) {
      pick = j;
    }
  }
  return pick;
}

EquilibriumReport solve_pc2_robust(const UtilityProfile& u, const Rational& epsilon) {
  require_two_players(u, "pc2-robust");
  if (epsilon.sign() <= 0) {
    fail(ErrorCode::kEpsilonNonPositive, "epsilon must be positive, got " + epsilon.pretty());
  }
  const Rational bound = robust_epsilon_bound(u);
  if (epsilon >= bound) {
    fail(ErrorCode::kEpsilonTooLarge,
         "epsilon = " + epsilon.pretty() + " must be below epsilon_max = " + bound.pretty());
  }
  const WelfareStats stats = compute_welfare_stats(u);
  const OptionIndex e = stats.efficient_set.front();
  const Rational k = k_of(u);

  EquilibriumReport r;
  r.variant = Variant::kPc2Robust;
  r.epsilon = epsilon;
  r.epsilon_bound = bound;
  r.star_prices.push_back(robust_prices(u, epsilon));
  r.predicted_outcomes = {e};
  r.predicted_payoffs = two_seat_payoffs(u, 0, r.star_prices[0], e);
  r.chooser_floor_tight = stats.avg[1] - (k - Rational(1)) / k * epsilon;
  r.chooser_floor_loose = stats.avg[1] - k / (k - Rational(1)) * epsilon;
  const auto eps_max = epsilon_maximizers(u, r.star_prices[0], epsilon);
  r.robust_singleton = eps_max.size() == 1 && eps_max.front() == e;
  return r;
}

EquilibriumReport solve_bid_pc(const UtilityProfile& u) {
  const int n = u.num_players();
  const WelfareStats stats = compute_welfare_stats(u);
  Rational avg_total;
  for (const auto& a : stats.avg) avg_total += a;
  const Rational surplus = stats.max_welfare - avg_total;
  const Rational b = Rational(n - 1) / Rational(n) * surplus;

  EquilibriumReport r;
  r.variant = Variant::kBidPc;
  r.surplus = surplus;
  r.b_star = b;
  std::vector<PlayerIndex> order(n);
  std::iota(order.begin(), order.end(), 0);
  r.star_prices = pc_n_chain(u, order);
  r.predicted_outcomes = stats.efficient_set;

  // Seat 0 wins at b*; every seat order yields the same payoffs.
  const OptionIndex a = stats.efficient_set.front();
  auto t = chain_transfers(r.star_prices, order, a);
  for (PlayerIndex i = 0; i < n; ++i) {
    t[i] += i == 0 ? -b : b / Rational(n - 1);
    r.predicted_payoffs.push_back(u.value(i, a) + t[i]);
  }
  return r;
}

EquilibriumReport solve(const MechanismConfig& config, const UtilityProfile& u) {
  switch (config.variant) {
    case Variant::kPc2: return solve_pc2(u);
    case Variant::kPcAlpha: return solve_pc2_alpha(u, config.alpha);
    case Variant::kPcEndogenousAlpha: return solve_endogenous_alpha(u);
    case Variant::kPcN: return solve_pc_n(u);
    case Variant::kBidPc: return solve_bid_pc(u);
    case Variant::kPc2NonQl: return solve_pc2_nonql(u, config.eta, config.zeta);
    case Variant::kPc2Robust:
      if (!config.epsilon) fail(ErrorCode::kInvalidConfig, "pc2-robust needs epsilon");
      return solve_pc2_robust(u, *config.epsilon);
  }
  fail(ErrorCode::kInvalidConfig, "unknown variant");
}

}  // namespace pandc
