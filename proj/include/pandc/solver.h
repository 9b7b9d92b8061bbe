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

#ifndef PANDC_SOLVER_H_
#define PANDC_SOLVER_H_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pandc/mechanism.h"
#include "pandc/model.h"
#include "pandc/rational.h"
#include "pandc/transform.h"

namespace pandc {

// Closed-form subgame-perfect equilibrium of one mechanism on one profile.
struct EquilibriumReport {
  Variant variant = Variant::kPc2;

  // pc2 / pc-alpha / pc2-nonql: [p*]. pc2-robust: [q*]. pc-n and bid-pc: the
  // chain [p^2*, ..., p^n*] for the identity seat order. pc-endogenous-alpha:
  // [prices if player 1 proposes, prices if player 2 proposes].
  std::vector<PriceVector> star_prices;
  std::vector<OptionIndex> predicted_outcomes;
  // Payoffs at any predicted outcome (they coincide across the set).
  std::vector<Rational> predicted_payoffs;

  std::optional<Rational> alpha_star;     // pc-endogenous-alpha
  std::optional<Rational> b_star;         // bid-pc
  std::optional<Rational> surplus;        // bid-pc: MAX - sum of averages
  std::optional<Rational> epsilon;        // pc2-robust
  std::optional<Rational> epsilon_bound;  // pc2-robust: strict upper bound on epsilon

  // pc2-robust: lower bounds on the chooser's payoff at any epsilon-maximizer,
  // Avg_2 - c * epsilon, for c = (k-1)/k (tight) and c = k/(k-1) (loose).
  std::optional<Rational> chooser_floor_tight;
  std::optional<Rational> chooser_floor_loose;
  bool robust_singleton = false;  // pc2-robust: chooser's eps-maximizers at q* = {a*}

  // pc2-nonql: q* = eta(p*) and the chooser's constant payoff at p*.
  std::vector<Rational> normalized_prices;
  std::optional<Rational> chooser_level;
  bool outcomes_in_pareto_set = false;

  bool role_indifferent = false;  // pc-endogenous-alpha

  std::vector<std::string> notes;
};

// p*_j = u_2(a_j) - Avg_2: the only balanced price vector that leaves the
// chooser indifferent. Requires n = 2.
EquilibriumReport solve_pc2(const UtilityProfile& u);
EquilibriumReport solve_pc2_alpha(const UtilityProfile& u, const Rational& alpha);
EquilibriumReport solve_endogenous_alpha(const UtilityProfile& u);
EquilibriumReport solve_pc_n(const UtilityProfile& u);
EquilibriumReport solve_pc2_nonql(const UtilityProfile& u, const MonotoneTransform& eta,
                                  const MonotoneTransform& zeta);
EquilibriumReport solve_pc2_robust(const UtilityProfile& u, const Rational& epsilon);
EquilibriumReport solve_bid_pc(const UtilityProfile& u);

// Dispatches on config.variant using its alpha / epsilon / transforms.
EquilibriumReport solve(const MechanismConfig& config, const UtilityProfile& u);

// Equilibrium price chain when seats are taken in `order`: entry m is the
// vector posted by position m, sum over later positions of (u - Avg).
std::vector<PriceVector> pc_n_chain(const UtilityProfile& u, std::span<const PlayerIndex> order);

// Largest epsilon bound for the robust mechanism:
// min over inefficient j of (MAX - welfare_j) / (2 + (k-1)/k).
// Throws kNonUniqueEfficientOption.
Rational robust_epsilon_bound(const UtilityProfile& u);

// q*: p* with the efficient option discounted by epsilon and every other
// option raised by epsilon / (k-1).
PriceVector robust_prices(const UtilityProfile& u, const Rational& epsilon);

// Options within epsilon of the chooser's best payoff u_2(a) - p_a.
std::vector<OptionIndex> epsilon_maximizers(const UtilityProfile& u, const PriceVector& p,
                                            const Rational& epsilon);

// Among the chooser's epsilon-maximizers, the option minimizing the
// proposer's payoff u_1(a) + p_a; ties go to the lowest index.
OptionIndex adversarial_chooser(const UtilityProfile& u, const PriceVector& p,
                                const Rational& epsilon);

// Chooser's best reply breaking ties in the proposer's favour, then by index.
OptionIndex cooperative_chooser(const UtilityProfile& u, const PriceVector& p);

// theta with sum_a eta^{-1}(row_a - theta) = 0, found exactly. Posting
// p_a = eta^{-1}(row_a - theta) balances the prices and leaves a chooser
// with money valued through eta indifferent at level theta.
Rational nonql_indifference_level(std::span<const Rational> chooser_row,
                                  const MonotoneTransform& eta);

}  // namespace pandc

#endif  // PANDC_SOLVER_H_
