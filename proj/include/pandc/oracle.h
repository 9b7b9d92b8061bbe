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

#ifndef PANDC_ORACLE_H_
#define PANDC_ORACLE_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pandc/model.h"
#include "pandc/rational.h"

// Brute-force checks of equilibrium claims. Nothing in here calls the
// closed-form solver on the path being checked: chooser replies, proposer
// deviations and game trees are enumerated directly on exact grids.
namespace pandc::oracle {

// Deviations explored per coordinate: -radius..radius in multiples of step.
struct GridSpec {
  Rational step = Rational(1, 8);
  Rational radius = Rational(2);
  std::uint64_t budget = 20'000'000;  // max grid points (or tree leaves)

  // Offsets per coordinate: 2 * floor(radius / step) + 1.
  std::int64_t points_per_axis() const;
  void validate() const;
};

enum class Claim {
  kChooserBestResponse,
  kProposerNoImprovingDeviation,
  kRobustEpsilonEquilibrium,
  kOutcomeEfficient,
  kMonotonicityViolation,
};

std::string_view claim_name(Claim c);  // "chooser-indifference", ...
Claim parse_claim(std::string_view name);

struct Witness {
  std::optional<PriceVector> prices;
  std::optional<OptionIndex> option;
  std::vector<Allocation> allocations;  // monotonicity: {x, f(u')}
  std::string description;
};

struct VerificationReport {
  Claim claim = Claim::kChooserBestResponse;
  bool pass = false;
  std::optional<Witness> witness;  // always set on failure
  Rational slack;
  std::uint64_t points_checked = 0;

  // Backward induction: the discretized equilibrium path.
  std::optional<OptionIndex> outcome;
  std::vector<PriceVector> path_prices;
  std::vector<Rational> payoffs;

  // Adversarial searches: lowest chooser payoff at any reply on the grid.
  std::optional<Rational> min_chooser_payoff;

  std::vector<std::string> notes;
};

struct ChooserPolicy {
  enum class Kind { kCooperative, kAdversarial };
  Kind kind = Kind::kCooperative;
  Rational epsilon;

  static ChooserPolicy cooperative() { return {}; }
  static ChooserPolicy adversarial(Rational eps) { return {Kind::kAdversarial, std::move(eps)}; }
};

// Grid search over balanced deviations around p_star (each of the first k-1
// coordinates moved, the last absorbing the difference). slack is the best
// gain for the proposer found on the grid, 0 at p_star itself. PASS iff
// slack <= 0 (cooperative) or slack <= epsilon (adversarial).
VerificationReport verify_proposer_optimality(const UtilityProfile& u, const PriceVector& p_star,
                                              const GridSpec& grid, const ChooserPolicy& policy);

// PASS iff u_2(a_j) - p_j is the same for every j; slack is the spread.
VerificationReport verify_chooser_indifference(const UtilityProfile& u, const PriceVector& p);

// Exact backward induction on the chain game with every posted vector
// restricted to the grid around its closed-form value. Ties go to the
// nearest earlier mover, then to the lowest option / first grid point.
// PASS iff the outcome is efficient and every payoff lies within step * k of
// the closed form. n <= 4 and k <= 4.
VerificationReport backward_induction_pc_n(const UtilityProfile& u, const GridSpec& grid);

// (i) the adversarial chooser picks the efficient option at q, and
// (ii) no grid deviation beats q's payoff by more than epsilon against it.
// epsilon == 0 runs verify_proposer_optimality with a cooperative chooser.
VerificationReport verify_robust_equilibrium(const UtilityProfile& u, const PriceVector& q,
                                             const Rational& epsilon, const GridSpec& grid);

using SocialChoiceFunction = std::function<Allocation(const UtilityProfile&)>;

// Efficient option (lowest index) with transfers (p*_a, -p*_a).
Allocation pc2_allocation_rule(const UtilityProfile& u);

struct MonotonicityOptions {
  Rational step = Rational(1, 4);
  Rational radius = Rational(4);
  // A published value of f(u') to compare against; a mismatch is noted in
  // the report, it does not change the verdict.
  std::optional<Allocation> claimed_f_u_prime;
};

// Searches for a Maskin-monotonicity violation of f between u and u'. The
// premise is checked over allocations (a, t, -t) with t on a grid around x's
// transfer plus every closed-form and indifference transfer for u and u'.
// FAIL (claim kMonotonicityViolation) means a violation was found; the
// witness holds {f(u), f(u')}.
VerificationReport check_maskin_monotonicity(const SocialChoiceFunction& f,
                                             const UtilityProfile& u,
                                             const UtilityProfile& u_prime,
                                             const MonotonicityOptions& options = {});

// Re-derives a reported violation from scratch: f(u) = x, f(u') = y, x != y
// and the premise holds on the candidate set built around x.
bool reverify_maskin_witness(const SocialChoiceFunction& f, const UtilityProfile& u,
                             const UtilityProfile& u_prime, const Allocation& x,
                             const Allocation& y, const MonotonicityOptions& options = {});

}  // namespace pandc::oracle

#endif  // PANDC_ORACLE_H_
