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

#include "pandc/oracle.h"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <limits>
#include <utility>

#include "pandc/error.h"
#include "pandc/solver.h"

namespace pandc::oracle {
namespace {

// Values handed to the integer kernels stay below 2^50 so that the few
// additions per comparison cannot overflow.
constexpr std::int64_t kIntLimit = std::int64_t{1} << 50;

// Common scale turning a set of rationals into exact int64 values.
class Scale {
 public:
  void include(const Rational& r) {
    mpz_lcm(den_.get_mpz_t(), den_.get_mpz_t(), r.gmp().get_den_mpz_t());
  }
  void include(std::span<const Rational> rs) {
    for (const auto& r : rs) include(r);
  }

  std::int64_t to_int(const Rational& r) const {
    mpq_class scaled = r.gmp() * mpq_class(den_);
    scaled.canonicalize();
    const mpz_class z = scaled.get_num();
    if (!z.fits_slong_p() || abs(z) > mpz_class(static_cast<long>(kIntLimit))) {
      fail(ErrorCode::kOverflow, "value " + r.pretty() + " too large for the grid kernel");
    }
    return z.get_si();
  }

  Rational to_rational(std::int64_t v) const {
    return Rational(mpq_class(mpz_class(static_cast<long>(v)), den_));
  }

 private:
  mpz_class den_ = 1;
};

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out) || std::llabs(out) > kIntLimit) {
    fail(ErrorCode::kOverflow, "grid offsets too large for the integer kernel");
  }
  return out;
}

std::uint64_t grid_size(std::int64_t per_axis, int dims, std::uint64_t budget) {
  std::uint64_t total = 1;
  for (int d = 0; d < dims; ++d) {
    if (total > budget / static_cast<std::uint64_t>(per_axis)) {
      fail(ErrorCode::kGridBudgetExceeded,
           "grid of " + std::to_string(per_axis) + "^" + std::to_string(dims) +
               " points exceeds the budget of " + std::to_string(budget));
    }
    total *= static_cast<std::uint64_t>(per_axis);
  }
  return total;
}

// Balanced offset vectors: z_0..z_{k-2} in [-m, m], last = -(sum of rest),
// each multiplied by the scaled step. Lexicographic in z.
class OffsetOdometer {
 public:
  OffsetOdometer(int k, std::int64_t m, std::int64_t step) : z_(k - 1, -m), m_(m), step_(step) {
    checked_mul(step, m * k);
  }

  void fill(std::vector<std::int64_t>& off) const {
    std::int64_t total = 0;
    for (std::size_t j = 0; j < z_.size(); ++j) {
      off[j] = step_ * z_[j];
      total += z_[j];
    }
    off[z_.size()] = -step_ * total;
  }

  bool advance() {
    for (std::size_t d = z_.size(); d-- > 0;) {
      if (z_[d] < m_) {
        ++z_[d];
        return true;
      }
      z_[d] = -m_;
    }
    return false;
  }

 private:
  std::vector<std::int64_t> z_;
  std::int64_t m_;
  std::int64_t step_;
};

struct SearchResult {
  std::int64_t baseline = 0;
  std::int64_t best_gain = 0;
  std::vector<std::int64_t> best_offset;
  std::int64_t min_chooser_payoff = std::numeric_limits<std::int64_t>::max();
  std::uint64_t points = 0;
};

// Chooser reply on scaled payoffs g1 (proposer) and g2 (chooser).
int reply(const std::vector<std::int64_t>& g1, const std::vector<std::int64_t>& g2,
          bool adversarial, std::int64_t eps) {
  const int k = static_cast<int>(g1.size());
  if (!adversarial) {
    int pick = 0;
    for (int j = 1; j < k; ++j) {
      if (g2[j] > g2[pick] || (g2[j] == g2[pick] && g1[j] > g1[pick])) pick = j;
    }
    return pick;
  }
  const std::int64_t best2 = *std::max_element(g2.begin(), g2.end());
  int pick = -1;
  for (int j = 0; j < k; ++j) {
    if (g2[j] + eps < best2) continue;
    if (pick < 0 || g1[j] < g1[pick]) pick = j;
  }
  return pick;
}

SearchResult proposer_grid_search(const std::vector<std::int64_t>& a1,
                                  const std::vector<std::int64_t>& a2, std::int64_t m,
                                  std::int64_t step, bool adversarial, std::int64_t eps) {
  const int k = static_cast<int>(a1.size());
  SearchResult res;
  res.baseline = a1[reply(a1, a2, adversarial, eps)];
  res.best_offset.assign(k, 0);

  std::vector<std::int64_t> off(k), g1(k), g2(k);
  OffsetOdometer odo(k, m, step);
  bool first = true;
  do {
    odo.fill(off);
    for (int j = 0; j < k; ++j) {
      g1[j] = a1[j] + off[j];
      g2[j] = a2[j] - off[j];
    }
    const int pick = reply(g1, g2, adversarial, eps);
    const std::int64_t gain = g1[pick] - res.baseline;
    if (first || gain > res.best_gain) {
      res.best_gain = gain;
      res.best_offset = off;
      first = false;
    }
    res.min_chooser_payoff = std::min(res.min_chooser_payoff, g2[pick]);
    ++res.points;
  } while (odo.advance());
  return res;
}

void require_two(const UtilityProfile& u) {
  if (u.num_players() != 2) {
    fail(ErrorCode::kWrongPlayerCount, "this check is defined for two players");
  }
}

void require_size(const UtilityProfile& u, const PriceVector& p) {
  if (p.size() != u.num_options()) {
    fail(ErrorCode::kDimensionMismatch, "price vector length differs from the option count");
  }
}

std::string describe(const Allocation& x) {
  std::string s = "(a" + std::to_string(x.option + 1);
  for (const auto& t : x.transfers) s += ", " + t.pretty();
  return s + ")";
}

}  // namespace

std::int64_t GridSpec::points_per_axis() const {
  const mpq_class ratio = radius.gmp() / step.gmp();
  mpz_class m;
  mpz_fdiv_q(m.get_mpz_t(), ratio.get_num_mpz_t(), ratio.get_den_mpz_t());
  if (!m.fits_slong_p() || m > 1'000'000'000L) {
    fail(ErrorCode::kGridBudgetExceeded, "radius / step is too large");
  }
  return 2 * m.get_si() + 1;
}

void GridSpec::validate() const {
  if (step.sign() <= 0 || radius.sign() <= 0) {
    fail(ErrorCode::kInvalidArgument, "grid step and radius must be positive");
  }
  if (step > radius) fail(ErrorCode::kInvalidArgument, "grid step exceeds the radius");
}

std::string_view claim_name(Claim c) {
  switch (c) {
    case Claim::kChooserBestResponse: return "chooser-indifference";
    case Claim::kProposerNoImprovingDeviation: return "proposer-optimality";
    case Claim::kRobustEpsilonEquilibrium: return "robust-equilibrium";
    case Claim::kOutcomeEfficient: return "backward-induction";
    case Claim::kMonotonicityViolation: return "maskin-monotonicity";
  }
  return "?";
}

Claim parse_claim(std::string_view name) {
  for (Claim c : {Claim::kChooserBestResponse, Claim::kProposerNoImprovingDeviation,
                  Claim::kRobustEpsilonEquilibrium, Claim::kOutcomeEfficient,
                  Claim::kMonotonicityViolation}) {
    if (claim_name(c) == name) return c;
  }
  fail(ErrorCode::kInvalidArgument, "unknown claim \"" + std::string(name) + "\"");
}

VerificationReport verify_proposer_optimality(const UtilityProfile& u, const PriceVector& p_star,
                                              const GridSpec& grid, const ChooserPolicy& policy) {
  require_two(u);
  require_size(u, p_star);
  grid.validate();
  const int k = u.num_options();
  const std::int64_t per_axis = grid.points_per_axis();
  grid_size(per_axis, k - 1, grid.budget);
  const bool adversarial = policy.kind == ChooserPolicy::Kind::kAdversarial;
  if (adversarial && policy.epsilon.sign() < 0) {
    fail(ErrorCode::kEpsilonNonPositive, "epsilon must be nonnegative");
  }

  Scale scale;
  scale.include(u.row(0));
  scale.include(u.row(1));
  scale.include(p_star.prices());
  scale.include(grid.step);
  scale.include(policy.epsilon);
  std::vector<std::int64_t> a1(k), a2(k);
  for (int j = 0; j < k; ++j) {
    a1[j] = scale.to_int(u.value(0, j) + p_star[j]);
    a2[j] = scale.to_int(u.value(1, j) - p_star[j]);
  }
  const SearchResult res = proposer_grid_search(a1, a2, (per_axis - 1) / 2,
                                                scale.to_int(grid.step), adversarial,
                                                scale.to_int(policy.epsilon));

  VerificationReport r;
  r.claim = Claim::kProposerNoImprovingDeviation;
  r.points_checked = res.points;
  r.slack = scale.to_rational(res.best_gain);
  r.pass = adversarial ? r.slack <= policy.epsilon : r.slack.sign() <= 0;
  if (!r.pass) {
    std::vector<Rational> dev(k);
    for (int j = 0; j < k; ++j) dev[j] = p_star[j] + scale.to_rational(res.best_offset[j]);
    Witness w;
    w.prices = PriceVector(std::move(dev), p_star.target_sum());
    w.description = "deviation gains " + r.slack.pretty() + " for the proposer";
    r.witness = std::move(w);
  }
  if (adversarial) r.min_chooser_payoff = scale.to_rational(res.min_chooser_payoff);
  return r;
}

VerificationReport verify_chooser_indifference(const UtilityProfile& u, const PriceVector& p) {
  require_two(u);
  require_size(u, p);
  const int k = u.num_options();
  OptionIndex hi = 0, lo = 0;
  std::vector<Rational> g2(k);
  for (int j = 0; j < k; ++j) {
    g2[j] = u.value(1, j) - p[j];
    if (g2[j] > g2[hi]) hi = j;
    if (g2[j] < g2[lo]) lo = j;
  }
  VerificationReport r;
  r.claim = Claim::kChooserBestResponse;
  r.points_checked = static_cast<std::uint64_t>(k);
  r.slack = g2[hi] - g2[lo];
  r.pass = r.slack.sign() == 0;
  if (!r.pass) {
    Witness w;
    w.option = hi;
    w.prices = p;
    w.description = "chooser strictly prefers a" + std::to_string(hi + 1) + " over a" +
                    std::to_string(lo + 1) + " by " + r.slack.pretty();
    r.witness = std::move(w);
  }
  return r;
}

namespace {

struct TreeOutcome {
  int option = -1;
  std::vector<std::int64_t> payoffs;  // by position
  std::vector<int> path;              // grid index chosen at each level
};

class ChainTree {
 public:
  ChainTree(std::vector<std::vector<std::int64_t>> utils,
            std::vector<std::vector<std::vector<std::int64_t>>> candidates)
      : utils_(std::move(utils)),
        candidates_(std::move(candidates)),
        n_(static_cast<int>(utils_.size())),
        k_(static_cast<int>(utils_.front().size())),
        chosen_(n_ - 1, nullptr) {}

  TreeOutcome solve(int level) {
    if (level == n_ - 1) return choose();
    TreeOutcome best;
    bool have = false;
    const auto& cands = candidates_[level];
    for (int g = 0; g < static_cast<int>(cands.size()); ++g) {
      chosen_[level] = &cands[g];
      TreeOutcome sub = solve(level + 1);
      if (!have || prefers(level, sub.payoffs, best.payoffs)) {
        sub.path.insert(sub.path.begin(), g);
        best = std::move(sub);
        have = true;
      }
    }
    return best;
  }

  std::uint64_t leaves() const { return leaves_; }

 private:
  // True if `a` beats `b` for the mover at `level`: own payoff first, then
  // the nearest earlier mover and so on. Full ties keep the incumbent.
  static bool prefers(int level, const std::vector<std::int64_t>& a,
                      const std::vector<std::int64_t>& b) {
    for (int m = level; m >= 0; --m) {
      if (a[m] != b[m]) return a[m] > b[m];
    }
    return false;
  }

  TreeOutcome choose() {
    TreeOutcome best;
    for (int a = 0; a < k_; ++a) {
      std::vector<std::int64_t> pay(n_);
      for (int m = 0; m < n_; ++m) {
        std::int64_t v = utils_[m][a];
        if (m > 0) v -= (*chosen_[m - 1])[a];
        if (m < n_ - 1) v += (*chosen_[m])[a];
        pay[m] = v;
      }
      ++leaves_;
      if (best.option < 0 || prefers(n_ - 1, pay, best.payoffs)) {
        best.option = a;
        best.payoffs = std::move(pay);
      }
    }
    return best;
  }

  std::vector<std::vector<std::int64_t>> utils_;
  std::vector<std::vector<std::vector<std::int64_t>>> candidates_;
  int n_;
  int k_;
  std::vector<const std::vector<std::int64_t>*> chosen_;
  std::uint64_t leaves_ = 0;
};

}  // namespace

VerificationReport backward_induction_pc_n(const UtilityProfile& u, const GridSpec& grid) {
  const int n = u.num_players();
  const int k = u.num_options();
  if (n > 4 || k > 4) {
    fail(ErrorCode::kGridBudgetExceeded, "backward induction is limited to n <= 4 and k <= 4");
  }
  grid.validate();
  const std::int64_t per_axis = grid.points_per_axis();
  const std::uint64_t per_level = grid_size(per_axis, k - 1, grid.budget);
  grid_size(static_cast<std::int64_t>(per_level), n - 1, grid.budget / static_cast<std::uint64_t>(k));

  // Closed-form chain and payoffs, written out directly from the averages.
  std::vector<Rational> avg(n);
  for (int i = 0; i < n; ++i) avg[i] = mean(u.row(i));
  std::vector<std::vector<Rational>> center(n - 1, std::vector<Rational>(k));
  for (int m = 0; m + 1 < n; ++m) {
    for (int j = 0; j < k; ++j) {
      for (int later = m + 1; later < n; ++later) center[m][j] += u.value(later, j) - avg[later];
    }
  }
  Rational max_welfare;
  std::vector<Rational> welfare(k);
  for (int j = 0; j < k; ++j) {
    for (int i = 0; i < n; ++i) welfare[j] += u.value(i, j);
    if (j == 0 || welfare[j] > max_welfare) max_welfare = welfare[j];
  }
  std::vector<Rational> predicted(n);
  predicted[0] = max_welfare;
  for (int i = 1; i < n; ++i) {
    predicted[0] -= avg[i];
    predicted[i] = avg[i];
  }

  Scale scale;
  for (int i = 0; i < n; ++i) scale.include(u.row(i));
  for (const auto& c : center) scale.include(c);
  scale.include(grid.step);

  std::vector<std::vector<std::int64_t>> utils(n, std::vector<std::int64_t>(k));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < k; ++j) utils[i][j] = scale.to_int(u.value(i, j));
  }
  const std::int64_t m_steps = (per_axis - 1) / 2;
  const std::int64_t step = scale.to_int(grid.step);
  std::vector<std::vector<std::vector<std::int64_t>>> candidates(n - 1);
  for (int m = 0; m + 1 < n; ++m) {
    std::vector<std::int64_t> base(k);
    for (int j = 0; j < k; ++j) base[j] = scale.to_int(center[m][j]);
    OffsetOdometer odo(k, m_steps, step);
    std::vector<std::int64_t> off(k);
    do {
      odo.fill(off);
      std::vector<std::int64_t> v(k);
      for (int j = 0; j < k; ++j) v[j] = base[j] + off[j];
      candidates[m].push_back(std::move(v));
    } while (odo.advance());
  }

  ChainTree tree(std::move(utils), candidates);
  const TreeOutcome out = tree.solve(0);

  VerificationReport r;
  r.claim = Claim::kOutcomeEfficient;
  r.points_checked = tree.leaves();
  r.outcome = out.option;
  for (int m = 0; m + 1 < n; ++m) {
    std::vector<Rational> prices;
    for (const auto v : candidates[m][out.path[m]]) prices.push_back(scale.to_rational(v));
    r.path_prices.emplace_back(std::move(prices));
  }
  Rational worst_gap;
  for (int i = 0; i < n; ++i) {
    r.payoffs.push_back(scale.to_rational(out.payoffs[i]));
    worst_gap = std::max(worst_gap, abs(r.payoffs[i] - predicted[i]));
  }
  r.slack = worst_gap;
  const bool efficient = welfare[out.option] == max_welfare;
  const bool close = worst_gap <= grid.step * Rational(k);
  r.pass = efficient && close;
  if (!r.pass) {
    Witness w;
    w.option = out.option;
    w.description = efficient ? "payoff off the closed form by " + worst_gap.pretty()
                              : "equilibrium path ends at an inefficient option";
    r.witness = std::move(w);
  }
  return r;
}

VerificationReport verify_robust_equilibrium(const UtilityProfile& u, const PriceVector& q,
                                             const Rational& epsilon, const GridSpec& grid) {
  require_two(u);
  require_size(u, q);
  if (epsilon.sign() == 0) {
    VerificationReport r = verify_proposer_optimality(u, q, grid, ChooserPolicy::cooperative());
    r.claim = Claim::kRobustEpsilonEquilibrium;
    r.notes.push_back("epsilon = 0: exact best replies, cooperative tie-breaking");
    return r;
  }
  if (epsilon.sign() < 0) fail(ErrorCode::kEpsilonNonPositive, "epsilon must be positive");
  const Rational bound = robust_epsilon_bound(u);
  if (epsilon >= bound) {
    fail(ErrorCode::kEpsilonTooLarge,
         "epsilon = " + epsilon.pretty() + " must be below epsilon_max = " + bound.pretty());
  }
  const OptionIndex efficient = canonical_efficient_option(u);

  VerificationReport r;
  r.claim = Claim::kRobustEpsilonEquilibrium;
  const OptionIndex pick = adversarial_chooser(u, q, epsilon);
  r.outcome = pick;
  if (pick != efficient) {
    r.pass = false;
    r.slack = Rational(0);
    Witness w;
    w.option = pick;
    w.prices = q;
    w.description = "adversarial chooser picks a" + std::to_string(pick + 1) +
                    " instead of the efficient a" + std::to_string(efficient + 1);
    r.witness = std::move(w);
    return r;
  }

  VerificationReport dev =
      verify_proposer_optimality(u, q, grid, ChooserPolicy::adversarial(epsilon));
  r.pass = dev.pass;
  r.slack = dev.slack;
  r.points_checked = dev.points_checked;
  r.witness = dev.witness;

  // The chooser's payoff at any epsilon-maximizer is at least
  // Avg_2 - c * epsilon; record both coefficients against the grid minimum.
  const Rational k(u.num_options());
  const Rational avg2 = mean(u.row(1));
  const Rational tight = avg2 - (k - Rational(1)) / k * epsilon;
  const Rational loose = avg2 - k / (k - Rational(1)) * epsilon;
  r.min_chooser_payoff = dev.min_chooser_payoff;
  const Rational& seen = *dev.min_chooser_payoff;
  r.notes.push_back("chooser floor (k-1)/k: bound " + tight.pretty() +
                    (seen >= tight ? " held" : " VIOLATED") + ", min seen " + seen.pretty());
  r.notes.push_back("chooser floor k/(k-1): bound " + loose.pretty() +
                    (seen >= loose ? " held" : " VIOLATED"));
  return r;
}

Allocation pc2_allocation_rule(const UtilityProfile& u) {
  const EquilibriumReport rep = solve_pc2(u);
  const OptionIndex a = rep.predicted_outcomes.front();
  const Rational& price = rep.star_prices.front()[a];
  return Allocation{a, {price, -price}};
}

namespace {

Rational quasi_linear(const UtilityProfile& u, PlayerIndex i, const Allocation& y) {
  return u.value(i, y.option) + y.transfers[i];
}

std::vector<Rational> candidate_transfers(const UtilityProfile& u, const UtilityProfile& u_prime,
                                          const Allocation& x,
                                          const MonotonicityOptions& options) {
  std::vector<Rational> ts;
  const mpq_class ratio = options.radius.gmp() / options.step.gmp();
  mpz_class m_z;
  mpz_fdiv_q(m_z.get_mpz_t(), ratio.get_num_mpz_t(), ratio.get_den_mpz_t());
  const long m = m_z.get_si();
  for (long z = -m; z <= m; ++z) ts.push_back(x.transfers[0] + options.step * Rational(z));
  for (const UtilityProfile* prof : {&u, &u_prime}) {
    const Rational avg2 = mean(prof->row(1));
    for (int a = 0; a < prof->num_options(); ++a) {
      ts.push_back(prof->value(1, a) - avg2);
      // Transfers at which y ties with x for either player.
      ts.push_back(quasi_linear(*prof, 0, x) - prof->value(0, a));
      ts.push_back(prof->value(1, a) - quasi_linear(*prof, 1, x));
    }
  }
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  return ts;
}

// First (player, allocation) breaking the premise, if any.
std::optional<std::pair<PlayerIndex, Allocation>> premise_counterexample(
    const UtilityProfile& u, const UtilityProfile& u_prime, const Allocation& x,
    const std::vector<Rational>& ts) {
  for (PlayerIndex i = 0; i < 2; ++i) {
    const Rational ux = quasi_linear(u, i, x);
    const Rational upx = quasi_linear(u_prime, i, x);
    for (int a = 0; a < u.num_options(); ++a) {
      for (const auto& t : ts) {
        const Allocation y{a, {t, -t}};
        if (ux >= quasi_linear(u, i, y) && !(upx >= quasi_linear(u_prime, i, y))) {
          return std::make_pair(i, y);
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace

VerificationReport check_maskin_monotonicity(const SocialChoiceFunction& f,
                                             const UtilityProfile& u,
                                             const UtilityProfile& u_prime,
                                             const MonotonicityOptions& options) {
  require_two(u);
  require_two(u_prime);
  if (u.num_options() != u_prime.num_options()) {
    fail(ErrorCode::kDimensionMismatch, "profiles must share the option set");
  }
  if (options.step.sign() <= 0 || options.radius.sign() <= 0) {
    fail(ErrorCode::kInvalidArgument, "step and radius must be positive");
  }
  const Allocation x = f(u);
  const Allocation y = f(u_prime);
  const auto ts = candidate_transfers(u, u_prime, x, options);

  VerificationReport r;
  r.claim = Claim::kMonotonicityViolation;
  r.points_checked = ts.size() * static_cast<std::uint64_t>(u.num_options()) * 2;
  r.notes.push_back("f(u) = " + describe(x));
  r.notes.push_back("f(u') = " + describe(y));
  if (options.claimed_f_u_prime) {
    const Allocation& claimed = *options.claimed_f_u_prime;
    if (claimed == y) {
      r.notes.push_back("claimed f(u') " + describe(claimed) + " matches");
    } else {
      r.notes.push_back("DISCREPANCY: claimed f(u') " + describe(claimed) +
                        " differs from computed " + describe(y));
    }
  }

  const auto counter = premise_counterexample(u, u_prime, x, ts);
  if (counter) {
    r.pass = true;
    r.notes.push_back("premise fails for player " + std::to_string(counter->first + 1) + " at " +
                      describe(counter->second));
    return r;
  }
  if (y == x) {
    r.pass = true;
    r.notes.push_back("premise holds and f(u') = f(u)");
    return r;
  }
  r.pass = false;
  r.slack = abs(y.transfers[0] - x.transfers[0]);
  Witness w;
  w.allocations = {x, y};
  w.description = "no player ranks " + describe(x) + " lower under u', yet f(u') = " + describe(y);
  r.witness = std::move(w);
  return r;
}

bool reverify_maskin_witness(const SocialChoiceFunction& f, const UtilityProfile& u,
                             const UtilityProfile& u_prime, const Allocation& x,
                             const Allocation& y, const MonotonicityOptions& options) {
  if (f(u) != x || f(u_prime) != y || x == y) return false;
  const auto ts = candidate_transfers(u, u_prime, x, options);
  return !premise_counterexample(u, u_prime, x, ts).has_value();
}

}  // namespace pandc::oracle
