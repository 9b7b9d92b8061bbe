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


// Acceptance suite: one PASS/FAIL line per primary criterion. Expected
// values are recomputed here from the definitions (column scans, direct
// sums, engine play) rather than read back from the solver.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "pandc/bots.h"
#include "pandc/error.h"
#include "pandc/instance_gen.h"
#include "pandc/mechanism.h"
#include "pandc/oracle.h"
#include "pandc/random.h"
#include "pandc/solver.h"

namespace pandc {
namespace {

// Pinned tolerances and limits.
constexpr double kPc2Seconds = 1.0;
constexpr double kGridSeconds = 30.0;
constexpr double kChainSeconds = 120.0;
constexpr int kGridInstances = 50;
const Rational kGridStep(1, 8);
const Rational kPerturbation(1, 4);
const Rational kBackwardStep(1, 4);
const Rational kBackwardRadius(1);
constexpr double kTieWindow = 0.05;

struct Outcome {
  bool pass = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

int failures = 0;

void report(const char* name, const Outcome& o) {
  std::printf("%s  %-28s %s\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str());
  std::fflush(stdout);
  if (!o.pass) ++failures;
}

void run(const char* name, const std::function<Outcome()>& body) {
  try {
    report(name, body());
  } catch (const std::exception& e) {
    report(name, Outcome{false, std::string("threw: ") + e.what()});
  }
}

// Independent reference quantities.
Rational avg_of(const UtilityProfile& u, int i) {
  Rational s;
  for (int j = 0; j < u.num_options(); ++j) s += u.value(i, j);
  return s / Rational(u.num_options());
}

Rational welfare_of(const UtilityProfile& u, int j) {
  Rational s;
  for (int i = 0; i < u.num_players(); ++i) s += u.value(i, j);
  return s;
}

Rational max_welfare_of(const UtilityProfile& u) {
  Rational best = welfare_of(u, 0);
  for (int j = 1; j < u.num_options(); ++j) best = std::max(best, welfare_of(u, j));
  return best;
}

std::vector<OptionIndex> argmax_welfare(const UtilityProfile& u) {
  const Rational best = max_welfare_of(u);
  std::vector<OptionIndex> out;
  for (int j = 0; j < u.num_options(); ++j) {
    if (welfare_of(u, j) == best) out.push_back(j);
  }
  return out;
}

bool dominated(const UtilityProfile& u, int j) {
  for (int other = 0; other < u.num_options(); ++other) {
    bool weakly = true, strictly = false;
    for (int i = 0; i < u.num_players(); ++i) {
      weakly = weakly && u.value(i, other) >= u.value(i, j);
      strictly = strictly || u.value(i, other) > u.value(i, j);
    }
    if (other != j && weakly && strictly) return true;
  }
  return false;
}

Rational utility_spread(const UtilityProfile& u) {
  Rational lo = u.value(0, 0), hi = u.value(0, 0);
  for (const auto& row : u.values()) {
    for (const auto& v : row) {
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  }
  return hi - lo;
}

std::vector<UtilityProfile> pc2_instances() {
  std::vector<UtilityProfile> out;
  GenOptions o;
  for (int i = 0; i < 200; ++i) {
    o.seed = 1000 + static_cast<std::uint64_t>(i);
    o.options = 2 + i % 5;
    out.push_back(generate_profile(o));
  }
  return out;
}

Outcome pc2_closed_form() {
  const auto instances = pc2_instances();
  const auto t0 = Clock::now();
  int bad = 0;
  for (const auto& u : instances) {
    const auto r = solve_pc2(u);
    const auto& p = r.star_prices.front();
    const Rational avg2 = avg_of(u, 1);
    Rational spread_lo = u.value(1, 0) - p[0], spread_hi = spread_lo;
    for (int j = 0; j < u.num_options(); ++j) {
      spread_lo = std::min(spread_lo, u.value(1, j) - p[j]);
      spread_hi = std::max(spread_hi, u.value(1, j) - p[j]);
    }
    const bool ok = spread_hi == spread_lo && spread_lo == avg2 &&
                    r.predicted_outcomes == argmax_welfare(u) &&
                    r.predicted_payoffs ==
                        std::vector<Rational>{max_welfare_of(u) - avg2, avg2};
    if (!ok) ++bad;
  }
  const double secs = seconds_since(t0);
  char buf[160];
  std::snprintf(buf, sizeof buf, "200 instances, %d mismatches, %.3fs (limit %.0fs)", bad, secs,
                kPc2Seconds);
  return {bad == 0 && secs < kPc2Seconds, buf};
}

Outcome grid_concurrence() {
  const auto instances = pc2_instances();
  const auto t0 = Clock::now();
  int used = 0, skipped = 0, pass_missed = 0, fail_missed = 0;
  for (const auto& u : instances) {
    if (used == kGridInstances) break;
    oracle::GridSpec grid;
    grid.step = kGridStep;
    grid.radius = utility_spread(u) + Rational(1);
    std::uint64_t points = 1;
    bool fits = true;
    for (int d = 0; d + 1 < u.num_options(); ++d) {
      points *= static_cast<std::uint64_t>(grid.points_per_axis());
      fits = fits && points <= grid.budget;
    }
    if (!fits) {
      ++skipped;
      continue;
    }
    ++used;
    const auto p = solve_pc2(u).star_prices.front();
    if (!oracle::verify_proposer_optimality(u, p, grid, oracle::ChooserPolicy::cooperative()).pass) {
      ++pass_missed;
    }
    std::vector<Rational> moved = p.prices();
    moved[0] += kPerturbation;
    moved[1] -= kPerturbation;
    const auto r = oracle::verify_proposer_optimality(u, PriceVector(moved), grid,
                                                      oracle::ChooserPolicy::cooperative());
    if (r.pass || !r.witness) ++fail_missed;
  }
  const double secs = seconds_since(t0);
  char buf[200];
  std::snprintf(buf, sizeof buf,
                "%d instances (skipped %d over budget), p* pass misses %d, perturbed fail misses "
                "%d, %.2fs (limit %.0fs)",
                used, skipped, pass_missed, fail_missed, secs, kGridSeconds);
  return {used == kGridInstances && pass_missed == 0 && fail_missed == 0 && secs < kGridSeconds,
          buf};
}

Outcome pc_n_chain_criterion() {
  const auto t0 = Clock::now();
  int bad_chain = 0, bad_payoff = 0, bi_checked = 0, bi_bad = 0;
  Rng rng(2024);
  for (int i = 0; i < 100; ++i) {
    const int n = 2 + i % 3;
    const int k = 2 + (i / 3) % 3;
    const auto u = random_profile(rng, n, k, Rational(-5), Rational(5), 8);
    const auto r = solve_pc_n(u);
    for (int m = 0; m + 1 < n; ++m) {
      for (int j = 0; j < k; ++j) {
        Rational expect;
        for (int later = m + 1; later < n; ++later) expect += u.value(later, j) - avg_of(u, later);
        if (r.star_prices[m][j] != expect) ++bad_chain;
      }
    }
    // Play the chain through the engine at the lowest-index efficient option.
    MechanismConfig c;
    c.variant = Variant::kPcN;
    c.num_players = n;
    auto s = new_session(c, u);
    for (int m = 0; m + 1 < n; ++m) s = apply_move(s, {m, PriceMove{r.star_prices[m].prices()}});
    s = apply_move(s, {n - 1, ChoiceMove{argmax_welfare(u).front()}});
    std::vector<Rational> expect(n);
    expect[0] = max_welfare_of(u);
    for (int m = 1; m < n; ++m) {
      expect[m] = avg_of(u, m);
      expect[0] -= avg_of(u, m);
    }
    if (payoffs(s) != expect || r.predicted_payoffs != expect) ++bad_payoff;

    if (n <= 3 && k <= 3) {
      oracle::GridSpec grid;
      grid.step = kBackwardStep;
      grid.radius = kBackwardRadius;
      const auto bi = oracle::backward_induction_pc_n(u, grid);
      ++bi_checked;
      const auto eff = argmax_welfare(u);
      if (!bi.outcome || std::find(eff.begin(), eff.end(), *bi.outcome) == eff.end()) ++bi_bad;
    }
  }
  const double secs = seconds_since(t0);
  char buf[200];
  std::snprintf(buf, sizeof buf,
                "100 instances, chain mismatches %d, payoff mismatches %d, backward induction "
                "%d/%d efficient, %.2fs (limit %.0fs)",
                bad_chain, bad_payoff, bi_checked - bi_bad, bi_checked, secs, kChainSeconds);
  return {bad_chain == 0 && bad_payoff == 0 && bi_bad == 0 && bi_checked > 0 &&
              secs < kChainSeconds,
          buf};
}

Outcome nonql_indifference() {
  Rng rng(33);
  int outside = 0, not_indifferent = 0, identity_mismatch = 0;
  for (int i = 0; i < 100; ++i) {
    const auto u = random_profile(rng, 2, 2 + i % 5, Rational(-5), Rational(5), 8);
    const auto eta = random_transform(rng, 1 + i % 4);
    const auto zeta = random_transform(rng, 1 + (i / 4) % 4);
    const auto r = solve_pc2_nonql(u, eta, zeta);
    const auto& p = r.star_prices.front();
    for (OptionIndex a : r.predicted_outcomes) {
      if (dominated(u, a)) ++outside;
    }
    Rational sum_p;
    for (int j = 0; j < u.num_options(); ++j) {
      sum_p += p[j];
      if (u.value(1, j) - eta(p[j]) != u.value(1, 0) - eta(p[0])) ++not_indifferent;
    }
    if (sum_p != Rational(0)) ++not_indifferent;

    const auto id = MonotoneTransform::identity();
    const auto plain = solve_pc2_nonql(u, id, id);
    const auto ql = solve_pc2(u);
    if (plain.star_prices != ql.star_prices || plain.predicted_outcomes != ql.predicted_outcomes ||
        plain.predicted_payoffs != ql.predicted_payoffs) {
      ++identity_mismatch;
    }
  }
  char buf[200];
  std::snprintf(buf, sizeof buf,
                "100 instances, outcomes outside pareto set %d, indifference breaks %d, identity "
                "mismatches %d",
                outside, not_indifferent, identity_mismatch);
  return {outside == 0 && not_indifferent == 0 && identity_mismatch == 0, buf};
}

Outcome robust_equilibrium() {
  GenOptions o;
  o.unique_efficient = true;
  int chooser_bad = 0, grid_bad = 0, bound_bad = 0, reject_missed = 0;
  for (int i = 0; i < 100; ++i) {
    o.seed = 4000 + static_cast<std::uint64_t>(i);
    o.options = 2 + i % 5;
    const auto u = generate_profile(o);
    const int k = u.num_options();
    const OptionIndex best = argmax_welfare(u).front();
    const Rational eps_max = robust_epsilon_bound(u);
    // The bound is the largest epsilon keeping the separation strict.
    const Rational lhs_coef = Rational(k - 1) / Rational(k);
    bool tight = false;
    for (int j = 0; j < k; ++j) {
      if (j == best) continue;
      const Rational gap = welfare_of(u, best) - welfare_of(u, j);
      if (!(lhs_coef * eps_max / Rational(2) < gap - Rational(2) * eps_max / Rational(2))) ++bound_bad;
      if (lhs_coef * eps_max == gap - Rational(2) * eps_max) tight = true;
    }
    if (!tight) ++bound_bad;

    const Rational eps = eps_max / Rational(2);
    const auto q = solve_pc2_robust(u, eps).star_prices.front();
    if (adversarial_chooser(u, q, eps) != best) ++chooser_bad;
    oracle::GridSpec grid;
    grid.step = eps / Rational(4);
    grid.radius = eps * Rational(2);
    if (!oracle::verify_robust_equilibrium(u, q, eps, grid).pass) ++grid_bad;

    for (const Rational& too_big : {eps_max, eps_max * Rational(2)}) {
      try {
        solve_pc2_robust(u, too_big);
        ++reject_missed;
      } catch (const Error& e) {
        if (e.code() != ErrorCode::kEpsilonTooLarge) ++reject_missed;
      }
    }
  }
  char buf[220];
  std::snprintf(buf, sizeof buf,
                "100 instances at eps = eps_max/2, chooser misses %d, grid failures %d, bound "
                "errors %d, unrejected eps >= eps_max %d",
                chooser_bad, grid_bad, bound_bad, reject_missed);
  return {chooser_bad == 0 && grid_bad == 0 && bound_bad == 0 && reject_missed == 0, buf};
}

Outcome bid_pc_surplus() {
  Rng rng(55);
  int bid_bad = 0, diff_bad = 0, winners_seen = 0;
  for (int i = 0; i < 100; ++i) {
    const int n = 2 + i % 4;
    const auto u = random_profile(rng, n, 2 + i % 4, Rational(-5), Rational(5), 8);
    Rational sum_avg;
    for (int m = 0; m < n; ++m) sum_avg += avg_of(u, m);
    const Rational expect_bid = Rational(n - 1) / Rational(n) * (max_welfare_of(u) - sum_avg);
    if (*solve_bid_pc(u).b_star != expect_bid) ++bid_bad;
    MechanismConfig c;
    c.variant = Variant::kBidPc;
    c.num_players = n;
    std::vector<bool> won(n, false);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      c.rng_seed = seed * 7919 + static_cast<std::uint64_t>(i);
      const std::vector<BotPolicy> seats(n, BotPolicy::equilibrium());
      const auto done = play_out(new_session(c, u), seats);
      won[*done.bid_winner()] = true;
      const auto pay = payoffs(done);
      for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
          if (pay[a] - pay[b] != avg_of(u, a) - avg_of(u, b)) ++diff_bad;
        }
      }
    }
    winners_seen += static_cast<int>(std::count(won.begin(), won.end(), true));
  }
  char buf[200];
  std::snprintf(buf, sizeof buf,
                "100 instances x 10 seeds, b* mismatches %d, payoff-difference mismatches %d, "
                "distinct winners seen %d",
                bid_bad, diff_bad, winners_seen);
  return {bid_bad == 0 && diff_bad == 0, buf};
}

Outcome alpha_variants() {
  Rng rng(44);
  int shift_bad = 0, alpha_bad = 0, role_bad = 0;
  for (int i = 0; i < 100; ++i) {
    const int k = 2 + i % 5;
    const auto u = random_profile(rng, 2, k, Rational(-5), Rational(5), 8);
    const Rational alpha(rng.uniform(-40, 40), rng.uniform(1, 8));
    const auto base = solve_pc2(u);
    const auto shifted = solve_pc2_alpha(u, alpha);
    if (shifted.predicted_payoffs[0] != base.predicted_payoffs[0] + alpha / Rational(k) ||
        shifted.predicted_payoffs[1] != base.predicted_payoffs[1] - alpha / Rational(k)) {
      ++shift_bad;
    }
    const Rational expect_alpha =
        Rational(k) / Rational(2) * (avg_of(u, 0) + avg_of(u, 1) - max_welfare_of(u));
    const auto endo = solve_endogenous_alpha(u);
    if (*endo.alpha_star != expect_alpha) ++alpha_bad;

    // Play both role choices through the engine with equilibrium seats.
    std::vector<Rational> p2;
    for (Role role : {Role::kChooser, Role::kProposer}) {
      MechanismConfig c;
      c.variant = Variant::kPcEndogenousAlpha;
      auto s = new_session(c, u);
      s = apply_move(s, {0, AlphaMove{expect_alpha}});
      s = apply_move(s, {1, RoleMove{role}});
      const std::vector<BotPolicy> seats(2, BotPolicy::equilibrium());
      s = play_out(s, seats);
      p2.push_back(payoffs(s)[1]);
    }
    if (p2[0] != p2[1] || !endo.role_indifferent) ++role_bad;
  }
  char buf[200];
  std::snprintf(buf, sizeof buf,
                "100 instances, shift mismatches %d, alpha* mismatches %d, role payoff gaps %d",
                shift_bad, alpha_bad, role_bad);
  return {shift_bad == 0 && alpha_bad == 0 && role_bad == 0, buf};
}

Outcome maskin() {
  const auto u = UtilityProfile::from_values({{Rational(1), Rational(0), Rational(-1)},
                                              {Rational(1), Rational(0), Rational(-1)}});
  const auto u_prime = u.with_row(1, {Rational(1), Rational(-2), Rational(-1)});
  oracle::MonotonicityOptions opts;
  opts.claimed_f_u_prime = Allocation{0, {Rational(2, 3), Rational(-2, 3)}};
  const auto r = oracle::check_maskin_monotonicity(oracle::pc2_allocation_rule, u, u_prime, opts);
  bool flagged = false;
  for (const auto& note : r.notes) {
    flagged = flagged || (note.find("DISCREPANCY") != std::string::npos &&
                          note.find("2/3") != std::string::npos);
  }
  const bool witness_ok = r.witness && r.witness->allocations.size() == 2 &&
                          r.witness->allocations[0] == Allocation{0, {Rational(1), Rational(-1)}} &&
                          r.witness->allocations[1] ==
                              Allocation{0, {Rational(5, 3), Rational(-5, 3)}};
  const bool reverified =
      witness_ok && oracle::reverify_maskin_witness(oracle::pc2_allocation_rule, u, u_prime,
                                                    r.witness->allocations[0],
                                                    r.witness->allocations[1]);
  const bool ok = !r.pass && witness_ok && reverified && flagged;
  return {ok, std::string("violation ") + (!r.pass ? "found" : "missing") +
                  ", x = (a1, 1, -1), f(u') = (a1, 5/3, -5/3) " + (witness_ok ? "match" : "mismatch") +
                  ", printed 2/3 " + (flagged ? "flagged" : "not flagged")};
}

MechanismConfig random_config(Rng& rng, int i) {
  MechanismConfig c;
  c.variant = all_variants()[static_cast<std::size_t>(i) % all_variants().size()];
  c.num_players = (c.variant == Variant::kPcN || c.variant == Variant::kBidPc) ? 2 + i % 4 : 2;
  c.rng_seed = rng.next();
  if (c.variant == Variant::kPcAlpha) c.alpha = Rational(rng.uniform(-20, 20), rng.uniform(1, 6));
  if (c.variant == Variant::kPc2Robust) c.epsilon = Rational(rng.uniform(1, 8), 8);
  if (c.variant == Variant::kPc2NonQl) {
    c.zeta = random_transform(rng);
    c.eta = random_transform(rng);
  }
  return c;
}

struct Illegal {
  Move move;
  ErrorCode expect;
};

// One illegal move for a live (or settled) state, cycling through the
// rejection categories.
Illegal make_illegal(Rng& rng, const SessionState& s, int flavour) {
  const int n = s.config().num_players;
  const int k = s.profile().num_options();
  const StageKind kind = s.stage().kind;
  PlayerIndex actor = s.stage().player;
  if (kind == StageKind::kAwaitBid) {
    actor = 0;
    while (s.bids()[actor]) ++actor;
  }
  if (kind == StageKind::kSettled) return {{0, ChoiceMove{0}}, ErrorCode::kOutOfTurn};
  switch (flavour % 4) {
    case 0: {  // wrong player, otherwise well-formed
      PlayerIndex other = (actor + 1 + static_cast<int>(rng.below(n - 1))) % n;
      if (kind == StageKind::kAwaitBid) {
        for (int i = 0; i < n; ++i) {
          if (s.bids()[i]) other = i;
        }
        if (s.bids()[other]) return {{other, BidMove{Rational(1)}}, ErrorCode::kOutOfTurn};
        return {{actor, ChoiceMove{0}}, ErrorCode::kOutOfTurn};
      }
      return {{other, ChoiceMove{0}}, ErrorCode::kOutOfTurn};
    }
    case 1:  // wrong payload kind
      if (kind == StageKind::kAwaitChoice) {
        return {{actor, PriceMove{std::vector<Rational>(k)}}, ErrorCode::kOutOfTurn};
      }
      return {{actor, ChoiceMove{0}}, ErrorCode::kOutOfTurn};
    default:
      break;
  }
  switch (kind) {
    case StageKind::kAwaitBid:
      return {{actor, BidMove{Rational(-1 - static_cast<std::int64_t>(rng.below(5)), 3)}},
              ErrorCode::kNegativeBid};
    case StageKind::kAwaitPrice: {
      if (flavour % 4 == 2) {
        std::vector<Rational> p(k, Rational(0));
        p[0] = s.price_target() + Rational(1, 1 + static_cast<std::int64_t>(rng.below(7)));
        return {{actor, PriceMove{p}}, ErrorCode::kSumConstraintViolated};
      }
      return {{actor, PriceMove{std::vector<Rational>(k + 1)}}, ErrorCode::kDimensionMismatch};
    }
    case StageKind::kAwaitChoice:
      return {{actor, ChoiceMove{flavour % 2 ? k + static_cast<int>(rng.below(3)) : -1}},
              ErrorCode::kUnknownOption};
    default:
      return {{actor, PriceMove{std::vector<Rational>(k)}}, ErrorCode::kOutOfTurn};
  }
}

Outcome engine_replay() {
  Rng rng(99);
  int replay_bad = 0, balance_bad = 0;
  for (int i = 0; i < 1000; ++i) {
    const auto c = random_config(rng, i);
    const auto u = random_profile(rng, c.num_players, 2 + i % 4, Rational(-5), Rational(5), 8);
    std::vector<BotPolicy> seats;
    for (int m = 0; m < c.num_players; ++m) seats.push_back(BotPolicy::random(rng.next()));
    const auto done = play_out(new_session(c, u), seats);
    const auto again = replay(c, u, done.move_log());
    if (!(again == done) || !(*again.result() == *done.result())) ++replay_bad;
    Rational total;
    for (const auto& t : done.result()->transfers) total += t;
    if (total != Rational(0)) ++balance_bad;
  }

  int accepted = 0, wrong_code = 0;
  for (int i = 0; i < 1000; ++i) {
    const auto c = random_config(rng, i);
    const auto u = random_profile(rng, c.num_players, 2 + i % 4, Rational(-5), Rational(5), 8);
    auto s = new_session(c, u);
    const int steps = static_cast<int>(rng.below(static_cast<std::uint64_t>(stage_count(c)) + 1));
    for (int m = 0; m < steps && !s.settled(); ++m) {
      PlayerIndex seat = s.stage().player;
      if (s.stage().kind == StageKind::kAwaitBid) {
        seat = 0;
        while (s.bids()[seat]) ++seat;
      }
      s = apply_move(s, bot_move(BotPolicy::random(rng.next()), s, seat));
    }
    const Illegal bad = make_illegal(rng, s, i);
    try {
      apply_move(s, bad.move);
      ++accepted;
    } catch (const Error& e) {
      if (e.code() != bad.expect) ++wrong_code;
    }
  }
  char buf[200];
  std::snprintf(buf, sizeof buf,
                "1000 legal sessions, replay mismatches %d, unbalanced %d; 1000 illegal moves, "
                "accepted %d, wrong code %d",
                replay_bad, balance_bad, accepted, wrong_code);
  return {replay_bad == 0 && balance_bad == 0 && accepted == 0 && wrong_code == 0, buf};
}

}  // namespace
}  // namespace pandc

int main() {
  using namespace pandc;
  run("pc2-closed-form", pc2_closed_form);
  run("grid-oracle-concurrence", grid_concurrence);
  run("pc-n-chain", pc_n_chain_criterion);
  run("nonql-indifference", nonql_indifference);
  run("robust-equilibrium", robust_equilibrium);
  run("bid-pc-surplus", bid_pc_surplus);
  run("alpha-variants", alpha_variants);
  run("maskin-example", maskin);
  run("engine-replay", engine_replay);
  std::printf("%d of 9 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
