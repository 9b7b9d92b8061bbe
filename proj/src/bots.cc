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


#include "pandc/bots.h"

#include <algorithm>
#include <charconv>
#include <optional>

#include "pandc/error.h"
#include "pandc/random.h"
#include "pandc/solver.h"

namespace pandc {
namespace {

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Rng move_rng(const BotPolicy& policy, const SessionState& state, PlayerIndex seat) {
  return Rng(mix(policy.seed ^ mix(state.move_log().size() * 131 + static_cast<std::uint64_t>(seat))));
}

// Prices leaving the chooser row indifferent and summing to target.
PriceVector indifference_prices(std::span<const Rational> chooser_row, const Rational& target) {
  const Rational shift = target / Rational(static_cast<std::int64_t>(chooser_row.size()));
  const Rational avg = mean(chooser_row);
  std::vector<Rational> p;
  for (const auto& v : chooser_row) p.push_back(v - avg + shift);
  return PriceVector(std::move(p), target);
}

PriceVector equilibrium_prices(const SessionState& s) {
  const auto& c = s.config();
  const auto& u = s.profile();
  switch (c.variant) {
    case Variant::kPc2:
    case Variant::kPcAlpha:
    case Variant::kPcEndogenousAlpha:
      return indifference_prices(u.row(s.chooser()), s.price_target());
    case Variant::kPc2Robust:
      return robust_prices(u, *c.epsilon);
    case Variant::kPc2NonQl:
      return solve_pc2_nonql(u, c.eta, c.zeta).star_prices.front();
    case Variant::kPcN:
    case Variant::kBidPc: {
      const int m = s.position_of(s.stage().player);
      return pc_n_chain(u, s.order())[m];
    }
  }
  fail(ErrorCode::kInvalidConfig, "unknown variant");
}

// Best reply of the chooser, ties broken toward earlier movers (nearest
// first), then lowest index.
OptionIndex equilibrium_choice(const SessionState& s) {
  const int k = s.profile().num_options();
  const auto& chain = s.posted_prices();
  OptionIndex best = 0;
  std::vector<Rational> best_key;
  for (OptionIndex a = 0; a < k; ++a) {
    auto pay = position_payoffs(s, chain, a);
    std::reverse(pay.begin(), pay.end());
    if (a == 0 || pay > best_key) {
      best = a;
      best_key = std::move(pay);
    }
  }
  return best;
}

OptionIndex adversarial_choice(const SessionState& s, const Rational& eps) {
  const int k = s.profile().num_options();
  const auto& chain = s.posted_prices();
  const int n = s.config().num_players;
  std::vector<std::vector<Rational>> pays;
  for (OptionIndex a = 0; a < k; ++a) pays.push_back(position_payoffs(s, chain, a));
  Rational top = pays[0][n - 1];
  for (const auto& p : pays) top = std::max(top, p[n - 1]);
  std::optional<OptionIndex> pick;
  for (OptionIndex a = 0; a < k; ++a) {
    if (pays[a][n - 1] < top - eps) continue;
    if (!pick || pays[a][n - 2] < pays[*pick][n - 2]) pick = a;
  }
  return *pick;
}

Rational random_rational(Rng& rng, std::int64_t lo, std::int64_t hi) {
  const std::int64_t den = rng.uniform(1, 4);
  return Rational(rng.uniform(lo * den, hi * den), den);
}

Move random_candidate(Rng& rng, const SessionState& s, PlayerIndex seat) {
  const int k = s.profile().num_options();
  switch (s.stage().kind) {
    case StageKind::kAwaitBid:
      return {seat, BidMove{random_rational(rng, 0, 4)}};
    case StageKind::kAwaitAlphaProposal:
      return {seat, AlphaMove{random_rational(rng, -4, 4)}};
    case StageKind::kAwaitRoleChoice:
      return {seat, RoleMove{rng.below(2) == 0 ? Role::kProposer : Role::kChooser}};
    case StageKind::kAwaitPrice: {
      std::vector<Rational> p;
      for (int j = 0; j < k; ++j) p.push_back(random_rational(rng, -4, 4));
      return {seat, PriceMove{PriceVector::balanced_by_last(std::move(p), s.price_target()).prices()}};
    }
    case StageKind::kAwaitChoice:
      return {seat, ChoiceMove{static_cast<OptionIndex>(rng.below(k))}};
    case StageKind::kSettled:
      break;
  }
  fail(ErrorCode::kOutOfTurn, "session is settled");
}

Move equilibrium_move(const SessionState& s, PlayerIndex seat) {
  switch (s.stage().kind) {
    case StageKind::kAwaitBid:
      return {seat, BidMove{*solve_bid_pc(s.profile()).b_star}};
    case StageKind::kAwaitAlphaProposal:
      return {seat, AlphaMove{*solve_endogenous_alpha(s.profile()).alpha_star}};
    case StageKind::kAwaitRoleChoice:
      return {seat, RoleMove{Role::kChooser}};
    case StageKind::kAwaitPrice:
      return {seat, PriceMove{equilibrium_prices(s).prices()}};
    case StageKind::kAwaitChoice:
      return {seat, ChoiceMove{equilibrium_choice(s)}};
    case StageKind::kSettled:
      break;
  }
  fail(ErrorCode::kOutOfTurn, "session is settled");
}

}  // namespace

BotPolicy parse_bot_policy(std::string_view text) {
  const auto colon = text.find(':');
  const std::string_view head = text.substr(0, colon);
  const std::string_view arg = colon == std::string_view::npos ? "" : text.substr(colon + 1);
  if (head == "equilibrium" && arg.empty()) return BotPolicy::equilibrium();
  if (head == "naive" && arg.empty()) return BotPolicy::naive();
  if (head == "adversarial") {
    if (arg.empty()) fail(ErrorCode::kInvalidArgument, "adversarial policy needs :<epsilon>");
    Rational eps = Rational::parse(arg);
    if (eps.sign() < 0) fail(ErrorCode::kInvalidArgument, "adversarial epsilon must be >= 0");
    return BotPolicy::adversarial(std::move(eps));
  }
  if (head == "random") {
    std::uint64_t seed = 0;
    if (!arg.empty()) {
      const auto [ptr, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), seed);
      if (ec != std::errc() || ptr != arg.data() + arg.size()) {
        fail(ErrorCode::kInvalidArgument, "bad random seed \"" + std::string(arg) + "\"");
      }
    }
    return BotPolicy::random(seed);
  }
  fail(ErrorCode::kInvalidArgument, "unknown bot policy \"" + std::string(text) + "\"");
}

std::string bot_policy_name(const BotPolicy& policy) {
  switch (policy.kind) {
    case BotPolicy::Kind::kEquilibrium: return "equilibrium";
    case BotPolicy::Kind::kAdversarial: return "adversarial:" + policy.epsilon.str();
    case BotPolicy::Kind::kRandom: return "random:" + std::to_string(policy.seed);
    case BotPolicy::Kind::kNaive: return "naive";
  }
  return "equilibrium";
}

bool is_turn_of(const SessionState& state, PlayerIndex seat) {
  if (state.settled()) return false;
  if (state.stage().kind == StageKind::kAwaitBid) {
    return seat >= 0 && seat < static_cast<int>(state.bids().size()) && !state.bids()[seat];
  }
  return state.stage().player == seat;
}

std::vector<Rational> position_payoffs(const SessionState& state,
                                       std::span<const PriceVector> chain, OptionIndex a) {
  const auto& u = state.profile();
  const auto& order = state.order();
  const int n = static_cast<int>(order.size());
  std::vector<Rational> out(n);
  if (state.config().variant == Variant::kPc2NonQl) {
    const Rational& p = chain[0][a];
    out[0] = u.value(order[0], a) + state.config().zeta(p);
    out[1] = u.value(order[1], a) - state.config().eta(p);
    return out;
  }
  for (int m = 0; m < n; ++m) {
    Rational v = u.value(order[m], a);
    if (m + 1 < n) v += chain[m][a];
    if (m > 0) v -= chain[m - 1][a];
    out[m] = std::move(v);
  }
  return out;
}

Move bot_move(const BotPolicy& policy, const SessionState& state, PlayerIndex seat) {
  if (!is_turn_of(state, seat)) {
    fail(ErrorCode::kOutOfTurn, "not the turn of player " + std::to_string(seat));
  }
  const StageKind kind = state.stage().kind;
  switch (policy.kind) {
    case BotPolicy::Kind::kEquilibrium:
      return equilibrium_move(state, seat);
    case BotPolicy::Kind::kAdversarial:
      if (kind == StageKind::kAwaitChoice) {
        return {seat, ChoiceMove{adversarial_choice(state, policy.epsilon)}};
      }
      return equilibrium_move(state, seat);
    case BotPolicy::Kind::kNaive:
      switch (kind) {
        case StageKind::kAwaitBid: return {seat, BidMove{Rational(0)}};
        case StageKind::kAwaitAlphaProposal: return {seat, AlphaMove{Rational(0)}};
        case StageKind::kAwaitPrice: {
          const int k = state.profile().num_options();
          const Rational each = state.price_target() / Rational(k);
          return {seat, PriceMove{std::vector<Rational>(k, each)}};
        }
        default: return equilibrium_move(state, seat);
      }
    case BotPolicy::Kind::kRandom: {
      Rng rng = move_rng(policy, state, seat);
      for (int attempt = 0; attempt < 1000; ++attempt) {
        Move m = random_candidate(rng, state, seat);
        try {
          apply_move(state, m);
          return m;
        } catch (const Error&) {
        }
      }
      fail(ErrorCode::kInvalidArgument, "random bot found no legal move");
    }
  }
  return equilibrium_move(state, seat);
}

SessionState play_out(SessionState state, std::span<const BotPolicy> seats, int max_moves) {
  if (static_cast<int>(seats.size()) != state.config().num_players) {
    fail(ErrorCode::kDimensionMismatch, "need one policy per seat");
  }
  for (int moves = 0; !state.settled(); ++moves) {
    if (moves >= max_moves) {
      fail(ErrorCode::kInvalidArgument, "session did not settle within " +
                                            std::to_string(max_moves) + " moves");
    }
    PlayerIndex seat = state.stage().player;
    if (state.stage().kind == StageKind::kAwaitBid) {
      seat = 0;
      while (!is_turn_of(state, seat)) ++seat;
    }
    state = apply_move(state, bot_move(seats[seat], state, seat));
  }
  return state;
}

int stage_count(const MechanismConfig& config) {
  switch (config.variant) {
    case Variant::kPcEndogenousAlpha: return 4;
    case Variant::kPcN: return config.num_players;
    case Variant::kBidPc: return 2 * config.num_players;
    default: return 2;
  }
}

Advice advise(const SessionState& state, PlayerIndex seat) {
  Advice a{equilibrium_move(state, seat), {}, {}};
  if (!is_turn_of(state, seat)) {
    fail(ErrorCode::kOutOfTurn, "not the turn of player " + std::to_string(seat));
  }
  const auto& u = state.profile();
  const auto& config = state.config();
  switch (state.stage().kind) {
    case StageKind::kAwaitBid:
      a.predicted_payoffs = solve_bid_pc(u).predicted_payoffs;
      a.notes.push_back("equilibrium bid b*");
      break;
    case StageKind::kAwaitAlphaProposal: {
      const auto r = solve_endogenous_alpha(u);
      a.predicted_payoffs = r.predicted_payoffs;
      a.notes.push_back("alpha* leaves player 2 indifferent between roles");
      break;
    }
    case StageKind::kAwaitRoleChoice: {
      const Rational alpha = *state.proposed_alpha();
      const auto r = solve_endogenous_alpha(u);
      a.predicted_payoffs = solve_pc2_alpha(u, alpha).predicted_payoffs;
      if (alpha == *r.alpha_star) {
        a.notes.push_back("indifferent at alpha*");
      } else {
        a.notes.push_back("alpha differs from alpha* = " + r.alpha_star->pretty());
      }
      break;
    }
    case StageKind::kAwaitPrice:
    case StageKind::kAwaitChoice: {
      if (config.variant == Variant::kPcEndogenousAlpha) {
        const auto r = solve_pc2_alpha(u, state.price_target());
        std::vector<Rational> pay(2);
        pay[state.order()[0]] = r.predicted_payoffs[0];
        pay[state.order()[1]] = r.predicted_payoffs[1];
        a.predicted_payoffs = std::move(pay);
      } else {
        a.predicted_payoffs = solve(config, u).predicted_payoffs;
      }
      if (state.stage().kind == StageKind::kAwaitChoice) {
        const int k = u.num_options();
        const int n = config.num_players;
        const Rational first = position_payoffs(state, state.posted_prices(), 0)[n - 1];
        bool flat = true;
        for (OptionIndex j = 1; j < k; ++j) {
          flat = flat && position_payoffs(state, state.posted_prices(), j)[n - 1] == first;
        }
        if (flat) a.notes.push_back("indifferent across all options");
      }
      break;
    }
    case StageKind::kSettled:
      break;
  }
  return a;
}

}  // namespace pandc
