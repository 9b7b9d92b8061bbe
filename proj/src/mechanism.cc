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

#include "pandc/mechanism.h"

#include <algorithm>
#include <array>
#include <cctype>
#include <numeric>
#include <string>
#include <utility>

#include "pandc/error.h"
#include "pandc/random.h"

namespace pandc {
namespace {

constexpr std::array<Variant, 7> kAllVariants = {
    Variant::kPc2,  Variant::kPcAlpha,   Variant::kPcEndogenousAlpha, Variant::kPcN,
    Variant::kBidPc, Variant::kPc2NonQl, Variant::kPc2Robust,
};

bool is_two_player(Variant v) {
  return v == Variant::kPc2 || v == Variant::kPc2NonQl || v == Variant::kPc2Robust ||
         v == Variant::kPcAlpha || v == Variant::kPcEndogenousAlpha;
}

std::string who(PlayerIndex p) { return "player " + std::to_string(p); }

[[noreturn]] void out_of_turn(const SessionState& s, const Move& m) {
  std::string msg = std::string(move_kind_name(m.payload)) + " from " + who(m.player) +
                    " not accepted at stage " + std::string(stage_kind_name(s.stage().kind));
  if (s.stage().player >= 0) msg += " (waiting on " + who(s.stage().player) + ")";
  fail(ErrorCode::kOutOfTurn, msg);
}

std::vector<PlayerIndex> identity_order(int n) {
  std::vector<PlayerIndex> order(n);
  std::iota(order.begin(), order.end(), 0);
  return order;
}

}  // namespace

std::string_view variant_name(Variant v) {
  switch (v) {
    case Variant::kPc2: return "pc2";
    case Variant::kPcAlpha: return "pc-alpha";
    case Variant::kPcEndogenousAlpha: return "pc-endogenous-alpha";
    case Variant::kPcN: return "pc-n";
    case Variant::kBidPc: return "bid-pc";
    case Variant::kPc2NonQl: return "pc2-nonql";
    case Variant::kPc2Robust: return "pc2-robust";
  }
  return "?";
}

Variant parse_variant(std::string_view name) {
  std::string norm(name);
  std::replace(norm.begin(), norm.end(), '_', '-');
  std::transform(norm.begin(), norm.end(), norm.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  for (Variant v : kAllVariants) {
    if (variant_name(v) == norm) return v;
  }
  fail(ErrorCode::kInvalidConfig, "unknown variant \"" + std::string(name) + "\"");
}

std::span<const Variant> all_variants() { return kAllVariants; }

std::string_view stage_kind_name(StageKind kind) {
  switch (kind) {
    case StageKind::kAwaitBid: return "await_bid";
    case StageKind::kAwaitAlphaProposal: return "await_alpha_proposal";
    case StageKind::kAwaitRoleChoice: return "await_role_choice";
    case StageKind::kAwaitPrice: return "await_price";
    case StageKind::kAwaitChoice: return "await_choice";
    case StageKind::kSettled: return "settled";
  }
  return "?";
}

std::string_view move_kind_name(const MovePayload& payload) {
  struct Visitor {
    std::string_view operator()(const BidMove&) const { return "bid"; }
    std::string_view operator()(const AlphaMove&) const { return "alpha"; }
    std::string_view operator()(const RoleMove&) const { return "role"; }
    std::string_view operator()(const PriceMove&) const { return "price"; }
    std::string_view operator()(const ChoiceMove&) const { return "choice"; }
  };
  return std::visit(Visitor{}, payload);
}

void MechanismConfig::validate() const {
  if (num_players < 2) fail(ErrorCode::kInvalidConfig, "at least two players are required");
  if (is_two_player(variant) && num_players != 2) {
    fail(ErrorCode::kInvalidConfig,
         std::string(variant_name(variant)) + " is a two-player mechanism");
  }
  if (variant == Variant::kPc2Robust) {
    if (!epsilon) fail(ErrorCode::kInvalidConfig, "pc2-robust needs epsilon");
    if (epsilon->sign() <= 0) {
      fail(ErrorCode::kEpsilonNonPositive, "epsilon must be positive, got " + epsilon->pretty());
    }
  } else if (epsilon && epsilon->sign() <= 0) {
    fail(ErrorCode::kEpsilonNonPositive, "epsilon must be positive, got " + epsilon->pretty());
  }
}

Rational SessionState::price_target() const {
  switch (config_.variant) {
    case Variant::kPcAlpha: return config_.alpha;
    case Variant::kPcEndogenousAlpha: return proposed_alpha_.value_or(Rational(0));
    default: return Rational(0);
  }
}

int SessionState::position_of(PlayerIndex player) const {
  const auto it = std::find(order_.begin(), order_.end(), player);
  if (it == order_.end()) fail(ErrorCode::kInvalidArgument, who(player) + " has no seat");
  return static_cast<int>(it - order_.begin());
}

std::vector<Rational> chain_transfers(std::span<const PriceVector> chain,
                                      std::span<const PlayerIndex> order, OptionIndex option) {
  const std::size_t n = order.size();
  std::vector<Rational> t(n);
  for (std::size_t m = 0; m < n; ++m) {
    Rational tm;
    if (m + 1 < n) tm += chain[m][option];
    if (m > 0) tm -= chain[m - 1][option];
    t[order[m]] = tm;
  }
  return t;
}

void SessionState::settle(OptionIndex option) {
  Allocation x;
  x.option = option;
  x.transfers = chain_transfers(posted_prices_, order_, option);
  if (config_.variant == Variant::kBidPc && bid_winner_) {
    const Rational paid = *bids_[*bid_winner_];
    const Rational share = paid / Rational(config_.num_players - 1);
    for (PlayerIndex i = 0; i < config_.num_players; ++i) {
      x.transfers[i] += (i == *bid_winner_) ? -paid : share;
    }
  }
  result_ = std::move(x);
  stage_ = Stage{StageKind::kSettled, -1};
}

SessionState new_session(const MechanismConfig& config, const UtilityProfile& profile) {
  config.validate();
  if (profile.num_players() != config.num_players) {
    fail(ErrorCode::kDimensionMismatch,
         "config expects " + std::to_string(config.num_players) + " players, profile has " +
             std::to_string(profile.num_players()));
  }
  SessionState s(config, profile);
  s.order_ = identity_order(config.num_players);
  switch (config.variant) {
    case Variant::kBidPc:
      s.bids_.assign(config.num_players, std::nullopt);
      s.stage_ = Stage{StageKind::kAwaitBid, -1};
      break;
    case Variant::kPcEndogenousAlpha:
      s.stage_ = Stage{StageKind::kAwaitAlphaProposal, 0};
      break;
    default:
      s.stage_ = Stage{StageKind::kAwaitPrice, 0};
      break;
  }
  return s;
}

SessionState resolve_bid_stage(const SessionState& state) {
  if (state.config_.variant != Variant::kBidPc || state.stage_.kind != StageKind::kAwaitBid) {
    fail(ErrorCode::kOutOfTurn, "no bid stage to resolve");
  }
  for (const auto& b : state.bids_) {
    if (!b) fail(ErrorCode::kOutOfTurn, "bids still outstanding");
  }
  SessionState s = state;
  Rational best = *s.bids_[0];
  for (const auto& b : s.bids_) best = std::max(best, *b);
  std::vector<PlayerIndex> winners;
  for (PlayerIndex i = 0; i < static_cast<int>(s.bids_.size()); ++i) {
    if (*s.bids_[i] == best) winners.push_back(i);
  }
  Rng rng(s.config_.rng_seed);
  const PlayerIndex winner = winners[rng.below(winners.size())];
  std::vector<PlayerIndex> rest;
  for (PlayerIndex i = 0; i < s.config_.num_players; ++i) {
    if (i != winner) rest.push_back(i);
  }
  rng.shuffle(rest);
  s.order_.clear();
  s.order_.push_back(winner);
  s.order_.insert(s.order_.end(), rest.begin(), rest.end());
  s.bid_winner_ = winner;
  s.stage_ = Stage{StageKind::kAwaitPrice, winner};
  return s;
}

SessionState apply_move(const SessionState& state, const Move& move) {
  const Stage& stage = state.stage_;
  const int n = state.config_.num_players;
  const int k = state.profile_.num_options();

  if (move.player < 0 || move.player >= n) {
    fail(ErrorCode::kOutOfTurn, "no such player: " + std::to_string(move.player));
  }

  SessionState s = state;
  switch (stage.kind) {
    case StageKind::kAwaitBid: {
      const auto* bid = std::get_if<BidMove>(&move.payload);
      if (!bid || s.bids_[move.player]) out_of_turn(state, move);
      if (bid->amount.sign() < 0) {
        fail(ErrorCode::kNegativeBid, "bids must be nonnegative, got " + bid->amount.pretty());
      }
      s.bids_[move.player] = bid->amount;
      s.move_log_.push_back(move);
      const bool all_in = std::all_of(s.bids_.begin(), s.bids_.end(),
                                      [](const auto& b) { return b.has_value(); });
      return all_in ? resolve_bid_stage(s) : s;
    }
    case StageKind::kAwaitAlphaProposal: {
      const auto* a = std::get_if<AlphaMove>(&move.payload);
      if (!a || move.player != stage.player) out_of_turn(state, move);
      s.proposed_alpha_ = a->alpha;
      s.stage_ = Stage{StageKind::kAwaitRoleChoice, 1};
      s.move_log_.push_back(move);
      return s;
    }
    case StageKind::kAwaitRoleChoice: {
      const auto* r = std::get_if<RoleMove>(&move.payload);
      if (!r || move.player != stage.player) out_of_turn(state, move);
      // Player 2 picks its own role.
      s.order_ = r->role == Role::kChooser ? std::vector<PlayerIndex>{0, 1}
                                           : std::vector<PlayerIndex>{1, 0};
      s.stage_ = Stage{StageKind::kAwaitPrice, s.order_[0]};
      s.move_log_.push_back(move);
      return s;
    }
    case StageKind::kAwaitPrice: {
      const auto* p = std::get_if<PriceMove>(&move.payload);
      if (!p || move.player != stage.player) out_of_turn(state, move);
      if (static_cast<int>(p->prices.size()) != k) {
        fail(ErrorCode::kDimensionMismatch, "expected " + std::to_string(k) + " prices, got " +
                                                std::to_string(p->prices.size()));
      }
      s.posted_prices_.emplace_back(p->prices, s.price_target());
      const int next = static_cast<int>(s.posted_prices_.size());
      s.stage_ = next + 1 < n ? Stage{StageKind::kAwaitPrice, s.order_[next]}
                              : Stage{StageKind::kAwaitChoice, s.order_[next]};
      s.move_log_.push_back(move);
      return s;
    }
    case StageKind::kAwaitChoice: {
      const auto* c = std::get_if<ChoiceMove>(&move.payload);
      if (!c || move.player != stage.player) out_of_turn(state, move);
      if (c->option < 0 || c->option >= k) {
        fail(ErrorCode::kUnknownOption, "no option with index " + std::to_string(c->option));
      }
      s.move_log_.push_back(move);
      s.settle(c->option);
      return s;
    }
    case StageKind::kSettled:
      out_of_turn(state, move);
  }
  out_of_turn(state, move);
}

SessionState endogenous_alpha_transition(const SessionState& state, const Move& move) {
  if (state.config().variant != Variant::kPcEndogenousAlpha) {
    fail(ErrorCode::kOutOfTurn, "not an endogenous-alpha session");
  }
  const StageKind kind = state.stage().kind;
  if (kind != StageKind::kAwaitAlphaProposal && kind != StageKind::kAwaitRoleChoice) {
    fail(ErrorCode::kOutOfTurn, "alpha and role stages are over");
  }
  return apply_move(state, move);
}

std::vector<Rational> payoffs(const SessionState& state) {
  if (!state.settled()) fail(ErrorCode::kNotSettled, "session is not settled");
  const Allocation& x = *state.result();
  const UtilityProfile& u = state.profile();
  const MechanismConfig& c = state.config();
  if (c.variant == Variant::kPc2NonQl) {
    const Rational& price = state.posted_prices().front()[x.option];
    return {u.value(0, x.option) + c.zeta(price), u.value(1, x.option) - c.eta(price)};
  }
  std::vector<Rational> out;
  out.reserve(u.num_players());
  for (PlayerIndex i = 0; i < u.num_players(); ++i) {
    out.push_back(u.value(i, x.option) + x.transfers[i]);
  }
  return out;
}

SessionState replay(const MechanismConfig& config, const UtilityProfile& profile,
                    std::span<const Move> moves) {
  SessionState s = new_session(config, profile);
  for (const Move& m : moves) s = apply_move(s, m);
  return s;
}

}  // namespace pandc
