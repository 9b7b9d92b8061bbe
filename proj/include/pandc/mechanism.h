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

#ifndef PANDC_MECHANISM_H_
#define PANDC_MECHANISM_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "pandc/model.h"
#include "pandc/rational.h"
#include "pandc/transform.h"

namespace pandc {

// The game forms hosted by the engine.
//
//   kPc2               proposer posts p (sum 0), chooser picks a and pays p_a.
//   kPcAlpha           as kPc2 with prices summing to a fixed alpha.
//   kPcEndogenousAlpha player 1 proposes alpha, player 2 picks a role, then
//                      a kPcAlpha round between proposer and chooser.
//   kPcN               players 1..n-1 post price vectors down a chain; the
//                      last player chooses.
//   kBidPc             sealed bids for the first seat, then kPcN in the
//                      drawn order; the winner's bid is split among the rest.
//   kPc2NonQl          kPc2 with money valued through zeta (proposer) and
//                      eta (chooser).
//   kPc2Robust         kPc2 game form played by epsilon-maximizers.
enum class Variant {
  kPc2,
  kPcAlpha,
  kPcEndogenousAlpha,
  kPcN,
  kBidPc,
  kPc2NonQl,
  kPc2Robust,
};

std::string_view variant_name(Variant v);  // "pc2", "pc-alpha", ...
Variant parse_variant(std::string_view name);
std::span<const Variant> all_variants();

struct MechanismConfig {
  Variant variant = Variant::kPc2;
  int num_players = 2;
  Rational alpha;                   // kPcAlpha
  std::optional<Rational> epsilon;  // kPc2Robust
  MonotoneTransform zeta = MonotoneTransform::identity();  // kPc2NonQl
  MonotoneTransform eta = MonotoneTransform::identity();   // kPc2NonQl
  std::uint64_t rng_seed = 0;       // kBidPc draws

  // Throws kInvalidConfig / kEpsilonNonPositive on bad combinations.
  void validate() const;

  friend bool operator==(const MechanismConfig&, const MechanismConfig&) = default;
};

enum class StageKind {
  kAwaitBid,
  kAwaitAlphaProposal,
  kAwaitRoleChoice,
  kAwaitPrice,
  kAwaitChoice,
  kSettled,
};

std::string_view stage_kind_name(StageKind kind);

struct Stage {
  StageKind kind = StageKind::kSettled;
  // Acting player; -1 during kAwaitBid (any bidder who has not bid yet) and
  // when settled.
  PlayerIndex player = -1;

  friend bool operator==(const Stage&, const Stage&) = default;
};

enum class Role { kProposer, kChooser };

struct BidMove {
  Rational amount;
  friend bool operator==(const BidMove&, const BidMove&) = default;
};
struct AlphaMove {
  Rational alpha;
  friend bool operator==(const AlphaMove&, const AlphaMove&) = default;
};
struct RoleMove {
  Role role = Role::kChooser;
  friend bool operator==(const RoleMove&, const RoleMove&) = default;
};
struct PriceMove {
  std::vector<Rational> prices;
  friend bool operator==(const PriceMove&, const PriceMove&) = default;
};
struct ChoiceMove {
  OptionIndex option = 0;
  friend bool operator==(const ChoiceMove&, const ChoiceMove&) = default;
};

using MovePayload = std::variant<BidMove, AlphaMove, RoleMove, PriceMove, ChoiceMove>;

struct Move {
  PlayerIndex player = 0;
  MovePayload payload;

  friend bool operator==(const Move&, const Move&) = default;
};

std::string_view move_kind_name(const MovePayload& payload);  // "bid", "price", ...

// Immutable snapshot of a running mechanism. Every state is the fold of its
// move log over new_session(); apply_move returns a fresh value.
//
// Play proceeds by seat position: position m (0 <= m < n-1) posts the price
// vector it demands from position m+1, and position n-1 chooses. order()
// maps positions to players. It is the identity except after a bid auction
// or an endogenous role choice.
class SessionState {
 public:
  const MechanismConfig& config() const { return config_; }
  const UtilityProfile& profile() const { return profile_; }
  const Stage& stage() const { return stage_; }
  bool settled() const { return stage_.kind == StageKind::kSettled; }

  const std::vector<Move>& move_log() const { return move_log_; }
  // posted_prices()[m] is the vector posted by the player at position m.
  const std::vector<PriceVector>& posted_prices() const { return posted_prices_; }
  const std::vector<std::optional<Rational>>& bids() const { return bids_; }
  const std::vector<PlayerIndex>& order() const { return order_; }
  std::optional<PlayerIndex> bid_winner() const { return bid_winner_; }
  std::optional<Rational> proposed_alpha() const { return proposed_alpha_; }
  const std::optional<Allocation>& result() const { return result_; }

  // Sum every price vector posted from now on must hit.
  Rational price_target() const;
  int position_of(PlayerIndex player) const;
  PlayerIndex chooser() const { return order_.back(); }

  friend bool operator==(const SessionState&, const SessionState&) = default;

 private:
  friend SessionState new_session(const MechanismConfig&, const UtilityProfile&);
  friend SessionState apply_move(const SessionState&, const Move&);
  friend SessionState resolve_bid_stage(const SessionState&);

  SessionState(MechanismConfig config, UtilityProfile profile)
      : config_(std::move(config)), profile_(std::move(profile)) {}

  void settle(OptionIndex option);

  MechanismConfig config_;
  UtilityProfile profile_;
  Stage stage_;
  std::vector<Move> move_log_;
  std::vector<PriceVector> posted_prices_;
  std::vector<std::optional<Rational>> bids_;
  std::vector<PlayerIndex> order_;
  std::optional<PlayerIndex> bid_winner_;
  std::optional<Rational> proposed_alpha_;
  std::optional<Allocation> result_;
};

// Throws kDimensionMismatch when the profile's player count differs from the
// config, plus anything MechanismConfig::validate throws.
SessionState new_session(const MechanismConfig& config, const UtilityProfile& profile);

// Errors: kOutOfTurn (wrong player, wrong payload kind, already settled),
// kSumConstraintViolated, kUnknownOption, kNegativeBid, kDimensionMismatch
// (price vector of the wrong length).
SessionState apply_move(const SessionState& state, const Move& move);

// Draws the auction winner among the highest bidders and the order of the
// remaining seats from config.rng_seed. apply_move calls this once the last
// bid arrives; it is exposed for callers that assemble bids themselves.
SessionState resolve_bid_stage(const SessionState& state);

// apply_move restricted to the alpha-proposal and role-choice stages of
// kPcEndogenousAlpha.
SessionState endogenous_alpha_transition(const SessionState& state, const Move& move);

// Final payoffs. Quasi-linear variants: u_i(a) + t_i. kPc2NonQl:
// (u_1(a) + zeta(p_a), u_2(a) - eta(p_a)). Throws kNotSettled.
std::vector<Rational> payoffs(const SessionState& state);

SessionState replay(const MechanismConfig& config, const UtilityProfile& profile,
                    std::span<const Move> moves);

// Transfers implied by a completed price chain and choice: position m
// receives chain[m](a) from m+1 and pays chain[m-1](a) to m-1.
std::vector<Rational> chain_transfers(std::span<const PriceVector> chain,
                                      std::span<const PlayerIndex> order,
                                      OptionIndex option);

}  // namespace pandc

#endif  // PANDC_MECHANISM_H_
