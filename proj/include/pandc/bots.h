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


#ifndef PANDC_BOTS_H_
#define PANDC_BOTS_H_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pandc/mechanism.h"
#include "pandc/model.h"
#include "pandc/rational.h"

namespace pandc {

// Automatic seat strategies.
//
//   equilibrium      the closed-form move for whatever stage is active; as
//                    chooser, a best reply breaking ties toward the nearest
//                    earlier mover, then the next one, then lowest index.
//   adversarial(eps) as equilibrium when proposing; as chooser, the option
//                    minimizing the previous mover's payoff among its own
//                    eps-maximizers.
//   random(seed)     uniformly drawn legal moves, checked against the engine.
//   naive            posts target/k on every option, bids 0, proposes
//                    alpha 0 and chooses like equilibrium.
struct BotPolicy {
  enum class Kind { kEquilibrium, kAdversarial, kRandom, kNaive };
  Kind kind = Kind::kEquilibrium;
  Rational epsilon;
  std::uint64_t seed = 0;

  static BotPolicy equilibrium() { return {}; }
  static BotPolicy adversarial(Rational eps) { return {Kind::kAdversarial, std::move(eps), 0}; }
  static BotPolicy random(std::uint64_t seed) { return {Kind::kRandom, Rational(0), seed}; }
  static BotPolicy naive() { return {Kind::kNaive, Rational(0), 0}; }

  friend bool operator==(const BotPolicy&, const BotPolicy&) = default;
};

// "equilibrium", "adversarial:<eps>", "random:<seed>", "naive".
BotPolicy parse_bot_policy(std::string_view text);
std::string bot_policy_name(const BotPolicy& policy);

// True when `seat` may move now (any seat without a bid during the auction).
bool is_turn_of(const SessionState& state, PlayerIndex seat);

// The policy's move for `seat`. Throws kOutOfTurn when it is not that
// seat's turn. Deterministic in (policy, state, seat).
Move bot_move(const BotPolicy& policy, const SessionState& state, PlayerIndex seat);

// Drives the session with one policy per seat until it settles. Throws
// kInvalidArgument if it has not settled after max_moves moves.
SessionState play_out(SessionState state, std::span<const BotPolicy> seats, int max_moves = 1000);

// Moves a session of this config takes from creation to settlement.
int stage_count(const MechanismConfig& config);

// Payoff of each position at option a once the chain is complete, leaving
// out bid credits (they do not depend on a).
std::vector<Rational> position_payoffs(const SessionState& state,
                                       std::span<const PriceVector> chain, OptionIndex a);

struct Advice {
  Move move;
  std::vector<Rational> predicted_payoffs;  // by player
  std::vector<std::string> notes;
};

// The acting seat's equilibrium move with the solver's predicted payoffs.
Advice advise(const SessionState& state, PlayerIndex seat);

}  // namespace pandc

#endif  // PANDC_BOTS_H_
