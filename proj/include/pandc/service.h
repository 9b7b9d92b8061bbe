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


#ifndef PANDC_SERVICE_H_
#define PANDC_SERVICE_H_

#include <chrono>
#include <condition_variable>
#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pandc/bots.h"
#include "pandc/error.h"
#include "pandc/json_io.h"
#include "pandc/mechanism.h"

namespace pandc::service {

// Machine readable failure surfaced on the wire as
// {"kind": "error", "code": ..., "message": ...}.
class ServiceError : public std::runtime_error {
 public:
  ServiceError(std::string code, const std::string& message, int http_status = 400)
      : std::runtime_error(message), code_(std::move(code)), http_status_(http_status) {}

  const std::string& code() const { return code_; }
  int http_status() const { return http_status_; }

 private:
  std::string code_;
  int http_status_;
};

enum class Status { kOpen, kInProgress, kSettled, kAbandoned };
std::string_view status_name(Status s);

struct CreateRequest {
  MechanismConfig config;
  UtilityProfile profile = UtilityProfile::from_values({{Rational(0), Rational(0)},
                                                        {Rational(0), Rational(0)}});
  bool advice_enabled = true;
  // Hides other seats' utilities from participants. Play then leaves the
  // complete-information setting the equilibrium results assume.
  bool hide_utilities = false;
  std::optional<std::string> idempotency_key;
};

CreateRequest create_request_from_json(const Json& j);

struct JoinResult {
  PlayerIndex seat = 0;
  std::string token;
};

// Append-only event log per session. Events are JSON objects with a "type"
// of create / join / bot / move / advice / abandon.
class SessionStore {
 public:
  virtual ~SessionStore() = default;
  virtual void append(const std::string& session_id, const Json& event) = 0;
  // Every stored session with its events in append order.
  virtual std::map<std::string, std::vector<Json>> load_all() = 0;
};

class MemoryStore : public SessionStore {
 public:
  void append(const std::string& session_id, const Json& event) override;
  std::map<std::string, std::vector<Json>> load_all() override;

 private:
  std::mutex mu_;
  std::map<std::string, std::vector<Json>> events_;
};

// One <session_id>.jsonl file per session under `dir`.
class FileStore : public SessionStore {
 public:
  explicit FileStore(std::filesystem::path dir);
  void append(const std::string& session_id, const Json& event) override;
  std::map<std::string, std::vector<Json>> load_all() override;

 private:
  std::filesystem::path dir_;
  std::mutex mu_;
};

// Hosts live sessions. Thread safe; moves within one session are applied
// under that session's lock, so each revision accepts exactly one move.
class SessionService {
 public:
  explicit SessionService(std::shared_ptr<SessionStore> store = std::make_shared<MemoryStore>());

  // Returns the existing id when the idempotency key was seen before.
  std::string create_session(const CreateRequest& request);

  // Claims `seat` (or the lowest free seat). Errors: seat_taken, not_found.
  JoinResult join(const std::string& session_id, std::optional<PlayerIndex> seat = std::nullopt);

  // {"kind": "state" | "settled", "session_id", "revision", "status",
  //  "state", "seat"?}. The token, when given, must belong to the session.
  Json get_state(const std::string& session_id, const std::optional<std::string>& token = {});

  // Blocks until the revision exceeds `after` or the timeout passes, then
  // returns get_state.
  Json wait_state(const std::string& session_id, std::uint64_t after,
                  std::chrono::milliseconds timeout, const std::optional<std::string>& token = {});

  // Errors: not_participant, out_of_turn, sum_constraint, unknown_option,
  // negative_bid, config_mismatch, stale_revision, session_closed.
  Json submit_move(const std::string& session_id, const std::string& token, const Move& move,
                   std::optional<std::uint64_t> expected_revision = std::nullopt);

  // The acting seat's equilibrium move. Errors: advice_disabled,
  // not_participant, out_of_turn.
  Json get_advice(const std::string& session_id, const std::string& token);

  // Errors: seat_taken.
  Json attach_bot(const std::string& session_id, PlayerIndex seat, const BotPolicy& policy);

  Json list_sessions();

  // Log plus the allocation recomputed by replaying it through the engine.
  Json get_replay(const std::string& session_id);

  Json abandon(const std::string& session_id, const std::string& token);

 private:
  struct Seat {
    std::optional<std::string> token;
    std::optional<BotPolicy> bot;
  };
  struct Session {
    std::string id;
    CreateRequest request;
    SessionState state;
    std::vector<Seat> seats;
    Status status = Status::kOpen;
    std::string created_at;
    std::optional<std::string> settled_at;
    std::uint64_t revision = 0;
    std::mutex mu;
    std::condition_variable changed;

    Session(std::string id_, CreateRequest req, SessionState s)
        : id(std::move(id_)), request(std::move(req)), state(std::move(s)) {}
  };

  std::shared_ptr<Session> find(const std::string& session_id);
  PlayerIndex seat_of(const Session& s, const std::string& token) const;
  Json state_json(const Session& s, std::optional<PlayerIndex> viewer) const;
  void apply_locked(Session& s, const Move& move, const std::string& at);
  void run_bots_locked(Session& s);
  void load();

  std::shared_ptr<SessionStore> store_;
  std::mutex mu_;
  std::map<std::string, std::shared_ptr<Session>> sessions_;
  std::map<std::string, std::string> idempotency_;
};

// Maps an engine error to its wire code.
ServiceError wire_error(const Error& e);

}  // namespace pandc::service

#endif  // PANDC_SERVICE_H_
