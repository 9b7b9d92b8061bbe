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


#include "pandc/service.h"

#include <ctime>
#include <fstream>
#include <random>
#include <sstream>

namespace pandc::service {
namespace {

std::string now_utc() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string random_hex(int bytes) {
  static std::mutex mu;
  static std::random_device device;
  static std::mt19937_64 engine(
      (static_cast<std::uint64_t>(device()) << 32) ^ device() ^
      static_cast<std::uint64_t>(std::chrono::steady_clock::now().time_since_epoch().count()));
  std::lock_guard lock(mu);
  static const char* digits = "0123456789abcdef";
  std::string out;
  for (int i = 0; i < bytes; ++i) {
    const auto b = engine() & 0xff;
    out.push_back(digits[b >> 4]);
    out.push_back(digits[b & 0xf]);
  }
  return out;
}

Json request_to_json(const CreateRequest& r) {
  Json j{{"config", to_json(r.config)},
         {"profile", to_json(r.profile)},
         {"advice", r.advice_enabled},
         {"hide_utilities", r.hide_utilities}};
  if (r.idempotency_key) j["idempotency_key"] = *r.idempotency_key;
  return j;
}

template <typename F>
auto engine_call(F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    throw wire_error(e);
  } catch (const Json::exception& e) {
    throw ServiceError("parse_error", e.what());
  }
}

}  // namespace

std::string_view status_name(Status s) {
  switch (s) {
    case Status::kOpen: return "open";
    case Status::kInProgress: return "in_progress";
    case Status::kSettled: return "settled";
    case Status::kAbandoned: return "abandoned";
  }
  return "open";
}

ServiceError wire_error(const Error& e) {
  const int status = e.code() == ErrorCode::kOutOfTurn ? 409 : 400;
  return ServiceError(std::string(error_code_name(e.code())), e.what(), status);
}

CreateRequest create_request_from_json(const Json& j) {
  return engine_call([&] {
    if (!j.is_object()) fail(ErrorCode::kParseError, "request body must be an object");
    CreateRequest r;
    if (!j.contains("config") || !j.contains("profile")) {
      fail(ErrorCode::kParseError, "create needs \"config\" and \"profile\"");
    }
    r.config = config_from_json(j.at("config"));
    r.profile = profile_from_json(j.at("profile"));
    if (j.contains("advice")) r.advice_enabled = j.at("advice").get<bool>();
    if (j.contains("hide_utilities")) r.hide_utilities = j.at("hide_utilities").get<bool>();
    if (j.contains("idempotency_key") && !j.at("idempotency_key").is_null()) {
      r.idempotency_key = j.at("idempotency_key").get<std::string>();
    }
    return r;
  });
}

void MemoryStore::append(const std::string& session_id, const Json& event) {
  std::lock_guard lock(mu_);
  events_[session_id].push_back(event);
}

std::map<std::string, std::vector<Json>> MemoryStore::load_all() {
  std::lock_guard lock(mu_);
  return events_;
}

FileStore::FileStore(std::filesystem::path dir) : dir_(std::move(dir)) {
  std::filesystem::create_directories(dir_);
}

void FileStore::append(const std::string& session_id, const Json& event) {
  std::lock_guard lock(mu_);
  std::ofstream out(dir_ / (session_id + ".jsonl"), std::ios::app);
  if (!out) throw ServiceError("storage_error", "cannot write session log", 500);
  out << event.dump() << "\n";
  out.flush();
}

std::map<std::string, std::vector<Json>> FileStore::load_all() {
  std::lock_guard lock(mu_);
  std::map<std::string, std::vector<Json>> out;
  for (const auto& entry : std::filesystem::directory_iterator(dir_)) {
    if (entry.path().extension() != ".jsonl") continue;
    std::ifstream in(entry.path());
    std::string line;
    auto& events = out[entry.path().stem().string()];
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      // A torn final line from a crash is dropped; earlier lines are intact.
      try {
        events.push_back(Json::parse(line));
      } catch (const Json::exception&) {
        break;
      }
    }
  }
  return out;
}

SessionService::SessionService(std::shared_ptr<SessionStore> store) : store_(std::move(store)) {
  load();
}

void SessionService::load() {
  for (auto& [id, events] : store_->load_all()) {
    if (events.empty() || events.front().value("type", "") != "create") continue;
    const Json& head = events.front();
    auto request = create_request_from_json(head.at("request"));
    auto session = std::make_shared<Session>(id, request,
                                             new_session(request.config, request.profile));
    session->seats.resize(request.config.num_players);
    session->created_at = head.value("at", "");
    for (std::size_t e = 1; e < events.size(); ++e) {
      const Json& ev = events[e];
      const std::string type = ev.value("type", "");
      if (type == "join") {
        session->seats.at(ev.at("seat").get<int>()).token = ev.at("token").get<std::string>();
      } else if (type == "bot") {
        session->seats.at(ev.at("seat").get<int>()).bot =
            parse_bot_policy(ev.at("policy").get<std::string>());
      } else if (type == "move") {
        session->state = apply_move(session->state, move_from_json(ev.at("move")));
        ++session->revision;
        if (session->state.settled()) session->settled_at = ev.value("at", "");
      } else if (type == "abandon") {
        session->status = Status::kAbandoned;
      }
    }
    if (session->status != Status::kAbandoned) {
      session->status = session->state.settled() ? Status::kSettled
                        : session->revision > 0  ? Status::kInProgress
                                                 : Status::kOpen;
    }
    if (request.idempotency_key) idempotency_[*request.idempotency_key] = id;
    sessions_[id] = std::move(session);
  }
}

std::shared_ptr<SessionService::Session> SessionService::find(const std::string& session_id) {
  std::lock_guard lock(mu_);
  const auto it = sessions_.find(session_id);
  if (it == sessions_.end()) {
    throw ServiceError("not_found", "no session " + session_id, 404);
  }
  return it->second;
}

std::string SessionService::create_session(const CreateRequest& request) {
  SessionState state = engine_call([&] { return new_session(request.config, request.profile); });
  std::lock_guard lock(mu_);
  if (request.idempotency_key) {
    const auto it = idempotency_.find(*request.idempotency_key);
    if (it != idempotency_.end()) return it->second;
  }
  std::string id;
  do {
    id = "s" + random_hex(8);
  } while (sessions_.count(id));
  auto session = std::make_shared<Session>(id, request, std::move(state));
  session->seats.resize(request.config.num_players);
  session->created_at = now_utc();
  store_->append(id, Json{{"type", "create"},
                          {"session_id", id},
                          {"at", session->created_at},
                          {"request", request_to_json(request)}});
  if (request.idempotency_key) idempotency_[*request.idempotency_key] = id;
  sessions_[id] = std::move(session);
  return id;
}

JoinResult SessionService::join(const std::string& session_id, std::optional<PlayerIndex> seat) {
  auto s = find(session_id);
  std::lock_guard lock(s->mu);
  if (s->status == Status::kSettled || s->status == Status::kAbandoned) {
    throw ServiceError("session_closed", "session is " + std::string(status_name(s->status)), 409);
  }
  const int n = static_cast<int>(s->seats.size());
  if (!seat) {
    for (int i = 0; i < n && !seat; ++i) {
      if (!s->seats[i].token && !s->seats[i].bot) seat = i;
    }
    if (!seat) throw ServiceError("seat_taken", "every seat is taken", 409);
  }
  if (*seat < 0 || *seat >= n) throw ServiceError("unknown_seat", "no seat " + std::to_string(*seat));
  if (s->seats[*seat].token || s->seats[*seat].bot) {
    throw ServiceError("seat_taken", "seat " + std::to_string(*seat) + " is taken", 409);
  }
  JoinResult r{*seat, random_hex(16)};
  s->seats[*seat].token = r.token;
  store_->append(session_id, Json{{"type", "join"}, {"seat", r.seat}, {"token", r.token},
                                  {"at", now_utc()}});
  return r;
}

PlayerIndex SessionService::seat_of(const Session& s, const std::string& token) const {
  for (int i = 0; i < static_cast<int>(s.seats.size()); ++i) {
    if (s.seats[i].token && *s.seats[i].token == token) return i;
  }
  throw ServiceError("not_participant", "token does not hold a seat in this session", 403);
}

Json SessionService::state_json(const Session& s, std::optional<PlayerIndex> viewer) const {
  Json j;
  j["kind"] = s.state.settled() ? "settled" : "state";
  j["session_id"] = s.id;
  j["revision"] = s.revision;
  j["status"] = status_name(s.status);
  j["created_at"] = s.created_at;
  if (s.settled_at) j["settled_at"] = *s.settled_at;
  j["advice_enabled"] = s.request.advice_enabled;
  j["hide_utilities"] = s.request.hide_utilities;
  Json seats = Json::array();
  for (int i = 0; i < static_cast<int>(s.seats.size()); ++i) {
    Json seat{{"seat", i}, {"claimed", s.seats[i].token.has_value() || s.seats[i].bot.has_value()}};
    seat["bot"] = s.seats[i].bot ? Json(bot_policy_name(*s.seats[i].bot)) : Json(nullptr);
    seats.push_back(std::move(seat));
  }
  j["seats"] = std::move(seats);
  Json state = to_json(s.state);
  if (s.request.hide_utilities && !s.state.settled()) {
    auto& rows = state["profile"]["utilities"];
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
      if (!viewer || *viewer != i) rows[i] = nullptr;
    }
  }
  if (s.state.settled()) {
    j["allocation"] = state["result"];
    j["payoffs"] = state["payoffs"];
  }
  j["state"] = std::move(state);
  if (viewer) j["seat"] = *viewer;
  return j;
}

Json SessionService::get_state(const std::string& session_id,
                               const std::optional<std::string>& token) {
  auto s = find(session_id);
  std::lock_guard lock(s->mu);
  std::optional<PlayerIndex> viewer;
  if (token) viewer = seat_of(*s, *token);
  return state_json(*s, viewer);
}

Json SessionService::wait_state(const std::string& session_id, std::uint64_t after,
                                std::chrono::milliseconds timeout,
                                const std::optional<std::string>& token) {
  auto s = find(session_id);
  std::unique_lock lock(s->mu);
  std::optional<PlayerIndex> viewer;
  if (token) viewer = seat_of(*s, *token);
  s->changed.wait_for(lock, timeout, [&] {
    return s->revision > after || s->status == Status::kAbandoned;
  });
  return state_json(*s, viewer);
}

void SessionService::apply_locked(Session& s, const Move& move, const std::string& at) {
  s.state = engine_call([&] { return apply_move(s.state, move); });
  ++s.revision;
  store_->append(s.id, Json{{"type", "move"}, {"move", to_json(move)}, {"at", at}});
  if (s.state.settled()) {
    s.status = Status::kSettled;
    s.settled_at = at;
  } else {
    s.status = Status::kInProgress;
  }
}

void SessionService::run_bots_locked(Session& s) {
  while (!s.state.settled()) {
    std::optional<Move> next;
    for (int i = 0; i < static_cast<int>(s.seats.size()) && !next; ++i) {
      if (s.seats[i].bot && is_turn_of(s.state, i)) {
        next = engine_call([&] { return bot_move(*s.seats[i].bot, s.state, i); });
      }
    }
    if (!next) return;
    apply_locked(s, *next, now_utc());
  }
}

Json SessionService::submit_move(const std::string& session_id, const std::string& token,
                                 const Move& move, std::optional<std::uint64_t> expected_revision) {
  auto s = find(session_id);
  std::lock_guard lock(s->mu);
  const PlayerIndex seat = seat_of(*s, token);
  if (s->status == Status::kAbandoned || s->status == Status::kSettled) {
    throw ServiceError("session_closed", "session is " + std::string(status_name(s->status)), 409);
  }
  if (move.player != seat) {
    throw ServiceError("not_participant", "token holds seat " + std::to_string(seat) +
                                              ", not seat " + std::to_string(move.player), 403);
  }
  if (expected_revision && *expected_revision != s->revision) {
    throw ServiceError("stale_revision", "session is at revision " + std::to_string(s->revision),
                       409);
  }
  apply_locked(*s, move, now_utc());
  run_bots_locked(*s);
  s->changed.notify_all();
  return state_json(*s, seat);
}

Json SessionService::get_advice(const std::string& session_id, const std::string& token) {
  auto s = find(session_id);
  std::lock_guard lock(s->mu);
  const PlayerIndex seat = seat_of(*s, token);
  if (!s->request.advice_enabled) {
    throw ServiceError("advice_disabled", "advice is disabled for this session", 403);
  }
  if (s->status == Status::kAbandoned || s->status == Status::kSettled) {
    throw ServiceError("session_closed", "session is " + std::string(status_name(s->status)), 409);
  }
  const Advice a = engine_call([&] { return advise(s->state, seat); });
  store_->append(session_id, Json{{"type", "advice"}, {"seat", seat}, {"revision", s->revision},
                                  {"at", now_utc()}});
  return Json{{"kind", "advice"},
              {"session_id", session_id},
              {"revision", s->revision},
              {"seat", seat},
              {"move", to_json(a.move)},
              {"predicted_payoffs", to_json(a.predicted_payoffs)},
              {"notes", a.notes}};
}

Json SessionService::attach_bot(const std::string& session_id, PlayerIndex seat,
                                const BotPolicy& policy) {
  auto s = find(session_id);
  std::lock_guard lock(s->mu);
  if (seat < 0 || seat >= static_cast<int>(s->seats.size())) {
    throw ServiceError("unknown_seat", "no seat " + std::to_string(seat));
  }
  if (s->seats[seat].token || s->seats[seat].bot) {
    throw ServiceError("seat_taken", "seat " + std::to_string(seat) + " is taken", 409);
  }
  if (s->status == Status::kAbandoned || s->status == Status::kSettled) {
    throw ServiceError("session_closed", "session is " + std::string(status_name(s->status)), 409);
  }
  s->seats[seat].bot = policy;
  store_->append(session_id, Json{{"type", "bot"}, {"seat", seat},
                                  {"policy", bot_policy_name(policy)}, {"at", now_utc()}});
  run_bots_locked(*s);
  s->changed.notify_all();
  return Json{{"kind", "bot"}, {"session_id", session_id}, {"seat", seat},
              {"policy", bot_policy_name(policy)}, {"revision", s->revision}};
}

Json SessionService::list_sessions() {
  std::vector<std::shared_ptr<Session>> all;
  {
    std::lock_guard lock(mu_);
    for (const auto& [id, s] : sessions_) all.push_back(s);
  }
  Json out = Json::array();
  for (const auto& s : all) {
    std::lock_guard lock(s->mu);
    out.push_back(Json{{"session_id", s->id},
                       {"variant", variant_name(s->request.config.variant)},
                       {"players", s->request.config.num_players},
                       {"status", status_name(s->status)},
                       {"revision", s->revision},
                       {"created_at", s->created_at}});
  }
  return Json{{"kind", "sessions"}, {"sessions", std::move(out)}};
}

Json SessionService::get_replay(const std::string& session_id) {
  auto s = find(session_id);
  std::lock_guard lock(s->mu);
  Json moves = Json::array();
  for (const auto& m : s->state.move_log()) moves.push_back(to_json(m));
  Json j{{"kind", "replay"},
         {"session_id", session_id},
         {"revision", s->revision},
         {"status", status_name(s->status)},
         {"config", to_json(s->request.config)},
         {"profile", to_json(s->request.profile)},
         {"moves", std::move(moves)}};
  const SessionState again = replay(s->request.config, s->request.profile, s->state.move_log());
  j["replay_matches"] = again == s->state;
  if (s->state.result()) j["allocation"] = to_json(*s->state.result());
  if (again.result()) j["replayed_allocation"] = to_json(*again.result());
  return j;
}

Json SessionService::abandon(const std::string& session_id, const std::string& token) {
  auto s = find(session_id);
  std::lock_guard lock(s->mu);
  const PlayerIndex seat = seat_of(*s, token);
  if (s->status == Status::kSettled) {
    throw ServiceError("session_closed", "settled sessions are immutable", 409);
  }
  if (s->status != Status::kAbandoned) {
    s->status = Status::kAbandoned;
    store_->append(session_id, Json{{"type", "abandon"}, {"seat", seat}, {"at", now_utc()}});
    s->changed.notify_all();
  }
  return state_json(*s, seat);
}

}  // namespace pandc::service
