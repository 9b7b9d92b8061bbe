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


#include "pandc/http_server.h"

#include <algorithm>
#include <iostream>

namespace pandc::service {
namespace {

constexpr const char* kSessionPath = R"(/sessions/([A-Za-z0-9_-]+))";

void send(httplib::Response& res, const Json& body, int status = 200) {
  res.status = status;
  res.set_content(body.dump(), "application/json");
}

void send_error(httplib::Response& res, const std::string& code, const std::string& message,
                int status) {
  send(res, Json{{"kind", "error"}, {"code", code}, {"message", message}}, status);
}

std::optional<std::string> bearer(const httplib::Request& req) {
  const std::string h = req.get_header_value("Authorization");
  const std::string prefix = "Bearer ";
  if (h.size() > prefix.size() && h.compare(0, prefix.size(), prefix) == 0) {
    return h.substr(prefix.size());
  }
  return std::nullopt;
}

std::string require_bearer(const httplib::Request& req) {
  auto token = bearer(req);
  if (!token) throw ServiceError("not_participant", "missing bearer token", 401);
  return *token;
}

Json body_json(const httplib::Request& req) {
  if (req.body.empty()) return Json::object();
  try {
    return Json::parse(req.body);
  } catch (const Json::exception& e) {
    throw ServiceError("parse_error", e.what());
  }
}

template <typename F>
httplib::Server::Handler guarded(F f) {
  return [f](const httplib::Request& req, httplib::Response& res) {
    try {
      f(req, res);
    } catch (const ServiceError& e) {
      send_error(res, e.code(), e.what(), e.http_status());
    } catch (const Error& e) {
      const ServiceError w = wire_error(e);
      send_error(res, w.code(), w.what(), w.http_status());
    } catch (const Json::exception& e) {
      send_error(res, "parse_error", e.what(), 400);
    } catch (const std::exception& e) {
      send_error(res, "internal", e.what(), 500);
    }
  };
}

std::uint64_t query_u64(const httplib::Request& req, const char* key, std::uint64_t fallback) {
  if (!req.has_param(key)) return fallback;
  try {
    return std::stoull(req.get_param_value(key));
  } catch (const std::exception&) {
    throw ServiceError("parse_error", std::string("bad query parameter ") + key);
  }
}

}  // namespace

ServerConfig server_config_from_json(const Json& j) {
  ServerConfig c;
  if (!j.is_object()) fail(ErrorCode::kParseError, "server config must be an object");
  try {
    if (j.contains("host")) c.host = j.at("host").get<std::string>();
    if (j.contains("port")) c.port = j.at("port").get<int>();
    if (j.contains("store_dir") && !j.at("store_dir").is_null()) {
      c.store_dir = j.at("store_dir").get<std::string>();
    }
    if (j.contains("long_poll_max_ms")) c.long_poll_max_ms = j.at("long_poll_max_ms").get<int>();
  } catch (const Json::exception& e) {
    fail(ErrorCode::kParseError, e.what());
  }
  if (c.port < 0 || c.port > 65535) fail(ErrorCode::kInvalidConfig, "port out of range");
  return c;
}

void register_routes(httplib::Server& server, SessionService& service, int long_poll_max_ms) {
  const std::string session = kSessionPath;

  server.Post("/sessions", guarded([&service](const httplib::Request& req, httplib::Response& res) {
    CreateRequest r = create_request_from_json(body_json(req));
    if (req.has_header("Idempotency-Key")) r.idempotency_key = req.get_header_value("Idempotency-Key");
    const std::string id = service.create_session(r);
    Json state = service.get_state(id);
    send(res, Json{{"kind", "create"}, {"session_id", id}, {"revision", state["revision"]},
                   {"state", state}}, 201);
  }));

  server.Get("/sessions", guarded([&service](const httplib::Request&, httplib::Response& res) {
    send(res, service.list_sessions());
  }));

  server.Post(session + "/join",
              guarded([&service](const httplib::Request& req, httplib::Response& res) {
    const Json body = body_json(req);
    std::optional<PlayerIndex> seat;
    if (body.contains("seat") && !body.at("seat").is_null()) seat = body.at("seat").get<int>();
    const JoinResult r = service.join(req.matches[1], seat);
    send(res, Json{{"kind", "join"}, {"session_id", std::string(req.matches[1])},
                   {"seat", r.seat}, {"token", r.token}});
  }));

  server.Get(session + "/state", guarded([&service, long_poll_max_ms](const httplib::Request& req,
                                                                      httplib::Response& res) {
    const auto token = bearer(req);
    if (req.has_param("after")) {
      const auto after = query_u64(req, "after", 0);
      const auto wait = std::min<std::uint64_t>(query_u64(req, "timeout_ms", 25000),
                                                static_cast<std::uint64_t>(long_poll_max_ms));
      send(res, service.wait_state(req.matches[1], after, std::chrono::milliseconds(wait), token));
    } else {
      send(res, service.get_state(req.matches[1], token));
    }
  }));

  server.Post(session + "/moves",
              guarded([&service](const httplib::Request& req, httplib::Response& res) {
    const std::string token = require_bearer(req);
    const Json body = body_json(req);
    if (!body.contains("move")) throw ServiceError("parse_error", "missing \"move\"");
    const Move move = move_from_json(body.at("move"));
    std::optional<std::uint64_t> revision;
    if (body.contains("revision") && !body.at("revision").is_null()) {
      revision = body.at("revision").get<std::uint64_t>();
    }
    send(res, service.submit_move(req.matches[1], token, move, revision));
  }));

  server.Get(session + "/advice",
             guarded([&service](const httplib::Request& req, httplib::Response& res) {
    send(res, service.get_advice(req.matches[1], require_bearer(req)));
  }));

  server.Post(session + "/bots",
              guarded([&service](const httplib::Request& req, httplib::Response& res) {
    const Json body = body_json(req);
    if (!body.contains("seat")) throw ServiceError("parse_error", "missing \"seat\"");
    const std::string policy = body.value("policy", std::string("equilibrium"));
    send(res, service.attach_bot(req.matches[1], body.at("seat").get<int>(),
                                 parse_bot_policy(policy)));
  }));

  server.Get(session + "/replay",
             guarded([&service](const httplib::Request& req, httplib::Response& res) {
    send(res, service.get_replay(req.matches[1]));
  }));

  server.Post(session + "/abandon",
              guarded([&service](const httplib::Request& req, httplib::Response& res) {
    send(res, service.abandon(req.matches[1], require_bearer(req)));
  }));

  server.set_default_headers({{"Access-Control-Allow-Origin", "*"}});
  server.Options(R"(.*)", [](const httplib::Request&, httplib::Response& res) {
    res.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
    res.set_header("Access-Control-Allow-Headers", "Content-Type, Authorization, Idempotency-Key");
    res.status = 204;
  });
}

bool run_server(const ServerConfig& config) {
  std::shared_ptr<SessionStore> store;
  if (config.store_dir) {
    store = std::make_shared<FileStore>(*config.store_dir);
  } else {
    store = std::make_shared<MemoryStore>();
  }
  SessionService service(store);
  httplib::Server server;
  register_routes(server, service, config.long_poll_max_ms);
  std::cerr << "pandc serving on http://" << config.host << ":" << config.port << "\n";
  return server.listen(config.host, config.port);
}

}  // namespace pandc::service
