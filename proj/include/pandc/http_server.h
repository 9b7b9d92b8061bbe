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


#ifndef PANDC_HTTP_SERVER_H_
#define PANDC_HTTP_SERVER_H_

#include <optional>
#include <string>

#include "httplib.h"
#include "pandc/json_io.h"
#include "pandc/service.h"

namespace pandc::service {

// serve config file: {"host": "127.0.0.1", "port": 8080,
// "store_dir": "sessions", "long_poll_max_ms": 30000}
struct ServerConfig {
  std::string host = "127.0.0.1";
  int port = 8080;
  std::optional<std::string> store_dir;
  int long_poll_max_ms = 30000;
};

ServerConfig server_config_from_json(const Json& j);

// Routes:
//   POST /sessions                  create (Idempotency-Key header or body key)
//   GET  /sessions                  list
//   POST /sessions/{id}/join        {"seat": n}? -> seat + bearer token
//   GET  /sessions/{id}/state       ?after=rev&timeout_ms=t long-polls
//   POST /sessions/{id}/moves       {"move": {...}, "revision": n?}, bearer
//   GET  /sessions/{id}/advice      bearer
//   POST /sessions/{id}/bots        {"seat": n, "policy": "equilibrium"}
//   GET  /sessions/{id}/replay
//   POST /sessions/{id}/abandon     bearer
void register_routes(httplib::Server& server, SessionService& service, int long_poll_max_ms);

// Blocks serving until the server is stopped. Returns false if the socket
// could not be bound.
bool run_server(const ServerConfig& config);

}  // namespace pandc::service

#endif  // PANDC_HTTP_SERVER_H_
