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


// pandc: solve, simulate, verify, serve and gen from one binary.
//
// Exit codes: 0 success / PASS, 1 verification FAIL, 2 parse or usage
// error (verify: any error), 3 solver precondition failure.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pandc/bots.h"
#include "pandc/error.h"
#include "pandc/http_server.h"
#include "pandc/instance_gen.h"
#include "pandc/json_io.h"
#include "pandc/mechanism.h"
#include "pandc/oracle.h"
#include "pandc/solver.h"

namespace {

using pandc::Json;
using pandc::Rational;

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kParse = 2;
constexpr int kPrecondition = 3;

bool is_parse_error(pandc::ErrorCode c) {
  using pandc::ErrorCode;
  return c == ErrorCode::kParseError || c == ErrorCode::kInvalidProfile ||
         c == ErrorCode::kInvalidTransform || c == ErrorCode::kInvalidArgument;
}

// Flattens nested JSON into (path, scalar) rows for table and csv output.
void flatten(const Json& j, const std::string& path, std::vector<std::pair<std::string, std::string>>& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, path.empty() ? k : path + "." + k, out);
  } else if (j.is_array()) {
    bool scalars = true;
    for (const auto& v : j) scalars = scalars && !v.is_structured();
    if (scalars) {
      std::string s = "(";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) s += ", ";
        s += j[i].is_string() ? j[i].get<std::string>() : j[i].dump();
      }
      out.emplace_back(path, s + ")");
    } else {
      for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "[" + std::to_string(i) + "]", out);
    }
  } else {
    out.emplace_back(path, j.is_string() ? j.get<std::string>() : j.dump());
  }
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

void emit(const Json& j, const std::string& format, std::ostream& os = std::cout) {
  if (format == "json") {
    os << j.dump(2) << "\n";
    return;
  }
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(j, "", rows);
  if (format == "csv") {
    os << "key,value\n";
    for (const auto& [k, v] : rows) os << csv_field(k) << "," << csv_field(v) << "\n";
    return;
  }
  std::size_t width = 0;
  for (const auto& r : rows) width = std::max(width, r.first.size());
  for (const auto& [k, v] : rows) os << std::left << std::setw(static_cast<int>(width) + 2) << k << v << "\n";
}

// "x1:y1,x2:y2,..."
pandc::MonotoneTransform parse_transform(const std::string& text) {
  std::vector<Rational> xs, ys;
  std::stringstream ss(text);
  std::string pair;
  while (std::getline(ss, pair, ',')) {
    const auto colon = pair.find(':');
    if (colon == std::string::npos) {
      pandc::fail(pandc::ErrorCode::kParseError, "transform points are x:y, got \"" + pair + "\"");
    }
    xs.push_back(Rational::parse(pair.substr(0, colon)));
    ys.push_back(Rational::parse(pair.substr(colon + 1)));
  }
  return pandc::MonotoneTransform(std::move(xs), std::move(ys));
}

std::vector<Rational> parse_list(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(Rational::parse(item));
  return out;
}

struct MechanismFlags {
  std::string variant = "pc2";
  std::string alpha = "0";
  std::string epsilon;
  std::string eta, zeta;
  std::uint64_t seed = 0;

  void add(CLI::App* app) {
    app->add_option("--variant", variant, "pc2, pc-alpha, pc-endogenous-alpha, pc-n, bid-pc, pc2-nonql, pc2-robust")
        ->capture_default_str();
    app->add_option("--alpha", alpha, "price sum for pc-alpha")->capture_default_str();
    app->add_option("--epsilon", epsilon, "epsilon for pc2-robust");
    app->add_option("--eta", eta, "chooser money transform x:y,x:y,...");
    app->add_option("--zeta", zeta, "proposer money transform x:y,x:y,...");
    app->add_option("--seed", seed, "rng seed for bid-pc draws")->capture_default_str();
  }

  pandc::MechanismConfig config(int players) const {
    pandc::MechanismConfig c;
    try {
      c.variant = pandc::parse_variant(variant);
    } catch (const pandc::Error& e) {
      throw pandc::Error(pandc::ErrorCode::kParseError, e.what());
    }
    c.num_players = players;
    c.alpha = Rational::parse(alpha);
    if (!epsilon.empty()) c.epsilon = Rational::parse(epsilon);
    if (!eta.empty()) c.eta = parse_transform(eta);
    if (!zeta.empty()) c.zeta = parse_transform(zeta);
    c.rng_seed = seed;
    return c;
  }
};

int run_solve(const std::string& path, const MechanismFlags& flags, const std::string& format) {
  pandc::UtilityProfile u = [&] {
    try {
      return pandc::load_profile(path);
    } catch (const pandc::Error& e) {
      throw pandc::Error(pandc::ErrorCode::kParseError, e.what());
    }
  }();
  const auto config = flags.config(u.num_players());
  if (config.variant == pandc::Variant::kPc2Robust && !config.epsilon) {
    pandc::fail(pandc::ErrorCode::kInvalidArgument, "pc2-robust needs --epsilon");
  }
  emit(pandc::to_json(pandc::solve(config, u)), format);
  return kOk;
}

Json simulate_one(const pandc::MechanismConfig& config, const pandc::UtilityProfile& u,
                  const std::vector<pandc::BotPolicy>& seats, bool* asserted_ok) {
  const auto done = pandc::play_out(pandc::new_session(config, u), seats);
  Json moves = Json::array();
  for (const auto& m : done.move_log()) moves.push_back(pandc::to_json(m));
  Json policies = Json::array();
  for (const auto& p : seats) policies.push_back(pandc::bot_policy_name(p));
  Json j{{"config", pandc::to_json(config)},
         {"profile", pandc::to_json(u)},
         {"seats", policies},
         {"moves", moves},
         {"allocation", pandc::to_json(*done.result())},
         {"payoffs", pandc::to_json(pandc::payoffs(done))}};
  if (done.bid_winner()) j["bid_winner"] = *done.bid_winner();
  j["order"] = done.order();
  const bool all_equilibrium = std::all_of(seats.begin(), seats.end(), [](const auto& p) {
    return p.kind == pandc::BotPolicy::Kind::kEquilibrium;
  });
  if (all_equilibrium) {
    const auto allowed = config.variant == pandc::Variant::kPc2NonQl ? pandc::pareto_set(u)
                                                                      : pandc::efficient_set(u);
    const bool ok = std::find(allowed.begin(), allowed.end(), done.result()->option) != allowed.end();
    j["equilibrium_outcome_check"] = ok ? "pass" : "fail";
    *asserted_ok = *asserted_ok && ok;
  }
  return j;
}

int run_simulate(const std::string& path, const MechanismFlags& flags, const std::string& seats_text,
                 int random_count, const pandc::GenOptions& gen, const std::string& format) {
  std::vector<pandc::UtilityProfile> instances;
  if (random_count > 0) {
    pandc::GenOptions o = gen;
    for (int i = 0; i < random_count; ++i) {
      o.seed = gen.seed + static_cast<std::uint64_t>(i);
      instances.push_back(pandc::generate_profile(o));
    }
  } else {
    if (path.empty()) pandc::fail(pandc::ErrorCode::kParseError, "simulate needs an instance or --random");
    try {
      instances.push_back(pandc::load_profile(path));
    } catch (const pandc::Error& e) {
      throw pandc::Error(pandc::ErrorCode::kParseError, e.what());
    }
  }
  bool ok = true;
  Json runs = Json::array();
  for (const auto& u : instances) {
    const auto config = flags.config(u.num_players());
    if (config.variant == pandc::Variant::kPc2Robust && !config.epsilon) {
      pandc::fail(pandc::ErrorCode::kInvalidArgument, "pc2-robust needs --epsilon");
    }
    std::vector<pandc::BotPolicy> seats;
    std::stringstream ss(seats_text);
    std::string item;
    while (std::getline(ss, item, ',')) seats.push_back(pandc::parse_bot_policy(item));
    if (seats.size() == 1) seats.assign(u.num_players(), seats.front());
    if (static_cast<int>(seats.size()) != u.num_players()) {
      pandc::fail(pandc::ErrorCode::kInvalidArgument, "--seats needs one policy or one per player");
    }
    runs.push_back(simulate_one(config, u, seats, &ok));
  }
  emit(random_count > 0 ? Json{{"runs", runs}} : runs.front(), format);
  if (!ok) {
    std::cerr << "equilibrium play settled outside the predicted set\n";
    return kFail;
  }
  return kOk;
}

struct VerifyFlags {
  std::string claim;
  std::string prices;
  std::string epsilon;
  std::string step = "1/8";
  std::string radius = "2";
  std::uint64_t budget = 20'000'000;
  std::string policy = "cooperative";
  std::string u_prime;
  std::string claimed;
};

int run_verify(const std::string& path, const VerifyFlags& f, const std::string& format) {
  namespace o = pandc::oracle;
  const auto u = pandc::load_profile(path);
  const o::Claim claim = o::parse_claim(f.claim);
  o::GridSpec grid;
  grid.step = Rational::parse(f.step);
  grid.radius = Rational::parse(f.radius);
  grid.budget = f.budget;
  grid.validate();
  const int k = u.num_options();
  auto given_prices = [&](const pandc::PriceVector& fallback) {
    if (f.prices.empty()) return fallback;
    auto p = parse_list(f.prices);
    if (static_cast<int>(p.size()) != k) {
      pandc::fail(pandc::ErrorCode::kInvalidArgument, "--prices needs one entry per option");
    }
    return pandc::PriceVector(std::move(p));
  };

  o::VerificationReport r;
  switch (claim) {
    case o::Claim::kChooserBestResponse:
      r = o::verify_chooser_indifference(u, given_prices(pandc::solve_pc2(u).star_prices.front()));
      break;
    case o::Claim::kProposerNoImprovingDeviation: {
      o::ChooserPolicy policy = o::ChooserPolicy::cooperative();
      if (f.policy == "adversarial") {
        if (f.epsilon.empty()) pandc::fail(pandc::ErrorCode::kInvalidArgument, "adversarial needs --epsilon");
        policy = o::ChooserPolicy::adversarial(Rational::parse(f.epsilon));
      } else if (f.policy != "cooperative") {
        pandc::fail(pandc::ErrorCode::kInvalidArgument, "--policy is cooperative or adversarial");
      }
      r = o::verify_proposer_optimality(u, given_prices(pandc::solve_pc2(u).star_prices.front()), grid,
                                        policy);
      break;
    }
    case o::Claim::kRobustEpsilonEquilibrium: {
      if (f.epsilon.empty()) pandc::fail(pandc::ErrorCode::kInvalidArgument, "robust-equilibrium needs --epsilon");
      const Rational eps = Rational::parse(f.epsilon);
      r = o::verify_robust_equilibrium(
          u, f.prices.empty() ? pandc::robust_prices(u, eps) : given_prices(pandc::PriceVector(std::vector<Rational>(k))),
          eps, grid);
      break;
    }
    case o::Claim::kOutcomeEfficient:
      r = o::backward_induction_pc_n(u, grid);
      break;
    case o::Claim::kMonotonicityViolation: {
      if (f.u_prime.empty()) pandc::fail(pandc::ErrorCode::kInvalidArgument, "maskin-monotonicity needs --u-prime");
      o::MonotonicityOptions opts;
      if (!f.claimed.empty()) {
        // "option:t1,t2"
        const auto colon = f.claimed.find(':');
        if (colon == std::string::npos) pandc::fail(pandc::ErrorCode::kParseError, "--claimed is option:t1,t2");
        opts.claimed_f_u_prime =
            pandc::Allocation{std::stoi(f.claimed.substr(0, colon)), parse_list(f.claimed.substr(colon + 1))};
      }
      r = o::check_maskin_monotonicity(o::pc2_allocation_rule, u, pandc::load_profile(f.u_prime), opts);
      break;
    }
  }
  emit(pandc::to_json(r), format);
  return r.pass ? kOk : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pandc: price and choose mechanisms"};
  app.require_subcommand(1);
  std::string format = "json";
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "json, table or csv")
        ->check(CLI::IsMember({"json", "table", "csv"}))
        ->capture_default_str();
  };

  std::string instance;
  MechanismFlags mech;

  auto* solve = app.add_subcommand("solve", "closed-form equilibrium of an instance");
  solve->add_option("instance", instance, "instance JSON file")->required();
  mech.add(solve);
  add_format(solve);

  auto* simulate = app.add_subcommand("simulate", "bot against bot play");
  std::string seats = "equilibrium";
  int random_count = 0;
  pandc::GenOptions gen;
  std::string gen_lo = "-5", gen_hi = "5";
  simulate->add_option("instance", instance, "instance JSON file");
  mech.add(simulate);
  simulate->add_option("--seats", seats, "comma separated policies: equilibrium, naive, adversarial:<eps>, random:<seed>")
      ->capture_default_str();
  simulate->add_option("--random", random_count, "simulate on this many generated instances");
  simulate->add_option("--players", gen.players, "players in generated instances")->capture_default_str();
  simulate->add_option("--options", gen.options, "options in generated instances")->capture_default_str();
  simulate->add_option("--gen-seed", gen.seed, "seed of the first generated instance")->capture_default_str();
  add_format(simulate);

  auto* verify = app.add_subcommand("verify", "brute-force check of an equilibrium claim");
  VerifyFlags vf;
  verify->add_option("instance", instance, "instance JSON file")->required();
  verify->add_option("--claim", vf.claim,
                     "chooser-indifference, proposer-optimality, robust-equilibrium, backward-induction, maskin-monotonicity")
      ->required();
  verify->add_option("--prices", vf.prices, "price vector to check, comma separated (default: closed form)");
  verify->add_option("--epsilon", vf.epsilon, "epsilon for robust or adversarial checks");
  verify->add_option("--step", vf.step, "grid step")->capture_default_str();
  verify->add_option("--radius", vf.radius, "grid radius")->capture_default_str();
  verify->add_option("--budget", vf.budget, "maximum grid points")->capture_default_str();
  verify->add_option("--policy", vf.policy, "chooser policy: cooperative or adversarial")->capture_default_str();
  verify->add_option("--u-prime", vf.u_prime, "second profile for maskin-monotonicity");
  verify->add_option("--claimed", vf.claimed, "published f(u') as option:t1,t2, compared in the report");
  add_format(verify);

  auto* serve = app.add_subcommand("serve", "run the session service");
  std::string serve_config;
  std::string host;
  int port = -1;
  std::string store;
  serve->add_option("--config", serve_config, "server config JSON file");
  serve->add_option("--host", host, "bind address");
  serve->add_option("--port", port, "port");
  serve->add_option("--store", store, "directory for session logs");

  auto* gen_cmd = app.add_subcommand("gen", "random instance");
  pandc::GenOptions g;
  std::string lo = "-5", hi = "5", out_path;
  gen_cmd->add_option("--players,-n", g.players, "players")->capture_default_str();
  gen_cmd->add_option("--options,-k", g.options, "options")->capture_default_str();
  gen_cmd->add_option("--seed", g.seed, "seed")->capture_default_str();
  gen_cmd->add_option("--lo", lo, "lowest utility")->capture_default_str();
  gen_cmd->add_option("--hi", hi, "highest utility")->capture_default_str();
  gen_cmd->add_option("--max-den", g.max_den, "largest denominator")->capture_default_str();
  gen_cmd->add_flag("--unique-efficient", g.unique_efficient, "redraw until one option is efficient");
  gen_cmd->add_option("--output,-o", out_path, "write here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kParse;
  }

  if (verify->parsed()) {
    try {
      return run_verify(instance, vf, format);
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      return kParse;
    }
  }

  try {
    if (solve->parsed()) return run_solve(instance, mech, format);
    if (simulate->parsed()) {
      gen.lo = Rational::parse(gen_lo);
      gen.hi = Rational::parse(gen_hi);
      return run_simulate(instance, mech, seats, random_count, gen, format);
    }
    if (gen_cmd->parsed()) {
      g.lo = Rational::parse(lo);
      g.hi = Rational::parse(hi);
      const auto u = pandc::generate_profile(g);
      if (out_path.empty()) {
        std::cout << pandc::to_json(u).dump(2) << "\n";
      } else {
        pandc::save_profile(u, out_path);
      }
      return kOk;
    }
    if (serve->parsed()) {
      pandc::service::ServerConfig c;
      if (!serve_config.empty()) {
        std::ifstream in(serve_config);
        if (!in) pandc::fail(pandc::ErrorCode::kParseError, "cannot read " + serve_config);
        Json j;
        try {
          in >> j;
        } catch (const Json::exception& e) {
          pandc::fail(pandc::ErrorCode::kParseError, e.what());
        }
        c = pandc::service::server_config_from_json(j);
      }
      if (!host.empty()) c.host = host;
      if (port >= 0) c.port = port;
      if (!store.empty()) c.store_dir = store;
      if (!pandc::service::run_server(c)) {
        std::cerr << "error: cannot listen on " << c.host << ":" << c.port << "\n";
        return kPrecondition;
      }
      return kOk;
    }
  } catch (const pandc::Error& e) {
    std::cerr << "error [" << pandc::error_code_name(e.code()) << "]: " << e.what() << "\n";
    return is_parse_error(e.code()) ? kParse : kPrecondition;
  } catch (const Json::exception& e) {
    std::cerr << "error [parse_error]: " << e.what() << "\n";
    return kParse;
  }
  return kOk;
}
