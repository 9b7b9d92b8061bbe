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


#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <memory>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(PANDC_CLI) + " " + args + " 2>&1";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string data(const char* name) { return std::string(PANDC_DATA) + "/" + name; }

TEST_CASE("solve prints the closed form") {
  const auto r = run("solve --variant pc2 " + data("mirror.json"));
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["star_prices"][0]["prices"] == nlohmann::json::array({"1/1", "0/1", "-1/1"}));
}

TEST_CASE("solve exit codes") {
  const auto big = run("solve --variant pc2-robust --epsilon 1 " + data("mirror.json"));
  CHECK(big.code == 3);
  CHECK(big.out.find("3/4") != std::string::npos);
  CHECK(run("solve " + data("missing.json")).code == 2);
  CHECK(run("solve --variant nope " + data("mirror.json")).code == 2);
  CHECK(run("solve --variant pc2 " + data("mirror3.json")).code == 3);
  const auto flat = run("solve --variant bid-pc " + data("constant.json"));
  CHECK(flat.code == 0);
  CHECK(nlohmann::json::parse(flat.out)["b_star"] == "0/1");
}

TEST_CASE("table and csv output") {
  CHECK(run("solve --format table " + data("mirror.json")).out.find("star_prices[0].prices") !=
        std::string::npos);
  CHECK(run("solve --format csv " + data("mirror.json")).out.rfind("key,value", 0) == 0);
}

TEST_CASE("simulate is deterministic and checks equilibrium outcomes") {
  const std::string args = "simulate --variant bid-pc --random 5 --players 3 --options 3 --gen-seed 4 --seed 9";
  const auto a = run(args);
  const auto b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  const auto j = nlohmann::json::parse(a.out);
  for (const auto& r : j["runs"]) CHECK(r["equilibrium_outcome_check"] == "pass");
  const auto adv = run("simulate --seats naive,adversarial:2 " + data("mirror.json"));
  CHECK(adv.code == 0);
  CHECK(nlohmann::json::parse(adv.out)["allocation"]["option"] == 2);
}

TEST_CASE("verify exit codes") {
  CHECK(run("verify --claim proposer-optimality " + data("mirror.json")).code == 0);
  CHECK(run("verify --claim proposer-optimality --prices 0,0,0 " + data("mirror.json")).code == 1);
  CHECK(run("verify --claim chooser-indifference " + data("mirror.json")).code == 0);
  CHECK(run("verify --claim robust-equilibrium --epsilon 1/2 " + data("mirror.json")).code == 0);
  CHECK(run("verify --claim backward-induction --step 1/4 --radius 1 " + data("mirror3.json")).code == 0);
  const auto maskin = run("verify --claim maskin-monotonicity --u-prime " + data("mirror_prime.json") +
                          " --claimed 0:2/3,-2/3 " + data("mirror.json"));
  CHECK(maskin.code == 1);
  CHECK(maskin.out.find("DISCREPANCY") != std::string::npos);
  CHECK(run("verify --claim proposer-optimality --step 1/1024 --radius 8 --budget 1000 " +
            data("mirror.json")).code == 2);
  CHECK(run("verify --claim nonsense " + data("mirror.json")).code == 2);
}

TEST_CASE("gen") {
  const auto a = run("gen -n 2 -k 3 --seed 7");
  CHECK(a.code == 0);
  CHECK(a.out == run("gen -n 2 -k 3 --seed 7").out);
  CHECK(run("gen -k 1").code == 2);
  CHECK(run("gen --lo 3 --hi 1").code == 2);
  const auto path = std::filesystem::temp_directory_path() / "pandc_gen_test.json";
  CHECK(run("gen -n 3 -k 4 --seed 1 --unique-efficient -o " + path.string()).code == 0);
  CHECK(run("solve --variant pc-n " + path.string()).code == 0);
  std::filesystem::remove(path);
}

}  // namespace
