// Copyright 2026 The Zenon Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>
#include <unistd.h>

#include <json.hpp>

#include "process.hpp"

namespace {

testing::Outcome cli(const std::string& args) { return testing::run(ZENON_CLI_PATH, args); }

}  // namespace

TEST_CASE("documented examples") {
  const auto d = cli("paradox dichotomy --n 3 --format json");
  REQUIRE(d.exit_code == 0);
  CHECK(nlohmann::json::parse(d.out)["cumulative"] == "7/8");

  const auto m = cli("dual mul --x 0,1 --y 0,1");
  CHECK(m.exit_code == 0);
  CHECK(m.out == "0 + 0·h\n");

  const auto v = cli("seq value --seq ':(10)'");
  CHECK(v.exit_code == 0);
  CHECK(v.out == "2/3\n");
}

TEST_CASE("every subcommand answers") {
  struct Case {
    const char* args;
    const char* expect;
  };
  const Case cases[] = {
      {"tree counts --n 3 --format csv", "depth,partitions,parts\n3,7,8\n"},
      {"tree interval --word 101 --format csv", "label,lower,upper,division_point\n101,5/8,3/4,11/16\n"},
      {"tree expand --n 1 --format csv", "label,lower,upper\n0,0,1/2\n1,1/2,1\n"},
      {"seq compare --x '0:(1)' --y '1:(0)'", "less\n"},
      {"seq canon --seq '0:(1)'", "1:(0)\n"},
      {"seq classify --seq '0:(1)'", "B\n"},
      {"seq witness --x ':(0)' --y '1:(0)'", "01:(0)\n"},
      {"seq pair --k 1 --n 3 --format csv", "lower,upper,value\n000:(1),001:(0),1/8\n"},
      {"seq gap --k 1 --n 1 --enumerate 6", "true\n"},
      {"seq gap --k 3 --n 2 --candidate ':(10)' --candidate '1:(0)'", "true\n"},
      {"dual add --x 1,2 --y 3,4", "4 + 6·h\n"},
      {"dual div --x 8,22 --y 4,5", "2 + 3·h\n"},
      {"dual eval --poly 0,0,1 --x 3,1", "9 + 6·h\n"},
      {"dual boost --x 3,2 --w 5", "3 + 7·h\n"},
      {"dual worldline --x 3,2 --t 5", "13\n"},
      {"dual mul --x 2,3 --y 4,5 --format json", "{\n  \"a\": \"8\",\n  \"b\": \"22\"\n}\n"},
      {"paradox arrow --n 10 --format csv", "depth,width,count,product\n10,1/1024,1024,1\n"},
      {"paradox --which arrow --n 0 --format csv", "depth,width,count,product\n0,1,1,1\n"},
      {"paradox stadium --N 4 --k 1 --format csv",
       "tick,offset_a,offset_b,offset_c,passings_bc,passings_ba\n1,0,1,-1,2,1\n"},
  };
  for (const auto& c : cases) {
    CAPTURE(c.args);
    const auto r = cli(c.args);
    CHECK(r.exit_code == 0);
    CHECK(r.out == c.expect);
  }

  const auto a = nlohmann::json::parse(cli("paradox achilles --r 10 --s 100 --k 3").out);
  CHECK(a["limit"] == "1000/9");
  CHECK(a["points"] == nlohmann::json::array({"100", "110", "111", "1111/10"}));

  const auto p = nlohmann::json::parse(cli("seq poincare --epsilon 3/2 --values 10,11,12").out);
  CHECK(p["intransitive"] == true);
}

TEST_CASE("usage errors exit 2 with a message on stderr") {
  for (const char* args : {"", "bogus", "tree", "dual mul --x 1/0,1 --y 0,1",
                           "seq value --seq 101", "paradox dichotomy", "tree counts --n x",
                           "paradox --which dichotomy --n 3 arrow", "dual add --x 1,2",
                           "paradox dichotomy --n 3 --format xml", "tree expand --n 30"}) {
    CAPTURE(args);
    const auto r = cli(args);
    CHECK(r.exit_code == 2);
    CHECK(r.out.empty());
    CHECK_FALSE(r.err.empty());
  }
}

TEST_CASE("domain errors exit 1 with structured JSON") {
  const auto r = cli("dual div --x 1,0 --y 0,1");
  CHECK(r.exit_code == 1);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["error"]["code"] == "zero_divisor");

  CHECK(nlohmann::json::parse(cli("paradox achilles --r 1 --s 1 --k 1").out)["error"]["code"] ==
        "pursuit_never_closes");
  CHECK(cli("paradox stadium --N 4 --k 0").exit_code == 1);
  CHECK(cli("seq witness --x ':(10)' --y ':(10)'").exit_code == 1);
}

TEST_CASE("output is byte-identical across runs") {
  for (const char* args : {"check", "check --format json", "paradox dichotomy --n 20 --format plain",
                           "tree expand --n 6", "seq gap --k 5 --n 3 --enumerate 5 --format json"}) {
    CAPTURE(args);
    const auto first = cli(args);
    CHECK(first.exit_code == 0);
    CHECK(cli(args).out == first.out);
  }
}
