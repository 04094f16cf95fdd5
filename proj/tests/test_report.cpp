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

#include <json.hpp>

#include "zenon/errors.hpp"
#include "zenon/report.hpp"

using namespace zenon;
using report::OutputFormat;
using nlohmann::json;

TEST_CASE("format names") {
  CHECK(report::parse_format("json") == OutputFormat::Json);
  CHECK(report::parse_format("csv") == OutputFormat::Csv);
  CHECK(report::parse_format("plain") == OutputFormat::Plain);
  CHECK_THROWS_AS(report::parse_format("xml"), ParseError);
}

TEST_CASE("leaves as json") {
  const auto j = json::parse(report::render_leaves(divider::expand(2), OutputFormat::Json));
  REQUIRE(j.size() == 4);
  CHECK(j[2] == json{{"label", "10"}, {"lower", "1/2"}, {"upper", "3/4"}});
  CHECK(report::render_leaves(divider::expand(1), OutputFormat::Csv) ==
        "label,lower,upper\n0,0,1/2\n1,1/2,1\n");
}

TEST_CASE("json keys are sorted") {
  const auto text = report::render(paradoxes::dichotomy(2), OutputFormat::Json);
  const auto keys = {"\"cumulative\"", "\"depth\"", "\"paradox\"", "\"partitions\"",
                     "\"parts\"", "\"remaining\"", "\"steps\""};
  std::size_t at = 0;
  for (const auto* key : keys) {
    const auto pos = text.find(key);
    REQUIRE(pos != std::string::npos);
    CHECK(pos >= at);
    at = pos;
  }
  CHECK(json::parse(text)["cumulative"] == "3/4");
}

TEST_CASE("dual renderings") {
  const nilpotent::Dual d(BigRational(1, 2), -3);
  CHECK(report::render(d, OutputFormat::Plain) == "1/2 + -3·h\n");
  CHECK(json::parse(report::render(d, OutputFormat::Json)) == json{{"a", "1/2"}, {"b", "-3"}});
  CHECK(report::render(d, OutputFormat::Csv) == "a,b\n1/2,-3\n");
}

TEST_CASE("plain tables are aligned") {
  const auto text = report::render(paradoxes::achilles(10, 100, 3), OutputFormat::Plain);
  CHECK(text.rfind("index  point    gap_to_limit\n", 0) == 0);
  CHECK(text.find("3      1111/10  1/90\n") != std::string::npos);
  CHECK(text.find("limit  1000/9   0\n") != std::string::npos);
}

TEST_CASE("stadium and arrow") {
  const auto s = json::parse(report::render(paradoxes::stadium(4, 3), OutputFormat::Json));
  CHECK(s["passings_bc"] == 6);
  CHECK(s["passings_ba"] == 3);
  CHECK(s["ratio"] == "2");
  CHECK(report::render(paradoxes::arrow(3), OutputFormat::Csv) ==
        "depth,width,count,product\n3,1/8,8,1\n");
}

TEST_CASE("poincare report") {
  const std::vector<BigRational> grams{10, 11, 12};
  const auto j = json::parse(
      report::render(philebian::poincare_chain(BigRational(3, 2), grams), OutputFormat::Json));
  CHECK(j["intransitive"] == true);
  CHECK(j["witnesses"] == json::array({json::array({"10", "11", "12"})}));
  CHECK(j["distinguishable"] == json::array({json::array({"10", "12"})}));
}

TEST_CASE("csv quoting") {
  const std::vector<check::Result> results{{"g", "n", true, "a, b"}};
  CHECK(report::render(results, OutputFormat::Csv) == "status,check,detail\nPASS,g.n,\"a, b\"\n");
}
