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

// Exercises the exported C interface only.

#include <doctest.h>

#include <cstring>
#include <string>
#include <vector>

#include "zenon/zenon.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  zn_string_free(s);
  return out;
}

std::string rational_text(zn_rational* q) {
  char* out = nullptr;
  REQUIRE(zn_rational_to_string(q, &out) == ZN_OK);
  zn_rational_free(q);
  return take(out);
}

zn_rational* rational(const char* text) {
  zn_rational* q = nullptr;
  REQUIRE(zn_rational_parse(text, &q) == ZN_OK);
  return q;
}

zn_seq* seq(const char* text) {
  zn_seq* x = nullptr;
  REQUIRE(zn_seq_parse(text, &x) == ZN_OK);
  return x;
}

std::string seq_text(zn_seq* x) {
  char* out = nullptr;
  REQUIRE(zn_seq_to_string(x, &out) == ZN_OK);
  zn_seq_free(x);
  return take(out);
}

zn_dual* dual(const char* text) {
  zn_dual* d = nullptr;
  REQUIRE(zn_dual_parse(text, &d) == ZN_OK);
  return d;
}

std::string dual_text(zn_dual* d) {
  char* out = nullptr;
  REQUIRE(zn_dual_render(d, ZN_FORMAT_PLAIN, &out) == ZN_OK);
  zn_dual_free(d);
  return take(out);
}

}  // namespace

TEST_CASE("status codes and error messages") {
  zn_rational* q = nullptr;
  CHECK(zn_rational_parse("1/0", &q) == ZN_E_PARSE);
  CHECK(q == nullptr);
  CHECK(std::strlen(zn_last_error()) > 0);
  CHECK(zn_rational_parse(nullptr, &q) == ZN_E_NULL_ARGUMENT);
  CHECK(zn_rational_parse("1", nullptr) == ZN_E_NULL_ARGUMENT);
  CHECK(std::string(zn_status_name(ZN_E_ZERO_DIVISOR)) == "zero_divisor");

  CHECK(rational_text(rational("10/4")) == "5/2");
  CHECK(std::string(zn_last_error()).empty());

  zn_format f{};
  CHECK(zn_format_parse("csv", &f) == ZN_OK);
  CHECK(f == ZN_FORMAT_CSV);
  CHECK(zn_format_parse("yaml", &f) == ZN_E_PARSE);
  zn_rational_free(nullptr);
  zn_seq_free(nullptr);
}

TEST_CASE("divider surface") {
  char* partitions = nullptr;
  char* parts = nullptr;
  REQUIRE(zn_tree_count_values(20, &partitions, &parts) == ZN_OK);
  CHECK(take(partitions) == "1048575");
  CHECK(take(parts) == "1048576");

  zn_rational* lo = nullptr;
  zn_rational* hi = nullptr;
  REQUIRE(zn_leaf_interval("101", &lo, &hi) == ZN_OK);
  CHECK(rational_text(lo) == "5/8");
  CHECK(rational_text(hi) == "3/4");

  zn_rational* mid = nullptr;
  REQUIRE(zn_division_point("00", &mid) == ZN_OK);
  CHECK(rational_text(mid) == "1/8");
  CHECK(zn_division_point("0x", &mid) == ZN_E_PARSE);

  char* out = nullptr;
  REQUIRE(zn_tree_expand(1, ZN_FORMAT_CSV, &out) == ZN_OK);
  CHECK(take(out) == "label,lower,upper\n0,0,1/2\n1,1/2,1\n");
}

TEST_CASE("sequence surface") {
  zn_ordering ord{};
  zn_seq* d = seq("0:(1)");
  zn_seq* d2 = seq("1:(0)");
  REQUIRE(zn_seq_compare(d, d2, &ord) == ZN_OK);
  CHECK(ord == ZN_LESS);

  zn_rational* v = nullptr;
  REQUIRE(zn_seq_value(d, &v) == ZN_OK);
  CHECK(rational_text(v) == "1/2");

  zn_class cls{};
  REQUIRE(zn_seq_classify(d, &cls) == ZN_OK);
  CHECK(cls == ZN_CLASS_B);

  zn_seq* c = nullptr;
  REQUIRE(zn_seq_canonical(d, &c) == ZN_OK);
  CHECK(seq_text(c) == "1:(0)");

  zn_seq* zero = seq(":(0)");
  zn_seq* m = nullptr;
  REQUIRE(zn_seq_density_witness(zero, d2, &m) == ZN_OK);
  CHECK(seq_text(m) == "01:(0)");
  CHECK(zn_seq_density_witness(d, d2, &m) == ZN_E_PRECONDITION);

  zn_seq* lower = nullptr;
  zn_seq* upper = nullptr;
  REQUIRE(zn_seq_dyadic_pair("3", 2, &lower, &upper) == ZN_OK);
  CHECK(zn_seq_dyadic_pair("4", 2, &lower, &upper) == ZN_E_PRECONDITION);
  CHECK(zn_seq_dyadic_pair("x", 2, &lower, &upper) == ZN_E_PARSE);

  zn_seq** family = nullptr;
  std::size_t count = 0;
  REQUIRE(zn_seq_enumerate(5, &family, &count) == ZN_OK);
  CHECK(count > 100);
  int gap = 0;
  REQUIRE(zn_seq_gap_check(lower, upper, family, count, &gap) == ZN_OK);
  CHECK(gap == 1);
  // Not a double pair: rejected rather than silently answered.
  CHECK(zn_seq_gap_check(zero, upper, family, count, &gap) == ZN_E_PRECONDITION);
  REQUIRE(zn_seq_gap_check(lower, upper, nullptr, 0, &gap) == ZN_OK);
  CHECK(gap == 1);
  zn_seq_array_free(family, count);

  zn_rational* q = rational("3/8");
  zn_seq* expansion = nullptr;
  REQUIRE(zn_seq_from_rational(q, &expansion) == ZN_OK);
  CHECK(seq_text(expansion) == "011:(0)");
  zn_rational_free(q);

  std::vector<zn_rational*> grams{rational("10"), rational("11"), rational("12")};
  zn_rational* eps = rational("3/2");
  char* out = nullptr;
  REQUIRE(zn_poincare_chain(eps, grams.data(), grams.size(), ZN_FORMAT_JSON, &out) == ZN_OK);
  CHECK(take(out).find("\"intransitive\": true") != std::string::npos);
  for (auto* g : grams) zn_rational_free(g);
  zn_rational_free(eps);

  for (auto* s : {d, d2, zero, lower, upper}) zn_seq_free(s);
}

TEST_CASE("dual surface") {
  zn_dual* h = dual("0,1");
  zn_dual* out = nullptr;
  REQUIRE(zn_dual_mul(h, h, &out) == ZN_OK);
  CHECK(dual_text(out) == "0 + 0·h\n");

  zn_dual* x = dual("8,22");
  zn_dual* y = dual("4,5");
  REQUIRE(zn_dual_div(x, y, &out) == ZN_OK);
  CHECK(dual_text(out) == "2 + 3·h\n");
  REQUIRE(zn_dual_add(x, y, &out) == ZN_OK);
  CHECK(dual_text(out) == "12 + 27·h\n");
  CHECK(zn_dual_div(x, h, &out) == ZN_E_ZERO_DIVISOR);

  int le = 0;
  REQUIRE(zn_dual_lex_le(h, y, &le) == ZN_OK);
  CHECK(le == 1);

  zn_poly* p = nullptr;
  REQUIRE(zn_poly_parse("0,-2,0,1", &p) == ZN_OK);
  zn_dual* at = dual("2,1");
  REQUIRE(zn_poly_eval_dual(p, at, &out) == ZN_OK);
  CHECK(dual_text(out) == "4 + 10·h\n");

  zn_dual* world = dual("3,2");
  zn_rational* w = rational("5");
  REQUIRE(zn_dual_boost(world, w, &out) == ZN_OK);
  CHECK(dual_text(out) == "3 + 7·h\n");
  zn_rational* pos = nullptr;
  REQUIRE(zn_dual_worldline(world, w, &pos) == ZN_OK);
  CHECK(rational_text(pos) == "13");

  zn_dual* e = nullptr;
  REQUIRE(zn_dual_embed(w, &e) == ZN_OK);
  zn_rational* a = nullptr;
  zn_rational* b = nullptr;
  REQUIRE(zn_dual_parts(e, &a, &b) == ZN_OK);
  CHECK(rational_text(a) == "5");
  CHECK(rational_text(b) == "0");

  zn_rational_free(w);
  zn_poly_free(p);
  for (auto* d : {h, x, y, at, world, e}) zn_dual_free(d);
  CHECK(zn_dual_parse("1;2", &out) == ZN_E_PARSE);
}

TEST_CASE("paradox surface") {
  char* out = nullptr;
  REQUIRE(zn_paradox_dichotomy(3, ZN_FORMAT_JSON, &out) == ZN_OK);
  CHECK(take(out).find("\"cumulative\": \"7/8\"") != std::string::npos);
  CHECK(zn_paradox_dichotomy(0, ZN_FORMAT_JSON, &out) == ZN_E_PRECONDITION);

  zn_rational* one = rational("1");
  zn_rational* ten = rational("10");
  zn_rational* hundred = rational("100");
  CHECK(zn_paradox_achilles(one, one, 1, ZN_FORMAT_JSON, &out) == ZN_E_NEVER_CLOSES);
  REQUIRE(zn_paradox_achilles(ten, hundred, 3, ZN_FORMAT_JSON, &out) == ZN_OK);
  CHECK(take(out).find("\"limit\": \"1000/9\"") != std::string::npos);
  for (auto* q : {one, ten, hundred}) zn_rational_free(q);

  REQUIRE(zn_paradox_stadium(4, 3, ZN_FORMAT_JSON, &out) == ZN_OK);
  CHECK(take(out).find("\"passings_bc\": 6") != std::string::npos);
  CHECK(zn_paradox_stadium(4, 0, ZN_FORMAT_JSON, &out) == ZN_E_PRECONDITION);

  REQUIRE(zn_paradox_arrow(10, ZN_FORMAT_CSV, &out) == ZN_OK);
  CHECK(take(out) == "depth,width,count,product\n10,1/1024,1024,1\n");
}

TEST_CASE("check suite through the C interface") {
  char* out = nullptr;
  int passed = 0;
  REQUIRE(zn_check_run(ZN_FORMAT_JSON, &out, &passed) == ZN_OK);
  CHECK(passed == 1);
  CHECK(take(out).find("\"passed\": true") != std::string::npos);
  CHECK(zn_check_run(ZN_FORMAT_JSON, &out, nullptr) == ZN_E_NULL_ARGUMENT);
}
