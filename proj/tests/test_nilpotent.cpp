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

#include <cmath>
#include <random>
#include <vector>

#include "oracles.hpp"
#include "zenon/errors.hpp"
#include "zenon/nilpotent.hpp"

using namespace zenon;
using nilpotent::Dual;
using nilpotent::DualF;
using Poly = nilpotent::Polynomial<BigRational>;

namespace {

BigRational random_rational(std::mt19937_64& rng, long bound = 40, long max_den = 12) {
  return make_rational(std::uniform_int_distribution<long>(-bound, bound)(rng),
                       std::uniform_int_distribution<long>(1, max_den)(rng));
}

}  // namespace

TEST_CASE("add") {
  CHECK(Dual(1, 2) + Dual(3, 4) == Dual(4, 6));
  CHECK(Dual(BigRational(1, 3), 7) + Dual(0, 0) == Dual(BigRational(1, 3), 7));
  CHECK(nilpotent::add(Dual(1, 1), Dual(-1, -1)) == Dual(0, 0));
}

TEST_CASE("mul") {
  CHECK(nilpotent::mul(Dual(0, 1), Dual(0, 1)) == Dual(0, 0));
  CHECK(Dual(BigRational(5, 7), -2) * Dual(1, 0) == Dual(BigRational(5, 7), -2));
  // (2 + 3h)(4 + 5h) = 8 + 10h + 12h + 15h^2
  CHECK(Dual(2, 3) * Dual(4, 5) == Dual(8, 22));
}

TEST_CASE("div") {
  CHECK(nilpotent::div(Dual(1, 0), Dual(2, 0)) == Dual(BigRational(1, 2), 0));
  CHECK(nilpotent::div(Dual(8, 22), Dual(4, 5)) == Dual(2, 3));
  CHECK_THROWS_AS(nilpotent::div(Dual(1, 0), Dual(0, 1)), ZeroDivisorError);
  CHECK_THROWS_AS(nilpotent::div(Dual(0, 1), Dual(0, 0)), ZeroDivisorError);
  // Any nonzero real part works even when the h-coefficient vanishes.
  CHECK(nilpotent::div(Dual(3, 1), Dual(3, 0)) == Dual(1, BigRational(1, 3)));
}

TEST_CASE("lex_le and embed") {
  CHECK(nilpotent::lex_le(Dual(1, 100), Dual(2, 0)));
  CHECK(nilpotent::lex_le(Dual(1, 0), Dual(1, 1)));
  CHECK_FALSE(nilpotent::lex_le(Dual(0, 1), Dual(0, 0)));
  CHECK(nilpotent::embed(BigRational(0)) == Dual(0, 0));
  CHECK(nilpotent::embed(BigRational(2)) == Dual(2, 0));
  CHECK(nilpotent::lex_lt(nilpotent::embed(BigRational(1)), nilpotent::embed(BigRational(2))));
  // An infinitesimal sits strictly between 0 and every positive real.
  CHECK(nilpotent::lex_lt(Dual(0, 0), Dual(0, 1)));
  CHECK(nilpotent::lex_lt(Dual(0, 1000), nilpotent::embed(BigRational(1, 1000000))));
}

TEST_CASE("eval_dual gives value and derivative") {
  const Poly square({0, 0, 1});
  CHECK(nilpotent::eval_dual(square, Dual(3, 1)) == Dual(9, 6));

  const Poly constant({BigRational(7, 2)});
  CHECK(nilpotent::eval_dual(constant, Dual(5, 1)) == Dual(BigRational(7, 2), 0));
  CHECK(nilpotent::eval_dual(constant, Dual(-1, 9)) == Dual(BigRational(7, 2), 0));

  const Poly cubic({0, -2, 0, 1});
  CHECK(nilpotent::eval_dual(cubic, Dual(2, 1)) == Dual(4, 10));
  const std::vector<BigRational> c{0, -2, 0, 1};
  CHECK(oracle::poly_value(c, BigRational(2)) == 4);
  CHECK(oracle::poly_derivative(c, BigRational(2)) == 10);

  CHECK(Poly({1, 2, 0, 0}).degree() == 1);
  CHECK(Poly({0, 0}).degree() == -1);
  CHECK(nilpotent::eval_dual(Poly(), Dual(3, 1)) == Dual(0, 0));
}

TEST_CASE("derivative matches the power-rule oracle exactly") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> degree(0, 6);
  for (int i = 0; i < 60; ++i) {
    std::vector<BigRational> c(static_cast<std::size_t>(degree(rng)) + 1);
    for (auto& q : c) q = random_rational(rng, 9, 6);
    const Poly p(c);
    for (int j = 0; j < 10; ++j) {
      const auto a = random_rational(rng, 6, 5);
      const auto out = nilpotent::eval_dual(p, nilpotent::variable(a));
      CHECK(out.a == oracle::poly_value(c, a));
      CHECK(out.b == oracle::poly_derivative(c, a));
      // Seeding with (a, v) scales the derivative by v.
      const auto scaled = nilpotent::eval_dual(p, Dual(a, 3));
      CHECK(scaled.b == 3 * out.b);
    }
  }
}

TEST_CASE("floating backend matches central differences") {
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> coeff(-3, 3), point(-2, 2);
  for (int i = 0; i < 50; ++i) {
    std::vector<double> c(7);
    for (auto& v : c) v = coeff(rng);
    const nilpotent::Polynomial<double> p(c);
    const double a = point(rng);
    const double fd = oracle::central_difference([&](double x) { return p(x); }, a);
    const double ad = nilpotent::eval_dual(p, DualF(a, 1.0)).b;
    CHECK(std::abs(ad - fd) <= 1e-5 * std::max(1.0, std::abs(fd)));
  }
}

TEST_CASE("product rule and linearity") {
  const Poly p({1, BigRational(-1, 2), 3});
  const Poly q({0, 2, 0, BigRational(1, 3)});
  const BigRational a(5, 4);
  const auto lhs = nilpotent::eval_dual(p * q, nilpotent::variable(a)).b;
  CHECK(lhs == p(a) * q.derivative()(a) + p.derivative()(a) * q(a));
}

TEST_CASE("ring laws over random triples") {
  std::mt19937_64 rng(2024);
  const Dual zero(0, 0), one(1, 0);
  for (int i = 0; i < 1000; ++i) {
    const Dual x(random_rational(rng), random_rational(rng));
    const Dual y(random_rational(rng), random_rational(rng));
    const Dual z(random_rational(rng), random_rational(rng));
    REQUIRE((x + y) + z == x + (y + z));
    REQUIRE((x * y) * z == x * (y * z));
    REQUIRE(x + y == y + x);
    REQUIRE(x * y == y * x);
    REQUIRE(x * (y + z) == x * y + x * z);
    REQUIRE(x + zero == x);
    REQUIRE(x * one == x);
    REQUIRE(x + (-x) == zero);
    REQUIRE(Dual(0, x.b) * Dual(0, y.b) == zero);
    if (y.a != 0) REQUIRE(nilpotent::div(x, y) * y == x);
  }
}

TEST_CASE("lex order is total and embed is an order embedding") {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 500; ++i) {
    const Dual x(random_rational(rng, 2, 1), random_rational(rng, 2, 1));
    const Dual y(random_rational(rng, 2, 1), random_rational(rng, 2, 1));
    const Dual z(random_rational(rng, 2, 1), random_rational(rng, 2, 1));
    CHECK(nilpotent::lex_le(x, x));
    CHECK((nilpotent::lex_le(x, y) || nilpotent::lex_le(y, x)));
    if (nilpotent::lex_le(x, y) && nilpotent::lex_le(y, x)) CHECK(x == y);
    if (nilpotent::lex_le(x, y) && nilpotent::lex_le(y, z)) CHECK(nilpotent::lex_le(x, z));

    const auto r = random_rational(rng), s = random_rational(rng);
    CHECK((r < s) == nilpotent::lex_lt(nilpotent::embed(r), nilpotent::embed(s)));
  }
}

TEST_CASE("worldlines and boosts") {
  CHECK(nilpotent::worldline_position(Dual(3, 2), 0) == 3);
  CHECK(nilpotent::worldline_position(Dual(3, 2), 5) == 13);
  CHECK(nilpotent::worldline_position(Dual(0, 0), BigRational(7, 3)) == 0);

  CHECK(nilpotent::boost(Dual(3, 2), {5}) == Dual(3, 7));
  CHECK(nilpotent::boost(Dual(3, 2), {0}) == Dual(3, 2));

  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    const Dual d(random_rational(rng), random_rational(rng));
    const nilpotent::GalileanBoost v{random_rational(rng)}, w{random_rational(rng)};
    const auto t = random_rational(rng);
    CHECK(nilpotent::worldline_position(nilpotent::boost(d, w), t) ==
          nilpotent::worldline_position(d, t) + w.w * t);
    CHECK(nilpotent::boost(nilpotent::boost(d, v), w) == nilpotent::boost(d, v.compose(w)));
    CHECK(nilpotent::boost(nilpotent::boost(d, w), w.inverse()) == d);
  }
}

TEST_CASE("text forms") {
  CHECK(nilpotent::to_string(Dual(0, 0)) == "0 + 0·h");
  CHECK(nilpotent::to_string(Dual(BigRational(1, 2), -3)) == "1/2 + -3·h");
  CHECK(nilpotent::parse_dual("1/2,-3") == Dual(BigRational(1, 2), -3));
  CHECK_THROWS_AS(nilpotent::parse_dual("1"), ParseError);
  CHECK_THROWS_AS(nilpotent::parse_dual("1,2,3"), ParseError);
  CHECK_THROWS_AS(nilpotent::parse_dual("1,x"), ParseError);
  CHECK(nilpotent::parse_polynomial("0,-2,0,1") == Poly({0, -2, 0, 1}));
  CHECK_THROWS_AS(nilpotent::parse_polynomial("1,,2"), ParseError);
}
