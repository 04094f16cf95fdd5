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

#ifndef ZENON_PARADOXES_HPP_
#define ZENON_PARADOXES_HPP_

#include <cstdint>
#include <vector>

#include "zenon/rational.hpp"

namespace zenon::paradoxes {

/// Halving the course n times, counted both stepwise (one partition per
/// step) and simultaneously (2^n parts).
struct DichotomyReport {
  std::uint64_t depth;
  std::vector<BigRational> steps;  // 1/2, 1/4, ..., 2^-n
  BigRational cumulative;          // 1 - 2^-n
  BigRational remaining;           // 2^-n
  BigInt partitions;               // n
  BigInt parts;                    // 2^n
};

/// Requires n >= 1.
DichotomyReport dichotomy(std::uint64_t n);

struct AchillesReport {
  BigRational ratio;                // pursuer speed / pursued speed
  BigRational head_start;
  std::vector<BigRational> points;  // p_0 = s, p_i = p_{i-1} + s r^-i
  BigRational limit;                // s r / (r - 1)
};

/// Catch-up points p_0..p_k by iterated addition. Throws
/// NonClosingPursuitError for r <= 1 and PreconditionError for s <= 0 or
/// k == 0.
AchillesReport achilles(const BigRational& r, const BigRational& s, std::uint64_t k);

/// s (1 - r^-(i+1)) / (1 - r^-1): the closed form of the i-th catch-up point.
BigRational achilles_point(const BigRational& r, const BigRational& s, std::uint64_t i);

/// Positions of the three rows after a number of ticks, in body lengths.
/// A stands still, B moves +1 per tick, C moves -1 per tick.
struct StadiumState {
  std::uint64_t rows;
  std::uint64_t ticks;
  std::int64_t offset_a;
  std::int64_t offset_b;
  std::int64_t offset_c;
};

/// Cumulative passing counts after a given tick.
struct StadiumTick {
  StadiumState state;
  std::uint64_t passings_bc;
  std::uint64_t passings_ba;
};

struct StadiumReport {
  StadiumState state;
  std::vector<StadiumTick> history;   // one entry per tick, 1..k
  std::uint64_t passings_bc;          // C bodies passed by the lead B body
  std::uint64_t passings_ba;          // A bodies passed by the lead B body
  BigRational ratio;                  // passings_bc / passings_ba
};

/// Simulates the rows on a closed track of N unit bodies each, moving in
/// half-tick steps and counting every coincidence of the lead B body with a
/// body of the other row. Requires N >= 1, k >= 1.
StadiumReport stadium(std::uint64_t n, std::uint64_t k);

/// Count x width of the parts of generation n.
struct ArrowReport {
  std::uint64_t depth;
  BigRational width;
  BigInt count;
  BigRational product;
};

ArrowReport arrow(std::uint64_t n);

}  // namespace zenon::paradoxes

#endif  // ZENON_PARADOXES_HPP_
