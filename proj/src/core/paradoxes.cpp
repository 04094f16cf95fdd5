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

#include "zenon/paradoxes.hpp"

#include "zenon/errors.hpp"

namespace zenon::paradoxes {

DichotomyReport dichotomy(std::uint64_t n) {
  if (n < 1) throw PreconditionError("dichotomy needs n >= 1");
  DichotomyReport report{n, {}, 0, 1, BigInt(static_cast<unsigned long>(n)), pow2(n)};
  report.steps.reserve(n);
  BigRational step = 1;
  for (std::uint64_t i = 0; i < n; ++i) {
    step /= 2;
    report.steps.push_back(step);
    report.cumulative += step;
    report.remaining -= step;
  }
  return report;
}

AchillesReport achilles(const BigRational& r, const BigRational& s, std::uint64_t k) {
  if (r <= 1) {
    throw NonClosingPursuitError("speed ratio r <= 1: the pursuer never closes the gap");
  }
  if (s <= 0) throw PreconditionError("head start must be positive");
  if (k < 1) throw PreconditionError("achilles needs k >= 1");

  AchillesReport report{r, s, {}, 0};
  report.points.reserve(k + 1);
  BigRational leg = s;
  BigRational at = s;
  report.points.push_back(at);
  for (std::uint64_t i = 1; i <= k; ++i) {
    leg /= r;
    at += leg;
    report.points.push_back(at);
  }
  report.limit = s * r / (r - 1);
  return report;
}

BigRational achilles_point(const BigRational& r, const BigRational& s, std::uint64_t i) {
  const BigRational inv = 1 / r;
  return s * (1 - pow(inv, static_cast<std::int64_t>(i + 1))) / (1 - inv);
}

StadiumReport stadium(std::uint64_t n, std::uint64_t k) {
  if (n < 1) throw PreconditionError("stadium needs at least one body per row");
  if (k < 1) throw PreconditionError("stadium needs k >= 1 ticks");

  // Coordinates in half body lengths on a track of length 2N. Body j of every
  // row starts at 2j; the lead B body is body 0.
  const auto track = static_cast<std::int64_t>(2 * n);
  auto wrap = [track](std::int64_t x) { return ((x % track) + track) % track; };

  StadiumReport report{{n, 0, 0, 0, 0}, {}, 0, 0, 0};
  std::int64_t b_lead = 0;
  std::int64_t c_shift = 0;
  for (std::uint64_t tick = 1; tick <= k; ++tick) {
    // Per half tick, B advances one half length against A and C retreats one.
    for (int half = 0; half < 2; ++half) {
      ++b_lead;
      --c_shift;
      for (std::uint64_t j = 0; j < n; ++j) {
        const auto home = static_cast<std::int64_t>(2 * j);
        if (wrap(home + c_shift) == wrap(b_lead)) ++report.passings_bc;
        if (wrap(home) == wrap(b_lead)) ++report.passings_ba;
      }
    }
    const StadiumState state{n, tick, 0, static_cast<std::int64_t>(tick),
                             -static_cast<std::int64_t>(tick)};
    report.history.push_back({state, report.passings_bc, report.passings_ba});
  }
  report.state = report.history.back().state;
  report.ratio = BigRational(static_cast<unsigned long>(report.passings_bc),
                             static_cast<unsigned long>(report.passings_ba));
  report.ratio.canonicalize();
  return report;
}

ArrowReport arrow(std::uint64_t n) {
  ArrowReport report{n, inv_pow2(n), pow2(n), 0};
  report.product = report.width * BigRational(report.count);
  return report;
}

}  // namespace zenon::paradoxes
