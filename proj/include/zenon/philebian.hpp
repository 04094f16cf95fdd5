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

#ifndef ZENON_PHILEBIAN_HPP_
#define ZENON_PHILEBIAN_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "zenon/bitword.hpp"
#include "zenon/rational.hpp"

namespace zenon::philebian {

/// An eventually periodic element of {0,1}^N: a finite prefix followed by a
/// period repeated forever.
///
/// Always held in normal form: the period is primitive (not a power of a
/// shorter word) and the prefix is as short as possible, i.e. its last bit
/// differs from the last bit of the period. Two sequences are equal as
/// infinite words iff their normal forms are identical, so equality is
/// structural.
class Seq {
 public:
  /// Throws PreconditionError when the period is empty.
  Seq(BitWord prefix, BitWord period);

  /// "prefix:(period)", e.g. "10:(1)" or ":(10)".
  static Seq parse(std::string_view text);

  /// Binary expansion of q in [0, 1) by long division. Never ends in an
  /// all-ones tail. q = 1 yields the all-ones sequence, its only expansion.
  static Seq from_rational(const BigRational& q);

  const BitWord& prefix() const noexcept { return prefix_; }
  const BitWord& period() const noexcept { return period_; }

  /// k-th digit, k >= 0.
  std::uint8_t bit(std::uint64_t k) const;

  std::string str() const;

  friend bool operator==(const Seq&, const Seq&) = default;

 private:
  BitWord prefix_;
  BitWord period_;
};

enum class Ordering { Less, Equal, Greater };

/// Membership in A (no all-ones tail) or B (all-ones tail).
enum class Class { A, B };

/// First-difference order. Terminates after max(prefix lengths) + lcm(period
/// lengths) digits, past which both sequences repeat in lockstep.
Ordering lex_compare(const Seq& x, const Seq& y);

/// Sum of bit(k) 2^-(k+1) in closed form.
BigRational value(const Seq& x);

/// B iff the period is "1".
Class classify(const Seq& x);

/// Replaces an all-ones tail w0(1) by the equal-valued w1(0); other
/// sequences are returned unchanged. The all-ones sequence (value 1) has no
/// second expansion and is also returned unchanged.
Seq canonical_choice(const Seq& x);

/// The two expansions w0(1) < w1(0) of one dyadic rational.
struct DoublePair {
  Seq lower;
  Seq upper;
};

/// Double pair of k / 2^n. k is reduced first; requires 0 < k < 2^n.
DoublePair dyadic_pair(const BigInt& k, std::uint64_t n);

/// True iff x != y and {x, y} are the two expansions of one dyadic rational.
bool is_double_pair(const Seq& x, const Seq& y);

/// A sequence of class A strictly between x and y. Requires x, y in A and
/// x < y.
Seq density_witness(const Seq& x, const Seq& y);

/// True iff no candidate lies strictly between pair.lower and pair.upper.
bool gap_check(const DoublePair& pair, std::span<const Seq> candidates);

/// Every sequence with a prefix of at most max_prefix bits followed by one
/// of the given periods, normalized and deduplicated, in lexicographic order.
std::vector<Seq> enumerate(std::size_t max_prefix, std::span<const BitWord> periods);

/// The period set {0, 1, 10, 01, 110} used for exhaustive checks.
std::vector<BitWord> standard_periods();

struct PoincarePair {
  std::size_t i;
  std::size_t j;
};

struct PoincareWitness {
  std::size_t a;
  std::size_t b;
  std::size_t c;
};

/// Indistinguishability under a perception threshold: |u - v| <= epsilon.
struct PoincareReport {
  BigRational epsilon;
  std::vector<BigRational> values;
  std::vector<PoincarePair> indistinguishable;  // consecutive pairs
  std::vector<PoincarePair> distinguishable;    // non-adjacent pairs
  std::vector<PoincareWitness> witnesses;       // a~b, b~c, a!~c

  bool intransitive() const { return !witnesses.empty(); }
};

/// Requires epsilon > 0 and strictly increasing values.
PoincareReport poincare_chain(const BigRational& epsilon,
                              std::span<const BigRational> values);

}  // namespace zenon::philebian

#endif  // ZENON_PHILEBIAN_HPP_
