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

#ifndef ZENON_DIVIDER_HPP_
#define ZENON_DIVIDER_HPP_

#include <cstdint>
#include <functional>

#include "zenon/bitword.hpp"
#include "zenon/rational.hpp"

namespace zenon::divider {

/// Closed dyadic subinterval [lower, upper] of the unit rod.
struct DyadicInterval {
  BigRational lower;
  BigRational upper;

  BigRational width() const { return upper - lower; }
  friend bool operator==(const DyadicInterval&, const DyadicInterval&) = default;
};

/// The two ways of counting generation n of the division: the division
/// points made so far (stepwise) and the parts that exist at once
/// (simultaneous).
struct Counts {
  BigInt partitions;
  BigInt parts;
};

/// [v, v + 2^-len(w)] with v the binary place value of w.
DyadicInterval leaf_interval(const BitWord& word);

/// The point created when the part labelled w is halved.
BigRational division_point(const BitWord& word);

/// partitions = 2^n - 1, parts = 2^n.
Counts counts(std::uint64_t n);

/// Full binary division tree of the unit rod to a fixed depth. Nodes are not
/// stored; every query is answered from label arithmetic, so a depth of 64
/// or more costs nothing until leaves are enumerated.
class DivisionTree {
 public:
  explicit DivisionTree(std::uint64_t depth) : depth_(depth) {}

  std::uint64_t depth() const noexcept { return depth_; }

  BigInt leaf_count() const { return pow2(depth_); }
  BigInt node_count() const { return pow2(depth_ + 1) - 1; }
  BigInt division_point_count() const { return pow2(depth_) - 1; }

  /// Label of the index-th leaf in left-to-right (= lexicographic) order.
  BitWord leaf_label(const BigInt& index) const;
  DyadicInterval leaf(const BigInt& index) const;

  /// Visits the leaves left to right. Visiting stops when fn returns false.
  void for_each_leaf(
      const std::function<bool(const BitWord&, const DyadicInterval&)>& fn) const;

 private:
  std::uint64_t depth_;
};

DivisionTree expand(std::uint64_t n);

}  // namespace zenon::divider

#endif  // ZENON_DIVIDER_HPP_
