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

#include "zenon/divider.hpp"

#include "zenon/errors.hpp"

namespace zenon::divider {

DyadicInterval leaf_interval(const BitWord& word) {
  const BigRational width = inv_pow2(word.size());
  BigRational lower(word.to_integer(), pow2(word.size()));
  lower.canonicalize();
  return {lower, lower + width};
}

BigRational division_point(const BitWord& word) {
  BigRational mid(2 * word.to_integer() + 1, pow2(word.size() + 1));
  mid.canonicalize();
  return mid;
}

Counts counts(std::uint64_t n) {
  BigInt parts = pow2(n);
  return {parts - 1, parts};
}

BitWord DivisionTree::leaf_label(const BigInt& index) const {
  if (index < 0 || index >= leaf_count()) {
    throw PreconditionError("leaf index out of range");
  }
  return BitWord::from_integer(index, depth_);
}

DyadicInterval DivisionTree::leaf(const BigInt& index) const {
  return leaf_interval(leaf_label(index));
}

void DivisionTree::for_each_leaf(
    const std::function<bool(const BitWord&, const DyadicInterval&)>& fn) const {
  const BigInt count = leaf_count();
  const BigRational width = inv_pow2(depth_);
  BigRational lower = 0;
  for (BigInt i = 0; i < count; ++i) {
    BigRational upper = lower + width;
    if (!fn(BitWord::from_integer(i, depth_), DyadicInterval{lower, upper})) {
      return;
    }
    lower = std::move(upper);
  }
}

DivisionTree expand(std::uint64_t n) { return DivisionTree(n); }

}  // namespace zenon::divider
