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

#ifndef ZENON_BITWORD_HPP_
#define ZENON_BITWORD_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "zenon/rational.hpp"

namespace zenon {

/// A finite word over {0, 1}. Labels a node of the division tree (the empty
/// word is the whole rod) and serves as prefix or period of a sequence.
class BitWord {
 public:
  BitWord() = default;
  BitWord(std::initializer_list<int> bits);

  /// Accepts only the characters '0' and '1'; "" is the empty word.
  static BitWord parse(std::string_view text);

  /// The n low-order bits of k, most significant first. Requires 0 <= k < 2^n.
  static BitWord from_integer(const BigInt& k, std::size_t n);

  std::size_t size() const noexcept { return bits_.size(); }
  bool empty() const noexcept { return bits_.empty(); }
  std::uint8_t operator[](std::size_t i) const { return bits_[i]; }
  std::uint8_t back() const { return bits_.back(); }

  void push_back(std::uint8_t bit);
  void pop_back() { bits_.pop_back(); }

  BitWord operator+(const BitWord& tail) const;
  BitWord with(std::uint8_t bit) const;
  BitWord take(std::size_t n) const;

  /// Reads the word as a binary numeral, most significant bit first.
  BigInt to_integer() const;

  std::string str() const;

  const std::vector<std::uint8_t>& bits() const noexcept { return bits_; }

  /// Lexicographic, a proper prefix sorts first.
  friend std::strong_ordering operator<=>(const BitWord&, const BitWord&) = default;
  friend bool operator==(const BitWord&, const BitWord&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

}  // namespace zenon

#endif  // ZENON_BITWORD_HPP_
