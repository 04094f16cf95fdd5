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

#include "zenon/bitword.hpp"

#include <algorithm>

#include "zenon/errors.hpp"

namespace zenon {

BitWord::BitWord(std::initializer_list<int> bits) {
  bits_.reserve(bits.size());
  for (int b : bits) push_back(static_cast<std::uint8_t>(b));
}

BitWord BitWord::parse(std::string_view text) {
  BitWord out;
  out.bits_.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw ParseError("bit word may only contain 0 and 1: '" +
                       std::string(text) + "'");
    }
    out.bits_.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return out;
}

BitWord BitWord::from_integer(const BigInt& k, std::size_t n) {
  if (k < 0 || k >= pow2(n)) {
    throw PreconditionError("integer does not fit in the requested word length");
  }
  BitWord out;
  out.bits_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.bits_[n - 1 - i] = static_cast<std::uint8_t>(mpz_tstbit(k.get_mpz_t(), i));
  }
  return out;
}

void BitWord::push_back(std::uint8_t bit) {
  if (bit > 1) throw PreconditionError("bit must be 0 or 1");
  bits_.push_back(bit);
}

BitWord BitWord::operator+(const BitWord& tail) const {
  BitWord out = *this;
  out.bits_.insert(out.bits_.end(), tail.bits_.begin(), tail.bits_.end());
  return out;
}

BitWord BitWord::with(std::uint8_t bit) const {
  BitWord out = *this;
  out.push_back(bit);
  return out;
}

BitWord BitWord::take(std::size_t n) const {
  BitWord out;
  out.bits_.assign(bits_.begin(), bits_.begin() + static_cast<std::ptrdiff_t>(std::min(n, size())));
  return out;
}

BigInt BitWord::to_integer() const {
  BigInt out = 0;
  for (auto b : bits_) {
    out <<= 1;
    out += b;
  }
  return out;
}

std::string BitWord::str() const {
  std::string out;
  out.reserve(bits_.size());
  for (auto b : bits_) out.push_back(static_cast<char>('0' + b));
  return out;
}

}  // namespace zenon
