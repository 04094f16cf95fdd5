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

#ifndef ZENON_RATIONAL_HPP_
#define ZENON_RATIONAL_HPP_

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace zenon {

/// Arbitrary precision integer.
using BigInt = mpz_class;

/// Exact rational scalar, always kept in lowest terms with a positive
/// denominator. Every numeric quantity in the library is one of these.
using BigRational = mpq_class;

/// num / den in lowest terms. Prefer this to the two-argument mpq_class
/// constructor, which does not canonicalize.
BigRational make_rational(const BigInt& num, const BigInt& den);

/// Parses "p/q" or "p" (optional leading '-', decimal digits only).
/// Throws ParseError on anything else, including a zero denominator.
BigRational parse_rational(std::string_view text);

/// Parses a non-negative or negative decimal integer.
BigInt parse_integer(std::string_view text);

/// "p/q" in lowest terms; integers are written without the "/1".
std::string to_string(const BigRational& value);
std::string to_string(const BigInt& value);

/// 2^n as an exact integer.
BigInt pow2(std::uint64_t n);

/// 2^(-n) as an exact rational.
BigRational inv_pow2(std::uint64_t n);

/// r^e for integer e (negative allowed when r != 0).
BigRational pow(const BigRational& base, std::int64_t exponent);

}  // namespace zenon

#endif  // ZENON_RATIONAL_HPP_
