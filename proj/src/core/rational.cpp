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

#include "zenon/rational.hpp"

#include <cctype>

#include "zenon/errors.hpp"

namespace zenon {
namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && s.front() == '-') s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

bool is_natural_literal(std::string_view s) {
  return !s.empty() && s.front() != '-' && is_integer_literal(s);
}

}  // namespace

BigRational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw PreconditionError("zero denominator");
  BigRational out(num, den);
  out.canonicalize();
  return out;
}

BigInt parse_integer(std::string_view text) {
  if (!is_integer_literal(text)) {
    throw ParseError("malformed integer literal '" + std::string(text) + "'");
  }
  return BigInt(std::string(text), 10);
}

BigRational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return BigRational(parse_integer(text));

  const auto num = text.substr(0, slash);
  const auto den = text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_natural_literal(den)) {
    throw ParseError("malformed rational literal '" + std::string(text) + "'");
  }
  BigInt d(std::string(den), 10);
  if (d == 0) {
    throw ParseError("zero denominator in '" + std::string(text) + "'");
  }
  BigRational out(BigInt(std::string(num), 10), d);
  out.canonicalize();
  return out;
}

std::string to_string(const BigRational& value) { return value.get_str(10); }

std::string to_string(const BigInt& value) { return value.get_str(10); }

BigInt pow2(std::uint64_t n) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), 2, n);
  return out;
}

BigRational inv_pow2(std::uint64_t n) { return BigRational(BigInt(1), pow2(n)); }

BigRational pow(const BigRational& base, std::int64_t exponent) {
  if (exponent < 0) {
    if (base == 0) throw PreconditionError("zero raised to a negative power");
    return pow(BigRational(base.get_den(), base.get_num()), -exponent);
  }
  BigInt num, den;
  const auto e = static_cast<unsigned long>(exponent);
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), e);
  BigRational out(num, den);
  out.canonicalize();
  return out;
}

}  // namespace zenon
