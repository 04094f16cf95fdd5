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

#include "zenon/nilpotent.hpp"

namespace zenon::nilpotent {
namespace {

std::vector<std::string_view> split_commas(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    out.push_back(text.substr(start, comma - start));
    if (comma == std::string_view::npos) return out;
    start = comma + 1;
  }
}

}  // namespace

BigRational worldline_position(const Dual& d, const BigRational& t) {
  return d.a + d.b * t;
}

Dual boost(const Dual& d, const GalileanBoost& g) { return {d.a, d.b + g.w}; }

std::string to_string(const Dual& d) {
  return zenon::to_string(d.a) + " + " + zenon::to_string(d.b) + "·h";
}

Dual parse_dual(std::string_view text) {
  const auto parts = split_commas(text);
  if (parts.size() != 2) {
    throw ParseError("dual number must be 'a,b', got '" + std::string(text) + "'");
  }
  return {parse_rational(parts[0]), parse_rational(parts[1])};
}

Polynomial<BigRational> parse_polynomial(std::string_view text) {
  std::vector<BigRational> coeffs;
  for (auto part : split_commas(text)) coeffs.push_back(parse_rational(part));
  return Polynomial<BigRational>(std::move(coeffs));
}

}  // namespace zenon::nilpotent
