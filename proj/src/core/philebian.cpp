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

#include "zenon/philebian.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "zenon/errors.hpp"

namespace zenon::philebian {
namespace {

BitWord primitive_root(const BitWord& word) {
  const std::size_t n = word.size();
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    bool repeats = true;
    for (std::size_t i = d; i < n && repeats; ++i) repeats = word[i] == word[i % d];
    if (repeats) return word.take(d);
  }
  return word;
}

BitWord rotate_right(const BitWord& word) {
  BitWord out{static_cast<int>(word.back())};
  return out + word.take(word.size() - 1);
}

}  // namespace

Seq::Seq(BitWord prefix, BitWord period)
    : prefix_(std::move(prefix)), period_(std::move(period)) {
  if (period_.empty()) throw PreconditionError("sequence period must be nonempty");
  period_ = primitive_root(period_);
  // Pull the prefix back while its last digit is the period's last digit:
  // u b (v b)^w == u (b v)^w.
  while (!prefix_.empty() && prefix_.back() == period_.back()) {
    period_ = rotate_right(period_);
    prefix_.pop_back();
  }
}

Seq Seq::parse(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw ParseError("sequence must look like prefix:(period), got '" +
                     std::string(text) + "'");
  }
  const auto tail = text.substr(colon + 1);
  if (tail.size() < 3 || tail.front() != '(' || tail.back() != ')') {
    throw ParseError("sequence period must be a nonempty parenthesised word, got '" +
                     std::string(text) + "'");
  }
  return Seq(BitWord::parse(text.substr(0, colon)),
             BitWord::parse(tail.substr(1, tail.size() - 2)));
}

Seq Seq::from_rational(const BigRational& q) {
  if (q < 0 || q > 1) throw PreconditionError("binary expansion needs 0 <= q <= 1");
  if (q == 1) return Seq({}, {1});

  const BigInt& den = q.get_den();
  BigInt rem = q.get_num();
  std::map<BigInt, std::size_t> seen;
  BitWord digits;
  while (true) {
    const auto [it, fresh] = seen.emplace(rem, digits.size());
    if (!fresh) {
      const BitWord prefix = digits.take(it->second);
      BitWord period;
      for (std::size_t i = it->second; i < digits.size(); ++i) period.push_back(digits[i]);
      return Seq(prefix, period);
    }
    rem *= 2;
    const bool one = rem >= den;
    if (one) rem -= den;
    digits.push_back(one ? 1 : 0);
  }
}

std::uint8_t Seq::bit(std::uint64_t k) const {
  if (k < prefix_.size()) return prefix_[k];
  return period_[(k - prefix_.size()) % period_.size()];
}

std::string Seq::str() const { return prefix_.str() + ":(" + period_.str() + ")"; }

Ordering lex_compare(const Seq& x, const Seq& y) {
  const std::uint64_t bound =
      std::max(x.prefix().size(), y.prefix().size()) +
      std::lcm(x.period().size(), y.period().size());
  for (std::uint64_t k = 0; k < bound; ++k) {
    const auto a = x.bit(k);
    const auto b = y.bit(k);
    if (a != b) return a < b ? Ordering::Less : Ordering::Greater;
  }
  return Ordering::Equal;
}

BigRational value(const Seq& x) {
  // prefix . (period)^w  =  (P + Q / (2^L - 1)) / 2^p
  BigRational tail(x.period().to_integer(), pow2(x.period().size()) - 1);
  tail.canonicalize();
  BigRational out = (BigRational(x.prefix().to_integer()) + tail) /
                    BigRational(pow2(x.prefix().size()));
  out.canonicalize();
  return out;
}

Class classify(const Seq& x) {
  return x.period() == BitWord{1} ? Class::B : Class::A;
}

Seq canonical_choice(const Seq& x) {
  if (classify(x) == Class::A || x.prefix().empty()) return x;
  // Normal form guarantees the prefix ends in 0: w0(1) -> w1(0).
  BitWord prefix = x.prefix();
  prefix.pop_back();
  return Seq(prefix.with(1), {0});
}

DoublePair dyadic_pair(const BigInt& k, std::uint64_t n) {
  if (k <= 0 || k >= pow2(n)) {
    throw PreconditionError("dyadic pair needs 0 < k < 2^n");
  }
  BigInt odd = k;
  while (mpz_even_p(odd.get_mpz_t())) {
    odd >>= 1;
    --n;
  }
  const BitWord w = BitWord::from_integer(odd, n).take(n - 1);
  return {Seq(w.with(0), {1}), Seq(w.with(1), {0})};
}

bool is_double_pair(const Seq& x, const Seq& y) {
  if (x == y) return false;
  auto one_way = [](const Seq& b, const Seq& a) {
    return classify(b) == Class::B && canonical_choice(b) == a && !(a == b);
  };
  return one_way(x, y) || one_way(y, x);
}

Seq density_witness(const Seq& x, const Seq& y) {
  if (classify(x) != Class::A || classify(y) != Class::A) {
    throw PreconditionError("density witness is defined on class A only");
  }
  if (lex_compare(x, y) != Ordering::Less) {
    throw PreconditionError("density witness needs x < y");
  }
  // On A the valuation is strictly monotone, so the midpoint's expansion
  // lies strictly between.
  return Seq::from_rational((value(x) + value(y)) / 2);
}

bool gap_check(const DoublePair& pair, std::span<const Seq> candidates) {
  return std::none_of(candidates.begin(), candidates.end(), [&](const Seq& m) {
    return lex_compare(pair.lower, m) == Ordering::Less &&
           lex_compare(m, pair.upper) == Ordering::Less;
  });
}

std::vector<BitWord> standard_periods() {
  return {BitWord{0}, BitWord{1}, BitWord{1, 0}, BitWord{0, 1}, BitWord{1, 1, 0}};
}

std::vector<Seq> enumerate(std::size_t max_prefix, std::span<const BitWord> periods) {
  std::vector<Seq> out;
  for (std::size_t len = 0; len <= max_prefix; ++len) {
    const BigInt words = pow2(len);
    for (BigInt i = 0; i < words; ++i) {
      const BitWord prefix = BitWord::from_integer(i, len);
      for (const auto& p : periods) out.emplace_back(prefix, p);
    }
  }
  std::sort(out.begin(), out.end(), [](const Seq& a, const Seq& b) {
    return lex_compare(a, b) == Ordering::Less;
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

PoincareReport poincare_chain(const BigRational& epsilon,
                              std::span<const BigRational> values) {
  if (epsilon <= 0) throw PreconditionError("epsilon must be positive");
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (!(values[i - 1] < values[i])) {
      throw PreconditionError("values must be strictly increasing");
    }
  }
  PoincareReport report{epsilon, {values.begin(), values.end()}, {}, {}, {}};
  auto close = [&](std::size_t i, std::size_t j) {
    return abs(values[j] - values[i]) <= epsilon;
  };
  const std::size_t n = values.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (close(i, i + 1)) report.indistinguishable.push_back({i, i + 1});
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 2; j < n; ++j) {
      if (!close(i, j)) report.distinguishable.push_back({i, j});
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (!close(a, b)) continue;
      for (std::size_t c = b + 1; c < n; ++c) {
        if (close(b, c) && !close(a, c)) report.witnesses.push_back({a, b, c});
      }
    }
  }
  return report;
}

}  // namespace zenon::philebian
