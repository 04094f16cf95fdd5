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

#ifndef ZENON_NILPOTENT_HPP_
#define ZENON_NILPOTENT_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <vector>

#include "zenon/errors.hpp"
#include "zenon/rational.hpp"

namespace zenon::nilpotent {

/// a + b h with h^2 = 0, the ring S[h]/(h^2).
///
/// Addition is componentwise and multiplication drops the h^2 term:
///   (a + b h)(c + d h) = ac + (ad + bc) h.
/// Any value with a == 0 is a zero divisor, so division needs a nonzero real
/// part. Ordering is first-difference: real parts, then h-coefficients.
template <typename Scalar>
struct BasicDual {
  Scalar a{0};  // real part
  Scalar b{0};  // coefficient of h

  BasicDual() = default;
  BasicDual(Scalar real, Scalar inf) : a(std::move(real)), b(std::move(inf)) {}

  friend BasicDual operator+(const BasicDual& x, const BasicDual& y) {
    return {x.a + y.a, x.b + y.b};
  }
  friend BasicDual operator-(const BasicDual& x, const BasicDual& y) {
    return {x.a - y.a, x.b - y.b};
  }
  friend BasicDual operator-(const BasicDual& x) { return {-x.a, -x.b}; }
  friend BasicDual operator*(const BasicDual& x, const BasicDual& y) {
    return {x.a * y.a, x.a * y.b + x.b * y.a};
  }
  friend BasicDual operator/(const BasicDual& x, const BasicDual& y) {
    if (y.a == Scalar(0)) {
      throw ZeroDivisorError("division by a dual number with zero real part");
    }
    return {x.a / y.a, (x.b * y.a - x.a * y.b) / (y.a * y.a)};
  }
  friend bool operator==(const BasicDual& x, const BasicDual& y) {
    return x.a == y.a && x.b == y.b;
  }
};

using Dual = BasicDual<BigRational>;
using DualF = BasicDual<double>;

template <typename Scalar>
BasicDual<Scalar> add(const BasicDual<Scalar>& x, const BasicDual<Scalar>& y) {
  return x + y;
}

template <typename Scalar>
BasicDual<Scalar> mul(const BasicDual<Scalar>& x, const BasicDual<Scalar>& y) {
  return x * y;
}

/// Throws ZeroDivisorError when y has zero real part.
template <typename Scalar>
BasicDual<Scalar> div(const BasicDual<Scalar>& x, const BasicDual<Scalar>& y) {
  return x / y;
}

template <typename Scalar>
bool lex_le(const BasicDual<Scalar>& x, const BasicDual<Scalar>& y) {
  return x.a < y.a || (x.a == y.a && x.b <= y.b);
}

template <typename Scalar>
bool lex_lt(const BasicDual<Scalar>& x, const BasicDual<Scalar>& y) {
  return lex_le(x, y) && !(x == y);
}

/// r -> (r, 0). Order preserving.
template <typename Scalar>
BasicDual<Scalar> embed(Scalar r) {
  return {std::move(r), Scalar(0)};
}

/// The seed value a + h: evaluating a function on it yields (f(a), f'(a)).
template <typename Scalar>
BasicDual<Scalar> variable(Scalar a) {
  return {std::move(a), Scalar(1)};
}

/// Polynomial with coefficients listed constant term first. Trailing zero
/// coefficients are trimmed, so the zero polynomial has no coefficients.
template <typename Scalar>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Scalar> coefficients)
      : coeffs_(std::move(coefficients)) {
    while (!coeffs_.empty() && coeffs_.back() == Scalar(0)) coeffs_.pop_back();
  }

  const std::vector<Scalar>& coefficients() const noexcept { return coeffs_; }

  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }

  /// Horner's rule; works for any ring that Scalar converts into.
  template <typename Ring>
  Ring operator()(const Ring& x) const {
    Ring acc{};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      acc = acc * x + lift<Ring>(*it);
    }
    return acc;
  }

  /// Term-by-term symbolic derivative.
  Polynomial derivative() const {
    std::vector<Scalar> out;
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
      out.push_back(coeffs_[i] * Scalar(static_cast<long>(i)));
    }
    return Polynomial(std::move(out));
  }

  friend Polynomial operator*(const Polynomial& p, const Polynomial& q) {
    if (p.coeffs_.empty() || q.coeffs_.empty()) return {};
    std::vector<Scalar> out(p.coeffs_.size() + q.coeffs_.size() - 1, Scalar(0));
    for (std::size_t i = 0; i < p.coeffs_.size(); ++i) {
      for (std::size_t j = 0; j < q.coeffs_.size(); ++j) {
        out[i + j] += p.coeffs_[i] * q.coeffs_[j];
      }
    }
    return Polynomial(std::move(out));
  }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  template <typename Ring>
  static Ring lift(const Scalar& c) {
    if constexpr (std::is_same_v<Ring, Scalar>) {
      return c;
    } else {
      return Ring(c, Scalar(0));
    }
  }

  std::vector<Scalar> coeffs_;
};

/// Exact evaluation of p at x in the dual ring. At x = (a, 1) the result is
/// (p(a), p'(a)).
template <typename Scalar>
BasicDual<Scalar> eval_dual(const Polynomial<Scalar>& p, const BasicDual<Scalar>& x) {
  return p(x);
}

/// Galilean boost x' = x + w t, acting on the velocity (h) component.
struct GalileanBoost {
  BigRational w;

  GalileanBoost compose(const GalileanBoost& then) const { return {w + then.w}; }
  GalileanBoost inverse() const { return {-w}; }

  friend bool operator==(const GalileanBoost&, const GalileanBoost&) = default;
};

/// Reads d as the worldline x(t) = d.a + d.b t.
BigRational worldline_position(const Dual& d, const BigRational& t);

/// (d.a, d.b + w): shifts the velocity, keeps the position at t = 0.
Dual boost(const Dual& d, const GalileanBoost& g);

/// "a + b·h", e.g. "0 + 0·h" or "1/2 + -3·h".
std::string to_string(const Dual& d);

/// Parses "a,b" with rational literals a and b.
Dual parse_dual(std::string_view text);

/// Parses "c0,c1,...,cn" (constant term first).
Polynomial<BigRational> parse_polynomial(std::string_view text);

}  // namespace zenon::nilpotent

#endif  // ZENON_NILPOTENT_HPP_
