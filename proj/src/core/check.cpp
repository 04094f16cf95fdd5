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

#include "zenon/check.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <random>

#include "zenon/divider.hpp"
#include "zenon/errors.hpp"
#include "zenon/nilpotent.hpp"
#include "zenon/paradoxes.hpp"
#include "zenon/philebian.hpp"

namespace zenon::check {
namespace {

class Collector {
 public:
  explicit Collector(std::string group) : group_(std::move(group)) {}

  void add(std::string name, bool passed, std::string detail) {
    results_.push_back({group_, std::move(name), passed, std::move(detail)});
  }

  // Runs body, turning an escaped exception into a failure.
  void run(std::string name, std::string detail, const std::function<bool()>& body) {
    bool ok = false;
    try {
      ok = body();
    } catch (const std::exception& e) {
      detail += std::string(" (threw: ") + e.what() + ")";
    }
    add(std::move(name), ok, std::move(detail));
  }

  std::vector<Result> take() { return std::move(results_); }

 private:
  std::string group_;
  std::vector<Result> results_;
};

BigRational random_rational(std::mt19937_64& rng, long bound = 50, long max_den = 30) {
  std::uniform_int_distribution<long> num(-bound, bound);
  std::uniform_int_distribution<long> den(1, max_den);
  return make_rational(num(rng), den(rng));
}

using philebian::Class;
using philebian::Ordering;
using philebian::Seq;

}  // namespace

std::vector<Result> run_divider() {
  Collector c("divider");

  c.run("leaf_widths_sum_to_one", "n <= 12", [] {
    for (std::uint64_t n = 0; n <= 12; ++n) {
      BigRational total = 0;
      divider::expand(n).for_each_leaf([&](const BitWord&, const divider::DyadicInterval& iv) {
        total += iv.width();
        return true;
      });
      if (total != 1) return false;
    }
    return true;
  });

  c.run("stepwise_doubling_matches_power", "n <= 64", [] {
    for (std::uint64_t n = 1; n <= 64; ++n) {
      if (divider::counts(n).parts != 2 * divider::counts(n - 1).parts) return false;
      if (divider::counts(n).parts != pow2(n)) return false;
    }
    return true;
  });

  c.run("adjacent_leaves_share_one_endpoint", "n <= 10", [] {
    for (std::uint64_t n = 1; n <= 10; ++n) {
      const auto tree = divider::expand(n);
      std::vector<std::pair<BitWord, divider::DyadicInterval>> leaves;
      tree.for_each_leaf([&](const BitWord& w, const divider::DyadicInterval& iv) {
        leaves.emplace_back(w, iv);
        return true;
      });
      for (std::size_t i = 0; i + 1 < leaves.size(); ++i) {
        const auto& [w0, a] = leaves[i];
        const auto& [w1, b] = leaves[i + 1];
        if (!(w0 < w1) || !(a.lower < b.lower) || a.upper != b.lower) return false;
        if (i + 2 < leaves.size() && !(a.upper < leaves[i + 2].second.lower)) return false;
      }
    }
    return true;
  });

  c.run("interior_points_equal_partitions", "n <= 10", [] {
    for (std::uint64_t n = 0; n <= 10; ++n) {
      BigInt interior = 0;
      divider::expand(n).for_each_leaf([&](const BitWord&, const divider::DyadicInterval& iv) {
        if (iv.upper < 1) ++interior;
        return true;
      });
      if (interior != divider::counts(n).partitions) return false;
    }
    return true;
  });

  c.run("parts_times_width_is_one", "n <= 128", [] {
    for (std::uint64_t n = 0; n <= 128; ++n) {
      if (BigRational(divider::counts(n).parts) * inv_pow2(n) != 1) return false;
    }
    return true;
  });

  return c.take();
}

std::vector<Result> run_philebian() {
  Collector c("philebian");
  const auto periods = philebian::standard_periods();
  const auto family = philebian::enumerate(6, periods);
  std::vector<BigRational> values;
  values.reserve(family.size());
  for (const auto& x : family) values.push_back(philebian::value(x));

  c.run("total_order", "prefix <= 6 bits", [&] {
    for (std::size_t i = 0; i < family.size(); ++i) {
      for (std::size_t j = 0; j < family.size(); ++j) {
        const auto o = philebian::lex_compare(family[i], family[j]);
        const auto r = philebian::lex_compare(family[j], family[i]);
        // family is sorted and deduplicated, so the index order is the lex order
        const auto expect = i < j ? Ordering::Less : (i == j ? Ordering::Equal : Ordering::Greater);
        const auto mirror = i < j ? Ordering::Greater : (i == j ? Ordering::Equal : Ordering::Less);
        if (o != expect || r != mirror) return false;
        if ((o == Ordering::Equal) != (family[i] == family[j])) return false;
      }
    }
    return true;
  });

  c.run("valuation_monotone", "prefix <= 6 bits", [&] {
    for (std::size_t i = 0; i + 1 < family.size(); ++i) {
      if (values[i] > values[i + 1]) return false;
    }
    return true;
  });

  c.run("equal_value_iff_double_pair", "prefix <= 6 bits", [&] {
    for (std::size_t i = 0; i < family.size(); ++i) {
      for (std::size_t j = i + 1; j < family.size(); ++j) {
        if ((values[i] == values[j]) != philebian::is_double_pair(family[i], family[j])) {
          return false;
        }
      }
    }
    return true;
  });

  c.run("valuation_injective_on_a", "prefix <= 6 bits", [&] {
    const BigRational* last = nullptr;
    for (std::size_t i = 0; i < family.size(); ++i) {
      if (philebian::classify(family[i]) != Class::A) continue;
      if (last && !(*last < values[i])) return false;
      last = &values[i];
    }
    return true;
  });

  c.run("canonical_choice_contract", "idempotent, value preserving, lands in A", [&] {
    const Seq all_ones({}, {1});
    for (std::size_t i = 0; i < family.size(); ++i) {
      const auto y = philebian::canonical_choice(family[i]);
      if (philebian::canonical_choice(y) != y) return false;
      if (philebian::value(y) != values[i]) return false;
      if (family[i] != all_ones && philebian::classify(y) != Class::A) return false;
    }
    return true;
  });

  c.run("expansion_round_trip", "from_rational(value(x)) = canonical_choice(x)", [&] {
    for (std::size_t i = 0; i < family.size(); ++i) {
      if (Seq::from_rational(values[i]) != philebian::canonical_choice(family[i])) return false;
    }
    return true;
  });

  c.run("double_points_are_adjacent", "k / 2^n, n <= 6", [&] {
    for (std::uint64_t n = 1; n <= 6; ++n) {
      for (long k = 1; k < (1L << n); k += 2) {
        const auto pair = philebian::dyadic_pair(BigInt(k), n);
        if (philebian::value(pair.lower) != philebian::value(pair.upper)) return false;
        if (philebian::lex_compare(pair.lower, pair.upper) != Ordering::Less) return false;
        if (!philebian::gap_check(pair, family)) return false;
      }
    }
    return true;
  });

  c.run("density_witness_between", "consecutive class-A pairs", [&] {
    std::vector<Seq> a;
    for (const auto& x : family) {
      if (philebian::classify(x) == Class::A) a.push_back(x);
    }
    for (std::size_t i = 0; i + 1 < a.size(); i += 7) {
      const auto m = philebian::density_witness(a[i], a[i + 1]);
      if (philebian::classify(m) != Class::A) return false;
      if (philebian::lex_compare(a[i], m) != Ordering::Less) return false;
      if (philebian::lex_compare(m, a[i + 1]) != Ordering::Less) return false;
    }
    return true;
  });

  c.run("finite_subsets_have_least_element", "200 random subsets", [&] {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::size_t> pick(0, family.size() - 1);
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<std::size_t> idx(1 + trial % 17);
      for (auto& v : idx) v = pick(rng);
      std::size_t least = idx.front();
      for (auto v : idx) {
        if (philebian::lex_compare(family[v], family[least]) == Ordering::Less) least = v;
      }
      const auto count = std::count_if(idx.begin(), idx.end(), [&](std::size_t v) {
        return philebian::lex_compare(family[v], family[least]) != Ordering::Greater;
      });
      const auto copies = std::count(idx.begin(), idx.end(), least);
      if (count != copies) return false;
    }
    return true;
  });

  c.run("poincare_intransitivity", "epsilon 3/2 over 10, 11, 12", [] {
    const std::vector<BigRational> grams{10, 11, 12};
    const auto report = philebian::poincare_chain(BigRational(3, 2), grams);
    return report.intransitive() && report.indistinguishable.size() == 2 &&
           report.distinguishable.size() == 1 && report.witnesses.size() == 1;
  });

  return c.take();
}

std::vector<Result> run_nilpotent() {
  using nilpotent::Dual;
  using Poly = nilpotent::Polynomial<BigRational>;
  Collector c("nilpotent");
  std::mt19937_64 rng(20260101);
  auto random_dual = [&] { return Dual(random_rational(rng), random_rational(rng)); };

  c.run("h_squared_is_zero", "(0,1)(0,1) = (0,0)", [] {
    return Dual(0, 1) * Dual(0, 1) == Dual(0, 0);
  });

  c.run("ring_laws", "1000 random triples", [&] {
    const Dual zero(0, 0), one(1, 0);
    for (int i = 0; i < 1000; ++i) {
      const auto x = random_dual(), y = random_dual(), z = random_dual();
      if ((x + y) + z != x + (y + z)) return false;
      if ((x * y) * z != x * (y * z)) return false;
      if (x + y != y + x || x * y != y * x) return false;
      if (x * (y + z) != x * y + x * z) return false;
      if (x + zero != x || x * one != x || x + (-x) != zero) return false;
    }
    return true;
  });

  c.run("pure_infinitesimals_annihilate", "1000 random pairs", [&] {
    for (int i = 0; i < 1000; ++i) {
      if (Dual(0, random_rational(rng)) * Dual(0, random_rational(rng)) != Dual(0, 0)) {
        return false;
      }
    }
    return true;
  });

  c.run("division_inverts_multiplication", "1000 random pairs", [&] {
    for (int i = 0; i < 1000; ++i) {
      const auto x = random_dual();
      auto y = random_dual();
      if (y.a == 0) y.a = 1;
      if (nilpotent::div(x, y) * y != x) return false;
    }
    try {
      (void)nilpotent::div(Dual(1, 0), Dual(0, 1));
      return false;
    } catch (const ZeroDivisorError&) {
      return true;
    }
  });

  auto random_poly = [&] {
    std::uniform_int_distribution<int> degree(0, 6);
    std::vector<BigRational> coeffs(static_cast<std::size_t>(degree(rng)) + 1);
    for (auto& q : coeffs) q = random_rational(rng, 9, 5);
    return Poly(std::move(coeffs));
  };

  c.run("derivative_matches_symbolic", "50 polynomials x 10 points", [&] {
    for (int i = 0; i < 50; ++i) {
      const auto p = random_poly();
      const auto dp = p.derivative();
      for (int j = 0; j < 10; ++j) {
        const auto a = random_rational(rng, 5, 4);
        const auto out = nilpotent::eval_dual(p, nilpotent::variable(a));
        if (out.a != p(a) || out.b != dp(a)) return false;
      }
    }
    return true;
  });

  c.run("product_rule", "50 polynomial pairs", [&] {
    for (int i = 0; i < 50; ++i) {
      const auto p = random_poly(), q = random_poly();
      const auto a = random_rational(rng, 5, 4);
      const auto lhs = nilpotent::eval_dual(p * q, nilpotent::variable(a)).b;
      const BigRational rhs = p(a) * q.derivative()(a) + p.derivative()(a) * q(a);
      if (lhs != rhs) return false;
    }
    return true;
  });

  c.run("lex_total_order", "300 random triples", [&] {
    for (int i = 0; i < 300; ++i) {
      // Small ranges so ties in the real part actually occur.
      auto small = [&] { return Dual(random_rational(rng, 2, 1), random_rational(rng, 2, 1)); };
      const auto x = small(), y = small(), z = small();
      if (!nilpotent::lex_le(x, x)) return false;
      if (!nilpotent::lex_le(x, y) && !nilpotent::lex_le(y, x)) return false;
      if (nilpotent::lex_le(x, y) && nilpotent::lex_le(y, x) && x != y) return false;
      if (nilpotent::lex_le(x, y) && nilpotent::lex_le(y, z) && !nilpotent::lex_le(x, z)) {
        return false;
      }
    }
    return true;
  });

  c.run("embedding_preserves_order", "1000 random pairs", [&] {
    for (int i = 0; i < 1000; ++i) {
      const auto r = random_rational(rng), s = random_rational(rng);
      if ((r < s) != nilpotent::lex_lt(nilpotent::embed(r), nilpotent::embed(s))) return false;
      if ((r == s) != (nilpotent::embed(r) == nilpotent::embed(s))) return false;
    }
    return true;
  });

  c.run("boost_group_laws", "1000 random worldlines", [&] {
    for (int i = 0; i < 1000; ++i) {
      const auto d = random_dual();
      const nilpotent::GalileanBoost v{random_rational(rng)}, w{random_rational(rng)};
      const auto t = random_rational(rng);
      if (nilpotent::worldline_position(nilpotent::boost(d, w), t) !=
          nilpotent::worldline_position(d, t) + w.w * t) {
        return false;
      }
      if (nilpotent::boost(nilpotent::boost(d, v), w) != nilpotent::boost(d, v.compose(w))) {
        return false;
      }
      if (nilpotent::boost(d, {0}) != d) return false;
      if (nilpotent::boost(nilpotent::boost(d, w), w.inverse()) != d) return false;
    }
    return true;
  });

  return c.take();
}

std::vector<Result> run_paradoxes() {
  Collector c("paradoxes");

  c.run("dichotomy_conservation", "n <= 64", [] {
    BigRational previous_cumulative = 0;
    BigRational previous_remaining = 1;
    for (std::uint64_t n = 1; n <= 64; ++n) {
      const auto r = paradoxes::dichotomy(n);
      if (r.cumulative + r.remaining != 1 || r.remaining != inv_pow2(n)) return false;
      if (!(previous_cumulative < r.cumulative) || !(r.cumulative < 1)) return false;
      if (r.remaining != previous_remaining / 2) return false;
      if (r.parts != divider::counts(n).parts) return false;
      previous_cumulative = r.cumulative;
      previous_remaining = r.remaining;
    }
    return true;
  });

  c.run("achilles_closed_form", "100 random (r, s)", [] {
    std::mt19937_64 rng(1234);
    std::uniform_int_distribution<long> num(2, 400);
    std::uniform_int_distribution<long> den(1, 4);
    std::uniform_int_distribution<std::uint64_t> steps(1, 30);
    for (int i = 0; i < 100; ++i) {
      BigRational r = make_rational(num(rng), den(rng));
      if (r <= 1 || r > 100) r = BigRational(num(rng) % 99 + 2);
      const BigRational s = make_rational(num(rng), 4 * den(rng));
      const auto report = paradoxes::achilles(r, s, steps(rng));
      for (std::uint64_t j = 0; j < report.points.size(); ++j) {
        const auto& p = report.points[j];
        if (p != paradoxes::achilles_point(r, s, j) || !(p < report.limit)) return false;
        if (report.limit - p != s * pow(r, -static_cast<std::int64_t>(j)) / (r - 1)) {
          return false;
        }
        if (j > 0 && !(report.points[j - 1] < p)) return false;
      }
    }
    return paradoxes::achilles(10, 100, 3).limit == BigRational(1000, 9);
  });

  c.run("stadium_ratio", "k <= 100, N <= 50", [] {
    for (std::uint64_t n = 1; n <= 50; ++n) {
      for (std::uint64_t k = 1; k <= 100; k += (n % 5 == 0 ? 1 : 9)) {
        const auto r = paradoxes::stadium(n, k);
        if (r.passings_bc != 2 * r.passings_ba || r.passings_ba != k) return false;
      }
    }
    return true;
  });

  c.run("arrow_product_is_one", "n <= 128", [] {
    for (std::uint64_t n = 0; n <= 128; ++n) {
      if (paradoxes::arrow(n).product != 1) return false;
    }
    return true;
  });

  return c.take();
}

std::vector<Result> run_all() {
  using Group = std::vector<Result> (*)();
  const Group groups[] = {run_divider, run_philebian, run_nilpotent, run_paradoxes};
  std::vector<std::future<std::vector<Result>>> pending;
  for (auto g : groups) pending.push_back(std::async(std::launch::async, g));
  std::vector<Result> out;
  for (auto& f : pending) {
    auto part = f.get();
    out.insert(out.end(), std::make_move_iterator(part.begin()),
               std::make_move_iterator(part.end()));
  }
  return out;
}

bool all_passed(const std::vector<Result>& results) {
  return std::all_of(results.begin(), results.end(), [](const Result& r) { return r.passed; });
}

}  // namespace zenon::check
