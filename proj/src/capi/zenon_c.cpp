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

#include "zenon/zenon.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <string>
#include <string_view>
#include <vector>

#include "zenon/check.hpp"
#include "zenon/divider.hpp"
#include "zenon/errors.hpp"
#include "zenon/nilpotent.hpp"
#include "zenon/paradoxes.hpp"
#include "zenon/philebian.hpp"
#include "zenon/report.hpp"

struct zn_rational {
  zenon::BigRational value;
};
struct zn_seq {
  zenon::philebian::Seq value;
};
struct zn_dual {
  zenon::nilpotent::Dual value;
};
struct zn_poly {
  zenon::nilpotent::Polynomial<zenon::BigRational> value;
};

namespace {

using zenon::report::OutputFormat;

thread_local std::string last_error;

class NullArgument : public std::exception {};

template <typename T>
const T& need(const T* p) {
  if (p == nullptr) throw NullArgument();
  return *p;
}

template <typename T>
T* out_slot(T* p) {
  if (p == nullptr) throw NullArgument();
  return p;
}

// Checks the out-pointer before the value is built, so nothing leaks when
// the caller passes NULL.
template <typename T, typename Make>
void produce(T* out, Make&& make) {
  if (out == nullptr) throw NullArgument();
  *out = make();
}

std::string_view text_arg(const char* text) {
  if (text == nullptr) throw NullArgument();
  return text;
}

char* dup(const std::string& s) {
  auto* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

OutputFormat to_format(zn_format f) {
  switch (f) {
    case ZN_FORMAT_JSON:
      return OutputFormat::Json;
    case ZN_FORMAT_CSV:
      return OutputFormat::Csv;
    case ZN_FORMAT_PLAIN:
      return OutputFormat::Plain;
  }
  throw zenon::ParseError("unknown output format code");
}

zn_status fail(zn_status status, const char* message) {
  last_error = message;
  return status;
}

template <typename F>
zn_status guarded(F&& body) {
  try {
    body();
    last_error.clear();
    return ZN_OK;
  } catch (const NullArgument&) {
    return fail(ZN_E_NULL_ARGUMENT, "required argument is NULL");
  } catch (const zenon::ParseError& e) {
    return fail(ZN_E_PARSE, e.what());
  } catch (const zenon::ZeroDivisorError& e) {
    return fail(ZN_E_ZERO_DIVISOR, e.what());
  } catch (const zenon::NonClosingPursuitError& e) {
    return fail(ZN_E_NEVER_CLOSES, e.what());
  } catch (const zenon::PreconditionError& e) {
    return fail(ZN_E_PRECONDITION, e.what());
  } catch (const std::exception& e) {
    return fail(ZN_E_INTERNAL, e.what());
  } catch (...) {
    return fail(ZN_E_INTERNAL, "unknown error");
  }
}

zenon::BitWord word_arg(const char* text) { return zenon::BitWord::parse(text_arg(text)); }

template <typename T>
std::vector<T> unwrap_all(const auto* const* items, size_t count) {
  if (count > 0 && items == nullptr) throw NullArgument();
  std::vector<T> out;
  out.reserve(count);
  for (size_t i = 0; i < count; ++i) out.push_back(need(items[i]).value);
  return out;
}

}  // namespace

extern "C" {

const char* zn_version(void) { return "1.0.0"; }

const char* zn_last_error(void) { return last_error.c_str(); }

const char* zn_status_name(zn_status status) {
  switch (status) {
    case ZN_OK:
      return "ok";
    case ZN_E_NULL_ARGUMENT:
      return "null_argument";
    case ZN_E_PARSE:
      return "parse_error";
    case ZN_E_PRECONDITION:
      return "precondition_violated";
    case ZN_E_ZERO_DIVISOR:
      return "zero_divisor";
    case ZN_E_NEVER_CLOSES:
      return "pursuit_never_closes";
    case ZN_E_INTERNAL:
      return "internal_error";
  }
  return "unknown";
}

void zn_string_free(char* s) { std::free(s); }

zn_status zn_format_parse(const char* name, zn_format* out) {
  return guarded([&] {
    switch (zenon::report::parse_format(text_arg(name))) {
      case OutputFormat::Json:
        produce(out, [&] { return ZN_FORMAT_JSON; });
        break;
      case OutputFormat::Csv:
        produce(out, [&] { return ZN_FORMAT_CSV; });
        break;
      case OutputFormat::Plain:
        produce(out, [&] { return ZN_FORMAT_PLAIN; });
        break;
    }
  });
}

zn_status zn_rational_parse(const char* text, zn_rational** out) {
  return guarded([&] {
    produce(out, [&] { return new zn_rational{zenon::parse_rational(text_arg(text))}; });
  });
}

zn_status zn_rational_to_string(const zn_rational* q, char** out) {
  return guarded([&] { produce(out, [&] { return dup(zenon::to_string(need(q).value)); }); });
}

void zn_rational_free(zn_rational* q) { delete q; }

zn_status zn_tree_expand(uint64_t depth, zn_format format, char** out) {
  return guarded([&] {
    produce(out, [&] { return dup(zenon::report::render_leaves(zenon::divider::expand(depth),
                                                      to_format(format))); });
  });
}

zn_status zn_tree_counts(uint64_t depth, zn_format format, char** out) {
  return guarded([&] {
    produce(out, [&] { return dup(zenon::report::render_counts(depth, zenon::divider::counts(depth),
                                                      to_format(format))); });
  });
}

zn_status zn_tree_count_values(uint64_t depth, char** partitions, char** parts) {
  return guarded([&] {
    const auto c = zenon::divider::counts(depth);
    out_slot(partitions);
    out_slot(parts);
    std::string a = zenon::to_string(c.partitions);
    std::string b = zenon::to_string(c.parts);
    *partitions = dup(a);
    try {
      *parts = dup(b);
    } catch (...) {
      std::free(*partitions);
      *partitions = nullptr;
      throw;
    }
  });
}

zn_status zn_tree_interval(const char* word, zn_format format, char** out) {
  return guarded([&] {
    produce(out, [&] { return dup(zenon::report::render_interval(word_arg(word), to_format(format))); });
  });
}

zn_status zn_leaf_interval(const char* word, zn_rational** lower, zn_rational** upper) {
  return guarded([&] {
    out_slot(lower);
    out_slot(upper);
    auto iv = zenon::divider::leaf_interval(word_arg(word));
    auto lo = std::make_unique<zn_rational>(zn_rational{std::move(iv.lower)});
    auto hi = std::make_unique<zn_rational>(zn_rational{std::move(iv.upper)});
    *lower = lo.release();
    *upper = hi.release();
  });
}

zn_status zn_division_point(const char* word, zn_rational** out) {
  return guarded([&] {
    produce(out, [&] { return new zn_rational{zenon::divider::division_point(word_arg(word))}; });
  });
}

zn_status zn_seq_parse(const char* text, zn_seq** out) {
  return guarded([&] {
    produce(out, [&] { return new zn_seq{zenon::philebian::Seq::parse(text_arg(text))}; });
  });
}

zn_status zn_seq_from_rational(const zn_rational* q, zn_seq** out) {
  return guarded([&] {
    produce(out, [&] { return new zn_seq{zenon::philebian::Seq::from_rational(need(q).value)}; });
  });
}

zn_status zn_seq_to_string(const zn_seq* x, char** out) {
  return guarded([&] { produce(out, [&] { return dup(need(x).value.str()); }); });
}

void zn_seq_free(zn_seq* x) { delete x; }

zn_status zn_seq_compare(const zn_seq* x, const zn_seq* y, zn_ordering* out) {
  return guarded([&] {
    switch (zenon::philebian::lex_compare(need(x).value, need(y).value)) {
      case zenon::philebian::Ordering::Less:
        produce(out, [&] { return ZN_LESS; });
        break;
      case zenon::philebian::Ordering::Equal:
        produce(out, [&] { return ZN_EQUAL; });
        break;
      case zenon::philebian::Ordering::Greater:
        produce(out, [&] { return ZN_GREATER; });
        break;
    }
  });
}

zn_status zn_seq_value(const zn_seq* x, zn_rational** out) {
  return guarded([&] { produce(out, [&] { return new zn_rational{zenon::philebian::value(need(x).value)}; }); });
}

zn_status zn_seq_classify(const zn_seq* x, zn_class* out) {
  return guarded([&] {
    produce(out, [&] { return zenon::philebian::classify(need(x).value) == zenon::philebian::Class::A
                         ? ZN_CLASS_A
                         : ZN_CLASS_B; });
  });
}

zn_status zn_seq_canonical(const zn_seq* x, zn_seq** out) {
  return guarded([&] {
    produce(out, [&] { return new zn_seq{zenon::philebian::canonical_choice(need(x).value)}; });
  });
}

zn_status zn_seq_density_witness(const zn_seq* x, const zn_seq* y, zn_seq** out) {
  return guarded([&] {
    produce(out, [&] { return new zn_seq{zenon::philebian::density_witness(need(x).value, need(y).value)}; });
  });
}

zn_status zn_seq_dyadic_pair(const char* k, uint64_t n, zn_seq** lower, zn_seq** upper) {
  return guarded([&] {
    out_slot(lower);
    out_slot(upper);
    auto pair = zenon::philebian::dyadic_pair(zenon::parse_integer(text_arg(k)), n);
    auto lo = std::make_unique<zn_seq>(zn_seq{std::move(pair.lower)});
    auto hi = std::make_unique<zn_seq>(zn_seq{std::move(pair.upper)});
    *lower = lo.release();
    *upper = hi.release();
  });
}

zn_status zn_seq_gap_check(const zn_seq* lower, const zn_seq* upper,
                           const zn_seq* const* candidates, size_t count, int* out) {
  return guarded([&] {
    const auto& lo = need(lower).value;
    const auto& hi = need(upper).value;
    if (!zenon::philebian::is_double_pair(lo, hi) ||
        zenon::philebian::lex_compare(lo, hi) != zenon::philebian::Ordering::Less) {
      throw zenon::PreconditionError("gap check needs the two expansions of a dyadic rational");
    }
    const auto items = unwrap_all<zenon::philebian::Seq>(candidates, count);
    produce(out, [&] { return zenon::philebian::gap_check({lo, hi}, items) ? 1 : 0; });
  });
}

zn_status zn_seq_enumerate(size_t max_prefix, zn_seq*** out, size_t* count) {
  return guarded([&] {
    out_slot(out);
    out_slot(count);
    const auto periods = zenon::philebian::standard_periods();
    const auto family = zenon::philebian::enumerate(max_prefix, periods);
    auto** items = static_cast<zn_seq**>(std::calloc(family.size() + 1, sizeof(zn_seq*)));
    if (items == nullptr) throw std::bad_alloc();
    try {
      for (size_t i = 0; i < family.size(); ++i) items[i] = new zn_seq{family[i]};
    } catch (...) {
      zn_seq_array_free(items, family.size());
      throw;
    }
    *out = items;
    *count = family.size();
  });
}

void zn_seq_array_free(zn_seq** items, size_t count) {
  if (items == nullptr) return;
  for (size_t i = 0; i < count; ++i) delete items[i];
  std::free(items);
}

zn_status zn_poincare_chain(const zn_rational* epsilon, const zn_rational* const* values,
                            size_t count, zn_format format, char** out) {
  return guarded([&] {
    const auto vs = unwrap_all<zenon::BigRational>(values, count);
    const auto report = zenon::philebian::poincare_chain(need(epsilon).value, vs);
    produce(out, [&] { return dup(zenon::report::render(report, to_format(format))); });
  });
}

zn_status zn_dual_new(const zn_rational* a, const zn_rational* b, zn_dual** out) {
  return guarded([&] {
    produce(out, [&] { return new zn_dual{zenon::nilpotent::Dual(need(a).value, need(b).value)}; });
  });
}

zn_status zn_dual_parse(const char* text, zn_dual** out) {
  return guarded([&] {
    produce(out, [&] { return new zn_dual{zenon::nilpotent::parse_dual(text_arg(text))}; });
  });
}

void zn_dual_free(zn_dual* d) { delete d; }

zn_status zn_dual_parts(const zn_dual* d, zn_rational** a, zn_rational** b) {
  return guarded([&] {
    out_slot(a);
    out_slot(b);
    auto ra = std::make_unique<zn_rational>(zn_rational{need(d).value.a});
    auto rb = std::make_unique<zn_rational>(zn_rational{need(d).value.b});
    *a = ra.release();
    *b = rb.release();
  });
}

zn_status zn_dual_render(const zn_dual* d, zn_format format, char** out) {
  return guarded([&] {
    produce(out, [&] { return dup(zenon::report::render(need(d).value, to_format(format))); });
  });
}

zn_status zn_dual_add(const zn_dual* x, const zn_dual* y, zn_dual** out) {
  return guarded([&] {
    produce(out, [&] { return new zn_dual{zenon::nilpotent::add(need(x).value, need(y).value)}; });
  });
}

zn_status zn_dual_mul(const zn_dual* x, const zn_dual* y, zn_dual** out) {
  return guarded([&] {
    produce(out, [&] { return new zn_dual{zenon::nilpotent::mul(need(x).value, need(y).value)}; });
  });
}

zn_status zn_dual_div(const zn_dual* x, const zn_dual* y, zn_dual** out) {
  return guarded([&] {
    produce(out, [&] { return new zn_dual{zenon::nilpotent::div(need(x).value, need(y).value)}; });
  });
}

zn_status zn_dual_lex_le(const zn_dual* x, const zn_dual* y, int* out) {
  return guarded([&] {
    produce(out, [&] { return zenon::nilpotent::lex_le(need(x).value, need(y).value) ? 1 : 0; });
  });
}

zn_status zn_dual_embed(const zn_rational* r, zn_dual** out) {
  return guarded([&] { produce(out, [&] { return new zn_dual{zenon::nilpotent::embed(need(r).value)}; }); });
}

zn_status zn_dual_boost(const zn_dual* d, const zn_rational* w, zn_dual** out) {
  return guarded([&] {
    produce(out, [&] { return new zn_dual{zenon::nilpotent::boost(need(d).value, {need(w).value})}; });
  });
}

zn_status zn_dual_worldline(const zn_dual* d, const zn_rational* t, zn_rational** out) {
  return guarded([&] {
    produce(out, [&] { return new zn_rational{zenon::nilpotent::worldline_position(need(d).value, need(t).value)}; });
  });
}

zn_status zn_poly_parse(const char* text, zn_poly** out) {
  return guarded([&] {
    produce(out, [&] { return new zn_poly{zenon::nilpotent::parse_polynomial(text_arg(text))}; });
  });
}

void zn_poly_free(zn_poly* p) { delete p; }

zn_status zn_poly_eval_dual(const zn_poly* p, const zn_dual* x, zn_dual** out) {
  return guarded([&] {
    produce(out, [&] { return new zn_dual{zenon::nilpotent::eval_dual(need(p).value, need(x).value)}; });
  });
}

zn_status zn_paradox_dichotomy(uint64_t n, zn_format format, char** out) {
  return guarded([&] {
    produce(out, [&] { return dup(zenon::report::render(zenon::paradoxes::dichotomy(n), to_format(format))); });
  });
}

zn_status zn_paradox_achilles(const zn_rational* r, const zn_rational* s, uint64_t k,
                              zn_format format, char** out) {
  return guarded([&] {
    const auto report = zenon::paradoxes::achilles(need(r).value, need(s).value, k);
    produce(out, [&] { return dup(zenon::report::render(report, to_format(format))); });
  });
}

zn_status zn_paradox_stadium(uint64_t rows, uint64_t ticks, zn_format format, char** out) {
  return guarded([&] {
    produce(out, [&] { return dup(zenon::report::render(zenon::paradoxes::stadium(rows, ticks), to_format(format))); });
  });
}

zn_status zn_paradox_arrow(uint64_t n, zn_format format, char** out) {
  return guarded([&] {
    produce(out, [&] { return dup(zenon::report::render(zenon::paradoxes::arrow(n), to_format(format))); });
  });
}

zn_status zn_check_run(zn_format format, char** out, int* all_passed) {
  return guarded([&] {
    out_slot(out);
    if (all_passed == nullptr) throw NullArgument();
    const auto results = zenon::check::run_all();
    *out = dup(zenon::report::render(results, to_format(format)));
    *all_passed = zenon::check::all_passed(results) ? 1 : 0;
  });
}

}  // extern "C"
