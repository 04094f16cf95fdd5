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

/*
 * C interface to libzenon.
 *
 * Values (rationals, sequences, dual numbers, polynomials) live behind
 * opaque handles created by *_parse / *_new style functions and released
 * with the matching *_free. Every fallible call returns a zn_status; on
 * failure zn_last_error() describes the problem for the calling thread.
 * Strings handed out by the library are owned by the caller and released
 * with zn_string_free.
 */

#ifndef ZENON_ZENON_H_
#define ZENON_ZENON_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(ZENON_BUILDING_LIBRARY)
#    define ZN_API __declspec(dllexport)
#  else
#    define ZN_API __declspec(dllimport)
#  endif
#elif defined(__GNUC__) || defined(__clang__)
#  define ZN_API __attribute__((visibility("default")))
#else
#  define ZN_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum zn_status {
  ZN_OK = 0,
  ZN_E_NULL_ARGUMENT = 1,     /* a required pointer was NULL */
  ZN_E_PARSE = 2,             /* malformed literal or format name */
  ZN_E_PRECONDITION = 3,      /* operation called outside its domain */
  ZN_E_ZERO_DIVISOR = 4,      /* division by a dual with zero real part */
  ZN_E_NEVER_CLOSES = 5,      /* achilles with speed ratio <= 1 */
  ZN_E_INTERNAL = 6
} zn_status;

typedef enum zn_format {
  ZN_FORMAT_JSON = 0,
  ZN_FORMAT_CSV = 1,
  ZN_FORMAT_PLAIN = 2
} zn_format;

typedef enum zn_ordering { ZN_LESS = -1, ZN_EQUAL = 0, ZN_GREATER = 1 } zn_ordering;

typedef enum zn_class { ZN_CLASS_A = 0, ZN_CLASS_B = 1 } zn_class;

typedef struct zn_rational zn_rational;
typedef struct zn_seq zn_seq;
typedef struct zn_dual zn_dual;
typedef struct zn_poly zn_poly;

/* ---- library ---------------------------------------------------------- */

ZN_API const char* zn_version(void);
ZN_API const char* zn_last_error(void);
ZN_API const char* zn_status_name(zn_status status);
ZN_API void zn_string_free(char* s);
ZN_API zn_status zn_format_parse(const char* name, zn_format* out);

/* ---- rationals -------------------------------------------------------- */

/* "p/q" or "p". */
ZN_API zn_status zn_rational_parse(const char* text, zn_rational** out);
ZN_API zn_status zn_rational_to_string(const zn_rational* q, char** out);
ZN_API void zn_rational_free(zn_rational* q);

/* ---- divider ---------------------------------------------------------- */

/* Leaves of the depth-n tree as {label, lower, upper} records. */
ZN_API zn_status zn_tree_expand(uint64_t depth, zn_format format, char** out);
/* partitions = 2^n - 1 and parts = 2^n, rendered. */
ZN_API zn_status zn_tree_counts(uint64_t depth, zn_format format, char** out);
/* Decimal strings for the two counts. */
ZN_API zn_status zn_tree_count_values(uint64_t depth, char** partitions, char** parts);
/* Leaf interval and division point of a node label such as "101". */
ZN_API zn_status zn_tree_interval(const char* word, zn_format format, char** out);
ZN_API zn_status zn_leaf_interval(const char* word, zn_rational** lower,
                                  zn_rational** upper);
ZN_API zn_status zn_division_point(const char* word, zn_rational** out);

/* ---- sequences -------------------------------------------------------- */

/* "prefix:(period)", e.g. "10:(1)". The handle holds the normal form. */
ZN_API zn_status zn_seq_parse(const char* text, zn_seq** out);
ZN_API zn_status zn_seq_from_rational(const zn_rational* q, zn_seq** out);
ZN_API zn_status zn_seq_to_string(const zn_seq* x, char** out);
ZN_API void zn_seq_free(zn_seq* x);

ZN_API zn_status zn_seq_compare(const zn_seq* x, const zn_seq* y, zn_ordering* out);
ZN_API zn_status zn_seq_value(const zn_seq* x, zn_rational** out);
ZN_API zn_status zn_seq_classify(const zn_seq* x, zn_class* out);
ZN_API zn_status zn_seq_canonical(const zn_seq* x, zn_seq** out);
ZN_API zn_status zn_seq_density_witness(const zn_seq* x, const zn_seq* y, zn_seq** out);
/* Double pair of k / 2^n; k is a decimal integer literal. */
ZN_API zn_status zn_seq_dyadic_pair(const char* k, uint64_t n, zn_seq** lower,
                                    zn_seq** upper);
/* lower/upper must form a double pair. *out is 1 when no candidate lies
 * strictly between them, 0 otherwise. */
ZN_API zn_status zn_seq_gap_check(const zn_seq* lower, const zn_seq* upper,
                                  const zn_seq* const* candidates, size_t count,
                                  int* out);
/* All sequences with a prefix of at most max_prefix bits and a period in
 * {0, 1, 10, 01, 110}. Free each element with zn_seq_free and the array
 * with zn_seq_array_free. */
ZN_API zn_status zn_seq_enumerate(size_t max_prefix, zn_seq*** out, size_t* count);
ZN_API void zn_seq_array_free(zn_seq** items, size_t count);

ZN_API zn_status zn_poincare_chain(const zn_rational* epsilon,
                                   const zn_rational* const* values, size_t count,
                                   zn_format format, char** out);

/* ---- nilpotent numbers ------------------------------------------------ */

ZN_API zn_status zn_dual_new(const zn_rational* a, const zn_rational* b, zn_dual** out);
/* "a,b" with rational literals. */
ZN_API zn_status zn_dual_parse(const char* text, zn_dual** out);
ZN_API void zn_dual_free(zn_dual* d);
ZN_API zn_status zn_dual_parts(const zn_dual* d, zn_rational** a, zn_rational** b);
/* Plain: "a + b·h"; json: {"a": "p/q", "b": "p/q"}. */
ZN_API zn_status zn_dual_render(const zn_dual* d, zn_format format, char** out);

ZN_API zn_status zn_dual_add(const zn_dual* x, const zn_dual* y, zn_dual** out);
ZN_API zn_status zn_dual_mul(const zn_dual* x, const zn_dual* y, zn_dual** out);
/* ZN_E_ZERO_DIVISOR when y has zero real part. */
ZN_API zn_status zn_dual_div(const zn_dual* x, const zn_dual* y, zn_dual** out);
ZN_API zn_status zn_dual_lex_le(const zn_dual* x, const zn_dual* y, int* out);
ZN_API zn_status zn_dual_embed(const zn_rational* r, zn_dual** out);
ZN_API zn_status zn_dual_boost(const zn_dual* d, const zn_rational* w, zn_dual** out);
ZN_API zn_status zn_dual_worldline(const zn_dual* d, const zn_rational* t,
                                   zn_rational** out);

/* "c0,c1,...,cn", constant term first. */
ZN_API zn_status zn_poly_parse(const char* text, zn_poly** out);
ZN_API void zn_poly_free(zn_poly* p);
ZN_API zn_status zn_poly_eval_dual(const zn_poly* p, const zn_dual* x, zn_dual** out);

/* ---- paradoxes -------------------------------------------------------- */

ZN_API zn_status zn_paradox_dichotomy(uint64_t n, zn_format format, char** out);
ZN_API zn_status zn_paradox_achilles(const zn_rational* r, const zn_rational* s,
                                     uint64_t k, zn_format format, char** out);
ZN_API zn_status zn_paradox_stadium(uint64_t rows, uint64_t ticks, zn_format format,
                                    char** out);
ZN_API zn_status zn_paradox_arrow(uint64_t n, zn_format format, char** out);

/* ---- invariant suite -------------------------------------------------- */

/* *all_passed is 1 iff every check passed. */
ZN_API zn_status zn_check_run(zn_format format, char** out, int* all_passed);

#ifdef __cplusplus
}
#endif

#endif /* ZENON_ZENON_H_ */
