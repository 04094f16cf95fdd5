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

// zenon-cli: command-line front end over the libzenon C interface.
//
// Exit codes: 0 success, 1 domain error (structured JSON on stdout),
// 2 usage error (message on stderr).

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "zenon/zenon.h"

namespace {

struct Failure {
  int exit_code;
  std::string text;
};

Failure usage(const std::string& message) { return {2, "error: " + message + "\n"}; }

void ok(zn_status status) {
  if (status == ZN_OK) return;
  if (status == ZN_E_PARSE || status == ZN_E_NULL_ARGUMENT) {
    throw usage(zn_last_error());
  }
  nlohmann::json err = {
      {"error", {{"code", zn_status_name(status)}, {"message", zn_last_error()}}}};
  throw Failure{1, err.dump() + "\n"};
}

template <typename T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using Rational = std::unique_ptr<zn_rational, Deleter<zn_rational, zn_rational_free>>;
using Seq = std::unique_ptr<zn_seq, Deleter<zn_seq, zn_seq_free>>;
using Dual = std::unique_ptr<zn_dual, Deleter<zn_dual, zn_dual_free>>;
using Poly = std::unique_ptr<zn_poly, Deleter<zn_poly, zn_poly_free>>;
using Text = std::unique_ptr<char, Deleter<char, zn_string_free>>;

std::string take(char* raw) {
  Text owned(raw);
  return owned ? std::string(owned.get()) : std::string();
}

Rational rational(const std::string& text) {
  zn_rational* out = nullptr;
  ok(zn_rational_parse(text.c_str(), &out));
  return Rational(out);
}

Seq seq(const std::string& text) {
  zn_seq* out = nullptr;
  ok(zn_seq_parse(text.c_str(), &out));
  return Seq(out);
}

Dual dual(const std::string& text) {
  zn_dual* out = nullptr;
  ok(zn_dual_parse(text.c_str(), &out));
  return Dual(out);
}

std::string str(const zn_rational* q) {
  char* out = nullptr;
  ok(zn_rational_to_string(q, &out));
  return take(out);
}

std::string str(const zn_seq* x) {
  char* out = nullptr;
  ok(zn_seq_to_string(x, &out));
  return take(out);
}

zn_format format_of(const std::string& name) {
  zn_format out{};
  ok(zn_format_parse(name.c_str(), &out));
  return out;
}

// A single scalar answer: bare text, or {"<key>": "<text>"} as JSON.
std::string scalar(const std::string& key, const std::string& text, const std::string& fmt) {
  if (format_of(fmt) == ZN_FORMAT_JSON) return nlohmann::json{{key, text}}.dump(2) + "\n";
  return text + "\n";
}

std::string render(const zn_dual* d, const std::string& fmt) {
  char* out = nullptr;
  ok(zn_dual_render(d, format_of(fmt), &out));
  return take(out);
}

std::vector<std::string> split(const std::string& list) {
  std::vector<std::string> out;
  std::stringstream in(list);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(item);
  return out;
}

std::string ordering_name(zn_ordering o) {
  switch (o) {
    case ZN_LESS:
      return "less";
    case ZN_EQUAL:
      return "equal";
    case ZN_GREATER:
      return "greater";
  }
  return "?";
}

struct Options {
  std::string format;
  std::uint64_t n = 0;
  std::uint64_t k = 0;
  std::uint64_t rows = 0;
  std::string word;
  std::string x, y, seq_text, k_text, r, s, epsilon, values, poly, w, t, which;
  std::vector<std::string> candidates;
  std::optional<std::size_t> enumerate;
};

// --------------------------------------------------------------------------

std::string tree_command(const std::string& name, const Options& o) {
  char* out = nullptr;
  const auto fmt = format_of(o.format);
  if (name == "expand") {
    // Enumerating 2^n leaves; beyond this the output is not useful text.
    if (o.n > 24) throw usage("tree expand supports --n up to 24");
    ok(zn_tree_expand(o.n, fmt, &out));
  } else if (name == "counts") {
    ok(zn_tree_counts(o.n, fmt, &out));
  } else {
    ok(zn_tree_interval(o.word.c_str(), fmt, &out));
  }
  return take(out);
}

std::string seq_command(const std::string& name, const Options& o) {
  if (name == "compare") {
    zn_ordering ord{};
    ok(zn_seq_compare(seq(o.x).get(), seq(o.y).get(), &ord));
    return scalar("ordering", ordering_name(ord), o.format);
  }
  if (name == "value") {
    zn_rational* v = nullptr;
    ok(zn_seq_value(seq(o.seq_text).get(), &v));
    return scalar("value", str(Rational(v).get()), o.format);
  }
  if (name == "canon") {
    zn_seq* c = nullptr;
    ok(zn_seq_canonical(seq(o.seq_text).get(), &c));
    return scalar("sequence", str(Seq(c).get()), o.format);
  }
  if (name == "classify") {
    zn_class c{};
    ok(zn_seq_classify(seq(o.seq_text).get(), &c));
    return scalar("class", c == ZN_CLASS_A ? "A" : "B", o.format);
  }
  if (name == "witness") {
    zn_seq* m = nullptr;
    ok(zn_seq_density_witness(seq(o.x).get(), seq(o.y).get(), &m));
    return scalar("sequence", str(Seq(m).get()), o.format);
  }
  if (name == "pair" || name == "gap") {
    zn_seq* lo = nullptr;
    zn_seq* hi = nullptr;
    ok(zn_seq_dyadic_pair(o.k_text.c_str(), o.n, &lo, &hi));
    Seq lower(lo), upper(hi);
    zn_rational* v = nullptr;
    ok(zn_seq_value(lower.get(), &v));
    const std::string value = str(Rational(v).get());
    if (name == "pair") {
      const auto fmt = format_of(o.format);
      if (fmt == ZN_FORMAT_JSON) {
        return nlohmann::json{{"lower", str(lower.get())},
                              {"upper", str(upper.get())},
                              {"value", value}}
                   .dump(2) +
               "\n";
      }
      const std::string sep = fmt == ZN_FORMAT_CSV ? "," : "  ";
      return "lower" + sep + "upper" + sep + "value\n" + str(lower.get()) + sep +
             str(upper.get()) + sep + value + "\n";
    }
    std::vector<Seq> owned;
    for (const auto& c : o.candidates) owned.push_back(seq(c));
    zn_seq** family = nullptr;
    std::size_t family_size = 0;
    if (o.enumerate) ok(zn_seq_enumerate(*o.enumerate, &family, &family_size));
    std::vector<const zn_seq*> all;
    for (const auto& c : owned) all.push_back(c.get());
    for (std::size_t i = 0; i < family_size; ++i) all.push_back(family[i]);
    int gap = 0;
    const auto status = zn_seq_gap_check(lower.get(), upper.get(), all.data(), all.size(), &gap);
    zn_seq_array_free(family, family_size);
    ok(status);
    if (format_of(o.format) == ZN_FORMAT_JSON) {
      return nlohmann::json{{"lower", str(lower.get())},
                            {"upper", str(upper.get())},
                            {"candidates", all.size()},
                            {"gap", gap == 1}}
                 .dump(2) +
             "\n";
    }
    return std::string(gap ? "true" : "false") + "\n";
  }
  // poincare
  const auto eps = rational(o.epsilon);
  std::vector<Rational> owned;
  for (const auto& v : split(o.values)) owned.push_back(rational(v));
  std::vector<const zn_rational*> vs;
  for (const auto& v : owned) vs.push_back(v.get());
  char* out = nullptr;
  ok(zn_poincare_chain(eps.get(), vs.data(), vs.size(), format_of(o.format), &out));
  return take(out);
}

std::string dual_command(const std::string& name, const Options& o) {
  zn_dual* out = nullptr;
  if (name == "add" || name == "mul" || name == "div") {
    const auto x = dual(o.x), y = dual(o.y);
    if (name == "add") ok(zn_dual_add(x.get(), y.get(), &out));
    if (name == "mul") ok(zn_dual_mul(x.get(), y.get(), &out));
    if (name == "div") ok(zn_dual_div(x.get(), y.get(), &out));
  } else if (name == "eval") {
    zn_poly* p = nullptr;
    ok(zn_poly_parse(o.poly.c_str(), &p));
    Poly poly(p);
    ok(zn_poly_eval_dual(poly.get(), dual(o.x).get(), &out));
  } else if (name == "boost") {
    ok(zn_dual_boost(dual(o.x).get(), rational(o.w).get(), &out));
  } else {
    zn_rational* pos = nullptr;
    ok(zn_dual_worldline(dual(o.x).get(), rational(o.t).get(), &pos));
    return scalar("position", str(Rational(pos).get()), o.format);
  }
  return render(Dual(out).get(), o.format);
}

std::string paradox_command(const std::string& which, const Options& o,
                            const CLI::App& cmd) {
  auto require = [&](const char* opt) {
    if (cmd.count(opt) == 0) throw usage("paradox " + which + " requires " + opt);
  };
  char* out = nullptr;
  const auto fmt = format_of(o.format);
  if (which == "dichotomy") {
    require("--n");
    ok(zn_paradox_dichotomy(o.n, fmt, &out));
  } else if (which == "achilles") {
    require("--r");
    require("--s");
    require("--k");
    ok(zn_paradox_achilles(rational(o.r).get(), rational(o.s).get(), o.k, fmt, &out));
  } else if (which == "stadium") {
    require("--rows");
    require("--k");
    ok(zn_paradox_stadium(o.rows, o.k, fmt, &out));
  } else if (which == "arrow") {
    require("--n");
    ok(zn_paradox_arrow(o.n, fmt, &out));
  } else {
    throw usage("unknown paradox '" + which + "'");
  }
  return take(out);
}

int run(int argc, char** argv) {
  CLI::App app{"Exact division trees, binary sequences, nilpotent numbers and Zeno's paradoxes",
               "zenon-cli"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(zn_version()));
  Options o;

  auto* tree = app.add_subcommand("tree", "Division tree of the unit rod");
  tree->require_subcommand(1);
  for (auto* sub : {tree->add_subcommand("expand", "Leaves of the depth-n tree"),
                    tree->add_subcommand("counts", "Partition and part counts")}) {
    sub->add_option("--n", o.n, "Depth")->required();
    sub->add_option("--format", o.format, "json|csv|plain")->default_str("json");
  }
  auto* interval = tree->add_subcommand("interval", "Leaf interval and division point of a node");
  interval->add_option("--word", o.word, "Node label, e.g. 101 (empty for the whole rod)")
      ->required();
  interval->add_option("--format", o.format, "json|csv|plain")->default_str("json");

  auto* seqs = app.add_subcommand("seq", "Eventually periodic binary sequences prefix:(period)");
  seqs->require_subcommand(1);
  for (const char* name : {"compare", "witness"}) {
    auto* sub = seqs->add_subcommand(name);
    sub->add_option("--x", o.x)->required();
    sub->add_option("--y", o.y)->required();
  }
  for (const char* name : {"value", "canon", "classify"}) {
    seqs->add_subcommand(name)->add_option("--seq", o.seq_text)->required();
  }
  for (const char* name : {"pair", "gap"}) {
    auto* sub = seqs->add_subcommand(name);
    sub->add_option("--k", o.k_text, "Numerator of k/2^n")->required();
    sub->add_option("--n", o.n, "Exponent of k/2^n")->required();
  }
  auto* gap = seqs->get_subcommand("gap");
  gap->add_option("--candidate", o.candidates, "Candidate sequence (repeatable)");
  gap->add_option("--enumerate", o.enumerate,
                  "Also test every sequence with a prefix of at most this many bits");
  auto* poincare = seqs->add_subcommand("poincare", "Indistinguishability chain");
  poincare->add_option("--epsilon", o.epsilon)->required();
  poincare->add_option("--values", o.values, "Comma separated, strictly increasing")->required();
  seqs->get_subcommand("compare")->description("First-difference comparison");
  for (auto* sub : seqs->get_subcommands({})) {
    sub->add_option("--format", o.format, "json|csv|plain")
        ->default_str(sub->get_name() == "poincare" ? "json" : "plain");
  }

  auto* duals = app.add_subcommand("dual", "Nilpotent numbers a + b·h given as a,b");
  duals->require_subcommand(1);
  for (const char* name : {"add", "mul", "div"}) {
    auto* sub = duals->add_subcommand(name);
    sub->add_option("--x", o.x)->required();
    sub->add_option("--y", o.y)->required();
  }
  auto* eval = duals->add_subcommand("eval", "Evaluate a polynomial at a dual number");
  eval->add_option("--poly", o.poly, "Coefficients c0,c1,... constant term first")->required();
  eval->add_option("--x", o.x)->required();
  auto* boost = duals->add_subcommand("boost", "Galilean boost of the velocity component");
  boost->add_option("--x", o.x)->required();
  boost->add_option("--w", o.w)->required();
  auto* worldline = duals->add_subcommand("worldline", "Position a + b t");
  worldline->add_option("--x", o.x)->required();
  worldline->add_option("--t", o.t)->required();
  for (auto* sub : duals->get_subcommands({})) {
    sub->add_option("--format", o.format, "json|csv|plain")->default_str("plain");
  }

  auto* paradox = app.add_subcommand("paradox", "Zeno's motion paradoxes");
  paradox->add_option("--which", o.which, "dichotomy|achilles|stadium|arrow");
  paradox->add_option("--n", o.n, "Depth (dichotomy, arrow)");
  paradox->add_option("--r", o.r, "Speed ratio (achilles)");
  paradox->add_option("--s", o.s, "Head start (achilles)");
  paradox->add_option("--k", o.k, "Steps (achilles) or ticks (stadium)");
  paradox->add_option("--rows,--N", o.rows, "Bodies per row (stadium)");
  paradox->add_option("--format", o.format, "json|csv|plain")->default_str("json");
  for (const char* name : {"dichotomy", "achilles", "stadium", "arrow"}) {
    paradox->add_subcommand(name)->fallthrough();
  }

  auto* check = app.add_subcommand("check", "Run every invariant suite");
  check->add_option("--format", o.format, "json|csv|plain")->default_str("plain");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    std::string output;
    auto* cmd = app.get_subcommands().front();
    auto* sub = cmd->get_subcommands().empty() ? nullptr : cmd->get_subcommands().front();
    const std::string name = cmd->get_name();
    if (o.format.empty()) {
      // default_str only affects help text; the fallback is per command.
      o.format = (name == "tree" || name == "paradox" || (sub && sub->get_name() == "poincare"))
                     ? "json"
                     : "plain";
    }
    if (name == "tree") {
      output = tree_command(sub->get_name(), o);
    } else if (name == "seq") {
      output = seq_command(sub->get_name(), o);
    } else if (name == "dual") {
      output = dual_command(sub->get_name(), o);
    } else if (name == "paradox") {
      std::string which = o.which;
      if (sub) {
        if (!which.empty() && which != sub->get_name()) {
          throw usage("--which " + which + " conflicts with subcommand " + sub->get_name());
        }
        which = sub->get_name();
      }
      if (which.empty()) throw usage("paradox needs a subcommand or --which");
      output = paradox_command(which, o, *cmd);
    } else {
      char* out = nullptr;
      int passed = 0;
      ok(zn_check_run(format_of(o.format), &out, &passed));
      std::cout << take(out);
      return passed ? 0 : 1;
    }
    std::cout << output;
    return 0;
  } catch (const Failure& f) {
    (f.exit_code == 2 ? std::cerr : std::cout) << f.text;
    return f.exit_code;
  }
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
