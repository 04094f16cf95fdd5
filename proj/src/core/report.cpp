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

#include "zenon/report.hpp"

#include <algorithm>
#include <json.hpp>

#include "zenon/errors.hpp"

namespace zenon::report {
namespace {

using json = nlohmann::json;
using Row = std::vector<std::string>;

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string table(const Row& header, const std::vector<Row>& rows, OutputFormat format) {
  std::string out;
  if (format == OutputFormat::Csv) {
    auto line = [&out](const Row& r) {
      for (std::size_t i = 0; i < r.size(); ++i) {
        if (i) out += ',';
        out += csv_field(r[i]);
      }
      out += '\n';
    };
    line(header);
    for (const auto& r : rows) line(r);
    return out;
  }
  std::vector<std::size_t> width(header.size());
  for (std::size_t i = 0; i < header.size(); ++i) width[i] = header[i].size();
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
  }
  auto line = [&](const Row& r) {
    std::string text;
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (i) text += "  ";
      text += r[i];
      if (i + 1 < r.size()) text.append(width[i] - r[i].size(), ' ');
    }
    out += text + '\n';
  };
  line(header);
  Row rule;
  for (auto w : width) rule.emplace_back(w, '-');
  line(rule);
  for (const auto& r : rows) line(r);
  return out;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string s(const BigRational& q) { return to_string(q); }
std::string s(const BigInt& z) { return to_string(z); }
std::string s(std::uint64_t v) { return std::to_string(v); }
std::string s(std::int64_t v) { return std::to_string(v); }

const char* status_label(bool passed) { return passed ? "PASS" : "FAIL"; }

}  // namespace

OutputFormat parse_format(std::string_view name) {
  if (name == "json") return OutputFormat::Json;
  if (name == "csv") return OutputFormat::Csv;
  if (name == "plain") return OutputFormat::Plain;
  throw ParseError("unknown output format '" + std::string(name) + "'");
}

std::string render_leaves(const divider::DivisionTree& tree, OutputFormat format) {
  json arr = json::array();
  std::vector<Row> rows;
  tree.for_each_leaf([&](const BitWord& label, const divider::DyadicInterval& iv) {
    if (format == OutputFormat::Json) {
      arr.push_back({{"label", label.str()}, {"lower", s(iv.lower)}, {"upper", s(iv.upper)}});
    } else {
      rows.push_back({label.str(), s(iv.lower), s(iv.upper)});
    }
    return true;
  });
  if (format == OutputFormat::Json) return dump(arr);
  return table({"label", "lower", "upper"}, rows, format);
}

std::string render_counts(std::uint64_t n, const divider::Counts& counts,
                          OutputFormat format) {
  if (format == OutputFormat::Json) {
    return dump({{"depth", n}, {"partitions", s(counts.partitions)}, {"parts", s(counts.parts)}});
  }
  return table({"depth", "partitions", "parts"},
               {{s(n), s(counts.partitions), s(counts.parts)}}, format);
}

std::string render_interval(const BitWord& word, OutputFormat format) {
  const auto iv = divider::leaf_interval(word);
  const auto mid = divider::division_point(word);
  if (format == OutputFormat::Json) {
    return dump({{"label", word.str()},
                 {"lower", s(iv.lower)},
                 {"upper", s(iv.upper)},
                 {"division_point", s(mid)}});
  }
  return table({"label", "lower", "upper", "division_point"},
               {{word.str(), s(iv.lower), s(iv.upper), s(mid)}}, format);
}

std::string render(const philebian::DoublePair& pair, OutputFormat format) {
  const auto v = philebian::value(pair.lower);
  if (format == OutputFormat::Json) {
    return dump({{"lower", pair.lower.str()}, {"upper", pair.upper.str()}, {"value", s(v)}});
  }
  return table({"lower", "upper", "value"}, {{pair.lower.str(), pair.upper.str(), s(v)}},
               format);
}

std::string render(const philebian::PoincareReport& report, OutputFormat format) {
  const auto& v = report.values;
  if (format == OutputFormat::Json) {
    json values = json::array();
    for (const auto& x : v) values.push_back(s(x));
    json same = json::array();
    for (const auto& p : report.indistinguishable) same.push_back({s(v[p.i]), s(v[p.j])});
    json apart = json::array();
    for (const auto& p : report.distinguishable) apart.push_back({s(v[p.i]), s(v[p.j])});
    json witnesses = json::array();
    for (const auto& w : report.witnesses) {
      witnesses.push_back({s(v[w.a]), s(v[w.b]), s(v[w.c])});
    }
    return dump({{"epsilon", s(report.epsilon)},
                 {"values", values},
                 {"indistinguishable", same},
                 {"distinguishable", apart},
                 {"witnesses", witnesses},
                 {"intransitive", report.intransitive()}});
  }
  std::vector<Row> rows;
  for (const auto& p : report.indistinguishable) {
    rows.push_back({"indistinguishable", s(v[p.i]) + " ~ " + s(v[p.j])});
  }
  for (const auto& p : report.distinguishable) {
    rows.push_back({"distinguishable", s(v[p.i]) + " < " + s(v[p.j])});
  }
  for (const auto& w : report.witnesses) {
    rows.push_back({"witness", s(v[w.a]) + " ~ " + s(v[w.b]) + ", " + s(v[w.b]) + " ~ " +
                                   s(v[w.c]) + ", " + s(v[w.a]) + " < " + s(v[w.c])});
  }
  rows.push_back({"intransitive", report.intransitive() ? "true" : "false"});
  return table({"kind", "relation"}, rows, format);
}

std::string render(const nilpotent::Dual& d, OutputFormat format) {
  switch (format) {
    case OutputFormat::Json:
      return dump({{"a", s(d.a)}, {"b", s(d.b)}});
    case OutputFormat::Csv:
      return table({"a", "b"}, {{s(d.a), s(d.b)}}, format);
    case OutputFormat::Plain:
      break;
  }
  return nilpotent::to_string(d) + "\n";
}

std::string render(const paradoxes::DichotomyReport& report, OutputFormat format) {
  if (format == OutputFormat::Json) {
    json steps = json::array();
    for (const auto& x : report.steps) steps.push_back(s(x));
    return dump({{"paradox", "dichotomy"},
                 {"depth", report.depth},
                 {"steps", steps},
                 {"cumulative", s(report.cumulative)},
                 {"remaining", s(report.remaining)},
                 {"partitions", s(report.partitions)},
                 {"parts", s(report.parts)}});
  }
  std::vector<Row> rows;
  BigRational cumulative = 0;
  for (std::uint64_t i = 0; i < report.steps.size(); ++i) {
    cumulative += report.steps[i];
    rows.push_back({s(i + 1), s(report.steps[i]), s(cumulative), s(BigRational(1 - cumulative)),
                    s(i + 1), s(pow2(i + 1))});
  }
  return table({"step", "length", "cumulative", "remaining", "partitions", "parts"}, rows,
               format);
}

std::string render(const paradoxes::AchillesReport& report, OutputFormat format) {
  if (format == OutputFormat::Json) {
    json points = json::array();
    for (const auto& p : report.points) points.push_back(s(p));
    return dump({{"paradox", "achilles"},
                 {"ratio", s(report.ratio)},
                 {"head_start", s(report.head_start)},
                 {"points", points},
                 {"limit", s(report.limit)}});
  }
  std::vector<Row> rows;
  for (std::uint64_t i = 0; i < report.points.size(); ++i) {
    rows.push_back({s(i), s(report.points[i]), s(BigRational(report.limit - report.points[i]))});
  }
  rows.push_back({"limit", s(report.limit), "0"});
  return table({"index", "point", "gap_to_limit"}, rows, format);
}

std::string render(const paradoxes::StadiumReport& report, OutputFormat format) {
  if (format == OutputFormat::Json) {
    return dump({{"paradox", "stadium"},
                 {"rows", report.state.rows},
                 {"ticks", report.state.ticks},
                 {"offset_a", report.state.offset_a},
                 {"offset_b", report.state.offset_b},
                 {"offset_c", report.state.offset_c},
                 {"passings_bc", report.passings_bc},
                 {"passings_ba", report.passings_ba},
                 {"ratio", s(report.ratio)}});
  }
  std::vector<Row> rows;
  for (const auto& t : report.history) {
    rows.push_back({s(t.state.ticks), s(t.state.offset_a), s(t.state.offset_b),
                    s(t.state.offset_c), s(t.passings_bc), s(t.passings_ba)});
  }
  return table({"tick", "offset_a", "offset_b", "offset_c", "passings_bc", "passings_ba"},
               rows, format);
}

std::string render(const paradoxes::ArrowReport& report, OutputFormat format) {
  if (format == OutputFormat::Json) {
    return dump({{"paradox", "arrow"},
                 {"depth", report.depth},
                 {"width", s(report.width)},
                 {"count", s(report.count)},
                 {"product", s(report.product)}});
  }
  return table({"depth", "width", "count", "product"},
               {{s(report.depth), s(report.width), s(report.count), s(report.product)}},
               format);
}

std::string render(const std::vector<check::Result>& results, OutputFormat format) {
  if (format == OutputFormat::Json) {
    json arr = json::array();
    for (const auto& r : results) {
      arr.push_back({{"group", r.group},
                     {"name", r.name},
                     {"passed", r.passed},
                     {"detail", r.detail}});
    }
    return dump({{"checks", arr}, {"passed", check::all_passed(results)}});
  }
  std::vector<Row> rows;
  for (const auto& r : results) {
    rows.push_back({status_label(r.passed), r.group + "." + r.name, r.detail});
  }
  return table({"status", "check", "detail"}, rows, format);
}

std::string render_scalar(std::string_view key, std::string_view text,
                          OutputFormat format) {
  if (format == OutputFormat::Json) return dump({{std::string(key), std::string(text)}});
  return std::string(text) + "\n";
}

}  // namespace zenon::report
