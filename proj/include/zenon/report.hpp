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

#ifndef ZENON_REPORT_HPP_
#define ZENON_REPORT_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "zenon/bitword.hpp"
#include "zenon/check.hpp"
#include "zenon/divider.hpp"
#include "zenon/nilpotent.hpp"
#include "zenon/paradoxes.hpp"
#include "zenon/philebian.hpp"

// Text renderings of every result type. JSON keys come out sorted,
// rationals as "p/q" strings and big integers as decimal strings; CSV and
// plain carry the same columns, plain padded into aligned columns.
namespace zenon::report {

enum class OutputFormat { Json, Csv, Plain };

/// "json", "csv" or "plain"; throws ParseError otherwise.
OutputFormat parse_format(std::string_view name);

std::string render_leaves(const divider::DivisionTree& tree, OutputFormat format);
std::string render_counts(std::uint64_t n, const divider::Counts& counts,
                          OutputFormat format);
std::string render_interval(const BitWord& word, OutputFormat format);

std::string render(const philebian::DoublePair& pair, OutputFormat format);
std::string render(const philebian::PoincareReport& report, OutputFormat format);

std::string render(const nilpotent::Dual& d, OutputFormat format);

std::string render(const paradoxes::DichotomyReport& report, OutputFormat format);
std::string render(const paradoxes::AchillesReport& report, OutputFormat format);
std::string render(const paradoxes::StadiumReport& report, OutputFormat format);
std::string render(const paradoxes::ArrowReport& report, OutputFormat format);

std::string render(const std::vector<check::Result>& results, OutputFormat format);

/// A single scalar result: the bare text for plain and csv, {"<key>": text}
/// for json.
std::string render_scalar(std::string_view key, std::string_view text,
                          OutputFormat format);

}  // namespace zenon::report

#endif  // ZENON_REPORT_HPP_
