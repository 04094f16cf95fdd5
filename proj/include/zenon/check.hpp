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

#ifndef ZENON_CHECK_HPP_
#define ZENON_CHECK_HPP_

#include <string>
#include <vector>

namespace zenon::check {

struct Result {
  std::string group;
  std::string name;
  bool passed;
  std::string detail;
};

/// Runs every module's invariant checks. The groups are evaluated
/// concurrently; results always come back in the same order, with fixed
/// random seeds, so the report is reproducible byte for byte.
std::vector<Result> run_all();

std::vector<Result> run_divider();
std::vector<Result> run_philebian();
std::vector<Result> run_nilpotent();
std::vector<Result> run_paradoxes();

bool all_passed(const std::vector<Result>& results);

}  // namespace zenon::check

#endif  // ZENON_CHECK_HPP_
