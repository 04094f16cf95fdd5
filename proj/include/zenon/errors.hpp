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

#ifndef ZENON_ERRORS_HPP_
#define ZENON_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace zenon {

// Malformed textual input (rational literal, bit word, sequence, ...).
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An operation was called outside its precondition.
class PreconditionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Division by a dual number with zero real part.
class ZeroDivisorError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// Achilles with speed ratio r <= 1: the pursuer never closes the gap.
class NonClosingPursuitError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

}  // namespace zenon

#endif  // ZENON_ERRORS_HPP_
