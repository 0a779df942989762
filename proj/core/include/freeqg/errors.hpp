// Copyright 2026 The freeqg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FREEQG_ERRORS_HPP
#define FREEQG_ERRORS_HPP

#include <stdexcept>

namespace freeqg {

// Argument outside the mathematical domain of an operation (N < 2, t > N, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Malformed textual input (word strings, CLI operands).
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A requested table would exceed its configured size cap.
class ResourceError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Broken internal invariant. Never a data condition.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace freeqg

#endif  // FREEQG_ERRORS_HPP
