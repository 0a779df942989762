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

#ifndef FREEQG_BIGINT_HPP
#define FREEQG_BIGINT_HPP

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace freeqg {

/// Exact integer used for dimensions and fusion multiplicities.
using BigInt = boost::multiprecision::cpp_int;

inline std::string to_decimal(const BigInt& value) { return value.str(); }

inline double to_double(const BigInt& value) {
  return value.convert_to<double>();
}

}  // namespace freeqg

#endif  // FREEQG_BIGINT_HPP
