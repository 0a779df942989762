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

#ifndef FREEQG_TOOLS_CLI_COMMANDS_HPP
#define FREEQG_TOOLS_CLI_COMMANDS_HPP

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "cli/output_record.hpp"
#include "freeqg/chebyshev.hpp"
#include "freeqg/multiplier_nets.hpp"

namespace freeqg::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitVerifyFailed = 1,
  kExitParse = 2,
  kExitDomain = 3,
  kExitResource = 4,
};

struct FuseArgs {
  std::string group;
  std::vector<std::string> operands;
  std::optional<int> N;
};

struct DimsArgs {
  std::string group;
  std::vector<std::string> labels;
  int N = 3;
};

struct CoeffsArgs {
  std::string group;
  double t = 0.0;
  int N = 3;
  unsigned m = 0;
  double t0 = kDefaultT0;
  std::string r_mode = "auto";  // "auto" = r(t), otherwise a number in [0, 1]
  std::size_t entry_cap = kDefaultEntryCap;
};

struct CertifyArgs {
  std::string group;
  double t = 0.0;
  double eps = 0.0;
  int N = 3;
  std::optional<double> D;
  std::optional<double> R;
  double t0 = kDefaultT0;
};

struct VerifyArgs {
  std::string suite;
  std::vector<int> Ns;                 // empty = suite default
  unsigned grid = 50;
  std::optional<unsigned> max_len;     // empty = suite default
  std::uint64_t seed = 42;
  std::size_t samples = 10000;
  double t0 = kDefaultT0;
};

OutputRecord cmd_fuse(const FuseArgs& args);
OutputRecord cmd_dims(const DimsArgs& args);
OutputRecord cmd_coeffs(const CoeffsArgs& args);
OutputRecord cmd_certify(const CertifyArgs& args);

/// Runs an invariant suite. Rows are {check, cases, failures}.
OutputRecord cmd_verify(const VerifyArgs& args);

/// True iff every row of a verify record has zero failures.
bool all_passed(const OutputRecord& record);

/// Full command line (without the program name). Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

Group parse_group(const std::string& text);
OrthLabel parse_orth_label(const std::string& text);
/// Word operand; "e" is accepted for the unit alongside the empty string.
FreeWord parse_word_operand(const std::string& text);

}  // namespace freeqg::cli

#endif  // FREEQG_TOOLS_CLI_COMMANDS_HPP
