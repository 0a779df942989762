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

#include "cli/commands.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>

#include "CLI11.hpp"

#include "freeqg/errors.hpp"
#include "freeqg/fusion_orth.hpp"
#include "freeqg/fusion_unitary.hpp"

namespace freeqg::cli {

Group parse_group(const std::string& text) {
  if (text == "o") return Group::Orth;
  if (text == "u") return Group::Unit;
  throw freeqg::ParseError("--group must be 'o' or 'u', got '" + text + "'");
}

OrthLabel parse_orth_label(const std::string& text) {
  unsigned value = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc() || ptr != end) {
    throw freeqg::ParseError("'" + text + "' is not a non-negative integer label");
  }
  return OrthLabel{value};
}

FreeWord parse_word_operand(const std::string& text) {
  if (text == "e") return FreeWord{};
  return word_parse(text);
}

namespace {

Json label_json(const Label& label) {
  if (const auto* orth = std::get_if<OrthLabel>(&label)) return orth->n;
  return std::get<FreeWord>(label).display();
}

}  // namespace

OutputRecord cmd_fuse(const FuseArgs& args) {
  const Group group = parse_group(args.group);
  if (args.operands.empty()) throw freeqg::ParseError("fuse needs at least one operand");
  if (args.N && *args.N < 2) throw DomainError("N must be >= 2");

  OutputRecord record{"fuse"};
  record.params["group"] = args.group;
  record.params["operands"] = args.operands;
  if (args.N) record.params["N"] = *args.N;

  const auto add_row = [&](Json label, const BigInt& mult, auto dimension) {
    Json row = {{"label", std::move(label)}, {"multiplicity", big(mult)}};
    if (args.N) row["dimension"] = big(dimension());
    record.rows.push_back(std::move(row));
  };

  if (group == Group::Orth) {
    std::vector<OrthLabel> labels;
    for (const auto& operand : args.operands) labels.push_back(parse_orth_label(operand));
    for (const auto sum = fuse_orth_many(labels); const auto& [label, mult] : sum.terms()) {
      add_row(label.n, mult, [&] { return dim_orth(label.n, *args.N); });
    }
    return record;
  }

  std::vector<FreeWord> words;
  for (const auto& operand : args.operands) words.push_back(parse_word_operand(operand));
  std::map<FreeWord, BigInt> acc{{words.front(), 1}};
  for (std::size_t i = 1; i < words.size(); ++i) {
    std::map<FreeWord, BigInt> next;
    for (const auto& [word, mult] : acc) {
      for (const auto sum = fuse_unitary(word, words[i]);
           const auto& [term, term_mult] : sum.terms()) {
        next[term] += mult * term_mult;
      }
    }
    acc = std::move(next);
  }
  for (const auto& [word, mult] : acc) {
    add_row(word.display(), mult, [&] { return dim_unitary(word, *args.N); });
  }
  return record;
}

OutputRecord cmd_dims(const DimsArgs& args) {
  const Group group = parse_group(args.group);
  if (args.N < 2) throw DomainError("N must be >= 2");
  OutputRecord record{"dims"};
  record.params["group"] = args.group;
  record.params["N"] = args.N;
  record.params["labels"] = args.labels;
  for (const auto& text : args.labels) {
    if (group == Group::Orth) {
      const auto label = parse_orth_label(text);
      record.rows.push_back({{"label", label.n}, {"dimension", big(dim_orth(label.n, args.N))}});
    } else {
      const auto word = parse_word_operand(text);
      record.rows.push_back(
          {{"label", word.display()}, {"dimension", big(dim_unitary(word, args.N))}});
    }
  }
  return record;
}

OutputRecord cmd_coeffs(const CoeffsArgs& args) {
  const Group group = parse_group(args.group);
  std::optional<double> r;
  if (args.r_mode != "auto") {
    if (group == Group::Orth) throw freeqg::ParseError("--r applies only to --group u");
    double value = 0.0;
    const char* end = args.r_mode.data() + args.r_mode.size();
    auto [ptr, ec] = std::from_chars(args.r_mode.data(), end, value);
    if (ec != std::errc() || ptr != end) {
      throw freeqg::ParseError("--r must be 'auto' or a number, got '" + args.r_mode + "'");
    }
    r = value;
  }
  const ChebyParams params{args.N, args.t0};
  const MultiplierCoeffs coeffs = truncated_coeffs(group, args.t, args.m, params, r, args.entry_cap);

  OutputRecord record{"coeffs"};
  record.params["group"] = args.group;
  record.params["t"] = number(args.t);
  record.params["N"] = args.N;
  record.params["m"] = args.m;
  record.params["t0"] = number(args.t0);
  record.params["C_t0"] = number(decay_constant(args.t0));
  record.params["entries"] = coeffs.entries.size();
  if (coeffs.r) {
    record.params["r"] = number(*coeffs.r);
    record.params["r_mode"] = args.r_mode;
  }
  Json level_max = Json::array();
  for (double value : coeffs.level_max()) level_max.push_back(number(value));
  record.params["level_max"] = std::move(level_max);

  for (const auto& [label, value] : coeffs.entries) {
    record.rows.push_back(
        {{"label", label_json(label)}, {"level", level(label)}, {"coeff", number(value)}});
  }
  return record;
}

OutputRecord cmd_certify(const CertifyArgs& args) {
  const Group group = parse_group(args.group);
  if (group == Group::Orth && !args.D) throw freeqg::ParseError("--D is required for --group o");
  if (group == Group::Unit && !args.R) throw freeqg::ParseError("--R is required for --group u");
  if (group == Group::Orth && args.R) throw freeqg::ParseError("--R applies only to --group u");
  if (group == Group::Unit && args.D) throw freeqg::ParseError("--D applies only to --group o");

  const BoundParams bounds{args.D, args.R, args.t0};
  const TruncationCertificate cert = choose_truncation(args.t, args.eps, args.N, group, bounds);

  OutputRecord record{"certify"};
  record.params["group"] = args.group;
  record.params["t"] = number(args.t);
  record.params["N"] = args.N;
  record.params["eps"] = number(args.eps);
  record.params["t0"] = number(args.t0);
  if (args.D) record.params["D"] = number(*args.D);
  if (args.R) record.params["R"] = number(*args.R);
  record.rows.push_back({{"m", cert.m},
                         {"tail_bound", number(cert.tail_bound)},
                         {"eps", number(cert.target_eps)},
                         {"satisfied", cert.satisfied}});
  return record;
}

bool all_passed(const OutputRecord& record) {
  return std::all_of(record.rows.begin(), record.rows.end(),
                     [](const Json& row) { return row.at("failures").get<std::uint64_t>() == 0; });
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fusion rules, quantum dimensions and multiplier certificates for O_N^+ and U_N^+",
               "freeqg"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "json";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();

  FuseArgs fuse;
  int fuse_N = 0;
  auto* fuse_cmd = app.add_subcommand("fuse", "Decompose a tensor product of irreducibles");
  fuse_cmd->add_option("--group", fuse.group, "o (O_N^+) or u (U_N^+)")->required();
  auto* fuse_N_opt = fuse_cmd->add_option("--N", fuse_N, "Also report dimensions at this N");
  fuse_cmd->add_option("operands", fuse.operands, "Labels (o) or words over a,b (u)")
      ->required();

  DimsArgs dims;
  auto* dims_cmd = app.add_subcommand("dims", "Exact quantum dimensions");
  dims_cmd->add_option("--group", dims.group, "o or u")->required();
  dims_cmd->add_option("--N", dims.N, "Quantum group dimension N >= 2")->required();
  dims_cmd->add_option("labels", dims.labels, "Labels (o) or words (u)")->required();

  CoeffsArgs coeffs;
  auto* coeffs_cmd = app.add_subcommand("coeffs", "Truncated multiplier coefficient table");
  coeffs_cmd->add_option("--group", coeffs.group, "o or u")->required();
  coeffs_cmd->add_option("--t", coeffs.t, "Net parameter t in [t0, N]")->required();
  coeffs_cmd->add_option("--N", coeffs.N, "Quantum group dimension N >= 3")->required();
  coeffs_cmd->add_option("--m", coeffs.m, "Truncation level")->required();
  coeffs_cmd->add_option("--t0", coeffs.t0, "Decay anchor in (2, 3)")->capture_default_str();
  coeffs_cmd->add_option("--r", coeffs.r_mode, "'auto' for r(t), or a Poisson parameter in [0, 1]")
      ->capture_default_str();
  coeffs_cmd->add_option("--cap", coeffs.entry_cap, "Entry cap for U_N^+ tables")
      ->capture_default_str();

  CertifyArgs certify;
  double certify_D = 0.0, certify_R = 0.0;
  auto* certify_cmd = app.add_subcommand("certify", "Smallest truncation order meeting eps");
  certify_cmd->add_option("--group", certify.group, "o or u")->required();
  certify_cmd->add_option("--t", certify.t, "Net parameter t in [t0, N)")->required();
  certify_cmd->add_option("--eps", certify.eps, "Target accuracy")->required();
  certify_cmd->add_option("--N", certify.N, "Quantum group dimension N >= 3")->required();
  auto* D_opt = certify_cmd->add_option("--D", certify_D, "RD constant D_N (group o)");
  auto* R_opt = certify_cmd->add_option("--R", certify_R, "RD constant R_N (group u)");
  certify_cmd->add_option("--t0", certify.t0, "Decay anchor in (2, 3)")->capture_default_str();

  VerifyArgs verify;
  unsigned verify_max_len = 0;
  auto* verify_cmd = app.add_subcommand("verify", "Run an invariant suite");
  verify_cmd->add_option("suite", verify.suite, "fusion | decay | moments | forms | dims")
      ->required()
      ->check(CLI::IsMember({"fusion", "decay", "moments", "forms", "dims"}));
  verify_cmd->add_option("--N", verify.Ns, "Values of N (repeatable)");
  verify_cmd->add_option("--grid", verify.grid, "Points in each t-grid")->capture_default_str();
  auto* max_len_opt = verify_cmd->add_option("--max-len", verify_max_len, "Maximum word length");
  verify_cmd->add_option("--seed", verify.seed, "Seed for randomized cases")->capture_default_str();
  verify_cmd->add_option("--samples", verify.samples, "Randomized cases per check")
      ->capture_default_str();
  verify_cmd->add_option("--t0", verify.t0, "Decay anchor in (2, 3)")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    // Help requests come through here too, with exit code 0.
    return app.exit(e, out, err) == 0 ? kExitOk : kExitParse;
  }

  const Format fmt = format == "csv" ? Format::Csv : Format::JsonLines;
  try {
    OutputRecord record;
    int code = kExitOk;
    if (fuse_cmd->parsed()) {
      if (fuse_N_opt->count() > 0) fuse.N = fuse_N;
      record = cmd_fuse(fuse);
    } else if (dims_cmd->parsed()) {
      record = cmd_dims(dims);
    } else if (coeffs_cmd->parsed()) {
      record = cmd_coeffs(coeffs);
    } else if (certify_cmd->parsed()) {
      if (D_opt->count() > 0) certify.D = certify_D;
      if (R_opt->count() > 0) certify.R = certify_R;
      record = cmd_certify(certify);
    } else if (verify_cmd->parsed()) {
      if (max_len_opt->count() > 0) verify.max_len = verify_max_len;
      record = cmd_verify(verify);
      if (!all_passed(record)) code = kExitVerifyFailed;
    }
    write_record(out, record, fmt);
    return code;
  } catch (const freeqg::ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const ResourceError& e) {
    err << "resource error: " << e.what() << '\n';
    return kExitResource;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitVerifyFailed;
  }
}

}  // namespace freeqg::cli
