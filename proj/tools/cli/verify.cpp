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

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "cli/commands.hpp"
#include "freeqg/errors.hpp"
#include "freeqg/fusion_orth.hpp"
#include "freeqg/fusion_unitary.hpp"
#include "freeqg/random.hpp"
#include "freeqg/spectral.hpp"

namespace freeqg::cli {

namespace {

struct Check {
  std::string name;
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;

  void expect(bool ok) {
    ++cases;
    if (!ok) ++failures;
  }
};

// Bounds are strict inequalities with room to spare; this only absorbs rounding.
constexpr double kBoundSlack = 1e-12;
// Relative step required between consecutive grid values for "strictly increasing".
constexpr double kStrictSlack = 1e-14;
constexpr double kQuadratureTol = 1e-8;
constexpr double kOddMomentTol = 1e-12;

std::vector<int> or_default(const std::vector<int>& given, std::vector<int> fallback) {
  return given.empty() ? fallback : given;
}

bool strictly_increasing(const std::vector<double>& values) {
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (!(values[i] - values[i - 1] > kStrictSlack * values[i - 1])) return false;
  }
  return true;
}

std::vector<Check> fusion_suite(const VerifyArgs& args, Json& params) {
  constexpr unsigned kMaxLabel = 12;
  constexpr unsigned kAssocMax = 10;
  constexpr unsigned kExhaustiveWordLen = 5;
  const unsigned random_len = args.max_len.value_or(8);
  const auto orth_Ns = or_default(args.Ns, {2, 3, 4, 5});
  const auto unit_Ns = or_default(args.Ns, {3, 4});
  params["max_label"] = kMaxLabel;
  params["max_len"] = random_len;
  params["orth_N"] = orth_Ns;
  params["unit_N"] = unit_Ns;
  params["seed"] = args.seed;
  params["samples"] = args.samples;

  Check multiplicity_free{"orth_multiplicity_free"};
  Check commutative{"orth_commutative"};
  Check recursion{"orth_character_recursion"};
  Check orth_dims{"orth_dimension_consistency"};
  for (unsigned r = 0; r <= kMaxLabel; ++r) {
    for (unsigned s = 0; s <= kMaxLabel; ++s) {
      const auto sum = fuse_orth(OrthLabel{r}, OrthLabel{s});
      bool ok = sum.size() == std::min(r, s) + 1;
      for (const auto& [label, mult] : sum.terms()) ok = ok && mult == 1;
      multiplicity_free.expect(ok);
      commutative.expect(sum == fuse_orth(OrthLabel{s}, OrthLabel{r}));
      for (int N : orth_Ns) orth_dims.expect(dim_check_fusion(OrthLabel{r}, OrthLabel{s}, N));
    }
  }
  for (unsigned n = 1; n <= kMaxLabel; ++n) {
    FusionSum expected;
    expected.add(OrthLabel{n - 1}, 1);
    expected.add(OrthLabel{n + 1}, 1);
    recursion.expect(fuse_orth(OrthLabel{1}, OrthLabel{n}) == expected);
  }

  Check associative{"orth_associative"};
  for (unsigned a = 0; a <= kAssocMax; ++a) {
    for (unsigned b = 0; b <= kAssocMax; ++b) {
      for (unsigned c = 0; c <= kAssocMax; ++c) {
        const auto left = fuse_orth(fuse_orth(OrthLabel{a}, OrthLabel{b}), OrthLabel{c});
        const auto right =
            fuse_orth(FusionSum::single(OrthLabel{a}), fuse_orth(OrthLabel{b}, OrthLabel{c}));
        associative.expect(left == right);
      }
    }
  }

  Check unit_free{"unit_multiplicity_free"};
  Check unit_conj{"unit_conjugation_symmetry"};
  const auto words = words_up_to(kExhaustiveWordLen);
  for (const auto& g : words) {
    for (const auto& h : words) {
      const auto sum = fuse_unitary(g, h);
      bool ok = true;
      for (const auto& [word, mult] : sum.terms()) ok = ok && mult == 1;
      unit_free.expect(ok);
      UFusionSum conjugated;
      for (const auto& [word, mult] : sum.terms()) conjugated.add(involution(word), mult);
      unit_conj.expect(fuse_unitary(involution(h), involution(g)) == conjugated);
    }
  }

  Check unit_dims{"unit_dimension_consistency"};
  SplitMix64 rng(args.seed);
  for (std::size_t i = 0; i < args.samples; ++i) {
    const auto g = random_word(rng, 0, random_len);
    const auto h = random_word(rng, 0, random_len);
    for (int N : unit_Ns) unit_dims.expect(dim_check_fusion_unitary(g, h, N));
  }

  return {multiplicity_free, commutative, associative, recursion, orth_dims,
          unit_free,         unit_conj,   unit_dims};
}

std::vector<Check> decay_suite(const VerifyArgs& args, Json& params) {
  constexpr unsigned kMaxLevel = 60;
  const unsigned max_len = args.max_len.value_or(12);
  const auto Ns = or_default(args.Ns, {3, 4, 5, 6});
  params["N"] = Ns;
  params["grid"] = args.grid;
  params["max_level"] = kMaxLevel;
  params["max_len"] = max_len;
  params["t0"] = number(args.t0);

  const double C = decay_constant(args.t0);
  const auto words = words_up_to(max_len);
  Check orth_decay{"orth_decay"};
  Check unit_decay{"unit_decay"};
  Check contraction{"contraction"};
  Check monotone{"monotone_in_t"};

  for (int N : Ns) {
    const ChebyParams params_N = ChebyParams::make(N, args.t0);
    const auto grid = t_grid(args.t0, N, args.grid);
    for (unsigned n = 0; n <= kMaxLevel; ++n) {
      std::vector<double> along;
      for (double t : grid) {
        const double c = coeff_ratio(n, t, params_N);
        orth_decay.expect(c > 0.0 && c <= C * std::pow(t / N, n) + kBoundSlack);
        contraction.expect(c > 0.0 && c <= 1.0 && (n != 0 || c == 1.0));
        along.push_back(c);
      }
      monotone.expect(along.back() == 1.0 && (n == 0 || strictly_increasing(along)));
    }
    for (const auto& word : words) {
      std::vector<double> along;
      for (double t : grid) {
        const double a = a_coeff(word, t, params_N);
        unit_decay.expect(a > 0.0 && a <= C * std::pow(t / N, word.size()) + kBoundSlack);
        contraction.expect(a > 0.0 && a <= 1.0 && (!word.empty() || a == 1.0));
        along.push_back(a);
      }
      monotone.expect(along.back() == 1.0 && (word.empty() || strictly_increasing(along)));
    }
  }
  return {orth_decay, unit_decay, contraction, monotone};
}

std::vector<Check> moments_suite(const VerifyArgs& args, Json& params) {
  constexpr unsigned kMaxM = 8;
  params["max_m"] = kMaxM;
  params["subdivisions"] = kDefaultSubdivisions;
  (void)args;

  Check even{"even_moments_fusion_catalan_quadrature"};
  Check odd{"odd_moments_vanish"};
  for (unsigned m = 0; m <= kMaxM; ++m) {
    const BigInt fusion = char_moment_orth(2 * m);
    const BigInt closed = catalan(m);
    const double quad = semicircle_moment(2 * m);
    even.expect(fusion == closed && std::abs(quad - to_double(closed)) <= kQuadratureTol);

    const unsigned k = 2 * m + 1;
    odd.expect(char_moment_orth(k) == 0 && std::abs(semicircle_moment(k)) <= kOddMomentTol);
  }
  return {even, odd};
}

std::vector<Check> forms_suite(const VerifyArgs& args, Json& params) {
  const unsigned max_len = args.max_len.value_or(10);
  params["max_len"] = max_len;

  Check oracle{"alternating_form_vs_oracle"};
  Check shape{"form_shape"};
  for (const auto& word : words_up_to(max_len)) {
    const auto form = alternating_form(word);
    bool agrees = false;
    try {
      agrees = form == char_expand_oracle(word);
    } catch (const InternalError&) {
      agrees = false;
    }
    oracle.expect(agrees);

    std::size_t repeats = 0;
    for (std::size_t i = 1; i < word.size(); ++i) repeats += word[i] == word[i - 1];
    bool ok = form.length() == word.size() && form.eps.size() == form.blocks.size() + 1;
    if (!word.empty()) ok = ok && form.blocks.size() == 1 + repeats;
    ok = ok && (form.eps.front() == 0 || form.eps.front() == 1);
    ok = ok && (form.eps.back() == 0 || form.eps.back() == -1 || word.empty());
    for (std::size_t s = 1; s + 1 < form.eps.size(); ++s) {
      ok = ok && (form.eps[s] == 1 || form.eps[s] == -1);
    }
    shape.expect(ok);
  }

  Check restriction{"g1_power_restriction"};
  for (unsigned k = 1; k <= max_len; ++k) {
    const auto form = alternating_form(FreeWord(std::vector<Letter>(k, Letter::G1)));
    std::vector<int> eps(k + 1, 1);
    eps.back() = 0;
    restriction.expect(form.blocks == std::vector<unsigned>(k, 1) && form.eps == eps);
  }
  return {oracle, shape, restriction};
}

std::vector<Check> dims_suite(const VerifyArgs& args, Json& params) {
  constexpr unsigned kExhaustive = 8;
  constexpr unsigned kMaxLevel = 60;
  const unsigned max_len = args.max_len.value_or(12);
  const auto Ns = or_default(args.Ns, {2, 3, 4});
  params["N"] = Ns;
  params["max_len"] = max_len;
  params["exhaustive_len"] = std::min(kExhaustive, max_len);
  params["seed"] = args.seed;
  params["samples"] = args.samples;

  Check recursive{"block_product_vs_recursive"};
  Check conj{"involution_invariance"};
  for (const auto& word : words_up_to(std::min(kExhaustive, max_len))) {
    for (int N : Ns) {
      const auto d = dim_unitary(word, N);
      recursive.expect(d == dim_unitary_recursive(word, N));
      conj.expect(d == dim_unitary(involution(word), N));
    }
  }
  if (max_len > kExhaustive) {
    SplitMix64 rng(args.seed);
    for (std::size_t i = 0; i < args.samples; ++i) {
      const auto word = random_word(rng, kExhaustive + 1, max_len);
      for (int N : Ns) recursive.expect(dim_unitary(word, N) == dim_unitary_recursive(word, N));
    }
  }

  Check closed{"orth_closed_form"};
  for (int N : Ns) {
    for (unsigned n = 0; n <= kMaxLevel; ++n) {
      const BigInt d = dim_orth(n, N);
      if (N == 2) {
        closed.expect(d == n + 1);
        continue;
      }
      const double q = q_of(N);
      const double form = (std::pow(q, n + 1) - std::pow(q, -static_cast<double>(n) - 1)) /
                          (q - 1.0 / q);
      closed.expect(std::abs(to_double(d) - form) <= 1e-9 * form);
    }
  }
  return {recursive, conj, closed};
}

}  // namespace

OutputRecord cmd_verify(const VerifyArgs& args) {
  OutputRecord record{"verify"};
  record.params["suite"] = args.suite;

  std::vector<Check> checks;
  if (args.suite == "fusion") {
    checks = fusion_suite(args, record.params);
  } else if (args.suite == "decay") {
    checks = decay_suite(args, record.params);
  } else if (args.suite == "moments") {
    checks = moments_suite(args, record.params);
  } else if (args.suite == "forms") {
    checks = forms_suite(args, record.params);
  } else if (args.suite == "dims") {
    checks = dims_suite(args, record.params);
  } else {
    throw freeqg::ParseError("unknown verify suite '" + args.suite + "'");
  }
  for (const auto& check : checks) {
    record.rows.push_back(
        {{"check", check.name}, {"cases", check.cases}, {"failures", check.failures}});
  }
  return record;
}

}  // namespace freeqg::cli
