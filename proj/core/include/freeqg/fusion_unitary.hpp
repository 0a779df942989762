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

#ifndef FREEQG_FUSION_UNITARY_HPP
#define FREEQG_FUSION_UNITARY_HPP

#include <map>
#include <vector>

#include "freeqg/bigint.hpp"
#include "freeqg/free_word.hpp"

namespace freeqg {

/// Decomposition of U^g (x) U^h over F_2^+ labels.
class UFusionSum {
 public:
  using Terms = std::map<FreeWord, std::size_t>;

  void add(const FreeWord& word, std::size_t multiplicity = 1);

  std::size_t multiplicity(const FreeWord& word) const;
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool operator==(const UFusionSum&) const = default;

 private:
  Terms terms_;
};

/// U^g (x) U^h = sum over g = alpha sigma, h = conj(sigma) beta of U^{alpha beta}.
///
/// Suffixes sigma are tried by length 0..|g|. Distinct sigma give terms of
/// distinct length |g| + |h| - 2|sigma|, so the result is multiplicity free.
UFusionSum fuse_unitary(const FreeWord& g, const FreeWord& h);

/// Factorization chi_g = z^{e(1)} chi_{k(1)} z^{e(2)} ... chi_{k(n)} z^{e(n+1)}
/// of a U_N^+ character as an alternating product of circle powers and
/// O_N^+ characters.
///
/// eps has blocks.size() + 1 entries. Interior signs are +-1, the first is in
/// {0, +1} and the last in {0, -1}. The unit maps to eps = {0}, blocks = {}.
struct AlternatingForm {
  std::vector<int> eps;
  std::vector<unsigned> blocks;

  /// Sum of |eps(s)|, the number of circle factors.
  unsigned circle_weight() const;
  unsigned length() const;
  bool operator==(const AlternatingForm&) const = default;
};

/// Run rule: a new block starts after every position where two consecutive
/// letters are equal; a repeated G1 contributes +1 and a repeated G2 -1.
AlternatingForm alternating_form(const FreeWord& word);

/// Independent route to the same factorization: multiplies characters one
/// letter at a time in the free product of the circle and O_N^+, using
/// chi_{w s} = chi_w chi_s - [w ends with conj(s)] chi_{w minus last letter}.
///
/// Throws InternalError if a step leaves anything other than a single monomial
/// with coefficient one.
AlternatingForm char_expand_oracle(const FreeWord& word);

/// Product of dim_orth over the blocks of the alternating form.
BigInt dim_unitary(const FreeWord& word, int N);

/// d(e) = 1, d(w s) = N d(w) - [w ends with conj(s)] d(w minus last letter).
BigInt dim_unitary_recursive(const FreeWord& word, int N);

bool dim_check_fusion_unitary(const FreeWord& g, const FreeWord& h, int N);

}  // namespace freeqg

#endif  // FREEQG_FUSION_UNITARY_HPP
