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

#ifndef FREEQG_FUSION_ORTH_HPP
#define FREEQG_FUSION_ORTH_HPP

#include <compare>
#include <map>
#include <span>

#include "freeqg/bigint.hpp"

namespace freeqg {

/// Irreducible corepresentation V^n of O_N^+. Label 0 is the trivial
/// corepresentation, label 1 the fundamental one. Every label is self-conjugate.
struct OrthLabel {
  unsigned n = 0;

  constexpr OrthLabel conjugate() const { return *this; }
  constexpr auto operator<=>(const OrthLabel&) const = default;
};

/// Direct-sum decomposition: label -> multiplicity. Zero multiplicities are
/// never stored.
class FusionSum {
 public:
  using Terms = std::map<OrthLabel, BigInt>;

  FusionSum() = default;
  static FusionSum single(OrthLabel label) {
    FusionSum sum;
    sum.add(label, 1);
    return sum;
  }

  void add(OrthLabel label, const BigInt& multiplicity);

  BigInt multiplicity(OrthLabel label) const;
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  /// Sum of multiplicity * dim_orth(label, N).
  BigInt total_dimension(int N) const;

  bool operator==(const FusionSum&) const = default;

 private:
  Terms terms_;
};

/// V^r (x) V^s = sum_{l=0}^{min(r,s)} V^{r+s-2l}.
FusionSum fuse_orth(OrthLabel r, OrthLabel s);

FusionSum fuse_orth(const FusionSum& lhs, OrthLabel s);
FusionSum fuse_orth(const FusionSum& lhs, const FusionSum& rhs);

/// Left-to-right iterated fusion, carried out on the running multiset.
/// Throws DomainError on an empty sequence.
FusionSum fuse_orth_many(std::span<const OrthLabel> labels);

/// Multiplicity of the trivial label in the k-th fusion power of label 1,
/// equivalently the k-th moment of chi_1 under the Haar state.
BigInt char_moment_orth(unsigned k);

/// Exact check of dim(r) dim(s) == sum of multiplicity * dim over fuse_orth(r, s).
bool dim_check_fusion(OrthLabel r, OrthLabel s, int N);

/// binomial(2m, m) / (m + 1).
BigInt catalan(unsigned m);

}  // namespace freeqg

#endif  // FREEQG_FUSION_ORTH_HPP
