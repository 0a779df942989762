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

#include "freeqg/fusion_orth.hpp"

#include <algorithm>

#include "freeqg/chebyshev.hpp"
#include "freeqg/errors.hpp"

namespace freeqg {

void FusionSum::add(OrthLabel label, const BigInt& multiplicity) {
  if (multiplicity == 0) return;
  if (multiplicity < 0) throw DomainError("fusion multiplicities are positive");
  terms_[label] += multiplicity;
}

BigInt FusionSum::multiplicity(OrthLabel label) const {
  auto it = terms_.find(label);
  return it == terms_.end() ? BigInt(0) : it->second;
}

BigInt FusionSum::total_dimension(int N) const {
  BigInt total = 0;
  for (const auto& [label, mult] : terms_) total += mult * dim_orth(label.n, N);
  return total;
}

FusionSum fuse_orth(OrthLabel r, OrthLabel s) {
  FusionSum out;
  const unsigned lo = std::min(r.n, s.n);
  for (unsigned l = 0; l <= lo; ++l) out.add(OrthLabel{r.n + s.n - 2 * l}, 1);
  return out;
}

FusionSum fuse_orth(const FusionSum& lhs, OrthLabel s) {
  FusionSum out;
  for (const auto& [label, mult] : lhs.terms()) {
    const unsigned lo = std::min(label.n, s.n);
    for (unsigned l = 0; l <= lo; ++l) {
      out.add(OrthLabel{label.n + s.n - 2 * l}, mult);
    }
  }
  return out;
}

FusionSum fuse_orth(const FusionSum& lhs, const FusionSum& rhs) {
  FusionSum out;
  for (const auto& [label, mult] : rhs.terms()) {
    for (const auto partial = fuse_orth(lhs, label); const auto& [res, res_mult] : partial.terms()) {
      out.add(res, res_mult * mult);
    }
  }
  return out;
}

FusionSum fuse_orth_many(std::span<const OrthLabel> labels) {
  if (labels.empty()) throw DomainError("fuse_orth_many needs at least one label");
  FusionSum acc = FusionSum::single(labels.front());
  for (auto label : labels.subspan(1)) acc = fuse_orth(acc, label);
  return acc;
}

BigInt char_moment_orth(unsigned k) {
  FusionSum power = FusionSum::single(OrthLabel{0});
  for (unsigned step = 0; step < k; ++step) power = fuse_orth(power, OrthLabel{1});
  return power.multiplicity(OrthLabel{0});
}

bool dim_check_fusion(OrthLabel r, OrthLabel s, int N) {
  return dim_orth(r.n, N) * dim_orth(s.n, N) == fuse_orth(r, s).total_dimension(N);
}

BigInt catalan(unsigned m) {
  // binomial(2m, m) built as prod_{i=1}^m (m+i)/i; every prefix is binomial(m+i, i).
  BigInt binom = 1;
  for (unsigned i = 1; i <= m; ++i) binom = binom * (m + i) / i;
  return binom / (m + 1);
}

}  // namespace freeqg
