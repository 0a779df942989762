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

#include "freeqg/fusion_unitary.hpp"

#include <cstdlib>
#include <map>
#include <string>

#include "freeqg/chebyshev.hpp"
#include "freeqg/errors.hpp"

namespace freeqg {

void UFusionSum::add(const FreeWord& word, std::size_t multiplicity) {
  if (multiplicity == 0) return;
  terms_[word] += multiplicity;
}

std::size_t UFusionSum::multiplicity(const FreeWord& word) const {
  auto it = terms_.find(word);
  return it == terms_.end() ? 0 : it->second;
}

UFusionSum fuse_unitary(const FreeWord& g, const FreeWord& h) {
  UFusionSum out;
  const std::size_t max_overlap = std::min(g.size(), h.size());
  for (std::size_t len = 0; len <= max_overlap; ++len) {
    const FreeWord sigma = g.suffix(len);
    if (!h.starts_with(involution(sigma))) continue;
    out.add(g.prefix(g.size() - len) * h.suffix(h.size() - len));
  }
  return out;
}

unsigned AlternatingForm::circle_weight() const {
  unsigned total = 0;
  for (int e : eps) total += static_cast<unsigned>(std::abs(e));
  return total;
}

unsigned AlternatingForm::length() const {
  unsigned total = 0;
  for (unsigned k : blocks) total += k;
  return total;
}

AlternatingForm alternating_form(const FreeWord& word) {
  AlternatingForm form;
  if (word.empty()) {
    form.eps = {0};
    return form;
  }
  form.eps.push_back(word.front() == Letter::G1 ? 1 : 0);
  unsigned run = 1;
  for (std::size_t i = 1; i < word.size(); ++i) {
    if (word[i] == word[i - 1]) {
      form.blocks.push_back(run);
      form.eps.push_back(word[i] == Letter::G1 ? 1 : -1);
      run = 1;
    } else {
      ++run;
    }
  }
  form.blocks.push_back(run);
  form.eps.push_back(word.back() == Letter::G2 ? -1 : 0);
  return form;
}

namespace {

// A reduced monomial of the free product C(T) * (character algebra of O_N^+):
// alternating circle powers z^p (p != 0) and characters chi_k (k >= 1).
struct Factor {
  bool circle = false;
  int value = 0;
  auto operator<=>(const Factor&) const = default;
};

using Monomial = std::vector<Factor>;
using Combination = std::map<Monomial, long long>;

void multiply_circle(Monomial m, int power, long long coeff, Combination& out) {
  if (!m.empty() && m.back().circle) {
    m.back().value += power;
    if (m.back().value == 0) m.pop_back();
  } else {
    m.push_back({true, power});
  }
  out[std::move(m)] += coeff;
}

// Right multiplication by chi_1 using chi_k chi_1 = chi_{k+1} + chi_{k-1}.
void multiply_fundamental(Monomial m, long long coeff, Combination& out) {
  if (m.empty() || m.back().circle) {
    m.push_back({false, 1});
    out[std::move(m)] += coeff;
    return;
  }
  Monomial lower = m;
  m.back().value += 1;
  out[std::move(m)] += coeff;
  lower.back().value -= 1;
  if (lower.back().value == 0) lower.pop_back();
  out[std::move(lower)] += coeff;
}

Combination times_letter(const Combination& in, Letter letter) {
  // chi_{g1} = z chi_1, chi_{g2} = chi_1 z^{-1}.
  Combination step;
  Combination out;
  if (letter == Letter::G1) {
    for (const auto& [m, c] : in) multiply_circle(m, 1, c, step);
    for (const auto& [m, c] : step) multiply_fundamental(m, c, out);
  } else {
    for (const auto& [m, c] : in) multiply_fundamental(m, c, step);
    for (const auto& [m, c] : step) multiply_circle(m, -1, c, out);
  }
  return out;
}

AlternatingForm to_form(const Monomial& m, const FreeWord& word) {
  const auto fail = [&](const char* why) {
    throw InternalError("character of '" + word.str() + "': " + why);
  };
  AlternatingForm form;
  std::size_t i = 0;
  const auto take_circle = [&] {
    if (i < m.size() && m[i].circle) {
      form.eps.push_back(m[i].value);
      ++i;
    } else {
      form.eps.push_back(0);
    }
  };
  take_circle();
  while (i < m.size()) {
    if (m[i].circle) fail("adjacent circle factors");
    form.blocks.push_back(static_cast<unsigned>(m[i].value));
    ++i;
    take_circle();
  }
  if (form.blocks.empty() && form.eps.front() != 0) fail("pure circle monomial");
  for (std::size_t s = 0; s < form.eps.size(); ++s) {
    if (std::abs(form.eps[s]) > 1) fail("circle power outside {-1, 0, 1}");
    const bool interior = s > 0 && s + 1 < form.eps.size();
    if (interior && form.eps[s] == 0) fail("adjacent characters");
  }
  return form;
}

}  // namespace

AlternatingForm char_expand_oracle(const FreeWord& word) {
  // prefix_monomials[i] is the single monomial equal to chi of the first i letters.
  std::vector<Monomial> prefix_monomials{Monomial{}};
  for (std::size_t i = 0; i < word.size(); ++i) {
    const Letter letter = word[i];
    Combination product = times_letter(Combination{{prefix_monomials[i], 1}}, letter);
    if (i > 0 && word[i - 1] == conjugate(letter)) {
      product[prefix_monomials[i - 1]] -= 1;
    }
    std::erase_if(product, [](const auto& kv) { return kv.second == 0; });
    if (product.size() != 1 || product.begin()->second != 1) {
      throw InternalError("character expansion of '" + word.prefix(i + 1).str() +
                          "' did not reduce to a single monomial");
    }
    prefix_monomials.push_back(product.begin()->first);
  }
  return to_form(prefix_monomials.back(), word);
}

BigInt dim_unitary(const FreeWord& word, int N) {
  if (N < 2) throw DomainError("N must be >= 2, got " + std::to_string(N));
  BigInt dim = 1;
  for (unsigned k : alternating_form(word).blocks) dim *= dim_orth(k, N);
  return dim;
}

BigInt dim_unitary_recursive(const FreeWord& word, int N) {
  if (N < 2) throw DomainError("N must be >= 2, got " + std::to_string(N));
  BigInt before = 0;
  BigInt current = 1;
  for (std::size_t i = 0; i < word.size(); ++i) {
    BigInt next = N * current;
    if (i > 0 && word[i - 1] == conjugate(word[i])) next -= before;
    before = std::move(current);
    current = std::move(next);
  }
  return current;
}

bool dim_check_fusion_unitary(const FreeWord& g, const FreeWord& h, int N) {
  BigInt rhs = 0;
  for (const auto sum = fuse_unitary(g, h); const auto& [word, mult] : sum.terms()) {
    rhs += mult * dim_unitary(word, N);
  }
  return dim_unitary(g, N) * dim_unitary(h, N) == rhs;
}

}  // namespace freeqg
