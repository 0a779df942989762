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

#include <set>

#include <gtest/gtest.h>

#include "freeqg/errors.hpp"
#include "freeqg/free_word.hpp"
#include "freeqg/random.hpp"

namespace freeqg {
namespace {

FreeWord w(std::string_view text) { return word_parse(text); }

TEST(FreeWord, ParseAndPrint) {
  EXPECT_EQ(w("abba").size(), 4U);
  EXPECT_EQ(w("abba").str(), "abba");
  EXPECT_EQ(w("").str(), "");
  EXPECT_EQ(w("").display(), "e");
  EXPECT_EQ(w("a"), FreeWord::generator(Letter::G1));
  EXPECT_THROW(w("abc"), ParseError);
  EXPECT_THROW(w("A"), ParseError);
}

TEST(FreeWord, ShortlexOrder) {
  EXPECT_LT(w(""), w("a"));
  EXPECT_LT(w("a"), w("b"));
  EXPECT_LT(w("b"), w("aa"));
  EXPECT_LT(w("ab"), w("ba"));
  const auto words = words_up_to(3);
  ASSERT_EQ(words.size(), 15U);
  for (std::size_t i = 1; i < words.size(); ++i) ASSERT_LT(words[i - 1], words[i]);
  EXPECT_EQ(words[3].str(), "aa");
}

TEST(FreeWord, Enumeration) {
  for (unsigned m = 0; m <= 12; ++m) {
    ASSERT_EQ(words_up_to(m).size(), (std::size_t{1} << (m + 1)) - 1);
    ASSERT_EQ(words_of_length(m).size(), std::size_t{1} << m);
  }
  const auto set4 = words_of_length(4);
  EXPECT_EQ(std::set<FreeWord>(set4.begin(), set4.end()).size(), 16U);
}

TEST(FreeWord, RandomWordRespectsLengthsAndSeed) {
  SplitMix64 a(99), b(99);
  for (int i = 0; i < 500; ++i) {
    const auto x = random_word(a, 3, 9);
    ASSERT_GE(x.size(), 3U);
    ASSERT_LE(x.size(), 9U);
    ASSERT_EQ(x, random_word(b, 3, 9));
  }
}

TEST(Involution, Examples) {
  EXPECT_EQ(involution(w("")), w(""));
  EXPECT_EQ(involution(w("a")), w("b"));
  EXPECT_EQ(involution(w("ab")), w("ab"));
  EXPECT_EQ(involution(w("aab")), w("abb"));
  EXPECT_EQ(involution(w("abaa")), w("bbab"));
}

TEST(Involution, IsAnAntiMultiplicativeInvolution) {
  const auto words = words_up_to(5);
  for (const auto& g : words) {
    ASSERT_EQ(involution(involution(g)), g);
    ASSERT_EQ(involution(g).size(), g.size());
    for (const auto& h : words) ASSERT_EQ(involution(g * h), involution(h) * involution(g));
  }
}

TEST(FuseUnitary, Examples) {
  const auto ab = fuse_unitary(w("a"), w("b"));
  EXPECT_EQ(ab.size(), 2U);
  EXPECT_EQ(ab.multiplicity(w("ab")), 1U);
  EXPECT_EQ(ab.multiplicity(w("")), 1U);

  const auto aa = fuse_unitary(w("a"), w("a"));
  EXPECT_EQ(aa.size(), 1U);
  EXPECT_EQ(aa.multiplicity(w("aa")), 1U);

  const auto ba = fuse_unitary(w("b"), w("a"));
  EXPECT_EQ(ba.size(), 2U);
  EXPECT_EQ(ba.multiplicity(w("ba")), 1U);

  // g = ab, h = ab: every suffix sigma of g has conj(sigma) a prefix of h.
  const auto abab = fuse_unitary(w("ab"), w("ab"));
  EXPECT_EQ(abab.size(), 3U);
  EXPECT_EQ(abab.multiplicity(w("")), 1U);
  EXPECT_EQ(abab.multiplicity(w("abab")), 1U);
  EXPECT_EQ(abab.multiplicity(w("ab")), 1U);

  EXPECT_EQ(fuse_unitary(w(""), w("bab")).multiplicity(w("bab")), 1U);
}

TEST(FuseUnitary, MultiplicityFreeWithExpectedLengths) {
  const auto words = words_up_to(6);
  for (const auto& g : words) {
    for (const auto& h : words) {
      const auto sum = fuse_unitary(g, h);
      ASSERT_GE(sum.size(), 1U);
      std::set<std::size_t> lengths;
      for (const auto& [word, mult] : sum.terms()) {
        ASSERT_EQ(mult, 1U);
        ASSERT_EQ((g.size() + h.size() - word.size()) % 2, 0U);
        ASSERT_TRUE(lengths.insert(word.size()).second);
      }
      ASSERT_EQ(sum.multiplicity(g * h), 1U);
    }
  }
}

TEST(FuseUnitary, ConjugationReversesFactors) {
  const auto words = words_up_to(5);
  for (const auto& g : words) {
    for (const auto& h : words) {
      const auto lhs = fuse_unitary(involution(h), involution(g));
      UFusionSum rhs;
      for (const auto sum = fuse_unitary(g, h); const auto& [word, mult] : sum.terms()) {
        rhs.add(involution(word), mult);
      }
      ASSERT_EQ(lhs, rhs) << g.str() << " " << h.str();
    }
  }
}

TEST(AlternatingForm, Examples) {
  EXPECT_EQ(alternating_form(w("")), (AlternatingForm{{0}, {}}));
  EXPECT_EQ(alternating_form(w("a")), (AlternatingForm{{1, 0}, {1}}));
  EXPECT_EQ(alternating_form(w("b")), (AlternatingForm{{0, -1}, {1}}));
  EXPECT_EQ(alternating_form(w("ab")), (AlternatingForm{{1, -1}, {2}}));
  EXPECT_EQ(alternating_form(w("ba")), (AlternatingForm{{0, 0}, {2}}));
  EXPECT_EQ(alternating_form(w("aba")), (AlternatingForm{{1, 0}, {3}}));
  EXPECT_EQ(alternating_form(w("aa")), (AlternatingForm{{1, 1, 0}, {1, 1}}));
  EXPECT_EQ(alternating_form(w("bb")), (AlternatingForm{{0, -1, -1}, {1, 1}}));
  EXPECT_EQ(alternating_form(w("abba")), (AlternatingForm{{1, -1, 0}, {2, 2}}));
  EXPECT_EQ(alternating_form(w("ab")).circle_weight(), 2U);
  EXPECT_EQ(alternating_form(w("abba")).length(), 4U);
}

TEST(AlternatingForm, OracleExamples) {
  for (const char* text : {"", "a", "b", "ab", "ba", "aba", "aa", "bb", "abba", "baab"}) {
    EXPECT_EQ(char_expand_oracle(w(text)), alternating_form(w(text))) << text;
  }
}

TEST(AlternatingForm, MatchesOracleExhaustively) {
  for (const auto& g : words_up_to(10)) {
    const auto form = alternating_form(g);
    ASSERT_EQ(form, char_expand_oracle(g)) << g.str();
    ASSERT_EQ(form.eps.size(), form.blocks.size() + 1);
    ASSERT_EQ(form.length(), g.size());
    ASSERT_TRUE(form.eps.front() == 0 || form.eps.front() == 1);
    ASSERT_TRUE(form.eps.back() == 0 || form.eps.back() == -1);
    for (std::size_t s = 1; s + 1 < form.eps.size(); ++s) ASSERT_EQ(std::abs(form.eps[s]), 1);
    for (unsigned k : form.blocks) ASSERT_GE(k, 1U);
  }
}

TEST(AlternatingForm, PowersOfFirstGenerator) {
  std::vector<Letter> letters;
  for (unsigned n = 1; n <= 20; ++n) {
    letters.push_back(Letter::G1);
    const auto form = alternating_form(FreeWord(letters));
    ASSERT_EQ(form.blocks, std::vector<unsigned>(n, 1U));
    std::vector<int> eps(n + 1, 1);
    eps.back() = 0;
    ASSERT_EQ(form.eps, eps);
  }
}

TEST(DimUnitary, Examples) {
  EXPECT_EQ(dim_unitary(w(""), 3), 1);
  EXPECT_EQ(dim_unitary(w("a"), 4), 4);
  EXPECT_EQ(dim_unitary(w("ab"), 3), 8);
  EXPECT_EQ(dim_unitary(w("aa"), 3), 9);
  EXPECT_EQ(dim_unitary(w("aba"), 3), 21);
  EXPECT_EQ(dim_unitary_recursive(w("ab"), 3), 8);
  EXPECT_EQ(dim_unitary_recursive(w("bab"), 4), 56);
  EXPECT_THROW(dim_unitary(w("a"), 1), DomainError);
}

TEST(DimUnitary, BlockProductMatchesRecursionAndInvolution) {
  for (int N : {2, 3, 4, 5}) {
    for (const auto& g : words_up_to(9)) {
      const auto d = dim_unitary(g, N);
      ASSERT_EQ(d, dim_unitary_recursive(g, N)) << g.str();
      ASSERT_EQ(d, dim_unitary(involution(g), N));
    }
  }
  SplitMix64 rng(2026);
  for (int i = 0; i < 300; ++i) {
    const auto g = random_word(rng, 10, 16);
    ASSERT_EQ(dim_unitary(g, 3), dim_unitary_recursive(g, 3)) << g.str();
  }
}

TEST(DimUnitary, FusionPreservesDimension) {
  const auto words = words_up_to(4);
  for (int N : {3, 4}) {
    for (const auto& g : words) {
      for (const auto& h : words) ASSERT_TRUE(dim_check_fusion_unitary(g, h, N));
    }
  }
  SplitMix64 rng(5);
  for (int i = 0; i < 400; ++i) {
    const auto g = random_word(rng, 0, 10);
    const auto h = random_word(rng, 0, 10);
    ASSERT_TRUE(dim_check_fusion_unitary(g, h, 3)) << g.str() << " " << h.str();
  }
}

}  // namespace
}  // namespace freeqg
