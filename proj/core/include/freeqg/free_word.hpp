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

#ifndef FREEQG_FREE_WORD_HPP
#define FREEQG_FREE_WORD_HPP

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "freeqg/random.hpp"

namespace freeqg {

/// Generators of the free monoid F_2^+. Textual form: 'a' = G1, 'b' = G2.
enum class Letter : std::uint8_t { G1, G2 };

constexpr Letter conjugate(Letter letter) {
  return letter == Letter::G1 ? Letter::G2 : Letter::G1;
}

constexpr char to_char(Letter letter) {
  return letter == Letter::G1 ? 'a' : 'b';
}

/// Element of F_2^+, labelling the irreducible U^g of U_N^+.
///
/// Ordered shortlex (length first, then G1 < G2), so sorted containers list
/// words level by level.
class FreeWord {
 public:
  FreeWord() = default;
  explicit FreeWord(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  static FreeWord generator(Letter letter) { return FreeWord({letter}); }
  /// Word whose i-th letter is G2 iff bit i of `bits` is set.
  static FreeWord from_bits(std::uint64_t bits, unsigned length);

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  std::span<const Letter> letters() const { return letters_; }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  Letter front() const { return letters_.front(); }
  Letter back() const { return letters_.back(); }

  FreeWord prefix(std::size_t length) const;
  FreeWord suffix(std::size_t length) const;
  bool starts_with(const FreeWord& other) const;

  FreeWord operator*(const FreeWord& rhs) const;
  FreeWord operator*(Letter rhs) const;

  /// 'a'/'b' string; the unit is the empty string.
  std::string str() const;
  /// Like str(), but the unit is rendered as "e".
  std::string display() const;

  std::strong_ordering operator<=>(const FreeWord& rhs) const;
  bool operator==(const FreeWord& rhs) const = default;

 private:
  std::vector<Letter> letters_;
};

/// Parses a word over {'a','b'}; the empty string is the unit.
/// Throws ParseError on any other character.
FreeWord word_parse(std::string_view text);

/// Antimultiplicative involution: reverse the word and swap G1 <-> G2.
FreeWord involution(const FreeWord& word);

/// Every word of length <= max_length in shortlex order (2^{max_length+1} - 1 words).
std::vector<FreeWord> words_up_to(unsigned max_length);

/// Every word of length exactly `length`, lexicographic.
std::vector<FreeWord> words_of_length(unsigned length);

/// Word with length uniform in [min_length, max_length] (max_length <= 64)
/// and uniform letters.
FreeWord random_word(SplitMix64& rng, unsigned min_length, unsigned max_length);

}  // namespace freeqg

#endif  // FREEQG_FREE_WORD_HPP
