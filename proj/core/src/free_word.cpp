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

#include "freeqg/free_word.hpp"

#include <algorithm>
#include <string>

#include "freeqg/errors.hpp"

namespace freeqg {

FreeWord FreeWord::from_bits(std::uint64_t bits, unsigned length) {
  std::vector<Letter> letters(length);
  for (unsigned i = 0; i < length; ++i) {
    letters[i] = ((bits >> i) & 1U) ? Letter::G2 : Letter::G1;
  }
  return FreeWord(std::move(letters));
}

FreeWord FreeWord::prefix(std::size_t length) const {
  return FreeWord({letters_.begin(), letters_.begin() + static_cast<std::ptrdiff_t>(length)});
}

FreeWord FreeWord::suffix(std::size_t length) const {
  return FreeWord({letters_.end() - static_cast<std::ptrdiff_t>(length), letters_.end()});
}

bool FreeWord::starts_with(const FreeWord& other) const {
  return other.size() <= size() &&
         std::equal(other.letters_.begin(), other.letters_.end(), letters_.begin());
}

FreeWord FreeWord::operator*(const FreeWord& rhs) const {
  std::vector<Letter> out = letters_;
  out.insert(out.end(), rhs.letters_.begin(), rhs.letters_.end());
  return FreeWord(std::move(out));
}

FreeWord FreeWord::operator*(Letter rhs) const {
  std::vector<Letter> out = letters_;
  out.push_back(rhs);
  return FreeWord(std::move(out));
}

std::string FreeWord::str() const {
  std::string out;
  out.reserve(letters_.size());
  for (auto letter : letters_) out.push_back(to_char(letter));
  return out;
}

std::string FreeWord::display() const { return empty() ? std::string("e") : str(); }

std::strong_ordering FreeWord::operator<=>(const FreeWord& rhs) const {
  if (auto c = size() <=> rhs.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(
      letters_.begin(), letters_.end(), rhs.letters_.begin(), rhs.letters_.end());
}

FreeWord word_parse(std::string_view text) {
  std::vector<Letter> letters;
  letters.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    switch (text[i]) {
      case 'a':
        letters.push_back(Letter::G1);
        break;
      case 'b':
        letters.push_back(Letter::G2);
        break;
      default:
        throw ParseError("invalid letter '" + std::string(1, text[i]) +
                         "' at position " + std::to_string(i) +
                         " (words use 'a' and 'b')");
    }
  }
  return FreeWord(std::move(letters));
}

FreeWord involution(const FreeWord& word) {
  std::vector<Letter> out(word.letters().rbegin(), word.letters().rend());
  for (auto& letter : out) letter = conjugate(letter);
  return FreeWord(std::move(out));
}

std::vector<FreeWord> words_of_length(unsigned length) {
  if (length >= 63) throw ResourceError("word length too large to enumerate");
  const std::uint64_t count = std::uint64_t{1} << length;
  std::vector<FreeWord> out;
  out.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) {
    // Most significant letter first, so the output is lexicographic.
    std::vector<Letter> letters(length);
    for (unsigned j = 0; j < length; ++j) {
      letters[j] = ((i >> (length - 1 - j)) & 1U) ? Letter::G2 : Letter::G1;
    }
    out.emplace_back(std::move(letters));
  }
  return out;
}

std::vector<FreeWord> words_up_to(unsigned max_length) {
  std::vector<FreeWord> out;
  for (unsigned len = 0; len <= max_length; ++len) {
    auto level = words_of_length(len);
    out.insert(out.end(), std::make_move_iterator(level.begin()),
               std::make_move_iterator(level.end()));
  }
  return out;
}

FreeWord random_word(SplitMix64& rng, unsigned min_length, unsigned max_length) {
  if (min_length > max_length || max_length > 64) {
    throw DomainError("random_word needs min_length <= max_length <= 64");
  }
  const std::uint64_t span = max_length - min_length + 1;
  const auto length = static_cast<unsigned>(min_length + rng() % span);
  return FreeWord::from_bits(rng(), length);
}

}  // namespace freeqg
