// Copyright 2026 The ctclen Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CTCLEN_TYPES_HPP_
#define CTCLEN_TYPES_HPP_

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ctclen {

using TokenId = std::int32_t;

inline constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// Maximum allowed |sum(exp(row)) - 1| for a log-probability row.
inline constexpr double kRowNormTolerance = 1e-6;

// How many characters a reduced word sequence y_1..y_T costs.
enum class LengthConvention {
  // sum of widths plus one separating space between adjacent words:
  // sum(width) + (T - 1) for T >= 1, 0 for T = 0.
  Separator,
  // every word costs its width plus one trailing character.
  Appended,
  // every word costs exactly 1; length equals the word count.
  Unit,
};

// How a token path collapses to a word sequence.
enum class Reduction {
  Merge,    // merge consecutive identical tokens, then drop blanks
  NoMerge,  // drop blanks only
};

// Number of Unicode scalar values in a UTF-8 string.
int utf8_length(std::string_view s);

// Token table with one distinguished blank token. Token strings are unique,
// non-blank tokens are non-empty, and widths are derived from the strings
// (blank always has width 0). Immutable after construction.
class Vocabulary {
 public:
  Vocabulary(std::vector<std::string> tokens, TokenId blank_id);

  int size() const { return static_cast<int>(tokens_.size()); }
  TokenId blank_id() const { return blank_id_; }
  bool is_blank(TokenId id) const { return id == blank_id_; }
  bool valid_id(TokenId id) const { return id >= 0 && id < size(); }

  const std::string& token(TokenId id) const;
  int width(TokenId id) const;

  const std::vector<std::string>& tokens() const { return tokens_; }
  const std::vector<int>& widths() const { return widths_; }

  std::optional<TokenId> find(std::string_view token) const;

 private:
  std::vector<std::string> tokens_;
  std::vector<int> widths_;
  TokenId blank_id_;
};

// S x V matrix of natural-log probabilities, one row per prediction slot.
// Every entry is finite or -inf, and each row exponentiates to a
// distribution (sum 1 within kRowNormTolerance).
class LogProbMatrix {
 public:
  LogProbMatrix(int slots, int vocab_size, std::vector<double> values);

  static LogProbMatrix from_rows(const std::vector<std::vector<double>>& rows);

  int slots() const { return slots_; }
  int vocab_size() const { return vocab_size_; }

  // Unchecked; slot in [0, slots), token in [0, vocab_size).
  double at(int slot, TokenId token) const {
    return values_[static_cast<std::size_t>(slot) * vocab_size_ + token];
  }
  std::span<const double> row(int slot) const {
    return {values_.data() + static_cast<std::size_t>(slot) * vocab_size_,
            static_cast<std::size_t>(vocab_size_)};
  }
  const std::vector<double>& values() const { return values_; }

 private:
  int slots_;
  int vocab_size_;
  std::vector<double> values_;  // row-major
};

// A length-S assignment of one token per slot, before reduction.
struct TokenPath {
  std::vector<TokenId> slots;
};

// A reduced summary: non-blank token ids plus the rendered text
// (single-space separated).
struct WordSequence {
  std::vector<TokenId> words;
  std::string text;

  bool empty() const { return words.empty(); }
  int word_count() const { return static_cast<int>(words.size()); }
};

// Builds a WordSequence from non-blank token ids, rendering the text.
// Throws std::invalid_argument if any id is blank or out of range.
WordSequence make_word_sequence(std::vector<TokenId> words,
                                const Vocabulary& vocab);

// Character length of a word sequence under the given convention.
int reduced_length(std::span<const TokenId> words, LengthConvention convention,
                   const Vocabulary& vocab);
int reduced_length(const WordSequence& words, LengthConvention convention,
                   const Vocabulary& vocab);

// Character cost of appending word `token` to a partial summary;
// `nonempty` says whether the summary already holds at least one word.
int incremental_length(TokenId token, bool nonempty,
                       LengthConvention convention, const Vocabulary& vocab);

// Length of the one-word sequence [token].
inline int single_word_length(TokenId token, LengthConvention convention,
                              const Vocabulary& vocab) {
  return incremental_length(token, /*nonempty=*/false, convention, vocab);
}

const char* to_string(LengthConvention convention);
const char* to_string(Reduction reduction);
std::optional<LengthConvention> parse_length_convention(std::string_view name);
std::optional<Reduction> parse_reduction(std::string_view name);

}  // namespace ctclen

#endif  // CTCLEN_TYPES_HPP_
