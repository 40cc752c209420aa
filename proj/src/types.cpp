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

#include "ctclen/types.hpp"

#include <cmath>
#include <stdexcept>
#include <unordered_set>

namespace ctclen {

int utf8_length(std::string_view s) {
  int n = 0;
  for (unsigned char c : s) {
    if ((c & 0xC0) != 0x80) ++n;  // count non-continuation bytes
  }
  return n;
}

Vocabulary::Vocabulary(std::vector<std::string> tokens, TokenId blank_id)
    : tokens_(std::move(tokens)), blank_id_(blank_id) {
  if (tokens_.empty()) {
    throw std::invalid_argument("vocabulary must not be empty");
  }
  if (blank_id_ < 0 || blank_id_ >= size()) {
    throw std::invalid_argument("blank_id out of range");
  }
  std::unordered_set<std::string_view> seen;
  widths_.reserve(tokens_.size());
  for (int i = 0; i < size(); ++i) {
    if (!seen.insert(tokens_[i]).second) {
      throw std::invalid_argument("duplicate token string: " + tokens_[i]);
    }
    if (i == blank_id_) {
      widths_.push_back(0);
      continue;
    }
    const int w = utf8_length(tokens_[i]);
    if (w < 1) {
      throw std::invalid_argument("non-blank token must be non-empty");
    }
    widths_.push_back(w);
  }
}

const std::string& Vocabulary::token(TokenId id) const {
  if (!valid_id(id)) throw std::out_of_range("token id out of range");
  return tokens_[id];
}

int Vocabulary::width(TokenId id) const {
  if (!valid_id(id)) throw std::out_of_range("token id out of range");
  return widths_[id];
}

std::optional<TokenId> Vocabulary::find(std::string_view token) const {
  for (int i = 0; i < size(); ++i) {
    if (tokens_[i] == token) return i;
  }
  return std::nullopt;
}

LogProbMatrix::LogProbMatrix(int slots, int vocab_size,
                             std::vector<double> values)
    : slots_(slots), vocab_size_(vocab_size), values_(std::move(values)) {
  if (slots_ < 1) throw std::invalid_argument("slot count must be positive");
  if (vocab_size_ < 1) throw std::invalid_argument("vocab size must be positive");
  if (values_.size() != static_cast<std::size_t>(slots_) * vocab_size_) {
    throw std::invalid_argument("log-prob value count does not match S x V");
  }
  for (int s = 0; s < slots_; ++s) {
    double sum = 0.0;
    for (int v = 0; v < vocab_size_; ++v) {
      const double x = at(s, v);
      if (std::isnan(x) || x == std::numeric_limits<double>::infinity()) {
        throw std::invalid_argument("log-probs must be finite or -inf");
      }
      sum += std::exp(x);
    }
    if (std::abs(sum - 1.0) > kRowNormTolerance) {
      throw std::invalid_argument("row " + std::to_string(s) +
                                  " does not sum to 1 after exponentiation");
    }
  }
}

LogProbMatrix LogProbMatrix::from_rows(
    const std::vector<std::vector<double>>& rows) {
  if (rows.empty()) throw std::invalid_argument("matrix needs at least one row");
  const int vocab_size = static_cast<int>(rows.front().size());
  std::vector<double> values;
  values.reserve(rows.size() * rows.front().size());
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != vocab_size) {
      throw std::invalid_argument("ragged rows in log-prob matrix");
    }
    values.insert(values.end(), row.begin(), row.end());
  }
  return LogProbMatrix(static_cast<int>(rows.size()), vocab_size,
                       std::move(values));
}

WordSequence make_word_sequence(std::vector<TokenId> words,
                                const Vocabulary& vocab) {
  WordSequence out;
  out.text.reserve(words.size() * 4);
  for (std::size_t i = 0; i < words.size(); ++i) {
    const TokenId id = words[i];
    if (!vocab.valid_id(id)) {
      throw std::invalid_argument("word id out of range");
    }
    if (vocab.is_blank(id)) {
      throw std::invalid_argument("word sequence must not contain the blank");
    }
    if (i > 0) out.text.push_back(' ');
    out.text += vocab.token(id);
  }
  out.words = std::move(words);
  return out;
}

int reduced_length(std::span<const TokenId> words, LengthConvention convention,
                   const Vocabulary& vocab) {
  int len = 0;
  bool nonempty = false;
  for (TokenId id : words) {
    len += incremental_length(id, nonempty, convention, vocab);
    nonempty = true;
  }
  return len;
}

int reduced_length(const WordSequence& words, LengthConvention convention,
                   const Vocabulary& vocab) {
  return reduced_length(std::span<const TokenId>(words.words), convention,
                        vocab);
}

int incremental_length(TokenId token, bool nonempty,
                       LengthConvention convention, const Vocabulary& vocab) {
  if (vocab.is_blank(token)) {
    throw std::invalid_argument("blank carries no length");
  }
  switch (convention) {
    case LengthConvention::Separator:
      return vocab.width(token) + (nonempty ? 1 : 0);
    case LengthConvention::Appended:
      return vocab.width(token) + 1;
    case LengthConvention::Unit:
      return 1;
  }
  throw std::logic_error("unknown length convention");
}

const char* to_string(LengthConvention convention) {
  switch (convention) {
    case LengthConvention::Separator: return "separator";
    case LengthConvention::Appended: return "appended";
    case LengthConvention::Unit: return "unit";
  }
  return "?";
}

const char* to_string(Reduction reduction) {
  return reduction == Reduction::Merge ? "merge" : "nomerge";
}

std::optional<LengthConvention> parse_length_convention(std::string_view name) {
  if (name == "separator") return LengthConvention::Separator;
  if (name == "appended") return LengthConvention::Appended;
  if (name == "unit") return LengthConvention::Unit;
  return std::nullopt;
}

std::optional<Reduction> parse_reduction(std::string_view name) {
  if (name == "merge") return Reduction::Merge;
  if (name == "nomerge") return Reduction::NoMerge;
  return std::nullopt;
}

}  // namespace ctclen
