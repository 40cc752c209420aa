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

#include "ctclen/ctc_score.hpp"

#include <cmath>
#include <stdexcept>

namespace ctclen {

namespace {

void check_target(std::span<const TokenId> target, const Vocabulary& vocab) {
  for (TokenId id : target) {
    if (!vocab.valid_id(id)) {
      throw std::invalid_argument("target token id out of range");
    }
    if (vocab.is_blank(id)) {
      throw std::invalid_argument("target must not contain the blank");
    }
  }
}

void check_enumeration_cap(const LogProbMatrix& matrix, double max_paths) {
  const double total = std::pow(static_cast<double>(matrix.vocab_size()),
                                static_cast<double>(matrix.slots()));
  if (!(total <= max_paths)) {
    throw std::length_error("V^S exceeds the enumeration cap");
  }
}

}  // namespace

double log_add(double a, double b) {
  if (a == kNegInf) return b;
  if (b == kNegInf) return a;
  const double m = a > b ? a : b;
  return m + std::log(std::exp(a - m) + std::exp(b - m));
}

double ctc_forward(const LogProbMatrix& matrix,
                   std::span<const TokenId> target, const Vocabulary& vocab) {
  check_target(target, vocab);
  if (vocab.size() != matrix.vocab_size()) {
    throw std::invalid_argument("vocab size does not match matrix");
  }
  const int num_slots = matrix.slots();
  const TokenId blank = vocab.blank_id();
  const int target_len = static_cast<int>(target.size());

  if (target_len == 0) {
    double score = 0.0;
    for (int s = 0; s < num_slots; ++s) score += matrix.at(s, blank);
    return score;
  }

  // Extended target: blank, y1, blank, y2, ..., yT, blank.
  const int ext_len = 2 * target_len + 1;
  auto ext_token = [&](int j) -> TokenId {
    return (j % 2 == 0) ? blank : target[j / 2];
  };

  std::vector<double> prev(ext_len, kNegInf);
  std::vector<double> cur(ext_len, kNegInf);
  prev[0] = matrix.at(0, blank);
  prev[1] = matrix.at(0, ext_token(1));

  for (int s = 1; s < num_slots; ++s) {
    for (int j = 0; j < ext_len; ++j) {
      double acc = prev[j];
      if (j >= 1) acc = log_add(acc, prev[j - 1]);
      // Skipping over the preceding blank is allowed only between
      // distinct labels.
      if (j >= 2) {
        const TokenId tok = ext_token(j);
        if (tok != blank && tok != ext_token(j - 2)) {
          acc = log_add(acc, prev[j - 2]);
        }
      }
      cur[j] = acc == kNegInf ? kNegInf : acc + matrix.at(s, ext_token(j));
    }
    std::swap(prev, cur);
  }
  return log_add(prev[ext_len - 1], prev[ext_len - 2]);
}

double ctc_forward(const LogProbMatrix& matrix, const WordSequence& target,
                   const Vocabulary& vocab) {
  return ctc_forward(matrix, std::span<const TokenId>(target.words), vocab);
}

double brute_marginal(const LogProbMatrix& matrix,
                      std::span<const TokenId> target, const Vocabulary& vocab,
                      Reduction reduction, double max_paths) {
  check_target(target, vocab);
  if (vocab.size() != matrix.vocab_size()) {
    throw std::invalid_argument("vocab size does not match matrix");
  }
  check_enumeration_cap(matrix, max_paths);

  const int num_slots = matrix.slots();
  const int vocab_size = matrix.vocab_size();
  const TokenId blank = vocab.blank_id();
  const int target_len = static_cast<int>(target.size());

  // Depth-first walk over all paths, tracking the reduced prefix as
  // (matched length, last path token). Once the reduction diverges from
  // the target it can never recover, so that subtree is skipped.
  struct Dfs {
    const LogProbMatrix& matrix;
    const Vocabulary& vocab;
    std::span<const TokenId> target;
    Reduction reduction;
    int num_slots;
    int vocab_size;
    int target_len;
    double total = kNegInf;

    void walk(int depth, double score, int matched, TokenId last) {
      if (depth == num_slots) {
        if (matched == target_len) total = log_add(total, score);
        return;
      }
      for (TokenId tok = 0; tok < vocab_size; ++tok) {
        int m = matched;
        const bool emit = !vocab.is_blank(tok) &&
                          (reduction == Reduction::NoMerge || tok != last);
        if (emit) {
          if (m >= target_len || target[m] != tok) continue;
          ++m;
        }
        walk(depth + 1, score + matrix.at(depth, tok), m, tok);
      }
    }
  };

  Dfs dfs{matrix,     vocab,      target,    reduction,
          num_slots,  vocab_size, target_len};
  dfs.walk(0, 0.0, 0, blank);
  return dfs.total;
}

double brute_marginal(const LogProbMatrix& matrix, const WordSequence& target,
                      const Vocabulary& vocab, Reduction reduction,
                      double max_paths) {
  return brute_marginal(matrix, std::span<const TokenId>(target.words), vocab,
                        reduction, max_paths);
}

}  // namespace ctclen
