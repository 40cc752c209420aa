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

#include "ctclen/oracle.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "ctclen/reduce.hpp"

namespace ctclen {

namespace {

void check_cap(const LogProbMatrix& matrix, double max_paths) {
  const double total =
      std::pow(static_cast<double>(matrix.vocab_size()), matrix.slots());
  if (total > max_paths) {
    throw std::length_error("path enumeration too large");
  }
}

// Depth-first walk over every token path, calling leaf(slots, score, len)
// at each finished path with its reduced length under the given variant.
// Tokens are tried in ascending id order, so a "replace only on strictly
// better" leaf makes the lexicographically smallest path win ties.
template <typename Leaf>
struct Enumerator {
  const LogProbMatrix& matrix;
  const Vocabulary& vocab;
  Reduction variant;
  LengthConvention weights;
  Leaf& leaf;
  std::vector<TokenId> slots;

  void run() {
    slots.assign(matrix.slots(), -1);
    walk(0, 0.0, 0, vocab.blank_id());
  }

  void walk(int depth, double score, int len, TokenId last) {
    if (depth == matrix.slots()) {
      leaf(static_cast<const std::vector<TokenId>&>(slots), score, len);
      return;
    }
    for (TokenId t = 0; t < matrix.vocab_size(); ++t) {
      const double v = matrix.at(depth, t);
      if (v == kNegInf) continue;
      slots[depth] = t;
      int next_len = len;
      if (!vocab.is_blank(t) &&
          (variant == Reduction::NoMerge || t != last)) {
        next_len += incremental_length(t, len > 0, weights, vocab);
      }
      walk(depth + 1, score + v, next_len, t);
    }
  }
};

template <typename Leaf>
void for_each_path(const LogProbMatrix& matrix, const Vocabulary& vocab,
                   Reduction variant, LengthConvention weights, Leaf leaf) {
  Enumerator<Leaf> enumerator{matrix, vocab, variant, weights, leaf, {}};
  enumerator.run();
}

OracleResult finish(const std::vector<TokenId>& slots, double score, int len,
                    const Vocabulary& vocab, Reduction variant) {
  OracleResult result;
  result.path.slots = slots;
  result.words = reduce(result.path, vocab, variant);
  result.char_len = len;
  result.score = score;
  result.feasible = true;
  return result;
}

}  // namespace

OracleResult brute_decode_range(const LogProbMatrix& matrix,
                                const Vocabulary& vocab, int min_len,
                                int max_len, Reduction variant,
                                LengthConvention weights, double max_paths) {
  if (vocab.size() != matrix.vocab_size()) {
    throw std::invalid_argument("vocab size does not match matrix");
  }
  check_cap(matrix, max_paths);

  OracleResult best;
  for_each_path(matrix, vocab, variant, weights,
                [&](const std::vector<TokenId>& slots, double score, int len) {
                  if (len < min_len || len > max_len) return;
                  if (!best.feasible || score > best.score) {
                    best = finish(slots, score, len, vocab, variant);
                  }
                });
  return best;
}

OracleResult brute_decode(const LogProbMatrix& matrix, const Vocabulary& vocab,
                          int budget, Reduction variant,
                          LengthConvention weights, bool inclusive,
                          double max_paths) {
  const int hi = inclusive ? budget : budget - 1;
  if (hi < 0) return {};
  return brute_decode_range(matrix, vocab, 0, hi, variant, weights, max_paths);
}

std::vector<OracleResult> brute_best_by_length(const LogProbMatrix& matrix,
                                               const Vocabulary& vocab,
                                               int max_len, Reduction variant,
                                               LengthConvention weights,
                                               double max_paths) {
  if (vocab.size() != matrix.vocab_size()) {
    throw std::invalid_argument("vocab size does not match matrix");
  }
  if (max_len < 0) throw std::invalid_argument("max_len must be >= 0");
  check_cap(matrix, max_paths);

  std::vector<OracleResult> table(max_len + 1);
  for_each_path(matrix, vocab, variant, weights,
                [&](const std::vector<TokenId>& slots, double score, int len) {
                  if (len >= static_cast<int>(table.size())) return;
                  OracleResult& best = table[len];
                  if (!best.feasible || score > best.score) {
                    best = finish(slots, score, len, vocab, variant);
                  }
                });
  return table;
}

std::map<std::vector<TokenId>, double> brute_all_marginals(
    const LogProbMatrix& matrix, const Vocabulary& vocab, Reduction variant,
    double max_paths) {
  if (vocab.size() != matrix.vocab_size()) {
    throw std::invalid_argument("vocab size does not match matrix");
  }
  check_cap(matrix, max_paths);

  std::map<std::vector<TokenId>, double> marginals;
  // The length convention is irrelevant here; any value keeps the walk
  // shared with the decoding oracles.
  for_each_path(matrix, vocab, variant, LengthConvention::Unit,
                [&](const std::vector<TokenId>& slots, double score, int) {
                  TokenPath path;
                  path.slots = slots;
                  const WordSequence words = reduce(path, vocab, variant);
                  auto [it, inserted] =
                      marginals.try_emplace(words.words, score);
                  if (!inserted) it->second = log_add(it->second, score);
                });
  return marginals;
}

GapReport gap_report(const LogProbMatrix& matrix, const Vocabulary& vocab,
                     const DecoderConfig& config, double max_paths) {
  GapReport report;
  report.dp = decode_length_control(matrix, vocab, config);

  if (config.target_bucket) {
    const int l = *config.target_bucket;
    const int lo = l == 0 ? 0 : config.bucket_size * (l - 1) + 1;
    const int hi = l == 0 ? 0 : config.bucket_size * l;
    report.oracle = brute_decode_range(matrix, vocab, lo, hi, config.variant,
                                       config.weights, max_paths);
  } else {
    report.oracle =
        brute_decode(matrix, vocab, config.budget, config.variant,
                     config.weights, config.inclusive_budget, max_paths);
  }

  if (report.oracle.feasible && report.dp.feasible) {
    report.gap = report.oracle.score - report.dp.score;
  } else if (report.oracle.feasible != report.dp.feasible) {
    // One side found a qualifying summary and the other did not; surface an
    // infinite gap rather than hiding the disagreement.
    report.gap = std::numeric_limits<double>::infinity();
  } else {
    report.gap = 0.0;
  }
  return report;
}

}  // namespace ctclen
