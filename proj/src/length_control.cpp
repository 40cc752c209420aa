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

#include "ctclen/length_control.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "ctclen/reduce.hpp"

namespace ctclen {

namespace {

// One hypothesis per (slot, bucket): the running score, the exact reduced
// character length (the bucket index alone is too coarse once
// bucket_size > 1), the final path token (blank allowed; it decides whether
// the next token merges), and a backpointer.
struct Cell {
  double score = kNegInf;
  int len = 0;
  TokenId last = -1;
  TokenId emitted = -1;  // token chosen at this slot
  int prev_bucket = -1;  // bucket of the (s-1)-slot predecessor

  bool reachable() const { return score != kNegInf; }
};

class DpTable {
 public:
  DpTable(int slots, int buckets)
      : buckets_(buckets), cells_(static_cast<std::size_t>(slots) * (buckets + 1)) {}

  // s in [1, S]; l in [0, buckets].
  Cell& at(int s, int l) {
    return cells_[static_cast<std::size_t>(s - 1) * (buckets_ + 1) + l];
  }
  const Cell& at(int s, int l) const {
    return cells_[static_cast<std::size_t>(s - 1) * (buckets_ + 1) + l];
  }

 private:
  int buckets_;
  std::vector<Cell> cells_;
};

void check_config(const DecoderConfig& config) {
  if (config.budget < 0) throw std::invalid_argument("budget must be >= 0");
  if (config.bucket_size < 1) {
    throw std::invalid_argument("bucket size must be >= 1");
  }
  if (config.top_k < 1) throw std::invalid_argument("top_k must be >= 1");
  if (config.target_bucket && *config.target_bucket < 0) {
    throw std::invalid_argument("target bucket must be >= 0");
  }
}

// The k most probable non-blank tokens of one slot, listed in ascending id
// order so that candidate iteration (and therefore tie-breaking) is total.
std::vector<TokenId> top_k_words(const LogProbMatrix& matrix, int slot,
                                 const Vocabulary& vocab, int k) {
  std::vector<TokenId> ids;
  ids.reserve(matrix.vocab_size());
  for (TokenId t = 0; t < matrix.vocab_size(); ++t) {
    if (!vocab.is_blank(t)) ids.push_back(t);
  }
  const auto better = [&](TokenId a, TokenId b) {
    const double va = matrix.at(slot, a);
    const double vb = matrix.at(slot, b);
    if (va != vb) return va > vb;
    return a < b;
  };
  if (static_cast<int>(ids.size()) > k) {
    std::nth_element(ids.begin(), ids.begin() + k, ids.end(), better);
    ids.resize(k);
  }
  std::sort(ids.begin(), ids.end());
  return ids;
}

// Largest reduced length any path of `slots` tokens can reach.
int max_reachable_length(const LogProbMatrix& matrix, const Vocabulary& vocab,
                         LengthConvention weights) {
  if (weights == LengthConvention::Unit) return matrix.slots();
  int max_width = 0;
  for (TokenId t = 0; t < vocab.size(); ++t) {
    if (!vocab.is_blank(t)) max_width = std::max(max_width, vocab.width(t));
  }
  if (max_width == 0) return 0;
  const int slots = matrix.slots();
  if (weights == LengthConvention::Appended) return slots * (max_width + 1);
  return slots * max_width + (slots - 1);
}

// Fills the S x (L+1) table per the three-way recursion. Candidates are
// evaluated in tie-break order (blank extension, then repeat, then new word
// with smaller source bucket and smaller token id first) and replace the
// cell only on a strictly better score, so ties resolve deterministically.
DpTable run_dp(const LogProbMatrix& matrix, const Vocabulary& vocab,
               const DecoderConfig& config, int num_buckets) {
  const int num_slots = matrix.slots();
  const int alpha = config.bucket_size;
  const TokenId blank = vocab.blank_id();
  const bool merging = config.variant == Reduction::Merge;

  DpTable table(num_slots, num_buckets);

  std::vector<TokenId> words = top_k_words(matrix, 0, vocab, config.top_k);

  // Slot 1. Bucket 0 is the lone blank; bucket l >= 1 picks the most
  // probable word whose one-word length lands in the bucket.
  {
    Cell& zero = table.at(1, 0);
    zero.score = matrix.at(0, blank);
    zero.len = 0;
    zero.last = blank;
    zero.emitted = blank;
  }
  for (TokenId w : words) {
    const double v = matrix.at(0, w);
    if (v == kNegInf) continue;
    const int len = single_word_length(w, config.weights, vocab);
    const int l = (len + alpha - 1) / alpha;
    if (l < 1 || l > num_buckets) continue;
    Cell& cell = table.at(1, l);
    if (v > cell.score) {
      cell.score = v;
      cell.len = len;
      cell.last = w;
      cell.emitted = w;
      cell.prev_bucket = -1;
    }
  }

  for (int s = 2; s <= num_slots; ++s) {
    words = top_k_words(matrix, s - 1, vocab, config.top_k);
    const double v_blank = matrix.at(s - 1, blank);

    for (int l = 0; l <= num_buckets; ++l) {
      Cell& cell = table.at(s, l);
      const Cell& same = table.at(s - 1, l);

      // Case 1: emit a blank; the length index is unchanged.
      if (same.reachable() && v_blank != kNegInf) {
        const double score = same.score + v_blank;
        if (score > cell.score) {
          cell.score = score;
          cell.len = same.len;
          cell.last = blank;
          cell.emitted = blank;
          cell.prev_bucket = l;
        }
      }

      // Case 2 (merge only): repeat the previous path token; CTC collapses
      // the pair, so neither length nor bucket moves.
      if (merging && same.reachable() && same.last != blank) {
        const double v = matrix.at(s - 1, same.last);
        if (v != kNegInf) {
          const double score = same.score + v;
          if (score > cell.score) {
            cell.score = score;
            cell.len = same.len;
            cell.last = same.last;
            cell.emitted = same.last;
            cell.prev_bucket = l;
          }
        }
      }

      // Case 3: emit a fresh word from some bucket l' <= l, admitted only
      // if the exact source length plus the word's incremental cost lands
      // in this bucket's range.
      if (l >= 1) {
        const int range_lo = alpha * (l - 1) + 1;
        const int range_hi = alpha * l;
        for (int src = 0; src <= l; ++src) {
          const Cell& from = table.at(s - 1, src);
          if (!from.reachable()) continue;
          for (TokenId w : words) {
            if (merging && w == from.last) continue;
            const int len =
                from.len +
                incremental_length(w, from.len > 0, config.weights, vocab);
            if (len < range_lo || len > range_hi) continue;
            const double v = matrix.at(s - 1, w);
            if (v == kNegInf) continue;
            const double score = from.score + v;
            if (score > cell.score) {
              cell.score = score;
              cell.len = len;
              cell.last = w;
              cell.emitted = w;
              cell.prev_bucket = src;
            }
          }
        }
      }
    }
  }
  return table;
}

DecodeResult extract(const DpTable& table, int num_slots, int bucket,
                     const Vocabulary& vocab, const DecoderConfig& config) {
  DecodeResult result;
  const Cell& final_cell = table.at(num_slots, bucket);
  result.score = final_cell.score;
  result.char_len = final_cell.len;
  result.feasible = true;

  std::vector<TokenId> slots(num_slots);
  int l = bucket;
  for (int s = num_slots; s >= 1; --s) {
    const Cell& cell = table.at(s, l);
    slots[s - 1] = cell.emitted;
    l = cell.prev_bucket;
  }
  result.path.slots = std::move(slots);
  result.words = reduce(result.path, vocab, config.variant);
  return result;
}

// The all-blank fallback used when nothing fits the constraint.
DecodeResult empty_summary(const LogProbMatrix& matrix,
                           const Vocabulary& vocab) {
  DecodeResult result;
  const TokenId blank = vocab.blank_id();
  result.path.slots.assign(matrix.slots(), blank);
  result.words = make_word_sequence({}, vocab);
  result.char_len = 0;
  result.score = 0.0;
  for (int s = 0; s < matrix.slots(); ++s) result.score += matrix.at(s, blank);
  result.feasible = false;
  return result;
}

int num_buckets_for(const LogProbMatrix& matrix, const Vocabulary& vocab,
                    const DecoderConfig& config, int effective_budget) {
  const int cap =
      std::min(std::max(effective_budget, 0),
               max_reachable_length(matrix, vocab, config.weights));
  int buckets = std::max(1, (cap + config.bucket_size - 1) / config.bucket_size);
  if (config.target_bucket) buckets = std::max(buckets, *config.target_bucket);
  return buckets;
}

}  // namespace

DecodeResult decode_length_control(const LogProbMatrix& matrix,
                                   const Vocabulary& vocab,
                                   const DecoderConfig& config) {
  check_config(config);
  if (vocab.size() != matrix.vocab_size()) {
    throw std::invalid_argument("vocab size does not match matrix");
  }
  const auto start = std::chrono::steady_clock::now();

  const int effective_budget =
      config.inclusive_budget ? config.budget : config.budget - 1;
  const int num_buckets = num_buckets_for(matrix, vocab, config, effective_budget);
  const DpTable table = run_dp(matrix, vocab, config, num_buckets);
  const int num_slots = matrix.slots();

  DecodeResult result;
  if (config.target_bucket) {
    const int l = *config.target_bucket;
    if (l <= num_buckets && table.at(num_slots, l).reachable()) {
      result = extract(table, num_slots, l, vocab, config);
    } else {
      result = empty_summary(matrix, vocab);
      result.score = kNegInf;
    }
  } else {
    // Best final cell over every bucket whose exact length fits the budget;
    // a boundary bucket straddling the budget qualifies through its stored
    // exact length. Ties go to the smaller bucket.
    int best = -1;
    double best_score = kNegInf;
    for (int l = 0; l <= num_buckets; ++l) {
      const Cell& cell = table.at(num_slots, l);
      if (!cell.reachable() || cell.len > effective_budget) continue;
      if (cell.score > best_score) {
        best_score = cell.score;
        best = l;
      }
    }
    result = best >= 0 ? extract(table, num_slots, best, vocab, config)
                       : empty_summary(matrix, vocab);
  }

  result.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return result;
}

std::vector<std::optional<DecodeResult>> decode_buckets(
    const LogProbMatrix& matrix, const Vocabulary& vocab,
    const DecoderConfig& config, int num_buckets) {
  check_config(config);
  if (num_buckets < 0) throw std::invalid_argument("num_buckets must be >= 0");
  if (vocab.size() != matrix.vocab_size()) {
    throw std::invalid_argument("vocab size does not match matrix");
  }
  const auto start = std::chrono::steady_clock::now();
  const DpTable table =
      run_dp(matrix, vocab, config, std::max(num_buckets, 1));
  const int num_slots = matrix.slots();

  std::vector<std::optional<DecodeResult>> out(num_buckets + 1);
  for (int l = 0; l <= num_buckets; ++l) {
    if (!table.at(num_slots, l).reachable()) continue;
    out[l] = extract(table, num_slots, l, vocab, config);
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  for (auto& r : out) {
    if (r) r->seconds = seconds;
  }
  return out;
}

DecodeResult decode_exact(const LogProbMatrix& matrix, const Vocabulary& vocab,
                          int budget, LengthConvention weights) {
  DecoderConfig config;
  config.budget = budget;
  config.bucket_size = 1;
  config.top_k = std::max(1, vocab.size() - 1);  // exactness forbids pruning
  config.variant = Reduction::NoMerge;
  config.weights = weights;
  return decode_length_control(matrix, vocab, config);
}

DecodeResult decode_exact_length(const LogProbMatrix& matrix,
                                 const Vocabulary& vocab, int length,
                                 LengthConvention weights) {
  if (length < 0) throw std::invalid_argument("length must be >= 0");
  DecoderConfig config;
  config.budget = length;
  config.bucket_size = 1;
  config.top_k = std::max(1, vocab.size() - 1);
  config.variant = Reduction::NoMerge;
  config.weights = weights;
  config.target_bucket = length;
  return decode_length_control(matrix, vocab, config);
}

DecodeResult decode_greedy(const LogProbMatrix& matrix,
                           const Vocabulary& vocab, Reduction reduction) {
  if (vocab.size() != matrix.vocab_size()) {
    throw std::invalid_argument("vocab size does not match matrix");
  }
  const auto start = std::chrono::steady_clock::now();
  DecodeResult result;
  result.path.slots.resize(matrix.slots());
  result.score = 0.0;
  for (int s = 0; s < matrix.slots(); ++s) {
    TokenId best = 0;
    double best_v = matrix.at(s, 0);
    for (TokenId t = 1; t < matrix.vocab_size(); ++t) {
      const double v = matrix.at(s, t);
      if (v > best_v) {
        best_v = v;
        best = t;
      }
    }
    result.path.slots[s] = best;
    result.score += best_v;
  }
  result.words = reduce(result.path, vocab, reduction);
  result.char_len =
      reduced_length(result.words, LengthConvention::Separator, vocab);
  result.feasible = true;
  result.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return result;
}

WordSequence truncate_words(const WordSequence& words, int budget,
                            LengthConvention weights, const Vocabulary& vocab) {
  std::vector<TokenId> kept = words.words;
  while (!kept.empty() &&
         reduced_length(std::span<const TokenId>(kept), weights, vocab) >
             budget) {
    kept.pop_back();
  }
  return make_word_sequence(std::move(kept), vocab);
}

std::string truncate_chars(std::string_view text, int budget) {
  if (budget <= 0) return {};
  int count = 0;
  std::size_t end = text.size();
  for (std::size_t i = 0; i < text.size(); ++i) {
    const auto c = static_cast<unsigned char>(text[i]);
    if ((c & 0xC0) != 0x80) {
      if (count == budget) {
        end = i;
        break;
      }
      ++count;
    }
  }
  return std::string(text.substr(0, end));
}

}  // namespace ctclen
