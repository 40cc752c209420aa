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

#ifndef CTCLEN_LENGTH_CONTROL_HPP_
#define CTCLEN_LENGTH_CONTROL_HPP_

#include <optional>

#include "ctclen/types.hpp"

namespace ctclen {

// Configuration of the bucketed length-control dynamic program.
//
// The DP keeps, for every prefix of s slots and every length bucket
// l (covering reduced character lengths [bucket_size*(l-1)+1, bucket_size*l],
// with l = 0 for the empty summary), the single best-scoring hypothesis,
// each cell storing its exact accumulated character length.
struct DecoderConfig {
  int budget = 50;        // character budget U (>= 0)
  int bucket_size = 4;    // bucket width alpha (>= 1)
  int top_k = 20;         // non-blank words considered per slot; blank is
                          // always a candidate on top of these
  Reduction variant = Reduction::Merge;
  LengthConvention weights = LengthConvention::Separator;
  bool inclusive_budget = true;  // true: length <= U; false: length < U

  // When set, return the best hypothesis whose reduced length falls in this
  // bucket, ignoring the budget-based selection. Bucket 0 is the empty
  // summary. With bucket_size = 1 this is exact-length decoding.
  std::optional<int> target_bucket;
};

struct DecodeResult {
  TokenPath path;
  WordSequence words;
  int char_len = 0;
  double score = kNegInf;
  double seconds = 0.0;   // decode wall time, excluding any IO
  bool feasible = true;   // false when falling back to the empty summary
                          // because nothing fits (or the target bucket is
                          // unreachable)
};

// Decodes the most probable summary within the configured budget (or within
// the target bucket, when set). Returns the empty all-blank summary with
// feasible = false when no reachable hypothesis satisfies the constraint.
DecodeResult decode_length_control(const LogProbMatrix& matrix,
                                   const Vocabulary& vocab,
                                   const DecoderConfig& config);

// Runs the same DP and returns the best hypothesis for every bucket
// l = 0..num_buckets of the final column (index l; nullopt = unreachable).
// The budget and target_bucket fields of `config` are ignored.
std::vector<std::optional<DecodeResult>> decode_buckets(
    const LogProbMatrix& matrix, const Vocabulary& vocab,
    const DecoderConfig& config, int num_buckets);

// Provably optimal budget-constrained decode: bucket size 1, no merging,
// no top-k pruning. Best over all exact lengths within the budget.
DecodeResult decode_exact(
    const LogProbMatrix& matrix, const Vocabulary& vocab, int budget,
    LengthConvention weights = LengthConvention::Separator);

// Provably optimal decode to one exact reduced length (no merging).
DecodeResult decode_exact_length(
    const LogProbMatrix& matrix, const Vocabulary& vocab, int length,
    LengthConvention weights = LengthConvention::Separator);

// Per-slot argmax followed by the chosen reduction. No length guarantee.
DecodeResult decode_greedy(const LogProbMatrix& matrix,
                           const Vocabulary& vocab, Reduction reduction);

// Drops trailing whole words until the reduced length fits the budget.
WordSequence truncate_words(const WordSequence& words, int budget,
                            LengthConvention weights, const Vocabulary& vocab);

// Cuts the rendered text to at most `budget` Unicode scalars (may split a
// word).
std::string truncate_chars(std::string_view text, int budget);

}  // namespace ctclen

#endif  // CTCLEN_LENGTH_CONTROL_HPP_
