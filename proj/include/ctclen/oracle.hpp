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

// Exhaustive reference decoders. These enumerate every token path (all
// vocab_size^slots of them), so they are only usable on small instances,
// but they are trivially correct and serve as the measuring stick for the
// dynamic-programming decoder.

#ifndef CTCLEN_ORACLE_HPP_
#define CTCLEN_ORACLE_HPP_

#include <map>
#include <vector>

#include "ctclen/ctc_score.hpp"
#include "ctclen/length_control.hpp"
#include "ctclen/types.hpp"

namespace ctclen {

struct OracleResult {
  TokenPath path;
  WordSequence words;
  int char_len = 0;
  double score = kNegInf;
  bool feasible = false;  // false when no path satisfies the length constraint
};

// Best-scoring path whose reduced length falls in [min_len, max_len].
// Throws std::length_error when vocab_size^slots exceeds max_paths.
OracleResult brute_decode_range(const LogProbMatrix& matrix,
                                const Vocabulary& vocab, int min_len,
                                int max_len, Reduction variant,
                                LengthConvention weights,
                                double max_paths = kDefaultEnumerationCap);

// Budget form: reduced length <= budget (or < budget when inclusive is
// false), mirroring the constraint the DP decoder enforces.
OracleResult brute_decode(const LogProbMatrix& matrix, const Vocabulary& vocab,
                          int budget, Reduction variant,
                          LengthConvention weights, bool inclusive = true,
                          double max_paths = kDefaultEnumerationCap);

// Element l = best path whose reduced length is exactly l, for l in
// [0, max_len]. Unreachable lengths keep feasible == false.
std::vector<OracleResult> brute_best_by_length(
    const LogProbMatrix& matrix, const Vocabulary& vocab, int max_len,
    Reduction variant, LengthConvention weights,
    double max_paths = kDefaultEnumerationCap);

// Log marginal probability of every producible word sequence, keyed by its
// token ids: one pass over all paths, each path's score folded (log-sum-exp)
// into the entry for its reduction. Summing exp over the map gives 1 for a
// row-normalized matrix, since the reductions partition path space.
std::map<std::vector<TokenId>, double> brute_all_marginals(
    const LogProbMatrix& matrix, const Vocabulary& vocab, Reduction variant,
    double max_paths = kDefaultEnumerationCap);

// Side-by-side run of the DP decoder and the exhaustive search under the
// same constraint. gap = oracle_score - dp_score; it is zero for the
// unit-bucket no-merge configuration and nonnegative everywhere else.
struct GapReport {
  DecodeResult dp;
  OracleResult oracle;
  double gap = 0.0;
};

GapReport gap_report(const LogProbMatrix& matrix, const Vocabulary& vocab,
                     const DecoderConfig& config,
                     double max_paths = kDefaultEnumerationCap);

}  // namespace ctclen

#endif  // CTCLEN_ORACLE_HPP_
