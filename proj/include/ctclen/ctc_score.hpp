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

#ifndef CTCLEN_CTC_SCORE_HPP_
#define CTCLEN_CTC_SCORE_HPP_

#include "ctclen/types.hpp"

namespace ctclen {

// Default cap on the number of enumerated paths (V^S) for brute-force
// scoring; exceeding it raises std::length_error.
inline constexpr double kDefaultEnumerationCap = 1e7;

// log(exp(a) + exp(b)) without overflow; -inf absorbs correctly.
double log_add(double a, double b);

// Log marginal probability of `target` (non-blank word ids) under the
// merge reduction: the forward recursion over the blank-interleaved
// extended target, in log space. An unproducible target yields -inf.
double ctc_forward(const LogProbMatrix& matrix,
                   std::span<const TokenId> target, const Vocabulary& vocab);
double ctc_forward(const LogProbMatrix& matrix, const WordSequence& target,
                   const Vocabulary& vocab);

// Exhaustive marginal: sums the probability of every path whose reduction
// equals `target`. Enumerates all V^S paths; refuses with std::length_error
// when V^S exceeds `max_paths`.
double brute_marginal(const LogProbMatrix& matrix,
                      std::span<const TokenId> target, const Vocabulary& vocab,
                      Reduction reduction,
                      double max_paths = kDefaultEnumerationCap);
double brute_marginal(const LogProbMatrix& matrix, const WordSequence& target,
                      const Vocabulary& vocab, Reduction reduction,
                      double max_paths = kDefaultEnumerationCap);

}  // namespace ctclen

#endif  // CTCLEN_CTC_SCORE_HPP_
