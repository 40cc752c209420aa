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

#ifndef CTCLEN_TESTS_FIXTURES_HPP_
#define CTCLEN_TESTS_FIXTURES_HPP_

#include <cmath>
#include <string>
#include <vector>

#include "ctclen/matrix_io.hpp"
#include "ctclen/types.hpp"

namespace ctclen_tests {

// Two-slot instance over {I, am, a, blank} with
//   slot 1: P(I)=0.3  P(am)=0.4  P(a)=0.2   P(blank)=0.1
//   slot 2: P(I)=0.1  P(am)=0.6  P(a)=0.05  P(blank)=0.25
// Small enough to enumerate by hand, rich enough that bucketed decoding
// and merge-variant decoding both pick provably suboptimal summaries.
inline ctclen::Instance counterexample_instance() {
  ctclen::Vocabulary vocab({"I", "am", "a", "<eps>"}, 3);
  ctclen::LogProbMatrix matrix = ctclen::LogProbMatrix::from_rows({
      {std::log(0.3), std::log(0.4), std::log(0.2), std::log(0.1)},
      {std::log(0.1), std::log(0.6), std::log(0.05), std::log(0.25)},
  });
  return ctclen::Instance{std::move(vocab), std::move(matrix)};
}

constexpr ctclen::TokenId kI = 0;
constexpr ctclen::TokenId kAm = 1;
constexpr ctclen::TokenId kA = 2;
constexpr ctclen::TokenId kBlank = 3;

// Uniform rows over the given vocab; handy for tie-break checks.
inline ctclen::Instance uniform_instance(std::vector<std::string> tokens,
                                         ctclen::TokenId blank_id, int slots) {
  ctclen::Vocabulary vocab(std::move(tokens), blank_id);
  const double p = std::log(1.0 / vocab.size());
  std::vector<double> values(static_cast<std::size_t>(slots) * vocab.size(), p);
  ctclen::LogProbMatrix matrix(slots, vocab.size(), std::move(values));
  return ctclen::Instance{std::move(vocab), std::move(matrix)};
}

}  // namespace ctclen_tests

#endif  // CTCLEN_TESTS_FIXTURES_HPP_
