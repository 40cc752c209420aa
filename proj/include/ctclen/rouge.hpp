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

#ifndef CTCLEN_ROUGE_HPP_
#define CTCLEN_ROUGE_HPP_

#include <string>
#include <string_view>
#include <vector>

namespace ctclen {

struct RougeStat {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

struct RougeScores {
  RougeStat rouge1;  // unigram overlap with clipped counts
  RougeStat rouge2;  // bigram overlap with clipped counts
  RougeStat rougeL;  // longest common subsequence
};

// Lowercases ASCII letters and splits on whitespace.
std::vector<std::string> rouge_tokenize(std::string_view text);

RougeScores rouge(std::string_view candidate, std::string_view reference);

// Arithmetic mean of the per-pair scores, component by component. The two
// lists are matched by index and must be the same size.
RougeScores corpus_rouge(const std::vector<std::string>& candidates,
                         const std::vector<std::string>& references);

}  // namespace ctclen

#endif  // CTCLEN_ROUGE_HPP_
