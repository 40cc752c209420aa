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

#include "ctclen/rouge.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <stdexcept>

namespace ctclen {

namespace {

RougeStat make_stat(double matches, double candidate_total,
                    double reference_total) {
  RougeStat stat;
  stat.precision = candidate_total > 0 ? matches / candidate_total : 0.0;
  stat.recall = reference_total > 0 ? matches / reference_total : 0.0;
  const double denom = stat.precision + stat.recall;
  stat.f1 = denom > 0 ? 2.0 * stat.precision * stat.recall / denom : 0.0;
  return stat;
}

// Overlap of order-n grams, with each gram's match count clipped to its
// frequency in the reference.
RougeStat ngram_overlap(const std::vector<std::string>& candidate,
                        const std::vector<std::string>& reference, int n) {
  const auto count_grams = [n](const std::vector<std::string>& tokens) {
    std::map<std::vector<std::string>, int> grams;
    for (std::size_t i = 0; i + n <= tokens.size(); ++i) {
      grams[{tokens.begin() + i, tokens.begin() + i + n}] += 1;
    }
    return grams;
  };
  const auto cand_grams = count_grams(candidate);
  const auto ref_grams = count_grams(reference);

  int matches = 0;
  int cand_total = 0;
  for (const auto& [gram, count] : cand_grams) {
    cand_total += count;
    const auto it = ref_grams.find(gram);
    if (it != ref_grams.end()) matches += std::min(count, it->second);
  }
  int ref_total = 0;
  for (const auto& [gram, count] : ref_grams) ref_total += count;
  return make_stat(matches, cand_total, ref_total);
}

int lcs_length(const std::vector<std::string>& a,
               const std::vector<std::string>& b) {
  if (a.empty() || b.empty()) return 0;
  // Two rolling rows of the classic LCS table.
  std::vector<int> prev(b.size() + 1, 0);
  std::vector<int> cur(b.size() + 1, 0);
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = 1; j <= b.size(); ++j) {
      if (a[i - 1] == b[j - 1]) {
        cur[j] = prev[j - 1] + 1;
      } else {
        cur[j] = std::max(prev[j], cur[j - 1]);
      }
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

}  // namespace

std::vector<std::string> rouge_tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  std::string word;
  for (char ch : text) {
    const auto c = static_cast<unsigned char>(ch);
    if (std::isspace(c)) {
      if (!word.empty()) {
        tokens.push_back(std::move(word));
        word.clear();
      }
    } else {
      word.push_back(static_cast<char>(std::tolower(c)));
    }
  }
  if (!word.empty()) tokens.push_back(std::move(word));
  return tokens;
}

RougeScores rouge(std::string_view candidate, std::string_view reference) {
  const std::vector<std::string> cand = rouge_tokenize(candidate);
  const std::vector<std::string> ref = rouge_tokenize(reference);

  RougeScores scores;
  scores.rouge1 = ngram_overlap(cand, ref, 1);
  scores.rouge2 = ngram_overlap(cand, ref, 2);
  scores.rougeL = make_stat(lcs_length(cand, ref), cand.size(), ref.size());
  return scores;
}

RougeScores corpus_rouge(const std::vector<std::string>& candidates,
                         const std::vector<std::string>& references) {
  if (candidates.size() != references.size()) {
    throw std::invalid_argument("candidate and reference counts differ");
  }
  if (candidates.empty()) {
    throw std::invalid_argument("corpus_rouge needs at least one pair");
  }
  RougeScores sum;
  const auto add = [](RougeStat& acc, const RougeStat& s) {
    acc.precision += s.precision;
    acc.recall += s.recall;
    acc.f1 += s.f1;
  };
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const RougeScores scores = rouge(candidates[i], references[i]);
    add(sum.rouge1, scores.rouge1);
    add(sum.rouge2, scores.rouge2);
    add(sum.rougeL, scores.rougeL);
  }
  const double n = static_cast<double>(candidates.size());
  const auto scale = [n](RougeStat& s) {
    s.precision /= n;
    s.recall /= n;
    s.f1 /= n;
  };
  scale(sum.rouge1);
  scale(sum.rouge2);
  scale(sum.rougeL);
  return sum;
}

}  // namespace ctclen
