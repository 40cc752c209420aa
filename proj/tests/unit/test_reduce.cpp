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

#include <random>
#include <stdexcept>
#include <vector>

#include "ctclen/reduce.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using ctclen::Reduction;
using ctclen::TokenId;
using ctclen::TokenPath;
using ctclen::Vocabulary;
using ctclen::WordSequence;

namespace {

Vocabulary ab_vocab() { return Vocabulary({"a", "b", "<eps>"}, 2); }

TokenPath path_of(std::vector<TokenId> slots) {
  TokenPath p;
  p.slots = std::move(slots);
  return p;
}

}  // namespace

TEST_CASE("merge reduction collapses repeats and drops blanks") {
  const Vocabulary vocab = ab_vocab();
  const TokenId a = 0, b = 1, eps = 2;

  // a a _ _ a b b _  ->  a a b
  const WordSequence words =
      ctclen::reduce_merge(path_of({a, a, eps, eps, a, b, b, eps}), vocab);
  CHECK(words.words == std::vector<TokenId>{a, a, b});
  CHECK(words.text == "a a b");
}

TEST_CASE("no-merge reduction drops blanks only") {
  const Vocabulary vocab = ab_vocab();
  const TokenId a = 0, b = 1, eps = 2;

  // a a _ a b b _  ->  a a a b b
  const WordSequence words =
      ctclen::reduce_nomerge(path_of({a, a, eps, a, b, b, eps}), vocab);
  CHECK(words.words == std::vector<TokenId>{a, a, a, b, b});
  CHECK(words.text == "a a a b b");
}

TEST_CASE("reduction edge cases") {
  const Vocabulary vocab = ab_vocab();
  const TokenId a = 0, b = 1, eps = 2;

  CHECK(ctclen::reduce_merge(path_of({eps, eps, eps}), vocab).empty());
  CHECK(ctclen::reduce_nomerge(path_of({eps, eps, eps}), vocab).empty());
  CHECK(ctclen::reduce_merge(path_of({}), vocab).empty());

  // A blank between repeats keeps both occurrences.
  CHECK(ctclen::reduce_merge(path_of({a, eps, a}), vocab).words ==
        std::vector<TokenId>{a, a});

  CHECK(ctclen::reduce_nomerge(path_of({a, b, a}), vocab).words ==
        std::vector<TokenId>{a, b, a});

  CHECK(ctclen::reduce(path_of({a, a}), vocab, Reduction::Merge).words ==
        std::vector<TokenId>{a});
  CHECK(ctclen::reduce(path_of({a, a}), vocab, Reduction::NoMerge).words ==
        std::vector<TokenId>{a, a});
}

TEST_CASE("invalid token ids are rejected") {
  const Vocabulary vocab = ab_vocab();
  CHECK_THROWS_AS((void)ctclen::reduce_merge(path_of({0, 7}), vocab),
                  std::out_of_range);
  CHECK_THROWS_AS((void)ctclen::reduce_nomerge(path_of({-1}), vocab),
                  std::out_of_range);
}

TEST_CASE("no-merge equals manual blank filtering on random paths") {
  const Vocabulary vocab = ab_vocab();
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int len = 1 + static_cast<int>(rng() % 12);
    std::vector<TokenId> slots(len);
    std::vector<TokenId> expected;
    for (int i = 0; i < len; ++i) {
      slots[i] = static_cast<TokenId>(rng() % vocab.size());
      if (!vocab.is_blank(slots[i])) expected.push_back(slots[i]);
    }
    CHECK(ctclen::reduce_nomerge(path_of(slots), vocab).words == expected);
  }
}

TEST_CASE("merge reduction is invariant to duplication and blank padding") {
  // Start from a word sequence with no two equal neighbors, expand it into
  // a random path by repeating tokens and sprinkling blanks (never between
  // two copies of the same word), and confirm the reduction returns the
  // original sequence.
  const Vocabulary vocab = ab_vocab();
  const TokenId eps = 2;
  std::mt19937_64 rng(13);

  for (int trial = 0; trial < 200; ++trial) {
    const int word_count = static_cast<int>(rng() % 5);
    std::vector<TokenId> words;
    for (int i = 0; i < word_count; ++i) {
      TokenId next = static_cast<TokenId>(rng() % 2);
      if (!words.empty() && next == words.back()) next = 1 - next;
      words.push_back(next);
    }

    std::vector<TokenId> slots;
    for (std::size_t i = 0; i < words.size(); ++i) {
      if (i > 0 && words[i] == words[i - 1]) slots.push_back(eps);
      while (rng() % 3 == 0) slots.push_back(eps);
      const int copies = 1 + static_cast<int>(rng() % 3);
      slots.insert(slots.end(), copies, words[i]);
    }
    while (rng() % 3 == 0) slots.push_back(eps);

    CHECK(ctclen::reduce_merge(path_of(slots), vocab).words == words);
  }
}
