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

#include "ctclen/reduce.hpp"

#include <stdexcept>

namespace ctclen {

namespace {

void check_ids(const TokenPath& path, const Vocabulary& vocab) {
  for (TokenId id : path.slots) {
    if (!vocab.valid_id(id)) {
      throw std::out_of_range("path token id out of range");
    }
  }
}

}  // namespace

WordSequence reduce_merge(const TokenPath& path, const Vocabulary& vocab) {
  check_ids(path, vocab);
  std::vector<TokenId> words;
  words.reserve(path.slots.size());
  TokenId prev = vocab.blank_id();
  for (TokenId id : path.slots) {
    if (!vocab.is_blank(id) && id != prev) {
      words.push_back(id);
    }
    prev = id;  // a blank between repeats resets the merge
  }
  return make_word_sequence(std::move(words), vocab);
}

WordSequence reduce_nomerge(const TokenPath& path, const Vocabulary& vocab) {
  check_ids(path, vocab);
  std::vector<TokenId> words;
  words.reserve(path.slots.size());
  for (TokenId id : path.slots) {
    if (!vocab.is_blank(id)) words.push_back(id);
  }
  return make_word_sequence(std::move(words), vocab);
}

WordSequence reduce(const TokenPath& path, const Vocabulary& vocab,
                    Reduction reduction) {
  return reduction == Reduction::Merge ? reduce_merge(path, vocab)
                                       : reduce_nomerge(path, vocab);
}

}  // namespace ctclen
