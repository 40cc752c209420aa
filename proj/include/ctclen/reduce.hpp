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

#ifndef CTCLEN_REDUCE_HPP_
#define CTCLEN_REDUCE_HPP_

#include "ctclen/types.hpp"

namespace ctclen {

// Collapses consecutive identical non-blank tokens (unless separated by a
// blank), then removes all blanks. Throws std::out_of_range on invalid ids.
WordSequence reduce_merge(const TokenPath& path, const Vocabulary& vocab);

// Removes blanks only; repeated tokens survive.
WordSequence reduce_nomerge(const TokenPath& path, const Vocabulary& vocab);

WordSequence reduce(const TokenPath& path, const Vocabulary& vocab,
                    Reduction reduction);

}  // namespace ctclen

#endif  // CTCLEN_REDUCE_HPP_
