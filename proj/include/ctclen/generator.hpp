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

#ifndef CTCLEN_GENERATOR_HPP_
#define CTCLEN_GENERATOR_HPP_

#include <cstdint>

#include "ctclen/matrix_io.hpp"

namespace ctclen {

// Settings for the synthetic instance generator. Every row of the produced
// matrix is an independent draw from a symmetric Dirichlet whose
// concentration is 1 / peakedness, so larger peakedness concentrates each
// row's mass on fewer tokens. Identical settings produce identical
// instances on every platform; the sampler uses only mt19937_64 outputs
// plus portable arithmetic (distribution classes in <random> do not pin
// their algorithm down, so they are avoided).
struct GenSettings {
  int slots = 16;
  int vocab_size = 50;  // word count plus the blank
  std::uint64_t seed = 1;
  double peakedness = 1.0;
  int min_width = 1;
  int max_width = 12;
};

Instance generate_instance(const GenSettings& settings);

}  // namespace ctclen

#endif  // CTCLEN_GENERATOR_HPP_
