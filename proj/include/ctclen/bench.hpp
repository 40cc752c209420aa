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

// Benchmark harness for the length-controlled decoder: a fixed pool of
// seeded synthetic instances is decoded under every (bucket size, budget)
// combination, timing the decode calls only. Scores and gaps depend only
// on the seed and settings; times depend on the machine.

#ifndef CTCLEN_BENCH_HPP_
#define CTCLEN_BENCH_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "ctclen/types.hpp"

namespace ctclen {

struct BenchSettings {
  std::vector<int> alphas = {1, 2, 4, 8};
  std::vector<int> budgets = {50};
  int instances = 20;
  std::uint64_t seed = 1;
  int slots = 64;
  int vocab_size = 50;
  int top_k = 20;
  Reduction variant = Reduction::Merge;
  LengthConvention weights = LengthConvention::Separator;
  double peakedness = 1.0;
  // Instances whose path count vocab_size^slots exceeds this are not run
  // through the exhaustive oracle; zero disables the oracle entirely.
  double oracle_max_paths = 0.0;
  int warmup = 1;  // untimed decodes before the measured loop
};

struct BenchRow {
  int alpha = 1;
  int budget = 0;
  int slots = 0;
  int vocab_size = 0;
  int top_k = 0;
  int instances = 0;
  double mean_seconds = 0.0;
  double mean_score = 0.0;   // over decodes that found a feasible summary
  int feasible = 0;          // how many decodes that was
  double mean_gap = 0.0;     // oracle minus decoder score, when oracle ran
  int gap_count = 0;         // decodes contributing to mean_gap
};

// Rows come back ordered by (alpha, budget), matching the settings lists.
std::vector<BenchRow> run_bench(const BenchSettings& settings);

// One comma-separated row per configuration:
// alpha,budget,slots,vocab,top_k,instances,mean_seconds,mean_score,mean_gap
// with mean_gap left empty when the oracle did not run.
std::string bench_csv(const std::vector<BenchRow>& rows);

std::string bench_table(const std::vector<BenchRow>& rows);

}  // namespace ctclen

#endif  // CTCLEN_BENCH_HPP_
