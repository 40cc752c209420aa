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

#include "ctclen/bench.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "ctclen/generator.hpp"
#include "ctclen/length_control.hpp"
#include "ctclen/matrix_io.hpp"
#include "ctclen/oracle.hpp"

namespace ctclen {

namespace {

std::string fixed6(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.6f", value);
  return buffer;
}

std::string sci(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.3e", value);
  return buffer;
}

}  // namespace

std::vector<BenchRow> run_bench(const BenchSettings& settings) {
  if (settings.instances < 1) {
    throw std::invalid_argument("instances must be >= 1");
  }
  if (settings.alphas.empty() || settings.budgets.empty()) {
    throw std::invalid_argument("need at least one alpha and one budget");
  }

  // One shared instance pool so every configuration sees identical inputs.
  std::vector<Instance> pool;
  pool.reserve(settings.instances);
  GenSettings gen;
  gen.slots = settings.slots;
  gen.vocab_size = settings.vocab_size;
  gen.peakedness = settings.peakedness;
  for (int i = 0; i < settings.instances; ++i) {
    gen.seed = settings.seed + static_cast<std::uint64_t>(i);
    pool.push_back(generate_instance(gen));
  }

  const bool oracle_enabled = settings.oracle_max_paths > 0.0;
  const double paths = std::pow(static_cast<double>(settings.vocab_size),
                                settings.slots);
  const bool oracle_fits =
      oracle_enabled && paths <= settings.oracle_max_paths;

  std::vector<BenchRow> rows;
  for (int alpha : settings.alphas) {
    for (int budget : settings.budgets) {
      DecoderConfig config;
      config.budget = budget;
      config.bucket_size = alpha;
      config.top_k = settings.top_k;
      config.variant = settings.variant;
      config.weights = settings.weights;

      BenchRow row;
      row.alpha = alpha;
      row.budget = budget;
      row.slots = settings.slots;
      row.vocab_size = settings.vocab_size;
      row.top_k = settings.top_k;
      row.instances = settings.instances;

      for (int w = 0; w < settings.warmup; ++w) {
        (void)decode_length_control(pool[w % pool.size()].matrix,
                                    pool[w % pool.size()].vocab, config);
      }

      double total_seconds = 0.0;
      double total_score = 0.0;
      double total_gap = 0.0;
      for (const Instance& instance : pool) {
        const DecodeResult result =
            decode_length_control(instance.matrix, instance.vocab, config);
        total_seconds += result.seconds;
        if (result.feasible) {
          total_score += result.score;
          row.feasible += 1;
        }
        if (oracle_fits) {
          const OracleResult oracle = brute_decode(
              instance.matrix, instance.vocab, config.budget, config.variant,
              config.weights, config.inclusive_budget,
              settings.oracle_max_paths);
          if (oracle.feasible && result.feasible) {
            total_gap += oracle.score - result.score;
            row.gap_count += 1;
          }
        }
      }
      row.mean_seconds = total_seconds / settings.instances;
      row.mean_score = row.feasible > 0 ? total_score / row.feasible : 0.0;
      row.mean_gap = row.gap_count > 0 ? total_gap / row.gap_count : 0.0;
      rows.push_back(row);
    }
  }
  return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
  std::ostringstream out;
  out << "alpha,budget,slots,vocab,top_k,instances,mean_seconds,mean_score,"
         "mean_gap\n";
  for (const BenchRow& row : rows) {
    out << row.alpha << ',' << row.budget << ',' << row.slots << ','
        << row.vocab_size << ',' << row.top_k << ',' << row.instances << ','
        << sci(row.mean_seconds) << ',' << fixed6(row.mean_score) << ',';
    if (row.gap_count > 0) out << fixed6(row.mean_gap);
    out << '\n';
  }
  return out.str();
}

std::string bench_table(const std::vector<BenchRow>& rows) {
  std::ostringstream out;
  char line[256];
  std::snprintf(line, sizeof(line), "%6s %7s %6s %6s %6s %12s %14s %12s\n",
                "alpha", "budget", "slots", "vocab", "top_k", "mean_time_s",
                "mean_score", "mean_gap");
  out << line;
  for (const BenchRow& row : rows) {
    std::string gap = row.gap_count > 0 ? fixed6(row.mean_gap) : "-";
    std::snprintf(line, sizeof(line), "%6d %7d %6d %6d %6d %12s %14s %12s\n",
                  row.alpha, row.budget, row.slots, row.vocab_size, row.top_k,
                  sci(row.mean_seconds).c_str(), fixed6(row.mean_score).c_str(),
                  gap.c_str());
    out << line;
  }
  return out.str();
}

}  // namespace ctclen
