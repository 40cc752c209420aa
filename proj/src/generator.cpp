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

#include "ctclen/generator.hpp"

#include <cmath>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace ctclen {

namespace {

constexpr const char* kBlankToken = "<eps>";
constexpr char kConsonants[] = "bdfgklmnprstvz";
constexpr char kVowels[] = "aeiou";

// Uniform in (0, 1]; never zero, so its log is always finite.
double uniform_pos(std::mt19937_64& rng) {
  while (true) {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    if (u > 0.0) return u;
  }
}

double standard_normal(std::mt19937_64& rng) {
  const double u1 = uniform_pos(rng);
  const double u2 = uniform_pos(rng);
  return std::sqrt(-2.0 * std::log(u1)) *
         std::cos(2.0 * 3.14159265358979323846 * u2);
}

// Marsaglia-Tsang squeeze for shape >= 1.
double gamma_at_least_one(std::mt19937_64& rng, double shape) {
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  while (true) {
    double x;
    double v;
    do {
      x = standard_normal(rng);
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = uniform_pos(rng);
    if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
    if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
  }
}

// log of a Gamma(shape, 1) draw. Shapes below one go through the boosting
// identity G(a) = G(a+1) * U^(1/a), applied in log space so tiny shapes
// cannot underflow the sample to zero.
double log_gamma_sample(std::mt19937_64& rng, double shape) {
  if (shape >= 1.0) return std::log(gamma_at_least_one(rng, shape));
  const double boosted = gamma_at_least_one(rng, shape + 1.0);
  return std::log(boosted) + std::log(uniform_pos(rng)) / shape;
}

std::string synth_word(std::mt19937_64& rng, int min_width, int max_width) {
  const int span = max_width - min_width + 1;
  const int width = min_width + static_cast<int>(rng() % span);
  std::string word;
  word.reserve(width);
  for (int i = 0; i < width; ++i) {
    if (i % 2 == 0) {
      word.push_back(kConsonants[rng() % (sizeof(kConsonants) - 1)]);
    } else {
      word.push_back(kVowels[rng() % (sizeof(kVowels) - 1)]);
    }
  }
  return word;
}

}  // namespace

Instance generate_instance(const GenSettings& settings) {
  if (settings.slots < 1) throw std::invalid_argument("slots must be >= 1");
  if (settings.vocab_size < 2) {
    throw std::invalid_argument("vocab_size must be >= 2 (a word plus blank)");
  }
  if (!(settings.peakedness > 0.0)) {
    throw std::invalid_argument("peakedness must be > 0");
  }
  if (settings.min_width < 1 || settings.max_width < settings.min_width) {
    throw std::invalid_argument("bad width range");
  }

  std::mt19937_64 rng(settings.seed);

  std::vector<std::string> tokens;
  tokens.reserve(settings.vocab_size);
  std::set<std::string> seen;
  while (static_cast<int>(tokens.size()) < settings.vocab_size - 1) {
    std::string word = synth_word(rng, settings.min_width, settings.max_width);
    if (seen.insert(word).second) tokens.push_back(std::move(word));
  }
  tokens.push_back(kBlankToken);
  Vocabulary vocab(std::move(tokens), settings.vocab_size - 1);

  const double concentration = 1.0 / settings.peakedness;
  const int vocab_size = settings.vocab_size;
  std::vector<double> values;
  values.reserve(static_cast<std::size_t>(settings.slots) * vocab_size);
  std::vector<double> row(vocab_size);
  for (int s = 0; s < settings.slots; ++s) {
    double row_max = kNegInf;
    for (int t = 0; t < vocab_size; ++t) {
      row[t] = log_gamma_sample(rng, concentration);
      row_max = std::max(row_max, row[t]);
    }
    double sum = 0.0;
    for (int t = 0; t < vocab_size; ++t) sum += std::exp(row[t] - row_max);
    const double log_norm = row_max + std::log(sum);
    for (int t = 0; t < vocab_size; ++t) values.push_back(row[t] - log_norm);
  }

  LogProbMatrix matrix(settings.slots, vocab_size, std::move(values));
  return Instance{std::move(vocab), std::move(matrix)};
}

}  // namespace ctclen
