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

// Command-line front end. Subcommands:
//   decode     run a decoder over a matrix file
//   gen        emit a synthetic seeded matrix file
//   bench      time the decoder across bucket sizes and budgets
//   score      ROUGE between two line-aligned text files
//   ctc-score  marginal log-probability of a word sequence
// Exit codes: 0 success, 1 usage error, 2 input error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ctclen/bench.hpp"
#include "ctclen/ctc_score.hpp"
#include "ctclen/generator.hpp"
#include "ctclen/length_control.hpp"
#include "ctclen/matrix_io.hpp"
#include "ctclen/rouge.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInput = 2;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string format_score(double value) {
  if (value == ctclen::kNegInf) return "-inf";
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

struct DecodeArgs {
  std::string input;
  std::string mode = "length-control";
  int budget = 50;
  int bucket_size = 4;
  int top_k = 20;
  std::string variant = "merge";
  std::string weights = "separator";
  bool strict_budget = false;
  int target_bucket = -1;
  bool has_target = false;
  std::string truncate_mode = "word";
};

int run_decode(const DecodeArgs& args) {
  ctclen::Instance instance = ctclen::read_instance_file(args.input);
  const ctclen::Reduction variant = *ctclen::parse_reduction(args.variant);
  const ctclen::LengthConvention weights =
      *ctclen::parse_length_convention(args.weights);

  ctclen::DecodeResult result;
  std::string text;
  int chars = 0;

  if (args.mode == "greedy" || args.mode == "greedy-truncate") {
    result = ctclen::decode_greedy(instance.matrix, instance.vocab, variant);
    text = result.words.text;
    chars = ctclen::reduced_length(result.words, weights, instance.vocab);
    if (args.mode == "greedy-truncate") {
      if (args.truncate_mode == "char") {
        text = ctclen::truncate_chars(text, args.budget);
        chars = ctclen::utf8_length(text);
      } else {
        const ctclen::WordSequence cut = ctclen::truncate_words(
            result.words, args.budget, weights, instance.vocab);
        text = cut.text;
        chars = ctclen::reduced_length(cut, weights, instance.vocab);
      }
    }
  } else {
    ctclen::DecoderConfig config;
    config.budget = args.budget;
    config.bucket_size = args.mode == "exact" ? 1 : args.bucket_size;
    config.top_k = args.mode == "exact"
                       ? std::max(1, instance.vocab.size() - 1)
                       : args.top_k;
    config.variant =
        args.mode == "exact" ? ctclen::Reduction::NoMerge : variant;
    config.weights = weights;
    config.inclusive_budget = !args.strict_budget;
    if (args.has_target) config.target_bucket = args.target_bucket;

    result =
        ctclen::decode_length_control(instance.matrix, instance.vocab, config);
    text = result.words.text;
    chars = result.char_len;
    if (!result.feasible) {
      std::cerr << "warning: no summary satisfies the length constraint; "
                   "emitting the empty summary\n";
    }
  }

  std::cout << text << "\n";
  std::cout << "chars: " << chars << "\n";
  std::cout << "score: " << format_score(result.score) << "\n";
  return kExitOk;
}

struct GenArgs {
  ctclen::GenSettings settings;
  std::string output;
  std::string format = "text";
};

int run_gen(const GenArgs& args) {
  const ctclen::Instance instance = ctclen::generate_instance(args.settings);
  const ctclen::MatrixFormat format = args.format == "binary"
                                          ? ctclen::MatrixFormat::Binary
                                          : ctclen::MatrixFormat::Text;
  if (args.output.empty()) {
    ctclen::write_instance(std::cout, instance, format);
  } else {
    ctclen::write_instance_file(args.output, instance, format);
  }
  return kExitOk;
}

struct BenchArgs {
  ctclen::BenchSettings settings;
  std::string variant = "merge";
  std::string weights = "separator";
  std::string csv_path;
};

int run_bench(const BenchArgs& args) {
  ctclen::BenchSettings settings = args.settings;
  settings.variant = *ctclen::parse_reduction(args.variant);
  settings.weights = *ctclen::parse_length_convention(args.weights);

  const std::vector<ctclen::BenchRow> rows = ctclen::run_bench(settings);
  const std::string csv = ctclen::bench_csv(rows);
  std::cout << csv << "\n" << ctclen::bench_table(rows);
  if (!args.csv_path.empty()) {
    std::ofstream out(args.csv_path);
    if (!out) throw InputError("cannot open '" + args.csv_path + "'");
    out << csv;
  }
  return kExitOk;
}

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  return lines;
}

struct ScoreArgs {
  std::string candidate_path;
  std::string reference_path;
  std::string mode = "f1";
};

int run_score(const ScoreArgs& args) {
  const std::vector<std::string> candidates = read_lines(args.candidate_path);
  const std::vector<std::string> references = read_lines(args.reference_path);
  if (candidates.size() != references.size()) {
    throw InputError("line counts differ: " +
                     std::to_string(candidates.size()) + " vs " +
                     std::to_string(references.size()));
  }
  if (candidates.empty()) throw InputError("no line pairs to score");

  const bool use_f1 = args.mode == "f1";
  const auto pick = [use_f1](const ctclen::RougeStat& stat) {
    return use_f1 ? stat.f1 : stat.recall;
  };
  char line[160];
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (ctclen::rouge_tokenize(candidates[i]).empty()) {
      std::cerr << "warning: empty candidate on line " << (i + 1) << "\n";
    }
    const ctclen::RougeScores scores = ctclen::rouge(candidates[i], references[i]);
    std::snprintf(line, sizeof(line), "line %zu: R1=%.6f R2=%.6f RL=%.6f\n",
                  i + 1, pick(scores.rouge1), pick(scores.rouge2),
                  pick(scores.rougeL));
    std::cout << line;
  }
  const ctclen::RougeScores corpus =
      ctclen::corpus_rouge(candidates, references);
  std::snprintf(line, sizeof(line), "corpus: R1=%.6f R2=%.6f RL=%.6f\n",
                pick(corpus.rouge1), pick(corpus.rouge2), pick(corpus.rougeL));
  std::cout << line;
  return kExitOk;
}

struct CtcScoreArgs {
  std::string input;
  std::string target;
};

int run_ctc_score(const CtcScoreArgs& args) {
  const ctclen::Instance instance = ctclen::read_instance_file(args.input);

  std::vector<ctclen::TokenId> target;
  std::istringstream words(args.target);
  std::string word;
  while (words >> word) {
    const auto id = instance.vocab.find(word);
    if (!id || instance.vocab.is_blank(*id)) {
      throw InputError("word not in vocabulary: '" + word + "'");
    }
    target.push_back(*id);
  }

  const double log_prob = ctclen::ctc_forward(
      instance.matrix, std::span<const ctclen::TokenId>(target),
      instance.vocab);
  std::cout << format_score(log_prob) << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Length-controlled CTC summary decoding toolkit"};
  app.require_subcommand(1);

  DecodeArgs decode_args;
  CLI::App* decode = app.add_subcommand(
      "decode", "Decode a matrix file into a summary");
  decode->add_option("input", decode_args.input, "matrix file")->required();
  decode->add_option("--mode", decode_args.mode, "decoder to run")
      ->check(CLI::IsMember(
          {"length-control", "exact", "greedy", "greedy-truncate"}));
  decode->add_option("--budget", decode_args.budget,
                     "character budget for the summary")
      ->check(CLI::NonNegativeNumber);
  decode->add_option("--bucket-size", decode_args.bucket_size,
                     "length bucket width (alpha)")
      ->check(CLI::PositiveNumber);
  decode->add_option("--top-k", decode_args.top_k,
                     "words considered per slot besides blank")
      ->check(CLI::PositiveNumber);
  decode->add_option("--variant", decode_args.variant,
                     "reduction applied to paths")
      ->check(CLI::IsMember({"merge", "nomerge"}));
  decode->add_option("--weights", decode_args.weights,
                     "how summary length is counted")
      ->check(CLI::IsMember({"separator", "appended", "unit"}));
  decode->add_flag("--strict-budget", decode_args.strict_budget,
                   "require length < budget instead of <=");
  CLI::Option* target_opt =
      decode
          ->add_option("--target-bucket", decode_args.target_bucket,
                       "return the best summary of this exact length bucket "
                       "instead of the best within budget")
          ->check(CLI::NonNegativeNumber);
  decode->add_option("--truncate-mode", decode_args.truncate_mode,
                     "greedy-truncate: drop whole words or cut characters")
      ->check(CLI::IsMember({"word", "char"}));

  GenArgs gen_args;
  CLI::App* gen = app.add_subcommand("gen", "Generate a synthetic matrix file");
  gen->add_option("--slots", gen_args.settings.slots, "prediction slots")
      ->check(CLI::PositiveNumber);
  gen->add_option("--vocab-size", gen_args.settings.vocab_size,
                  "token count including the blank")
      ->check(CLI::Range(2, 1000000));
  gen->add_option("--seed", gen_args.settings.seed, "RNG seed");
  gen->add_option("--peakedness", gen_args.settings.peakedness,
                  "larger values concentrate each row on fewer tokens")
      ->check(CLI::PositiveNumber);
  gen->add_option("--min-width", gen_args.settings.min_width,
                  "minimum word width in characters")
      ->check(CLI::PositiveNumber);
  gen->add_option("--max-width", gen_args.settings.max_width,
                  "maximum word width in characters")
      ->check(CLI::PositiveNumber);
  gen->add_option("--output", gen_args.output, "write here instead of stdout");
  gen->add_option("--format", gen_args.format, "file format")
      ->check(CLI::IsMember({"text", "binary"}));

  BenchArgs bench_args;
  CLI::App* bench = app.add_subcommand(
      "bench", "Time the decoder across bucket sizes and budgets");
  bench->add_option("--alphas", bench_args.settings.alphas,
                    "bucket sizes to sweep")
      ->delimiter(',');
  bench->add_option("--budgets", bench_args.settings.budgets,
                    "budgets to sweep")
      ->delimiter(',');
  bench->add_option("--instances", bench_args.settings.instances,
                    "synthetic instances per configuration")
      ->check(CLI::PositiveNumber);
  bench->add_option("--seed", bench_args.settings.seed, "base RNG seed");
  bench->add_option("--slots", bench_args.settings.slots, "prediction slots")
      ->check(CLI::PositiveNumber);
  bench->add_option("--vocab-size", bench_args.settings.vocab_size,
                    "token count including the blank")
      ->check(CLI::Range(2, 1000000));
  bench->add_option("--top-k", bench_args.settings.top_k,
                    "words considered per slot besides blank")
      ->check(CLI::PositiveNumber);
  bench->add_option("--variant", bench_args.variant, "reduction variant")
      ->check(CLI::IsMember({"merge", "nomerge"}));
  bench->add_option("--weights", bench_args.weights, "length convention")
      ->check(CLI::IsMember({"separator", "appended", "unit"}));
  bench->add_option("--peakedness", bench_args.settings.peakedness,
                    "row concentration of the generated instances")
      ->check(CLI::PositiveNumber);
  bench->add_option("--oracle-max-size", bench_args.settings.oracle_max_paths,
                    "run the exhaustive oracle when vocab^slots is at most "
                    "this; 0 disables it");
  bench->add_option("--warmup", bench_args.settings.warmup,
                    "untimed decodes before measuring")
      ->check(CLI::NonNegativeNumber);
  bench->add_option("--csv", bench_args.csv_path,
                    "also write the machine-readable rows to this file");

  ScoreArgs score_args;
  CLI::App* score = app.add_subcommand(
      "score", "ROUGE between line-aligned candidate and reference files");
  score->add_option("candidates", score_args.candidate_path,
                    "candidate summaries, one per line")
      ->required();
  score->add_option("references", score_args.reference_path,
                    "reference summaries, one per line")
      ->required();
  score->add_option("--mode", score_args.mode, "which statistic to report")
      ->check(CLI::IsMember({"f1", "recall"}));

  CtcScoreArgs ctc_args;
  CLI::App* ctc_score = app.add_subcommand(
      "ctc-score", "Marginal log-probability of a word sequence");
  ctc_score->add_option("input", ctc_args.input, "matrix file")->required();
  ctc_score
      ->add_option("--target", ctc_args.target,
                   "space-separated words to score")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  decode_args.has_target = target_opt->count() > 0;

  try {
    if (*decode) return run_decode(decode_args);
    if (*gen) return run_gen(gen_args);
    if (*bench) return run_bench(bench_args);
    if (*score) return run_score(score_args);
    if (*ctc_score) return run_ctc_score(ctc_args);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitUsage;
}
