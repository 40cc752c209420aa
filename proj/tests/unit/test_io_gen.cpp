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

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>

#include "ctclen/generator.hpp"
#include "ctclen/matrix_io.hpp"
#include "ctclen/types.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using ctclen::GenSettings;
using ctclen::Instance;
using ctclen::MatrixFormat;

namespace {

std::string serialize(const Instance& instance, MatrixFormat format) {
  std::ostringstream out(std::ios::binary);
  ctclen::write_instance(out, instance, format);
  return out.str();
}

Instance parse(const std::string& text) {
  std::istringstream in(text, std::ios::binary);
  return ctclen::read_instance(in);
}

void check_same(const Instance& a, const Instance& b) {
  REQUIRE(a.vocab.size() == b.vocab.size());
  CHECK(a.vocab.blank_id() == b.vocab.blank_id());
  for (ctclen::TokenId t = 0; t < a.vocab.size(); ++t) {
    CHECK(a.vocab.token(t) == b.vocab.token(t));
  }
  REQUIRE(a.matrix.slots() == b.matrix.slots());
  REQUIRE(a.matrix.vocab_size() == b.matrix.vocab_size());
  for (int s = 0; s < a.matrix.slots(); ++s) {
    for (ctclen::TokenId t = 0; t < a.vocab.size(); ++t) {
      // Bitwise equality: both formats must preserve doubles exactly.
      CHECK(a.matrix.at(s, t) == b.matrix.at(s, t));
    }
  }
}

}  // namespace

TEST_CASE("text round-trip is byte-identical and value-exact") {
  const Instance original = ctclen_tests::counterexample_instance();
  const std::string first = serialize(original, MatrixFormat::Text);
  const Instance reread = parse(first);
  check_same(original, reread);
  CHECK(serialize(reread, MatrixFormat::Text) == first);
}

TEST_CASE("binary round-trip is byte-identical and value-exact") {
  const Instance original = ctclen_tests::counterexample_instance();
  const std::string first = serialize(original, MatrixFormat::Binary);
  const Instance reread = parse(first);
  check_same(original, reread);
  CHECK(serialize(reread, MatrixFormat::Binary) == first);
}

TEST_CASE("formats agree with each other") {
  GenSettings settings;
  settings.slots = 7;
  settings.vocab_size = 9;
  settings.seed = 404;
  const Instance original = ctclen::generate_instance(settings);
  const Instance via_text = parse(serialize(original, MatrixFormat::Text));
  const Instance via_binary = parse(serialize(original, MatrixFormat::Binary));
  check_same(via_text, via_binary);
}

TEST_CASE("negative infinity survives the text format") {
  ctclen::Vocabulary vocab({"a", "<eps>"}, 1);
  auto matrix = ctclen::LogProbMatrix::from_rows(
      {{ctclen::kNegInf, 0.0}, {std::log(0.5), std::log(0.5)}});
  const Instance original{vocab, matrix};
  const std::string text = serialize(original, MatrixFormat::Text);
  CHECK(text.find("-inf") != std::string::npos);
  const Instance reread = parse(text);
  CHECK(reread.matrix.at(0, 0) == ctclen::kNegInf);
  CHECK(reread.matrix.at(0, 1) == 0.0);
}

TEST_CASE("malformed files are rejected") {
  const Instance good = ctclen_tests::counterexample_instance();
  const std::string text = serialize(good, MatrixFormat::Text);

  SUBCASE("unknown magic") {
    CHECK_THROWS_AS((void)parse("bogus v9\n" + text), std::runtime_error);
  }
  SUBCASE("truncated header") {
    CHECK_THROWS_AS((void)parse(text.substr(0, 20)), std::runtime_error);
  }
  SUBCASE("truncated rows") {
    const std::string cut = text.substr(0, text.find("rows") + 10);
    CHECK_THROWS_AS((void)parse(cut), std::runtime_error);
  }
  SUBCASE("truncated binary payload") {
    const std::string binary = serialize(good, MatrixFormat::Binary);
    CHECK_THROWS_AS((void)parse(binary.substr(0, binary.size() - 10)),
                    std::runtime_error);
  }
  SUBCASE("blank token not in the vocabulary") {
    std::string broken = text;
    const auto pos = broken.find("blank <eps>");
    REQUIRE(pos != std::string::npos);
    broken.replace(pos, 11, "blank <gap>");
    CHECK_THROWS_AS((void)parse(broken), std::runtime_error);
  }
  SUBCASE("non-numeric probability") {
    std::string broken = text;
    const auto pos = broken.find("rows");
    REQUIRE(pos != std::string::npos);
    const auto line_end = broken.find('\n', pos);
    const auto next_end = broken.find('\n', line_end + 1);
    broken.replace(line_end + 1, next_end - line_end - 1, "zero one two three");
    CHECK_THROWS_AS((void)parse(broken), std::runtime_error);
  }
  SUBCASE("missing file") {
    CHECK_THROWS_AS((void)ctclen::read_instance_file("/nonexistent/x.lpm"),
                    std::runtime_error);
  }
}

TEST_CASE("writer rejects unserializable vocabularies") {
  auto matrix = ctclen::LogProbMatrix::from_rows({{0.0, ctclen::kNegInf}});
  SUBCASE("token with embedded space") {
    ctclen::Vocabulary vocab({"a b", "<eps>"}, 1);
    const Instance bad{vocab, matrix};
    std::ostringstream out;
    CHECK_THROWS_AS(
        ctclen::write_instance(out, bad, MatrixFormat::Text),
        std::runtime_error);
  }
  SUBCASE("empty token") {
    // The vocabulary itself refuses empty non-blank tokens, so nothing
    // unserializable of this shape can even reach the writer.
    CHECK_THROWS_AS(ctclen::Vocabulary({"", "<eps>"}, 1),
                    std::invalid_argument);
  }
}

TEST_CASE("the checked-in example file matches the built-in values") {
  const std::string path = std::string(CTCLEN_DATA_DIR) + "/counterexample.lpm";
  const Instance from_file = ctclen::read_instance_file(path);
  const Instance built = ctclen_tests::counterexample_instance();
  REQUIRE(from_file.vocab.size() == built.vocab.size());
  CHECK(from_file.vocab.blank_id() == built.vocab.blank_id());
  for (ctclen::TokenId t = 0; t < built.vocab.size(); ++t) {
    CHECK(from_file.vocab.token(t) == built.vocab.token(t));
  }
  REQUIRE(from_file.matrix.slots() == built.matrix.slots());
  for (int s = 0; s < built.matrix.slots(); ++s) {
    for (ctclen::TokenId t = 0; t < built.vocab.size(); ++t) {
      CHECK(from_file.matrix.at(s, t) ==
            doctest::Approx(built.matrix.at(s, t)).epsilon(1e-12));
    }
  }

  // The file must be in canonical form: parse + re-serialize reproduces it.
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream raw;
  raw << in.rdbuf();
  CHECK(serialize(from_file, MatrixFormat::Text) == raw.str());
}

TEST_CASE("generated instances are well-formed") {
  GenSettings settings;
  settings.slots = 12;
  settings.vocab_size = 30;
  settings.seed = 7;

  const Instance instance = ctclen::generate_instance(settings);
  REQUIRE(instance.vocab.size() == 30);
  REQUIRE(instance.matrix.slots() == 12);
  CHECK(instance.matrix.vocab_size() == 30);

  SUBCASE("blank is the final token") {
    CHECK(instance.vocab.blank_id() == 29);
    CHECK(instance.vocab.token(29) == "<eps>");
    CHECK(instance.vocab.width(29) == 0);
  }

  SUBCASE("words are unique and within the width range") {
    std::set<std::string> seen;
    for (ctclen::TokenId t = 0; t < 29; ++t) {
      const std::string& word = instance.vocab.token(t);
      CHECK(word.size() >= 1);
      CHECK(word.size() <= 12);
      CHECK(instance.vocab.width(t) == static_cast<int>(word.size()));
      CHECK(seen.insert(word).second);
    }
  }

  SUBCASE("rows are normalized distributions") {
    for (int s = 0; s < instance.matrix.slots(); ++s) {
      double total = 0.0;
      for (ctclen::TokenId t = 0; t < instance.vocab.size(); ++t) {
        const double lp = instance.matrix.at(s, t);
        CHECK(lp <= 1e-12);
        total += std::exp(lp);
      }
      CHECK(total == doctest::Approx(1.0).epsilon(1e-6));
    }
  }
}

TEST_CASE("generation is deterministic in the seed") {
  GenSettings settings;
  settings.slots = 9;
  settings.vocab_size = 15;
  settings.seed = 99;
  const std::string once =
      serialize(ctclen::generate_instance(settings), MatrixFormat::Text);
  const std::string twice =
      serialize(ctclen::generate_instance(settings), MatrixFormat::Text);
  CHECK(once == twice);

  settings.seed = 100;
  const std::string other =
      serialize(ctclen::generate_instance(settings), MatrixFormat::Text);
  CHECK(once != other);
}

TEST_CASE("peakedness sharpens the rows") {
  const auto mean_row_max = [](double peakedness) {
    GenSettings settings;
    settings.slots = 40;
    settings.vocab_size = 20;
    settings.seed = 5;
    settings.peakedness = peakedness;
    const Instance instance = ctclen::generate_instance(settings);
    double total = 0.0;
    for (int s = 0; s < instance.matrix.slots(); ++s) {
      double best = ctclen::kNegInf;
      for (ctclen::TokenId t = 0; t < instance.vocab.size(); ++t) {
        best = std::max(best, instance.matrix.at(s, t));
      }
      total += std::exp(best);
    }
    return total / instance.matrix.slots();
  };

  const double flat = mean_row_max(1.0);
  const double sharp = mean_row_max(100.0);
  CHECK(sharp > 0.9);
  CHECK(sharp > flat);
}

TEST_CASE("generator settings are validated") {
  GenSettings bad;
  bad.slots = 0;
  CHECK_THROWS_AS((void)ctclen::generate_instance(bad),
                  std::invalid_argument);
  bad = GenSettings{};
  bad.vocab_size = 1;
  CHECK_THROWS_AS((void)ctclen::generate_instance(bad),
                  std::invalid_argument);
  bad = GenSettings{};
  bad.peakedness = 0.0;
  CHECK_THROWS_AS((void)ctclen::generate_instance(bad),
                  std::invalid_argument);
  bad = GenSettings{};
  bad.min_width = 5;
  bad.max_width = 4;
  CHECK_THROWS_AS((void)ctclen::generate_instance(bad),
                  std::invalid_argument);
}
