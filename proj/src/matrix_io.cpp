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

#include "ctclen/matrix_io.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace ctclen {

namespace {

constexpr const char* kTextMagic = "ctclen-lpm v1";
constexpr const char* kBinaryMagic = "ctclen-lpmb v1";

[[noreturn]] void fail(const std::string& what) {
  throw std::runtime_error("matrix file: " + what);
}

std::string read_line(std::istream& in, const char* what) {
  std::string line;
  if (!std::getline(in, line)) fail(std::string("missing ") + what);
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

// "key value" with a single separating space; value may itself be empty.
std::string expect_field(std::istream& in, const std::string& key) {
  const std::string line = read_line(in, key.c_str());
  if (line.compare(0, key.size(), key) != 0 ||
      line.size() < key.size() + 1 || line[key.size()] != ' ') {
    fail("expected '" + key + " ...', got '" + line + "'");
  }
  return line.substr(key.size() + 1);
}

int parse_count(const std::string& text, const char* what) {
  std::size_t pos = 0;
  int value = 0;
  try {
    value = std::stoi(text, &pos);
  } catch (const std::exception&) {
    fail(std::string("bad ") + what + " '" + text + "'");
  }
  if (pos != text.size() || value < 1) {
    fail(std::string("bad ") + what + " '" + text + "'");
  }
  return value;
}

double parse_log_prob(const std::string& token) {
  if (token == "-inf") return kNegInf;
  const char* begin = token.c_str();
  char* end = nullptr;
  const double value = std::strtod(begin, &end);
  if (end != begin + token.size()) fail("bad log-prob '" + token + "'");
  return value;
}

struct Header {
  int slots = 0;
  std::vector<std::string> tokens;
  TokenId blank_id = -1;
};

Header read_header(std::istream& in) {
  Header header;
  header.slots = parse_count(expect_field(in, "slots"), "slot count");
  const int vocab_size = parse_count(expect_field(in, "vocab"), "vocab size");
  const std::string blank = expect_field(in, "blank");

  header.tokens.reserve(vocab_size);
  for (int i = 0; i < vocab_size; ++i) {
    header.tokens.push_back(read_line(in, "token line"));
  }
  for (TokenId i = 0; i < vocab_size; ++i) {
    if (header.tokens[i] == blank) {
      header.blank_id = i;
      break;
    }
  }
  if (header.blank_id < 0) fail("blank token '" + blank + "' not in vocab");

  const std::string rows = read_line(in, "'rows' line");
  if (rows != "rows") fail("expected 'rows', got '" + rows + "'");
  return header;
}

Instance assemble(Header header, std::vector<double> values) {
  Vocabulary vocab(std::move(header.tokens), header.blank_id);
  LogProbMatrix matrix(header.slots, vocab.size(), std::move(values));
  return Instance{std::move(vocab), std::move(matrix)};
}

Instance read_text(std::istream& in) {
  Header header = read_header(in);
  const int vocab_size = static_cast<int>(header.tokens.size());
  std::vector<double> values;
  values.reserve(static_cast<std::size_t>(header.slots) * vocab_size);
  for (int s = 0; s < header.slots; ++s) {
    std::istringstream row(read_line(in, "value row"));
    std::string token;
    int count = 0;
    while (row >> token) {
      values.push_back(parse_log_prob(token));
      ++count;
    }
    if (count != vocab_size) fail("wrong value count in row");
  }
  return assemble(std::move(header), std::move(values));
}

Instance read_binary(std::istream& in) {
  Header header = read_header(in);
  const std::size_t count =
      static_cast<std::size_t>(header.slots) * header.tokens.size();
  std::vector<double> values(count);
  std::vector<unsigned char> bytes(count * sizeof(double));
  if (!in.read(reinterpret_cast<char*>(bytes.data()),
               static_cast<std::streamsize>(bytes.size()))) {
    fail("truncated value block");
  }
  for (std::size_t i = 0; i < count; ++i) {
    std::array<unsigned char, sizeof(double)> raw;
    std::memcpy(raw.data(), bytes.data() + i * sizeof(double), sizeof(double));
    if constexpr (std::endian::native == std::endian::big) {
      std::reverse(raw.begin(), raw.end());
    }
    values[i] = std::bit_cast<double>(raw);
  }
  return assemble(std::move(header), std::move(values));
}

void check_writable(const Instance& instance) {
  const Vocabulary& vocab = instance.vocab;
  for (TokenId i = 0; i < vocab.size(); ++i) {
    const std::string& token = vocab.token(i);
    if (token.empty()) fail("cannot serialize an empty token string");
    if (token.find_first_of(" \t\r\n") != std::string::npos) {
      fail("cannot serialize token with whitespace: '" + token + "'");
    }
  }
  if (instance.vocab.size() != instance.matrix.vocab_size()) {
    fail("vocab size does not match matrix");
  }
}

void write_header(std::ostream& out, const Instance& instance,
                  const char* magic) {
  out << magic << "\n";
  out << "slots " << instance.matrix.slots() << "\n";
  out << "vocab " << instance.vocab.size() << "\n";
  out << "blank " << instance.vocab.token(instance.vocab.blank_id()) << "\n";
  for (TokenId i = 0; i < instance.vocab.size(); ++i) {
    out << instance.vocab.token(i) << "\n";
  }
  out << "rows\n";
}

}  // namespace

std::string format_log_prob(double value) {
  if (value == kNegInf) return "-inf";
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

Instance read_instance(std::istream& in) {
  const std::string magic = read_line(in, "magic line");
  if (magic == kTextMagic) return read_text(in);
  if (magic == kBinaryMagic) return read_binary(in);
  fail("unrecognized magic '" + magic + "'");
}

Instance read_instance_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail("cannot open '" + path + "'");
  return read_instance(in);
}

void write_instance(std::ostream& out, const Instance& instance,
                    MatrixFormat format) {
  check_writable(instance);
  const LogProbMatrix& matrix = instance.matrix;

  if (format == MatrixFormat::Text) {
    write_header(out, instance, kTextMagic);
    for (int s = 0; s < matrix.slots(); ++s) {
      for (TokenId t = 0; t < matrix.vocab_size(); ++t) {
        if (t > 0) out << ' ';
        out << format_log_prob(matrix.at(s, t));
      }
      out << "\n";
    }
  } else {
    write_header(out, instance, kBinaryMagic);
    for (int s = 0; s < matrix.slots(); ++s) {
      for (TokenId t = 0; t < matrix.vocab_size(); ++t) {
        auto raw = std::bit_cast<std::array<unsigned char, sizeof(double)>>(
            matrix.at(s, t));
        if constexpr (std::endian::native == std::endian::big) {
          std::reverse(raw.begin(), raw.end());
        }
        out.write(reinterpret_cast<const char*>(raw.data()), raw.size());
      }
    }
  }
  if (!out) fail("write failed");
}

void write_instance_file(const std::string& path, const Instance& instance,
                         MatrixFormat format) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail("cannot open '" + path + "' for writing");
  write_instance(out, instance, format);
  if (!out) fail("write to '" + path + "' failed");
}

}  // namespace ctclen
