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

// Self-describing on-disk format for a vocabulary plus its log-prob matrix.
//
// Text form ("ctclen-lpm v1"):
//   ctclen-lpm v1
//   slots <S>
//   vocab <V>
//   blank <blank token string>
//   <V token lines, one per id>
//   rows
//   <S lines of V space-separated log-probs, 17 significant digits>
//
// Binary form ("ctclen-lpmb v1") shares the header through "rows" and then
// stores the S*V doubles row-major as little-endian bytes. Both forms
// round-trip byte-identically through read-then-write.

#ifndef CTCLEN_MATRIX_IO_HPP_
#define CTCLEN_MATRIX_IO_HPP_

#include <iosfwd>
#include <string>

#include "ctclen/types.hpp"

namespace ctclen {

struct Instance {
  Vocabulary vocab;
  LogProbMatrix matrix;
};

enum class MatrixFormat { Text, Binary };

Instance read_instance(std::istream& in);
Instance read_instance_file(const std::string& path);

void write_instance(std::ostream& out, const Instance& instance,
                    MatrixFormat format = MatrixFormat::Text);
void write_instance_file(const std::string& path, const Instance& instance,
                         MatrixFormat format = MatrixFormat::Text);

// One log-prob rendered the way the text format stores it.
std::string format_log_prob(double value);

}  // namespace ctclen

#endif  // CTCLEN_MATRIX_IO_HPP_
