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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <span>
#include <vector>

#include "ctclen/bench.hpp"
#include "ctclen/ctc_score.hpp"
#include "ctclen/generator.hpp"
#include "ctclen/length_control.hpp"
#include "ctclen/matrix_io.hpp"
#include "ctclen/oracle.hpp"
#include "ctclen/reduce.hpp"
#include "ctclen/rouge.hpp"
#include "ctclen/types.hpp"

namespace py = pybind11;

namespace {

std::span<const ctclen::TokenId> as_span(const std::vector<ctclen::TokenId>& v) {
  return {v.data(), v.size()};
}

}  // namespace

PYBIND11_MODULE(ctclen, m) {
  m.doc() = "Length-controlled CTC summary decoding";

  py::enum_<ctclen::Reduction>(m, "Reduction")
      .value("MERGE", ctclen::Reduction::Merge)
      .value("NOMERGE", ctclen::Reduction::NoMerge);

  py::enum_<ctclen::LengthConvention>(m, "LengthConvention")
      .value("SEPARATOR", ctclen::LengthConvention::Separator)
      .value("APPENDED", ctclen::LengthConvention::Appended)
      .value("UNIT", ctclen::LengthConvention::Unit);

  py::class_<ctclen::Vocabulary>(m, "Vocabulary")
      .def(py::init<std::vector<std::string>, ctclen::TokenId>(),
           py::arg("tokens"), py::arg("blank_id"))
      .def_property_readonly("blank_id", &ctclen::Vocabulary::blank_id)
      .def("__len__", &ctclen::Vocabulary::size)
      .def("token", &ctclen::Vocabulary::token, py::arg("id"))
      .def("width", &ctclen::Vocabulary::width, py::arg("id"))
      .def("find", &ctclen::Vocabulary::find, py::arg("token"))
      .def_property_readonly("tokens", &ctclen::Vocabulary::tokens);

  py::class_<ctclen::LogProbMatrix>(m, "LogProbMatrix")
      .def(py::init<int, int, std::vector<double>>(), py::arg("slots"),
           py::arg("vocab_size"), py::arg("values"))
      .def_static("from_rows", &ctclen::LogProbMatrix::from_rows,
                  py::arg("rows"))
      .def_property_readonly("slots", &ctclen::LogProbMatrix::slots)
      .def_property_readonly("vocab_size", &ctclen::LogProbMatrix::vocab_size)
      .def(
          "at",
          [](const ctclen::LogProbMatrix& matrix, int slot,
             ctclen::TokenId token) {
            if (slot < 0 || slot >= matrix.slots() || token < 0 ||
                token >= matrix.vocab_size()) {
              throw py::index_error("slot or token out of range");
            }
            return matrix.at(slot, token);
          },
          py::arg("slot"), py::arg("token"));

  py::class_<ctclen::TokenPath>(m, "TokenPath")
      .def(py::init<>())
      .def_readwrite("slots", &ctclen::TokenPath::slots);

  py::class_<ctclen::WordSequence>(m, "WordSequence")
      .def_readonly("words", &ctclen::WordSequence::words)
      .def_readonly("text", &ctclen::WordSequence::text)
      .def("__len__", &ctclen::WordSequence::word_count);

  py::class_<ctclen::DecoderConfig>(m, "DecoderConfig")
      .def(py::init<>())
      .def_readwrite("budget", &ctclen::DecoderConfig::budget)
      .def_readwrite("bucket_size", &ctclen::DecoderConfig::bucket_size)
      .def_readwrite("top_k", &ctclen::DecoderConfig::top_k)
      .def_readwrite("variant", &ctclen::DecoderConfig::variant)
      .def_readwrite("weights", &ctclen::DecoderConfig::weights)
      .def_readwrite("inclusive_budget",
                     &ctclen::DecoderConfig::inclusive_budget)
      .def_readwrite("target_bucket", &ctclen::DecoderConfig::target_bucket);

  py::class_<ctclen::DecodeResult>(m, "DecodeResult")
      .def_readonly("path", &ctclen::DecodeResult::path)
      .def_readonly("words", &ctclen::DecodeResult::words)
      .def_readonly("char_len", &ctclen::DecodeResult::char_len)
      .def_readonly("score", &ctclen::DecodeResult::score)
      .def_readonly("seconds", &ctclen::DecodeResult::seconds)
      .def_readonly("feasible", &ctclen::DecodeResult::feasible)
      .def_property_readonly(
          "text", [](const ctclen::DecodeResult& r) { return r.words.text; });

  py::class_<ctclen::OracleResult>(m, "OracleResult")
      .def_readonly("path", &ctclen::OracleResult::path)
      .def_readonly("words", &ctclen::OracleResult::words)
      .def_readonly("char_len", &ctclen::OracleResult::char_len)
      .def_readonly("score", &ctclen::OracleResult::score)
      .def_readonly("feasible", &ctclen::OracleResult::feasible);

  py::class_<ctclen::GapReport>(m, "GapReport")
      .def_readonly("dp", &ctclen::GapReport::dp)
      .def_readonly("oracle", &ctclen::GapReport::oracle)
      .def_readonly("gap", &ctclen::GapReport::gap);

  py::class_<ctclen::Instance>(m, "Instance")
      .def(py::init<ctclen::Vocabulary, ctclen::LogProbMatrix>(),
           py::arg("vocab"), py::arg("matrix"))
      .def_readonly("vocab", &ctclen::Instance::vocab)
      .def_readonly("matrix", &ctclen::Instance::matrix);

  py::class_<ctclen::GenSettings>(m, "GenSettings")
      .def(py::init<>())
      .def_readwrite("slots", &ctclen::GenSettings::slots)
      .def_readwrite("vocab_size", &ctclen::GenSettings::vocab_size)
      .def_readwrite("seed", &ctclen::GenSettings::seed)
      .def_readwrite("peakedness", &ctclen::GenSettings::peakedness)
      .def_readwrite("min_width", &ctclen::GenSettings::min_width)
      .def_readwrite("max_width", &ctclen::GenSettings::max_width);

  py::class_<ctclen::RougeStat>(m, "RougeStat")
      .def_readonly("precision", &ctclen::RougeStat::precision)
      .def_readonly("recall", &ctclen::RougeStat::recall)
      .def_readonly("f1", &ctclen::RougeStat::f1);

  py::class_<ctclen::RougeScores>(m, "RougeScores")
      .def_readonly("rouge1", &ctclen::RougeScores::rouge1)
      .def_readonly("rouge2", &ctclen::RougeScores::rouge2)
      .def_readonly("rougeL", &ctclen::RougeScores::rougeL);

  m.def(
      "reduce_merge",
      [](const std::vector<ctclen::TokenId>& slots,
         const ctclen::Vocabulary& vocab) {
        ctclen::TokenPath path;
        path.slots = slots;
        return ctclen::reduce_merge(path, vocab);
      },
      py::arg("slots"), py::arg("vocab"));
  m.def(
      "reduce_nomerge",
      [](const std::vector<ctclen::TokenId>& slots,
         const ctclen::Vocabulary& vocab) {
        ctclen::TokenPath path;
        path.slots = slots;
        return ctclen::reduce_nomerge(path, vocab);
      },
      py::arg("slots"), py::arg("vocab"));

  m.def(
      "ctc_forward",
      [](const ctclen::LogProbMatrix& matrix,
         const std::vector<ctclen::TokenId>& target,
         const ctclen::Vocabulary& vocab) {
        return ctclen::ctc_forward(matrix, as_span(target), vocab);
      },
      py::arg("matrix"), py::arg("target"), py::arg("vocab"));
  m.def(
      "brute_marginal",
      [](const ctclen::LogProbMatrix& matrix,
         const std::vector<ctclen::TokenId>& target,
         const ctclen::Vocabulary& vocab, ctclen::Reduction variant,
         double max_paths) {
        return ctclen::brute_marginal(matrix, as_span(target), vocab, variant,
                                      max_paths);
      },
      py::arg("matrix"), py::arg("target"), py::arg("vocab"),
      py::arg("variant") = ctclen::Reduction::Merge,
      py::arg("max_paths") = ctclen::kDefaultEnumerationCap);

  m.def("decode_length_control", &ctclen::decode_length_control,
        py::arg("matrix"), py::arg("vocab"), py::arg("config"));
  m.def("decode_buckets", &ctclen::decode_buckets, py::arg("matrix"),
        py::arg("vocab"), py::arg("config"), py::arg("num_buckets"));
  m.def("decode_exact", &ctclen::decode_exact, py::arg("matrix"),
        py::arg("vocab"), py::arg("budget"),
        py::arg("weights") = ctclen::LengthConvention::Separator);
  m.def("decode_exact_length", &ctclen::decode_exact_length, py::arg("matrix"),
        py::arg("vocab"), py::arg("length"),
        py::arg("weights") = ctclen::LengthConvention::Separator);
  m.def("decode_greedy", &ctclen::decode_greedy, py::arg("matrix"),
        py::arg("vocab"), py::arg("variant") = ctclen::Reduction::Merge);

  m.def("brute_decode", &ctclen::brute_decode, py::arg("matrix"),
        py::arg("vocab"), py::arg("budget"), py::arg("variant"),
        py::arg("weights"), py::arg("inclusive") = true,
        py::arg("max_paths") = ctclen::kDefaultEnumerationCap);
  m.def("brute_decode_range", &ctclen::brute_decode_range, py::arg("matrix"),
        py::arg("vocab"), py::arg("min_len"), py::arg("max_len"),
        py::arg("variant"), py::arg("weights"),
        py::arg("max_paths") = ctclen::kDefaultEnumerationCap);
  m.def("gap_report", &ctclen::gap_report, py::arg("matrix"), py::arg("vocab"),
        py::arg("config"),
        py::arg("max_paths") = ctclen::kDefaultEnumerationCap);

  m.def("truncate_words", &ctclen::truncate_words, py::arg("words"),
        py::arg("budget"), py::arg("weights"), py::arg("vocab"));
  m.def("truncate_chars", &ctclen::truncate_chars, py::arg("text"),
        py::arg("budget"));
  m.def("utf8_length", &ctclen::utf8_length, py::arg("text"));

  m.def("rouge", &ctclen::rouge, py::arg("candidate"), py::arg("reference"));
  m.def("corpus_rouge", &ctclen::corpus_rouge, py::arg("candidates"),
        py::arg("references"));

  m.def("generate_instance", &ctclen::generate_instance, py::arg("settings"));
  m.def("read_instance", &ctclen::read_instance_file, py::arg("path"));
  m.def(
      "write_instance",
      [](const std::string& path, const ctclen::Instance& instance,
         bool binary) {
        ctclen::write_instance_file(path, instance,
                                    binary ? ctclen::MatrixFormat::Binary
                                           : ctclen::MatrixFormat::Text);
      },
      py::arg("path"), py::arg("instance"), py::arg("binary") = false);
}
