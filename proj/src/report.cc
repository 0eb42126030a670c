// Copyright 2026 The puncteval Authors
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

#include "puncteval/report.h"

#include <json.hpp>

#include <cstdio>

namespace puncteval {
namespace {

std::string Fixed(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.4f", value);
  return buf;
}

}  // namespace

std::string PunctName(TokenKind kind) {
  switch (kind) {
    case TokenKind::kComma:
      return "comma";
    case TokenKind::kPeriod:
      return "period";
    case TokenKind::kQuestion:
      return "question";
    case TokenKind::kExclamation:
      return "exclamation";
    case TokenKind::kWord:
      break;
  }
  return "word";
}

std::string ReportToText(const MetricsReport& report) {
  std::string out;
  auto line = [&out](const std::string& key, const std::string& value) {
    out += key;
    out += ' ';
    out += value;
    out += '\n';
  };
  line("wer", Fixed(report.wer));
  line("cer", Fixed(report.cer));
  line("precision", Fixed(report.precision));
  line("recall", Fixed(report.recall));
  line("f_score", Fixed(report.f));
  line("dlev_ser", Fixed(report.dlev_ser));
  for (const auto& [kind, ser] : report.per_punct_ser)
    line("dlev_ser_" + PunctName(kind), Fixed(ser));
  line("punct_correct", std::to_string(report.counts.correct));
  line("punct_insertions", std::to_string(report.counts.insertions));
  line("punct_deletions", std::to_string(report.counts.deletions));
  line("punct_substitutions", std::to_string(report.counts.substitutions));
  line("punct_swaps", std::to_string(report.counts.swaps));
  line("ref_puncts", std::to_string(report.ref_puncts));
  line("hyp_puncts", std::to_string(report.hyp_puncts));
  line("word_edits", std::to_string(report.word_edits));
  line("ref_words", std::to_string(report.ref_words));
  line("char_edits", std::to_string(report.char_edits));
  line("ref_chars", std::to_string(report.ref_chars));
  line("segments", std::to_string(report.segments));
  return out;
}

std::string ReportToJson(const MetricsReport& report) {
  nlohmann::json j;
  j["schema"] = 1;
  j["wer"] = report.wer;
  j["cer"] = report.cer;
  j["precision"] = report.precision;
  j["recall"] = report.recall;
  j["f_score"] = report.f;
  j["dlev_ser"] = report.dlev_ser;
  nlohmann::json per_punct = nlohmann::json::object();
  for (const auto& [kind, ser] : report.per_punct_ser)
    per_punct[PunctName(kind)] = ser;
  j["per_punct_ser"] = per_punct;
  j["counts"] = {
      {"correct", report.counts.correct},
      {"insertions", report.counts.insertions},
      {"deletions", report.counts.deletions},
      {"substitutions", report.counts.substitutions},
      {"swaps", report.counts.swaps},
  };
  j["totals"] = {
      {"ref_puncts", report.ref_puncts},   {"hyp_puncts", report.hyp_puncts},
      {"word_edits", report.word_edits},   {"ref_words", report.ref_words},
      {"char_edits", report.char_edits},   {"ref_chars", report.ref_chars},
      {"segments", report.segments},
  };
  return j.dump(2);
}

}  // namespace puncteval
