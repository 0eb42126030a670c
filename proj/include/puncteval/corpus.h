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

#ifndef PUNCTEVAL_CORPUS_H_
#define PUNCTEVAL_CORPUS_H_

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace puncteval {

class StmParseError : public std::runtime_error {
 public:
  StmParseError(std::size_t line, const std::string& message)
      : std::runtime_error("stm line " + std::to_string(line) + ": " + message),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// One timestamped transcript segment: `[start] [end] text`.
struct StmSegment {
  double start = 0.0;
  double end = 0.0;
  std::string text;

  bool operator==(const StmSegment&) const = default;
};

// Parses stm content, one segment per nonempty line. Up to three leading
// non-bracket fields (file/channel/speaker variants) are tolerated and
// discarded. Throws StmParseError (with the line number) on malformed
// bracket fields, non-numeric times, start >= end, or out-of-order /
// overlapping segments.
std::vector<StmSegment> ParseStm(std::string_view content);

// Renders segments back to stm text, times with two decimals. Throws
// std::invalid_argument when the segment list violates its invariants.
std::string WriteStm(std::span<const StmSegment> segments);

// Plain-text Wikipedia-style document: main-body paragraphs only.
struct WikiDocument {
  std::vector<std::string> paragraphs;

  bool operator==(const WikiDocument&) const = default;
};

// Language-model corpus filter. Paragraphs with fewer than two terminal
// marks (. ! ?) or fewer than 20 words are dropped; sentences containing
// characters outside alphanumerics, whitespace, apostrophe and the four
// marks are removed (the literal "<unk>" is kept); only runs of more than
// two consecutive surviving sentences are retained. The result is a fixed
// point: filtering it again changes nothing.
WikiDocument FilterWiki(const WikiDocument& doc);

// Splits paragraph text into sentences at . ! ? runs followed by whitespace
// or end of text. Exposed for the filter's tests.
std::vector<std::string> SplitSentences(std::string_view paragraph);

}  // namespace puncteval

#endif  // PUNCTEVAL_CORPUS_H_
