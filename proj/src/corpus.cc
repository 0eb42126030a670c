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

#include "puncteval/corpus.h"

#include <cctype>
#include <charconv>
#include <cstdio>

namespace puncteval {
namespace {

bool IsSpace(char c) {
  return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' ||
         c == '\v';
}

bool IsTerminalMark(char c) { return c == '.' || c == '!' || c == '?'; }

std::string_view Trim(std::string_view s) {
  while (!s.empty() && IsSpace(s.front())) s.remove_prefix(1);
  while (!s.empty() && IsSpace(s.back())) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> SplitFields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && IsSpace(line[pos])) ++pos;
    if (pos >= line.size()) break;
    std::size_t end = pos;
    while (end < line.size() && !IsSpace(line[end])) ++end;
    fields.push_back(line.substr(pos, end - pos));
    pos = end;
  }
  return fields;
}

double ParseBracketTime(std::string_view field, std::size_t line_no,
                        const char* which) {
  if (field.size() < 3 || field.front() != '[' || field.back() != ']')
    throw StmParseError(line_no, std::string("malformed ") + which +
                                     " time field '" + std::string(field) +
                                     "'");
  std::string_view inner = field.substr(1, field.size() - 2);
  double value = 0.0;
  auto [ptr, ec] =
      std::from_chars(inner.data(), inner.data() + inner.size(), value);
  if (ec != std::errc() || ptr != inner.data() + inner.size())
    throw StmParseError(line_no, std::string("non-numeric ") + which +
                                     " time '" + std::string(inner) + "'");
  if (value < 0.0)
    throw StmParseError(line_no, std::string(which) + " time is negative");
  return value;
}

}  // namespace

std::vector<StmSegment> ParseStm(std::string_view content) {
  std::vector<StmSegment> segments;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= content.size()) {
    std::size_t eol = content.find('\n', pos);
    std::string_view line = content.substr(
        pos, eol == std::string_view::npos ? content.size() - pos : eol - pos);
    ++line_no;
    pos = eol == std::string_view::npos ? content.size() + 1 : eol + 1;

    if (Trim(line).empty()) continue;

    std::vector<std::string_view> fields = SplitFields(line);
    std::size_t first_bracket = 0;
    while (first_bracket < fields.size() &&
           !fields[first_bracket].starts_with('['))
      ++first_bracket;
    if (first_bracket > 3 || first_bracket >= fields.size())
      throw StmParseError(line_no, "expected '[start] [end] text'");
    if (first_bracket + 1 >= fields.size() ||
        !fields[first_bracket + 1].starts_with('['))
      throw StmParseError(line_no, "missing '[end]' time field");

    StmSegment seg;
    seg.start = ParseBracketTime(fields[first_bracket], line_no, "start");
    seg.end = ParseBracketTime(fields[first_bracket + 1], line_no, "end");
    if (seg.start >= seg.end)
      throw StmParseError(line_no, "start time is not before end time");

    // Text: everything after the end-time field.
    std::size_t text_offset =
        static_cast<std::size_t>(fields[first_bracket + 1].data() - line.data()) +
        fields[first_bracket + 1].size();
    seg.text = std::string(Trim(line.substr(text_offset)));

    if (!segments.empty() && seg.start < segments.back().end)
      throw StmParseError(line_no,
                          "segments out of order or overlapping");
    segments.push_back(std::move(seg));
  }
  return segments;
}

std::string WriteStm(std::span<const StmSegment> segments) {
  std::string out;
  const StmSegment* prev = nullptr;
  for (const StmSegment& seg : segments) {
    if (seg.start >= seg.end)
      throw std::invalid_argument("stm segment start must precede end");
    if (prev && seg.start < prev->end)
      throw std::invalid_argument("stm segments must be sorted and disjoint");
    prev = &seg;
    char times[64];
    std::snprintf(times, sizeof(times), "[%.2f] [%.2f] ", seg.start, seg.end);
    out += times;
    out += seg.text;
    out += '\n';
  }
  return out;
}

std::vector<std::string> SplitSentences(std::string_view paragraph) {
  std::vector<std::string> sentences;
  std::size_t start = 0;
  std::size_t i = 0;
  while (i < paragraph.size()) {
    if (IsTerminalMark(paragraph[i])) {
      std::size_t run_end = i;
      while (run_end + 1 < paragraph.size() &&
             IsTerminalMark(paragraph[run_end + 1]))
        ++run_end;
      bool boundary = run_end + 1 >= paragraph.size() ||
                      IsSpace(paragraph[run_end + 1]);
      if (boundary) {
        std::string_view sent =
            Trim(paragraph.substr(start, run_end + 1 - start));
        if (!sent.empty()) sentences.emplace_back(sent);
        start = run_end + 1;
        i = run_end + 1;
        continue;
      }
      i = run_end + 1;
      continue;
    }
    ++i;
  }
  std::string_view tail = Trim(paragraph.substr(start));
  if (!tail.empty()) sentences.emplace_back(tail);
  return sentences;
}

namespace {

bool SentenceIsClean(std::string_view sentence) {
  std::size_t i = 0;
  while (i < sentence.size()) {
    if (sentence.substr(i).starts_with("<unk>")) {
      i += 5;
      continue;
    }
    unsigned char c = static_cast<unsigned char>(sentence[i]);
    bool ok = std::isalnum(c) || IsSpace(static_cast<char>(c)) || c == '\'' ||
              c == ',' || c == '.' || c == '?' || c == '!';
    if (c >= 0x80 || !ok) return false;
    ++i;
  }
  return true;
}

std::size_t CountWords(std::string_view paragraph) {
  std::size_t words = 0;
  bool in_word = false;
  for (char c : paragraph) {
    if (IsSpace(c)) {
      in_word = false;
    } else if (!in_word) {
      in_word = true;
      ++words;
    }
  }
  return words;
}

std::size_t CountTerminalMarks(std::string_view paragraph) {
  std::size_t marks = 0;
  for (char c : paragraph) marks += IsTerminalMark(c);
  return marks;
}

// One filtering pass over a paragraph; empty result means dropped.
std::string FilterParagraphOnce(const std::string& paragraph) {
  if (CountTerminalMarks(paragraph) < 2 || CountWords(paragraph) < 20)
    return "";

  std::vector<std::string> sentences = SplitSentences(paragraph);
  std::vector<bool> clean(sentences.size());
  for (std::size_t i = 0; i < sentences.size(); ++i)
    clean[i] = SentenceIsClean(sentences[i]);

  // Keep only runs of more than two consecutive clean sentences.
  std::string out;
  std::size_t i = 0;
  while (i < sentences.size()) {
    if (!clean[i]) {
      ++i;
      continue;
    }
    std::size_t run_end = i;
    while (run_end + 1 < sentences.size() && clean[run_end + 1]) ++run_end;
    if (run_end - i + 1 > 2) {
      for (std::size_t k = i; k <= run_end; ++k) {
        if (!out.empty()) out += ' ';
        out += sentences[k];
      }
    }
    i = run_end + 1;
  }
  return out;
}

WikiDocument FilterOnce(const WikiDocument& doc) {
  WikiDocument out;
  for (const std::string& paragraph : doc.paragraphs) {
    std::string filtered = FilterParagraphOnce(paragraph);
    if (!filtered.empty()) out.paragraphs.push_back(std::move(filtered));
  }
  return out;
}

}  // namespace

WikiDocument FilterWiki(const WikiDocument& doc) {
  // Sentence removal can push a paragraph below the length thresholds, so
  // iterate to a fixed point. Each pass only removes text, so this
  // terminates.
  WikiDocument current = FilterOnce(doc);
  for (;;) {
    WikiDocument next = FilterOnce(current);
    if (next == current) return current;
    current = std::move(next);
  }
}

}  // namespace puncteval
