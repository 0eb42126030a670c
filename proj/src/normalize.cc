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

#include "puncteval/normalize.h"

#include <algorithm>
#include <array>
#include <cctype>
#include <unordered_set>

namespace puncteval {
namespace {

bool IsAsciiSpace(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

bool IsAsciiAlpha(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

bool IsAsciiDigit(char c) { return c >= '0' && c <= '9'; }

bool IsMark(char c) { return c == ',' || c == '.' || c == '?' || c == '!'; }

std::string CollapseWhitespace(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  bool pending_space = false;
  for (char c : text) {
    if (IsAsciiSpace(c)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out += ' ';
    pending_space = false;
    out += c;
  }
  return out;
}

// Abbreviations whose trailing dot is an acronym dot rather than a sentence
// boundary.
const std::unordered_set<std::string>& DottedAbbreviations() {
  static const auto* kSet = new std::unordered_set<std::string>{
      "st", "etc", "dr",  "mr",  "mrs", "ms",  "jr",   "sr", "vs", "eg",
      "ie", "al",  "inc", "ltd", "co",  "no",  "prof", "fig", "vol"};
  return *kSet;
}

std::string AsciiLower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) {
    return static_cast<char>(std::tolower(c));
  });
  return out;
}

// Fully dotted acronyms like "U.S.A." or "a.m." (single letters, each
// followed by a dot).
bool IsFullyDottedAcronym(std::string_view token) {
  if (token.size() < 2 || token.size() % 2 != 0) return false;
  for (std::size_t i = 0; i < token.size(); i += 2) {
    if (!IsAsciiAlpha(token[i]) || token[i + 1] != '.') return false;
  }
  return true;
}

std::string RemoveAcronymDots(std::string_view token) {
  if (token.find('.') == std::string_view::npos) return std::string(token);
  if (IsFullyDottedAcronym(token)) {
    std::string out;
    for (char c : token)
      if (c != '.') out += c;
    return out;
  }
  std::string out;
  for (std::size_t i = 0; i < token.size(); ++i) {
    char c = token[i];
    if (c != '.') {
      out += c;
      continue;
    }
    bool letter_after = i + 1 < token.size() && IsAsciiAlpha(token[i + 1]);
    bool letter_before = i > 0 && IsAsciiAlpha(token[i - 1]);
    if (letter_after && (letter_before || i == 0)) continue;  // U.S / .etc
    if (letter_before && i + 1 == token.size()) {
      // Trailing dot: acronym dot only for known abbreviations.
      std::string prefix = AsciiLower(token.substr(0, i));
      bool alpha_only = std::all_of(prefix.begin(), prefix.end(), [](char p) {
        return p >= 'a' && p <= 'z';
      });
      if (alpha_only && DottedAbbreviations().count(prefix)) continue;
    }
    out += c;
  }
  return out;
}

}  // namespace

std::string StripTags(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] == '[') {
      std::size_t close = text.find(']', i);
      if (close != std::string_view::npos) {
        out += ' ';
        i = close + 1;
        continue;
      }
    }
    out += text[i++];
  }
  return CollapseWhitespace(out);
}

std::string SubstituteSpecials(std::string_view text) {
  struct Special {
    std::string_view utf8;
    std::string_view spoken;
  };
  static constexpr std::array<Special, 5> kSpecials = {{
      {"\xc3\xa6", "ae"},      // U+00E6
      {"\xc2\xb2", "square"},  // U+00B2
      {"\xc2\xb0", "degree"},  // U+00B0
      {"%", "percent"},
      {"*", "times"},
  }};
  std::string out;
  out.reserve(text.size());
  std::size_t i = 0;
  while (i < text.size()) {
    bool matched = false;
    for (const Special& s : kSpecials) {
      if (text.substr(i).starts_with(s.utf8)) {
        out += ' ';
        out += s.spoken;
        out += ' ';
        i += s.utf8.size();
        matched = true;
        break;
      }
    }
    if (!matched) out += text[i++];
  }
  return CollapseWhitespace(out);
}

std::string CanonicalizePunct(std::string_view text) {
  // Map colon/semicolon to commas, ellipsis/interpunct to periods, curly
  // apostrophes to ASCII, and drop every other punctuation codepoint.
  std::string mapped;
  mapped.reserve(text.size());
  std::size_t i = 0;
  while (i < text.size()) {
    unsigned char c = static_cast<unsigned char>(text[i]);
    if (c < 0x80) {
      if (c == ':' || c == ';') {
        mapped += ',';
      } else if (IsAsciiAlpha(static_cast<char>(c)) ||
                 IsAsciiDigit(static_cast<char>(c)) ||
                 IsAsciiSpace(static_cast<char>(c)) || c == '\'' ||
                 IsMark(static_cast<char>(c))) {
        mapped += static_cast<char>(c);
      }
      ++i;
      continue;
    }
    std::string_view rest = text.substr(i);
    if (rest.starts_with("\xe2\x80\xa6")) {  // U+2026 ellipsis
      mapped += '.';
      i += 3;
    } else if (rest.starts_with("\xc2\xb7")) {  // U+00B7 interpunct
      mapped += '.';
      i += 2;
    } else if (rest.starts_with("\xe2\x80\x99")) {  // U+2019 right quote
      mapped += '\'';
      i += 3;
    } else {
      // Skip the whole codepoint.
      ++i;
      while (i < text.size() &&
             (static_cast<unsigned char>(text[i]) & 0xc0) == 0x80)
        ++i;
    }
  }

  // Acronym dots, token by token.
  std::string dedotted;
  dedotted.reserve(mapped.size());
  std::size_t pos = 0;
  while (pos < mapped.size()) {
    if (IsAsciiSpace(mapped[pos])) {
      dedotted += mapped[pos++];
      continue;
    }
    std::size_t end = pos;
    while (end < mapped.size() && !IsAsciiSpace(mapped[end])) ++end;
    dedotted += RemoveAcronymDots(mapped.substr(pos, end - pos));
    pos = end;
  }

  // Split contractions before the apostrophe and detach the four marks.
  std::string out;
  out.reserve(dedotted.size() + 16);
  for (std::size_t k = 0; k < dedotted.size(); ++k) {
    char c = dedotted[k];
    if (c == '\'' && k > 0 && IsAsciiAlpha(dedotted[k - 1]) &&
        k + 1 < dedotted.size() && IsAsciiAlpha(dedotted[k + 1])) {
      out += " '";
      continue;
    }
    if (IsMark(c)) {
      out += ' ';
      out += c;
      out += ' ';
      continue;
    }
    out += c;
  }
  return CollapseWhitespace(out);
}

NormalizedTranscript Normalize(std::string_view text) {
  std::string cleaned = CanonicalizePunct(
      NumberToWords(SubstituteSpecials(StripTags(text))));
  cleaned = AsciiLower(cleaned);

  NormalizedTranscript result;
  std::size_t pos = 0;
  while (pos < cleaned.size()) {
    while (pos < cleaned.size() && IsAsciiSpace(cleaned[pos])) ++pos;
    if (pos >= cleaned.size()) break;
    std::size_t end = pos;
    while (end < cleaned.size() && !IsAsciiSpace(cleaned[end])) ++end;
    std::string_view unit = std::string_view(cleaned).substr(pos, end - pos);
    pos = end;

    if (auto kind = PunctKindOf(unit)) {
      // Collapse adjacent duplicates of the same kind.
      if (!result.tokens.empty() && result.tokens.back().kind == *kind)
        continue;
      result.tokens.push_back(PunctToken(*kind));
      continue;
    }
    for (char c : unit) {
      if (!(c >= 'a' && c <= 'z') && c != '\'')
        throw std::logic_error("normalizer produced invalid word token: " +
                               std::string(unit));
    }
    result.tokens.push_back(WordToken(std::string(unit)));
  }
  return result;
}

NormalizedTranscript TokenizeNormalized(std::string_view text) {
  NormalizedTranscript result;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && IsAsciiSpace(text[pos])) ++pos;
    if (pos >= text.size()) break;
    std::size_t end = pos;
    while (end < text.size() && !IsAsciiSpace(text[end])) ++end;
    std::string_view unit = text.substr(pos, end - pos);
    pos = end;

    if (auto kind = PunctKindOf(unit)) {
      if (!result.tokens.empty() && result.tokens.back().kind == *kind)
        continue;
      result.tokens.push_back(PunctToken(*kind));
      continue;
    }
    for (char c : unit) {
      if (!(c >= 'a' && c <= 'z') && c != '\'')
        throw NormalizeError(
            "token '" + std::string(unit) +
            "' is not normalized (expected lowercase words or single marks; "
            "run with normalization enabled for raw text)");
    }
    result.tokens.push_back(WordToken(std::string(unit)));
  }
  return result;
}

NormalizedTranscript StripPunctuation(const NormalizedTranscript& t) {
  NormalizedTranscript out;
  out.tokens.reserve(t.tokens.size());
  for (const Token& tok : t.tokens) {
    if (tok.kind == TokenKind::kWord) out.tokens.push_back(tok);
  }
  return out;
}

}  // namespace puncteval
