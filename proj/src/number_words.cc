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

#include <array>
#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>

#include "puncteval/normalize.h"

namespace puncteval {
namespace {

constexpr std::array<std::string_view, 20> kUnits = {
    "zero",    "one",     "two",       "three",    "four",
    "five",    "six",     "seven",     "eight",    "nine",
    "ten",     "eleven",  "twelve",    "thirteen", "fourteen",
    "fifteen", "sixteen", "seventeen", "eighteen", "nineteen"};

constexpr std::array<std::string_view, 8> kTens = {
    "twenty", "thirty", "forty",  "fifty",
    "sixty",  "seventy", "eighty", "ninety"};

void AppendWord(std::string* out, std::string_view word) {
  if (!out->empty()) *out += ' ';
  *out += word;
}

void SpellBelowThousand(std::uint64_t v, std::string* out) {
  if (v >= 100) {
    AppendWord(out, kUnits[v / 100]);
    AppendWord(out, "hundred");
    v %= 100;
    if (v == 0) return;
  }
  if (v >= 20) {
    AppendWord(out, kTens[v / 10 - 2]);
    v %= 10;
    if (v == 0) return;
  }
  AppendWord(out, kUnits[v]);
}

// Cardinal spelling with spaces throughout (the token charset has no hyphen).
std::string SpellCardinal(std::uint64_t v) {
  if (v == 0) return "zero";
  std::string out;
  if (v >= 1000000) {
    SpellBelowThousand(v / 1000000, &out);
    AppendWord(&out, "million");
    v %= 1000000;
  }
  if (v >= 1000) {
    SpellBelowThousand(v / 1000, &out);
    AppendWord(&out, "thousand");
    v %= 1000;
  }
  if (v > 0) SpellBelowThousand(v, &out);
  return out;
}

std::string OrdinalizeLastWord(std::string cardinal) {
  std::size_t space = cardinal.rfind(' ');
  std::size_t start = space == std::string::npos ? 0 : space + 1;
  std::string_view last = std::string_view(cardinal).substr(start);

  struct Irregular {
    std::string_view cardinal;
    std::string_view ordinal;
  };
  static constexpr std::array<Irregular, 7> kIrregulars = {{
      {"one", "first"},
      {"two", "second"},
      {"three", "third"},
      {"five", "fifth"},
      {"eight", "eighth"},
      {"nine", "ninth"},
      {"twelve", "twelfth"},
  }};
  std::string replacement;
  for (const Irregular& ir : kIrregulars) {
    if (last == ir.cardinal) replacement = ir.ordinal;
  }
  if (replacement.empty()) {
    replacement = std::string(last);
    if (replacement.ends_with('y')) {
      replacement.pop_back();
      replacement += "ieth";
    } else {
      replacement += "th";
    }
  }
  cardinal.replace(start, cardinal.size() - start, replacement);
  return cardinal;
}

bool IsDigit(char c) { return c >= '0' && c <= '9'; }
bool IsAlpha(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

std::string SpellDigitByDigit(std::string_view digits) {
  std::string out;
  for (char c : digits) AppendWord(&out, kUnits[c - '0']);
  return out;
}

}  // namespace

std::string NumberToWords(std::string_view text) {
  auto is_space = [](char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
           c == '\v';
  };
  std::string out;
  out.reserve(text.size());
  std::size_t i = 0;
  while (i < text.size()) {
    if (!IsDigit(text[i])) {
      out += text[i++];
      continue;
    }
    std::size_t start = i;
    while (i < text.size() && IsDigit(text[i])) ++i;
    std::string_view run = text.substr(start, i - start);
    if (run.size() > 9)
      throw NormalizeError("digit run '" + std::string(run) +
                           "' exceeds the supported magnitude (9 digits)");

    // Decimal point inside a digit run is read as "point".
    std::string_view fraction;
    if (i + 1 < text.size() && text[i] == '.' && IsDigit(text[i + 1])) {
      std::size_t fstart = ++i;
      while (i < text.size() && IsDigit(text[i])) ++i;
      fraction = text.substr(fstart, i - fstart);
    }

    // Ordinal suffix st/nd/rd/th on pure-integer runs.
    bool ordinal = false;
    if (fraction.empty() && i + 2 <= text.size()) {
      char s0 = static_cast<char>(std::tolower(text[i]));
      char s1 = static_cast<char>(std::tolower(text[i + 1]));
      bool suffix = (s0 == 's' && s1 == 't') || (s0 == 'n' && s1 == 'd') ||
                    (s0 == 'r' && s1 == 'd') || (s0 == 't' && s1 == 'h');
      bool boundary = i + 2 >= text.size() || !IsAlpha(text[i + 2]);
      if (suffix && boundary) {
        ordinal = true;
        i += 2;
      }
    }

    std::string spelled;
    if (run.size() > 1 && run[0] == '0') {
      spelled = SpellDigitByDigit(run);
    } else {
      std::uint64_t value = 0;
      for (char c : run) value = value * 10 + (c - '0');
      spelled = SpellCardinal(value);
    }
    if (ordinal) spelled = OrdinalizeLastWord(std::move(spelled));
    if (!fraction.empty()) {
      spelled += " point ";
      spelled += SpellDigitByDigit(fraction);
    }
    // Pad only where the spelled words would otherwise glue onto
    // neighboring text.
    if (!out.empty() && !is_space(out.back())) out += ' ';
    out += spelled;
    if (i < text.size() && !is_space(text[i])) out += ' ';
  }
  return out;
}

}  // namespace puncteval
