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

#include "puncteval/token.h"

#include <stdexcept>

namespace puncteval {

char PunctChar(TokenKind kind) {
  switch (kind) {
    case TokenKind::kComma:
      return ',';
    case TokenKind::kPeriod:
      return '.';
    case TokenKind::kQuestion:
      return '?';
    case TokenKind::kExclamation:
      return '!';
    case TokenKind::kWord:
      break;
  }
  throw std::logic_error("PunctChar called on a word token kind");
}

std::optional<TokenKind> PunctKindOf(std::string_view s) {
  if (s.size() != 1) return std::nullopt;
  switch (s[0]) {
    case ',':
      return TokenKind::kComma;
    case '.':
      return TokenKind::kPeriod;
    case '?':
      return TokenKind::kQuestion;
    case '!':
      return TokenKind::kExclamation;
    default:
      return std::nullopt;
  }
}

Token WordToken(std::string surface) {
  return Token{std::move(surface), TokenKind::kWord};
}

Token PunctToken(TokenKind kind) {
  return Token{std::string(1, PunctChar(kind)), kind};
}

std::size_t NormalizedTranscript::WordCount() const {
  std::size_t n = 0;
  for (const Token& t : tokens) n += t.kind == TokenKind::kWord;
  return n;
}

std::size_t NormalizedTranscript::PunctCount() const {
  return tokens.size() - WordCount();
}

std::size_t NormalizedTranscript::PunctCountOf(TokenKind kind) const {
  std::size_t n = 0;
  for (const Token& t : tokens) n += t.kind == kind;
  return n;
}

std::string NormalizedTranscript::Render() const {
  std::string out;
  for (const Token& t : tokens) {
    if (!out.empty()) out += ' ';
    out += t.surface;
  }
  return out;
}

}  // namespace puncteval
