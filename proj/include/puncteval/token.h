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

#ifndef PUNCTEVAL_TOKEN_H_
#define PUNCTEVAL_TOKEN_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace puncteval {

// Transcript unit classes. Words carry their own surface; each punctuation
// kind has a fixed one-character surface.
enum class TokenKind { kWord, kComma, kPeriod, kQuestion, kExclamation };

inline bool IsPunct(TokenKind kind) { return kind != TokenKind::kWord; }

// The mark character for a punctuation kind.
char PunctChar(TokenKind kind);

// Classifies a single mark string (",", ".", "?", "!"); nullopt for anything
// else.
std::optional<TokenKind> PunctKindOf(std::string_view s);

struct Token {
  std::string surface;
  TokenKind kind = TokenKind::kWord;

  bool operator==(const Token&) const = default;
};

Token WordToken(std::string surface);
Token PunctToken(TokenKind kind);

// An ordered token sequence produced by the normalizer. Guaranteed free of
// adjacent punctuation tokens of identical kind.
struct NormalizedTranscript {
  std::vector<Token> tokens;

  bool operator==(const NormalizedTranscript&) const = default;

  bool empty() const { return tokens.empty(); }
  std::size_t size() const { return tokens.size(); }

  std::size_t WordCount() const;
  std::size_t PunctCount() const;
  std::size_t PunctCountOf(TokenKind kind) const;

  // Tokens joined with single spaces.
  std::string Render() const;
};

}  // namespace puncteval

#endif  // PUNCTEVAL_TOKEN_H_
