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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "puncteval/normalize.h"

using namespace puncteval;

TEST_CASE("strip tags removes bracketed spans") {
  CHECK(StripTags("[Laughter] hello") == "hello");
  CHECK(StripTags("") == "");
  CHECK(StripTags("[Video] [Music] a") == "a");
  CHECK(StripTags("a [x] b") == "a b");
  CHECK(StripTags("no tags here") == "no tags here");
  // Unmatched bracket stays literal.
  CHECK(StripTags("a [b") == "a [b");
}

TEST_CASE("special characters map to spoken forms") {
  CHECK(SubstituteSpecials("90 \xc2\xb0") == "90 degree");
  CHECK(SubstituteSpecials("50%") == "50 percent");
  CHECK(SubstituteSpecials("abc") == "abc");
  CHECK(SubstituteSpecials("\xc3\xa6 \xc2\xb2 \xc2\xb0 % *") ==
        "ae square degree percent times");
  CHECK(SubstituteSpecials("3*4") == "3 times 4");
}

TEST_CASE("numbers spell out as words") {
  CHECK(NumberToWords("21st") == "twenty first");
  CHECK(NumberToWords("1000") == "one thousand");
  CHECK(NumberToWords("0") == "zero");
  CHECK(NumberToWords("2nd 3rd 4th") == "second third fourth");
  CHECK(NumberToWords("12th") == "twelfth");
  CHECK(NumberToWords("20th") == "twentieth");
  CHECK(NumberToWords("100th") == "one hundredth");
  CHECK(NumberToWords("365") == "three hundred sixty five");
  CHECK(NumberToWords("1984") == "one thousand nine hundred eighty four");
  CHECK(NumberToWords("999999999") ==
        "nine hundred ninety nine million nine hundred ninety nine thousand "
        "nine hundred ninety nine");
  CHECK(NumberToWords("3.14") == "three point one four");
  CHECK(NumberToWords("007") == "zero zero seven");
  CHECK(NumberToWords("no digits") == "no digits");
  CHECK_THROWS_AS(NumberToWords("1234567890"), NormalizeError);
}

TEST_CASE("punctuation canonicalization") {
  CHECK(CanonicalizePunct("didn't") == "didn 't");
  CHECK(CanonicalizePunct("Hello. This is") == "Hello . This is");
  CHECK(CanonicalizePunct("a: b") == "a , b");
  CHECK(CanonicalizePunct("a; b") == "a , b");
  CHECK(CanonicalizePunct("St. Paul") == "St Paul");
  CHECK(CanonicalizePunct(".etc") == "etc");
  CHECK(CanonicalizePunct("U.S.A. works") == "USA works");
  CHECK(CanonicalizePunct("wait\xe2\x80\xa6 what") == "wait . what");
  CHECK(CanonicalizePunct("a \xc2\xb7 b") == "a . b");
  CHECK(CanonicalizePunct("don\xe2\x80\x99t") == "don 't");
  CHECK(CanonicalizePunct("(parens) and \"quotes\"") == "parens and quotes");
  CHECK(CanonicalizePunct("well-known") == "wellknown");
}

TEST_CASE("full pipeline matches the cleanup table rows") {
  // Row: speaker and information tags.
  CHECK(Normalize("[Speaker A] [Speaker B] [Video] [Music] [Laughter]")
            .Render() == "");
  // Row: rare special characters.
  CHECK(Normalize("\xc3\xa6 \xc2\xb2 \xc2\xb0 % *").Render() ==
        "ae square degree percent times");
  // Row: numbers (hyphenless spelling).
  CHECK(Normalize("21st 1000").Render() == "twenty first one thousand");
  // Row: acronym dots.
  CHECK(Normalize("St. .etc").Render() == "st etc");
  // Row: punctuation mapping with duplicate collapse.
  CHECK(Normalize(": , ... \xc2\xb7 ! ? didn't").Render() ==
        ", . ! ? didn 't");
  // Row: mark separation.
  CHECK(Normalize("Hello. This is").Render() == "hello . this is");
  // Row: lower case.
  CHECK(Normalize("We use DNA").Render() == "we use dna");
}

TEST_CASE("normalize classifies tokens") {
  NormalizedTranscript t = Normalize("[Laughter] It's the 21st.");
  REQUIRE(t.size() == 6);
  CHECK(t.tokens[0] == WordToken("it"));
  CHECK(t.tokens[1] == WordToken("'s"));
  CHECK(t.tokens[2] == WordToken("the"));
  CHECK(t.tokens[3] == WordToken("twenty"));
  CHECK(t.tokens[4] == WordToken("first"));
  CHECK(t.tokens[5] == PunctToken(TokenKind::kPeriod));

  CHECK(Normalize("").tokens.empty());
  CHECK(Normalize("a.. b").Render() == "a . b");
}

TEST_CASE("strip punctuation keeps words in order") {
  NormalizedTranscript t;
  t.tokens = {WordToken("hello"), PunctToken(TokenKind::kPeriod),
              WordToken("world")};
  NormalizedTranscript stripped = StripPunctuation(t);
  REQUIRE(stripped.size() == 2);
  CHECK(stripped.tokens[0].surface == "hello");
  CHECK(stripped.tokens[1].surface == "world");

  CHECK(StripPunctuation({}).tokens.empty());

  NormalizedTranscript q;
  q.tokens = {WordToken("a"), PunctToken(TokenKind::kComma), WordToken("b"),
              PunctToken(TokenKind::kQuestion)};
  CHECK(StripPunctuation(q).Render() == "a b");
}

TEST_CASE("tokenize normalized validates input") {
  CHECK(TokenizeNormalized("a b , c .").size() == 5);
  CHECK_THROWS_AS(TokenizeNormalized("Hello"), NormalizeError);
  CHECK_THROWS_AS(TokenizeNormalized("a b9"), NormalizeError);
  CHECK_THROWS_AS(TokenizeNormalized("ab."), NormalizeError);
}

namespace {

NormalizedTranscript RandomNormalizedTranscript(std::mt19937& rng) {
  static const char* kWords[] = {"we", "believe", "dna", "it", "'s", "talk'",
                                 "ok", "x", "protein", "folds"};
  static const TokenKind kPuncts[] = {TokenKind::kComma, TokenKind::kPeriod,
                                      TokenKind::kQuestion,
                                      TokenKind::kExclamation};
  std::uniform_int_distribution<int> len(0, 12);
  std::uniform_int_distribution<int> word(0, 9);
  std::uniform_int_distribution<int> punct(0, 3);
  std::uniform_real_distribution<double> real(0.0, 1.0);
  NormalizedTranscript t;
  int n = len(rng);
  for (int i = 0; i < n; ++i) {
    if (real(rng) < 0.3) {
      TokenKind kind = kPuncts[punct(rng)];
      if (!t.tokens.empty() && t.tokens.back().kind == kind) continue;
      t.tokens.push_back(PunctToken(kind));
    } else {
      t.tokens.push_back(WordToken(kWords[word(rng)]));
    }
  }
  return t;
}

}  // namespace

TEST_CASE("normalize is idempotent on its own rendering") {
  std::mt19937 rng(7);
  for (int i = 0; i < 200; ++i) {
    NormalizedTranscript t = RandomNormalizedTranscript(rng);
    CHECK(Normalize(t.Render()) == t);
  }
}

TEST_CASE("normalize of arbitrary junk is a fixed point") {
  std::mt19937 rng(19);
  const std::string alphabet =
      "abcXYZ0123456789 .,?!;:'\"-()[]%*\xc2\xb0\xe2\x80\xa6\xe2\x80\x99_/&";
  std::uniform_int_distribution<int> len(0, 40);
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  for (int i = 0; i < 300; ++i) {
    std::string junk;
    int n = len(rng);
    for (int k = 0; k < n; ++k) junk += alphabet[pick(rng)];
    NormalizedTranscript once;
    try {
      once = Normalize(junk);
    } catch (const NormalizeError&) {
      continue;  // digit run over nine digits
    }
    CHECK(Normalize(once.Render()) == once);
  }
}

TEST_CASE("normalize output stays in the token charset") {
  std::mt19937 rng(11);
  const char* kInputs[] = {
      "It's 42 degrees \xc2\xb0 outside!",
      "[Music] Dr. Smith: hello... world; 3.5% of 1000?",
      "U.S.A.!? \xe2\x80\x9cquoted\xe2\x80\x9d text \xe2\x80\x94 dash",
      "we-believe 21st-century DNA",
  };
  for (const char* input : kInputs) {
    NormalizedTranscript t = Normalize(input);
    for (const Token& tok : t.tokens) {
      if (IsPunct(tok.kind)) {
        CHECK(tok.surface.size() == 1);
        continue;
      }
      for (char c : tok.surface) {
        bool ok = (c >= 'a' && c <= 'z') || c == '\'';
        CHECK(ok);
      }
    }
    // Words survive punctuation stripping only.
    for (const Token& tok : StripPunctuation(t).tokens)
      CHECK(tok.kind == TokenKind::kWord);
    CHECK(StripPunctuation(t).size() <= t.size());
  }
  (void)rng;
}

TEST_CASE("no adjacent duplicate punctuation after normalize") {
  NormalizedTranscript t = Normalize("stop!! really?? yes.. ,, a");
  for (std::size_t i = 1; i < t.size(); ++i) {
    if (IsPunct(t.tokens[i].kind))
      CHECK(t.tokens[i].kind != t.tokens[i - 1].kind);
  }
}
