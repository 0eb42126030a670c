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

#ifndef PUNCTEVAL_NORMALIZE_H_
#define PUNCTEVAL_NORMALIZE_H_

#include <stdexcept>
#include <string>
#include <string_view>

#include "puncteval/token.h"

namespace puncteval {

class NormalizeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Removes non-nested bracketed spans ("[Laughter]", "[Music]", speaker tags)
// and collapses the surrounding whitespace to single spaces.
std::string StripTags(std::string_view text);

// Replaces rare special characters with their spoken form, surrounded by
// spaces: ae, square, degree, percent, times.
std::string SubstituteSpecials(std::string_view text);

// Spells out every maximal digit run as English words. Handles ordinal
// suffixes (21st -> twenty first), decimal points inside digit runs
// (3.14 -> three point one four) and leading-zero runs (007 -> zero zero
// seven). Spelled numbers use spaces where hyphens would normally appear.
// Throws NormalizeError for integer runs longer than nine digits.
std::string NumberToWords(std::string_view text);

// Maps all punctuation onto {, . ? ! '}: colon/semicolon become commas,
// ellipses and interpuncts become periods, acronym-internal dots are removed,
// contractions are split before the apostrophe, the four marks are detached
// from adjacent words, and every other punctuation character is dropped.
std::string CanonicalizePunct(std::string_view text);

// Full cleanup pipeline: StripTags, SubstituteSpecials, NumberToWords,
// CanonicalizePunct, lowercasing, then whitespace tokenization with
// classification. Adjacent punctuation tokens of identical kind collapse to
// one. Propagates NumberToWords errors.
NormalizedTranscript Normalize(std::string_view text);

// Classifies an already-normalized line (as produced by Render()) back into
// tokens. Throws NormalizeError if a token is neither a single mark nor a
// lowercase word over [a-z'].
NormalizedTranscript TokenizeNormalized(std::string_view text);

// Drops all punctuation tokens, preserving word order.
NormalizedTranscript StripPunctuation(const NormalizedTranscript& t);

}  // namespace puncteval

#endif  // PUNCTEVAL_NORMALIZE_H_
