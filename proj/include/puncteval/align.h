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

#ifndef PUNCTEVAL_ALIGN_H_
#define PUNCTEVAL_ALIGN_H_

#include <optional>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "puncteval/token.h"

namespace puncteval {

class EmptyReferenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when an online/stm pair is too dissimilar to transfer punctuation.
class UnusablePairError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Affine gap scoring. Opening a gap run costs gap_open; every further column
// in the same run costs gap_extend.
struct ScoreScheme {
  double match = 1.0;
  double mismatch = -1.0;
  double gap_open = -5.0;
  double gap_extend = -0.01;
};

// One alignment column; nullopt marks a gap. Never both sides at once.
struct AlignmentColumn {
  std::optional<Token> left;
  std::optional<Token> right;
};

struct Alignment {
  std::vector<AlignmentColumn> columns;
  double score = 0.0;

  // Number of maximal gap runs (runs on the left and right sides counted
  // separately, matching how the affine scheme charges them).
  int GapRunCount() const;
  // Columns where both sides carry the same token, relative to denom.
  double MatchFraction(std::size_t denom) const;
};

// Minimal insert/delete/substitute edits turning a into b.
std::int64_t Levenshtein(std::span<const Token> a, std::span<const Token> b);

// 1 - distance/len(stm), clamped to [0, 1], over punctuation-stripped inputs.
// Throws EmptyReferenceError when the stripped stm transcript is empty.
double SimilarityRatio(const NormalizedTranscript& online,
                       const NormalizedTranscript& stm);

// Index of the candidate with the highest similarity ratio, provided that
// ratio exceeds threshold; nullopt otherwise (the recording is discarded).
std::optional<std::size_t> SelectBestTranscript(
    std::span<const NormalizedTranscript> candidates,
    const NormalizedTranscript& stm, double threshold = 0.6);

// Maximal-score global alignment under the affine scheme (three-state
// dynamic program). Ties break match/substitute over gap-in-right over
// gap-in-left during backtrace.
Alignment GlobalAlign(std::span<const Token> a, std::span<const Token> b,
                      const ScoreScheme& scheme = {});

// Character-level diagnostic alignment of two raw strings.
Alignment GlobalAlignChars(std::string_view a, std::string_view b,
                           const ScoreScheme& scheme = {});

// Re-inserts the punctuation of `punctuated` into `stm_words` using a
// word-level global alignment: every punctuation mark attaches after the stm
// word aligned to its preceding online word; marks whose anchor aligned to a
// gap (or that lead the transcript) are dropped. The output word stream is
// exactly stm_words. Throws UnusablePairError when fewer than
// min_match_fraction of the stm words have matching aligned words.
NormalizedTranscript TransferPunctuation(const NormalizedTranscript& punctuated,
                                         const NormalizedTranscript& stm_words,
                                         const ScoreScheme& scheme = {},
                                         double min_match_fraction = 0.5);

}  // namespace puncteval

#endif  // PUNCTEVAL_ALIGN_H_
