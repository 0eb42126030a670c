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
//
// Brute-force oracles for the test and acceptance suites. Everything here is
// written independently of the library's dynamic programs: plain textbook
// recursions and enumerations, feasible only on small inputs.

#ifndef PUNCTEVAL_TESTS_ORACLES_H_
#define PUNCTEVAL_TESTS_ORACLES_H_

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "puncteval/align.h"
#include "puncteval/token.h"

namespace puncteval::oracle {

// Textbook O(n*m) Levenshtein distance (independent of the bit-parallel
// implementation in the library).
std::int64_t LevenshteinDp(std::span<const Token> a, std::span<const Token> b);
std::int64_t LevenshteinDpChars(std::string_view a, std::string_view b);

// Maximum affine-gap global alignment score by enumerating every alignment.
double BestAlignmentScore(std::span<const Token> a, std::span<const Token> b,
                          const ScoreScheme& scheme);

// Rule set for the edit-path enumerator.
struct DlevScheme {
  bool two_class = false;               // only `target` forms the slot class
  TokenKind target = TokenKind::kComma;
  bool allow_transpose = true;
};

// Slot-edit breakdown of one path: insertions, deletions, substitutions,
// swaps.
struct DlevBreakdown {
  std::int64_t insertions = 0;
  std::int64_t deletions = 0;
  std::int64_t substitutions = 0;
  std::int64_t swaps = 0;

  auto operator<=>(const DlevBreakdown&) const = default;

  DlevBreakdown Mirrored() const {
    return DlevBreakdown{deletions, insertions, substitutions, swaps};
  }
};

struct DlevOptimum {
  double min_cost = 0.0;
  // Maximum punctuation-edit count among paths within 1e-9 of min_cost.
  std::int64_t max_punct_edits = 0;
  std::size_t paths = 0;
  // Breakdowns of every (min cost, max slot edits) path, sorted and deduped.
  std::vector<DlevBreakdown> optimal_breakdowns;
};

// Enumerates every legal edit path and reports the minimum total cost and
// the maximum slot-edit count among minimum-cost paths.
DlevOptimum EnumerateDlevPaths(std::span<const Token> ref,
                               std::span<const Token> hyp,
                               const DlevScheme& scheme);

// Random word/punctuation transcripts over a tiny word alphabet.
NormalizedTranscript RandomTranscript(std::mt19937& rng, std::size_t max_len,
                                      double punct_prob);

}  // namespace puncteval::oracle

#endif  // PUNCTEVAL_TESTS_ORACLES_H_
