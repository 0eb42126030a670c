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

#ifndef PUNCTEVAL_METRICS_H_
#define PUNCTEVAL_METRICS_H_

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "puncteval/token.h"

namespace puncteval {

enum class EditKind { kMatch, kInsert, kDelete, kSubstitute, kTranspose };

// One edit. Match/Substitute carry ref and hyp tokens, Insert carries hyp
// only, Delete carries ref only. Transpose carries both adjacent pairs (in
// original order); crosswise members that differ were substituted as part of
// the swap.
struct EditOp {
  EditKind kind;
  std::optional<Token> ref;
  std::optional<Token> hyp;
  std::optional<Token> ref2;
  std::optional<Token> hyp2;
};

struct EditPath {
  std::vector<EditOp> ops;
  double total_cost = 0.0;
};

// Punctuation-edit tallies from one edit path. `swaps` counts swap events;
// swap_ref_tokens/swap_hyp_tokens count the punctuation tokens each side
// contributed to swaps whose crosswise member matched (swapped-but-correct
// marks), which keeps C + S + D + swap_ref_tokens equal to the reference
// punctuation total.
struct PunctCounts {
  std::int64_t correct = 0;
  std::int64_t insertions = 0;
  std::int64_t deletions = 0;
  std::int64_t substitutions = 0;
  std::int64_t swaps = 0;
  std::int64_t swap_ref_tokens = 0;
  std::int64_t swap_hyp_tokens = 0;

  std::int64_t Errors() const {
    return insertions + deletions + substitutions + swaps;
  }
  std::int64_t RefTotal() const {
    return correct + substitutions + deletions + swap_ref_tokens;
  }
  std::int64_t HypTotal() const {
    return correct + substitutions + insertions + swap_hyp_tokens;
  }
};

// Word-level tallies from the same path (not part of the slot error rate).
struct WordCounts {
  std::int64_t correct = 0;
  std::int64_t insertions = 0;
  std::int64_t deletions = 0;
  std::int64_t substitutions = 0;
  std::int64_t swaps = 0;
};

struct Prf {
  double precision = 0.0;
  double recall = 0.0;
  double f = 0.0;
};

// Class-constrained minimal edit path between ref and hyp: matches cost 0,
// word edits cost 1, punctuation edits cost 0.999, word<->punctuation
// substitution is forbidden, and adjacent transpositions (optimal string
// alignment style) may substitute their crosswise members. The 0.999 bias
// selects the path with the most punctuation edits among minimal-edit paths.
EditPath DlevEditPath(const NormalizedTranscript& ref,
                      const NormalizedTranscript& hyp);

// Same dynamic program with a two-class scheme: only `target` marks form the
// slot class; substitutions between a target mark and any other token are
// allowed at slot cost and count as substitution errors.
EditPath PunctSpecificEditPath(const NormalizedTranscript& ref,
                               const NormalizedTranscript& hyp,
                               TokenKind target);

PunctCounts CountPunctEdits(const EditPath& path);
WordCounts CountWordEdits(const EditPath& path);

// Punctuation edits counted under the two-class scheme for `target`.
PunctCounts CountTargetEdits(const EditPath& path, TokenKind target);

// (I + D + S + W) / reference punctuation count, with a denominator of 1
// when the reference carries no punctuation. With csd_denominator the
// denominator is C + S + D (floored at 1) instead of the reference count.
double DlevSer(const NormalizedTranscript& ref, const NormalizedTranscript& hyp,
               bool csd_denominator = false);

double PunctSpecificDlevSer(const NormalizedTranscript& ref,
                            const NormalizedTranscript& hyp, TokenKind target);

// (I + D + S) / (C + S + D), denominator floored at 1. Expects counts from a
// path without swaps.
double GenericSer(const PunctCounts& counts);

Prf PrecisionRecallF(const PunctCounts& counts);

// Word error rate in percent over punctuation-stripped streams (or the raw
// token streams with include_punct). Denominator floored at 1.
double Wer(const NormalizedTranscript& ref, const NormalizedTranscript& hyp,
           bool include_punct = false);

// Character error rate in percent over space-joined punctuation-stripped
// word streams.
double Cer(const NormalizedTranscript& ref, const NormalizedTranscript& hyp);

// Everything measured on one reference/hypothesis segment pair.
struct SegmentStats {
  PunctCounts counts;
  std::int64_t ref_puncts = 0;
  std::int64_t hyp_puncts = 0;
  std::int64_t word_edits = 0;
  std::int64_t ref_words = 0;
  std::int64_t char_edits = 0;
  std::int64_t ref_chars = 0;
  // Per-kind two-class numerators and reference target counts.
  std::map<TokenKind, std::pair<std::int64_t, std::int64_t>> per_punct;
};

struct ScoreOptions {
  bool include_punct_in_wer = false;
  bool csd_denominator = false;
  std::vector<TokenKind> per_punct_kinds = {
      TokenKind::kComma, TokenKind::kPeriod, TokenKind::kQuestion};
};

SegmentStats ScoreSegment(const NormalizedTranscript& ref,
                          const NormalizedTranscript& hyp,
                          const ScoreOptions& options = {});

struct MetricsReport {
  double wer = 0.0;
  double cer = 0.0;
  double precision = 0.0;
  double recall = 0.0;
  double f = 0.0;
  double dlev_ser = 0.0;
  std::map<TokenKind, double> per_punct_ser;
  PunctCounts counts;
  std::int64_t ref_puncts = 0;
  std::int64_t hyp_puncts = 0;
  std::int64_t word_edits = 0;
  std::int64_t ref_words = 0;
  std::int64_t char_edits = 0;
  std::int64_t ref_chars = 0;
  std::int64_t segments = 0;
};

// Corpus-level micro-average: error sums over denominator sums, denominators
// floored at 1 at the corpus level only. Throws std::invalid_argument on an
// empty list.
MetricsReport Aggregate(std::span<const SegmentStats> per_segment,
                        bool csd_denominator = false);

}  // namespace puncteval

#endif  // PUNCTEVAL_METRICS_H_
