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

#include "puncteval/align.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "puncteval/edit_distance.h"
#include "puncteval/normalize.h"

namespace puncteval {
namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
// Scores that differ by less than this are treated as tied; genuine score
// differences under the default scheme are multiples of 0.01.
constexpr double kTieEps = 1e-9;

// DP states: S_MATCH consumes one token from each side, S_DEL consumes from
// a only (gap on the right), S_INS consumes from b only (gap on the left).
enum State { S_MATCH = 0, S_DEL = 1, S_INS = 2 };

struct StateScores {
  double v[3];
};

// Picks the best predecessor state with priority match > del > ins on ties.
int BestState(const double* cand) {
  int best = 0;
  for (int s = 1; s < 3; ++s) {
    if (cand[s] > cand[best] + kTieEps) best = s;
  }
  return best;
}

}  // namespace

int Alignment::GapRunCount() const {
  int runs = 0;
  int prev = 0;  // 0 none, 1 gap-left, 2 gap-right
  for (const AlignmentColumn& col : columns) {
    int cur = !col.left ? 1 : (!col.right ? 2 : 0);
    if (cur != 0 && cur != prev) ++runs;
    prev = cur;
  }
  return runs;
}

double Alignment::MatchFraction(std::size_t denom) const {
  std::size_t matches = 0;
  for (const AlignmentColumn& col : columns) {
    if (col.left && col.right && *col.left == *col.right) ++matches;
  }
  return static_cast<double>(matches) / static_cast<double>(std::max<std::size_t>(denom, 1));
}

std::int64_t Levenshtein(std::span<const Token> a, std::span<const Token> b) {
  return LevenshteinTokens(a, b);
}

double SimilarityRatio(const NormalizedTranscript& online,
                       const NormalizedTranscript& stm) {
  NormalizedTranscript online_words = StripPunctuation(online);
  NormalizedTranscript stm_words = StripPunctuation(stm);
  if (stm_words.empty())
    throw EmptyReferenceError("stm transcript has no words");
  double distance = static_cast<double>(
      Levenshtein(online_words.tokens, stm_words.tokens));
  double ratio = 1.0 - distance / static_cast<double>(stm_words.size());
  return std::clamp(ratio, 0.0, 1.0);
}

std::optional<std::size_t> SelectBestTranscript(
    std::span<const NormalizedTranscript> candidates,
    const NormalizedTranscript& stm, double threshold) {
  std::optional<std::size_t> best;
  double best_ratio = threshold;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    double ratio = SimilarityRatio(candidates[i], stm);
    if (ratio > best_ratio) {
      best_ratio = ratio;
      best = i;
    }
  }
  return best;
}

Alignment GlobalAlign(std::span<const Token> a, std::span<const Token> b,
                      const ScoreScheme& scheme) {
  const std::size_t n = a.size(), m = b.size();
  Alignment result;
  if (n == 0 && m == 0) return result;

  // Rolling score rows plus full backpointer matrices (predecessor state per
  // cell and state).
  std::vector<StateScores> prev(m + 1), cur(m + 1);
  std::vector<std::uint8_t> bp((n + 1) * (m + 1) * 3);
  auto bp_at = [&bp, m](std::size_t i, std::size_t j, int s) -> std::uint8_t& {
    return bp[(i * (m + 1) + j) * 3 + s];
  };

  prev[0] = {{0.0, kNegInf, kNegInf}};
  for (std::size_t j = 1; j <= m; ++j) {
    prev[j].v[S_MATCH] = kNegInf;
    prev[j].v[S_DEL] = kNegInf;
    prev[j].v[S_INS] = j == 1 ? scheme.gap_open
                              : prev[j - 1].v[S_INS] + scheme.gap_extend;
    bp_at(0, j, S_INS) = S_INS;
  }

  for (std::size_t i = 1; i <= n; ++i) {
    cur[0].v[S_MATCH] = kNegInf;
    cur[0].v[S_INS] = kNegInf;
    cur[0].v[S_DEL] = i == 1 ? scheme.gap_open
                             : prev[0].v[S_DEL] + scheme.gap_extend;
    bp_at(i, 0, S_DEL) = S_DEL;

    for (std::size_t j = 1; j <= m; ++j) {
      double sub = a[i - 1] == b[j - 1] ? scheme.match : scheme.mismatch;

      double diag[3] = {prev[j - 1].v[S_MATCH], prev[j - 1].v[S_DEL],
                        prev[j - 1].v[S_INS]};
      int dbest = BestState(diag);
      cur[j].v[S_MATCH] = diag[dbest] + sub;
      bp_at(i, j, S_MATCH) = static_cast<std::uint8_t>(dbest);

      double up[3] = {prev[j].v[S_MATCH] + scheme.gap_open,
                      prev[j].v[S_DEL] + scheme.gap_extend,
                      prev[j].v[S_INS] + scheme.gap_open};
      int ubest = BestState(up);
      cur[j].v[S_DEL] = up[ubest];
      bp_at(i, j, S_DEL) = static_cast<std::uint8_t>(ubest);

      double left[3] = {cur[j - 1].v[S_MATCH] + scheme.gap_open,
                        cur[j - 1].v[S_DEL] + scheme.gap_open,
                        cur[j - 1].v[S_INS] + scheme.gap_extend};
      int lbest = BestState(left);
      cur[j].v[S_INS] = left[lbest];
      bp_at(i, j, S_INS) = static_cast<std::uint8_t>(lbest);
    }
    std::swap(prev, cur);
  }

  const double* fin = prev[m].v;
  int state = BestState(fin);
  result.score = fin[state];

  // Backtrace. Scores are no longer needed; the stored predecessor states
  // fully determine the path.
  std::size_t i = n, j = m;
  while (i > 0 || j > 0) {
    int came_from = bp_at(i, j, state);
    AlignmentColumn col;
    if (state == S_MATCH) {
      col.left = a[i - 1];
      col.right = b[j - 1];
      --i;
      --j;
    } else if (state == S_DEL) {
      col.left = a[i - 1];
      --i;
    } else {
      col.right = b[j - 1];
      --j;
    }
    result.columns.push_back(std::move(col));
    state = came_from;
  }
  std::reverse(result.columns.begin(), result.columns.end());
  return result;
}

Alignment GlobalAlignChars(std::string_view a, std::string_view b,
                           const ScoreScheme& scheme) {
  auto to_tokens = [](std::string_view s) {
    std::vector<Token> out;
    out.reserve(s.size());
    for (char c : s) out.push_back(WordToken(std::string(1, c)));
    return out;
  };
  std::vector<Token> ta = to_tokens(a), tb = to_tokens(b);
  return GlobalAlign(ta, tb, scheme);
}

NormalizedTranscript TransferPunctuation(const NormalizedTranscript& punctuated,
                                         const NormalizedTranscript& stm_words,
                                         const ScoreScheme& scheme,
                                         double min_match_fraction) {
  for (const Token& t : stm_words.tokens) {
    if (t.kind != TokenKind::kWord)
      throw std::invalid_argument("stm word stream contains punctuation");
  }
  NormalizedTranscript online_words = StripPunctuation(punctuated);
  if (online_words.empty() && stm_words.empty()) return {};

  Alignment alignment =
      GlobalAlign(online_words.tokens, stm_words.tokens, scheme);
  if (alignment.MatchFraction(stm_words.size()) < min_match_fraction)
    throw UnusablePairError("aligned match fraction below usability");

  // Map each online word index to the stm word index it aligned with.
  std::vector<std::int64_t> online_to_stm(online_words.size(), -1);
  std::size_t li = 0, ri = 0;
  for (const AlignmentColumn& col : alignment.columns) {
    if (col.left && col.right) online_to_stm[li] = static_cast<std::int64_t>(ri);
    if (col.left) ++li;
    if (col.right) ++ri;
  }

  // Collect the marks attached after each stm word.
  std::vector<std::vector<Token>> marks_after(stm_words.size());
  std::int64_t last_online_word = -1;
  std::size_t online_index = 0;
  for (const Token& t : punctuated.tokens) {
    if (t.kind == TokenKind::kWord) {
      last_online_word = static_cast<std::int64_t>(online_index++);
      continue;
    }
    if (last_online_word < 0) continue;  // transcript-initial mark
    std::int64_t stm_index = online_to_stm[last_online_word];
    if (stm_index < 0) continue;  // anchor word aligned to a gap
    marks_after[stm_index].push_back(t);
  }

  NormalizedTranscript out;
  out.tokens.reserve(stm_words.size() + punctuated.PunctCount());
  for (std::size_t j = 0; j < stm_words.size(); ++j) {
    out.tokens.push_back(stm_words.tokens[j]);
    for (Token& mark : marks_after[j]) out.tokens.push_back(std::move(mark));
  }
  return out;
}

}  // namespace puncteval
