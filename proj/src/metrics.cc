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

#include "puncteval/metrics.h"

#include <algorithm>
#include <functional>
#include <unordered_map>

#include "puncteval/edit_distance.h"
#include "puncteval/normalize.h"
#include "puncteval/parallel.h"

namespace puncteval {
namespace {

constexpr double kSlotCost = 0.999;
constexpr double kWordCost = 1.0;

// Preprocessed view of one ref/hyp pair under a slot scheme. In the full
// scheme every punctuation mark is a slot and word<->slot substitution is
// forbidden; in a two-class scheme only the target kind is a slot and
// substitutions between a slot and anything else are allowed at slot cost.
struct DlevProblem {
  std::vector<std::uint32_t> ref_ids, hyp_ids;
  std::vector<std::uint8_t> ref_slot, hyp_slot;
  bool cross_sub_allowed = false;
  double forbidden = 0.0;

  double SubCost(std::size_t i, std::size_t j) const {
    if (ref_ids[i] == hyp_ids[j]) return 0.0;
    bool rs = ref_slot[i], hs = hyp_slot[j];
    if (rs && hs) return kSlotCost;
    if (!rs && !hs) return kWordCost;
    return cross_sub_allowed ? kSlotCost : forbidden;
  }
  double DelCost(std::size_t i) const {
    return ref_slot[i] ? kSlotCost : kWordCost;
  }
  double InsCost(std::size_t j) const {
    return hyp_slot[j] ? kSlotCost : kWordCost;
  }
  // Swap of ref pair (i, i+1) with hyp pair (j, j+1); crosswise members that
  // differ are substituted as part of the swap.
  double TransCost(std::size_t i, std::size_t j) const {
    double swap_cost =
        (ref_slot[i] || ref_slot[i + 1] || hyp_slot[j] || hyp_slot[j + 1])
            ? kSlotCost
            : kWordCost;
    return swap_cost + SubCost(i, j + 1) + SubCost(i + 1, j);
  }
};

DlevProblem MakeProblem(const NormalizedTranscript& ref,
                        const NormalizedTranscript& hyp,
                        const std::function<bool(const Token&)>& is_slot,
                        bool cross_sub_allowed) {
  DlevProblem p;
  p.cross_sub_allowed = cross_sub_allowed;
  p.forbidden =
      2.0 * static_cast<double>(ref.size() + hyp.size()) + 16.0;
  std::unordered_map<std::string, std::uint32_t> ids;
  auto map_seq = [&ids, &is_slot](const std::vector<Token>& seq,
                                  std::vector<std::uint32_t>* out_ids,
                                  std::vector<std::uint8_t>* out_slot) {
    out_ids->reserve(seq.size());
    out_slot->reserve(seq.size());
    for (const Token& t : seq) {
      std::string key(1, static_cast<char>('0' + static_cast<int>(t.kind)));
      key += t.surface;
      auto [it, unused] =
          ids.try_emplace(std::move(key), static_cast<std::uint32_t>(ids.size()));
      out_ids->push_back(it->second);
      out_slot->push_back(is_slot(t) ? 1 : 0);
    }
  };
  map_seq(ref.tokens, &p.ref_ids, &p.ref_slot);
  map_seq(hyp.tokens, &p.hyp_ids, &p.hyp_slot);
  return p;
}

// Backpointer codes, in tie-break priority order.
enum Move : std::uint8_t { kDiag = 0, kTrans = 1, kDel = 2, kIns = 3 };

EditPath RunDlev(const NormalizedTranscript& ref,
                 const NormalizedTranscript& hyp, const DlevProblem& p) {
  const std::size_t n = ref.size(), m = hyp.size();

  // The dynamic program runs on integer millicosts (999 per slot edit, 1000
  // per word edit), so equal-cost ties are exact and tie-breaking never
  // depends on floating-point noise. The forbidden cost merely has to beat
  // every legal path.
  constexpr std::int64_t kSlotMilli = 999;
  constexpr std::int64_t kWordMilli = 1000;
  const std::int64_t forbidden_milli =
      2000 * static_cast<std::int64_t>(n + m) + 16000;
  const std::int64_t cross_milli =
      p.cross_sub_allowed ? kSlotMilli : forbidden_milli;
  const std::int64_t sub_tab[2][2] = {{kWordMilli, cross_milli},
                                      {cross_milli, kSlotMilli}};

  const std::uint32_t* rid = p.ref_ids.data();
  const std::uint32_t* hid = p.hyp_ids.data();
  const std::uint8_t* rslot = p.ref_slot.data();
  const std::uint8_t* hslot = p.hyp_slot.data();

  std::vector<std::int64_t> ins_cost(m);
  for (std::size_t j = 0; j < m; ++j)
    ins_cost[j] = hslot[j] ? kSlotMilli : kWordMilli;

  std::vector<std::int64_t> c2(m + 1), c1(m + 1), c0(m + 1);
  std::vector<std::uint8_t> bp((n + 1) * (m + 1));

  c1[0] = 0.0;
  {
    std::uint8_t* bp_row = bp.data();
    for (std::size_t j = 1; j <= m; ++j) {
      c1[j] = c1[j - 1] + ins_cost[j - 1];
      bp_row[j] = kIns;
    }
  }

  for (std::size_t i = 1; i <= n; ++i) {
    std::uint8_t* bp_row = bp.data() + i * (m + 1);
    const std::uint32_t rid1 = rid[i - 1];
    const std::uint8_t rs1 = rslot[i - 1];
    const std::int64_t del1 = rs1 ? kSlotMilli : kWordMilli;
    const std::uint32_t rid2 = i >= 2 ? rid[i - 2] : 0;
    const std::uint8_t rs2 = i >= 2 ? rslot[i - 2] : 0;

    c0[0] = c1[0] + del1;
    bp_row[0] = kDel;

    const std::int64_t* __restrict c1p = c1.data();
    const std::int64_t* __restrict c2p = c2.data();
    std::int64_t* __restrict c0p = c0.data();
    const std::int64_t* __restrict insp = ins_cost.data();

    // Candidates are examined in tie-break priority order; a lower-priority
    // move must be strictly cheaper to displace the current one. The first
    // column and first row never have a transposition.
    std::size_t j = 1;
    if (m >= 1) {
      const std::uint32_t hj = hid[0];
      const std::uint8_t hs = hslot[0];
      std::int64_t best = c1p[0] + (rid1 == hj ? 0 : sub_tab[rs1][hs]);
      std::uint8_t move = kDiag;
      std::int64_t del = c1p[1] + del1;
      if (del < best) {
        best = del;
        move = kDel;
      }
      std::int64_t ins = c0p[0] + insp[0];
      if (ins < best) {
        best = ins;
        move = kIns;
      }
      c0p[1] = best;
      bp_row[1] = move;
      j = 2;
    }
    for (; j <= m; ++j) {
      const std::uint32_t hj = hid[j - 1];
      const std::uint8_t hs = hslot[j - 1];

      std::int64_t best = c1p[j - 1] + (rid1 == hj ? 0 : sub_tab[rs1][hs]);
      std::uint8_t move = kDiag;

      if (i >= 2) {
        const std::uint8_t hs2 = hslot[j - 2];
        std::int64_t cs1 = rid2 == hj ? 0 : sub_tab[rs2][hs];
        std::int64_t cs2 = rid1 == hid[j - 2] ? 0 : sub_tab[rs1][hs2];
        std::int64_t swap_cost = (rs1 | rs2 | hs | hs2) ? kSlotMilli : kWordMilli;
        std::int64_t t = c2p[j - 2] + swap_cost + cs1 + cs2;
        if (t < best) {
          best = t;
          move = kTrans;
        }
      }
      std::int64_t del = c1p[j] + del1;
      if (del < best) {
        best = del;
        move = kDel;
      }
      std::int64_t ins = c0p[j - 1] + insp[j - 1];
      if (ins < best) {
        best = ins;
        move = kIns;
      }
      c0p[j] = best;
      bp_row[j] = move;
    }
    std::swap(c2, c1);
    std::swap(c1, c0);
  }
  auto bp_at = [&bp, m](std::size_t i, std::size_t j) -> std::uint8_t& {
    return bp[i * (m + 1) + j];
  };

  EditPath path;
  std::size_t i = n, j = m;
  while (i > 0 || j > 0) {
    EditOp op;
    switch (bp_at(i, j)) {
      case kDiag: {
        double cost = p.SubCost(i - 1, j - 1);
        op.kind = cost == 0.0 ? EditKind::kMatch : EditKind::kSubstitute;
        op.ref = ref.tokens[i - 1];
        op.hyp = hyp.tokens[j - 1];
        path.total_cost += cost;
        --i;
        --j;
        break;
      }
      case kTrans: {
        op.kind = EditKind::kTranspose;
        op.ref = ref.tokens[i - 2];
        op.ref2 = ref.tokens[i - 1];
        op.hyp = hyp.tokens[j - 2];
        op.hyp2 = hyp.tokens[j - 1];
        path.total_cost += p.TransCost(i - 2, j - 2);
        i -= 2;
        j -= 2;
        break;
      }
      case kDel: {
        op.kind = EditKind::kDelete;
        op.ref = ref.tokens[i - 1];
        path.total_cost += p.DelCost(i - 1);
        --i;
        break;
      }
      case kIns: {
        op.kind = EditKind::kInsert;
        op.hyp = hyp.tokens[j - 1];
        path.total_cost += p.InsCost(j - 1);
        --j;
        break;
      }
    }
    path.ops.push_back(std::move(op));
  }
  std::reverse(path.ops.begin(), path.ops.end());
  return path;
}

struct EditTally {
  PunctCounts punct;
  WordCounts word;
};

EditTally CountEdits(const EditPath& path,
                     const std::function<bool(const Token&)>& is_slot) {
  EditTally tally;
  for (const EditOp& op : path.ops) {
    switch (op.kind) {
      case EditKind::kMatch:
        if (is_slot(*op.ref))
          ++tally.punct.correct;
        else
          ++tally.word.correct;
        break;
      case EditKind::kInsert:
        if (is_slot(*op.hyp))
          ++tally.punct.insertions;
        else
          ++tally.word.insertions;
        break;
      case EditKind::kDelete:
        if (is_slot(*op.ref))
          ++tally.punct.deletions;
        else
          ++tally.word.deletions;
        break;
      case EditKind::kSubstitute:
        if (is_slot(*op.ref) || is_slot(*op.hyp))
          ++tally.punct.substitutions;
        else
          ++tally.word.substitutions;
        break;
      case EditKind::kTranspose: {
        bool slot_involved = is_slot(*op.ref) || is_slot(*op.ref2) ||
                             is_slot(*op.hyp) || is_slot(*op.hyp2);
        if (slot_involved)
          ++tally.punct.swaps;
        else
          ++tally.word.swaps;
        // Crosswise pairs: ref<->hyp2 and ref2<->hyp.
        auto cross = [&](const Token& r, const Token& h) {
          if (r == h) {
            if (is_slot(r)) {
              ++tally.punct.swap_ref_tokens;
              ++tally.punct.swap_hyp_tokens;
            }
            return;
          }
          if (is_slot(r) || is_slot(h))
            ++tally.punct.substitutions;
          else
            ++tally.word.substitutions;
        };
        cross(*op.ref, *op.hyp2);
        cross(*op.ref2, *op.hyp);
        break;
      }
    }
  }
  return tally;
}

bool IsPunctToken(const Token& t) { return IsPunct(t.kind); }

}  // namespace

EditPath DlevEditPath(const NormalizedTranscript& ref,
                      const NormalizedTranscript& hyp) {
  DlevProblem p = MakeProblem(ref, hyp, IsPunctToken, false);
  return RunDlev(ref, hyp, p);
}

EditPath PunctSpecificEditPath(const NormalizedTranscript& ref,
                               const NormalizedTranscript& hyp,
                               TokenKind target) {
  DlevProblem p = MakeProblem(
      ref, hyp, [target](const Token& t) { return t.kind == target; }, true);
  return RunDlev(ref, hyp, p);
}

PunctCounts CountPunctEdits(const EditPath& path) {
  return CountEdits(path, IsPunctToken).punct;
}

WordCounts CountWordEdits(const EditPath& path) {
  return CountEdits(path, IsPunctToken).word;
}

PunctCounts CountTargetEdits(const EditPath& path, TokenKind target) {
  return CountEdits(path, [target](const Token& t) { return t.kind == target; })
      .punct;
}

double DlevSer(const NormalizedTranscript& ref, const NormalizedTranscript& hyp,
               bool csd_denominator) {
  PunctCounts counts = CountPunctEdits(DlevEditPath(ref, hyp));
  std::int64_t denom =
      csd_denominator
          ? counts.correct + counts.substitutions + counts.deletions
          : static_cast<std::int64_t>(ref.PunctCount());
  return static_cast<double>(counts.Errors()) /
         static_cast<double>(std::max<std::int64_t>(denom, 1));
}

double PunctSpecificDlevSer(const NormalizedTranscript& ref,
                            const NormalizedTranscript& hyp,
                            TokenKind target) {
  PunctCounts counts =
      CountTargetEdits(PunctSpecificEditPath(ref, hyp, target), target);
  std::int64_t denom = static_cast<std::int64_t>(ref.PunctCountOf(target));
  return static_cast<double>(counts.Errors()) /
         static_cast<double>(std::max<std::int64_t>(denom, 1));
}

double GenericSer(const PunctCounts& counts) {
  std::int64_t denom =
      counts.correct + counts.substitutions + counts.deletions;
  return static_cast<double>(counts.insertions + counts.deletions +
                             counts.substitutions) /
         static_cast<double>(std::max<std::int64_t>(denom, 1));
}

Prf PrecisionRecallF(const PunctCounts& counts) {
  Prf out;
  std::int64_t hyp_total = counts.HypTotal();
  std::int64_t ref_total = counts.RefTotal();
  if (hyp_total > 0)
    out.precision =
        static_cast<double>(counts.correct) / static_cast<double>(hyp_total);
  if (ref_total > 0)
    out.recall =
        static_cast<double>(counts.correct) / static_cast<double>(ref_total);
  if (out.precision + out.recall > 0.0)
    out.f = 2.0 * out.precision * out.recall / (out.precision + out.recall);
  return out;
}

double Wer(const NormalizedTranscript& ref, const NormalizedTranscript& hyp,
           bool include_punct) {
  NormalizedTranscript r = include_punct ? ref : StripPunctuation(ref);
  NormalizedTranscript h = include_punct ? hyp : StripPunctuation(hyp);
  std::int64_t distance = LevenshteinTokens(r.tokens, h.tokens);
  std::int64_t denom = std::max<std::int64_t>(r.size(), 1);
  return 100.0 * static_cast<double>(distance) / static_cast<double>(denom);
}

double Cer(const NormalizedTranscript& ref, const NormalizedTranscript& hyp) {
  std::string r = StripPunctuation(ref).Render();
  std::string h = StripPunctuation(hyp).Render();
  std::int64_t distance = LevenshteinChars(r, h);
  std::int64_t denom = std::max<std::int64_t>(r.size(), 1);
  return 100.0 * static_cast<double>(distance) / static_cast<double>(denom);
}

SegmentStats ScoreSegment(const NormalizedTranscript& ref,
                          const NormalizedTranscript& hyp,
                          const ScoreOptions& options) {
  SegmentStats stats;
  stats.ref_puncts = static_cast<std::int64_t>(ref.PunctCount());
  stats.hyp_puncts = static_cast<std::int64_t>(hyp.PunctCount());

  NormalizedTranscript ref_words =
      options.include_punct_in_wer ? ref : StripPunctuation(ref);
  NormalizedTranscript hyp_words =
      options.include_punct_in_wer ? hyp : StripPunctuation(hyp);
  stats.word_edits = LevenshteinTokens(ref_words.tokens, hyp_words.tokens);
  stats.ref_words = static_cast<std::int64_t>(ref_words.size());

  std::string ref_chars = StripPunctuation(ref).Render();
  std::string hyp_chars = StripPunctuation(hyp).Render();
  stats.char_edits = LevenshteinChars(ref_chars, hyp_chars);
  stats.ref_chars = static_cast<std::int64_t>(ref_chars.size());

  // The overall path and each per-kind path are independent dynamic
  // programs; on large segments they run on the worker pool.
  std::vector<std::pair<std::int64_t, std::int64_t>> per_kind(
      options.per_punct_kinds.size());
  auto run_pass = [&](std::size_t task) {
    if (task == 0) {
      stats.counts = CountPunctEdits(DlevEditPath(ref, hyp));
      return;
    }
    TokenKind kind = options.per_punct_kinds[task - 1];
    PunctCounts counts =
        CountTargetEdits(PunctSpecificEditPath(ref, hyp, kind), kind);
    per_kind[task - 1] = {counts.Errors(),
                          static_cast<std::int64_t>(ref.PunctCountOf(kind))};
  };
  std::size_t tasks = 1 + options.per_punct_kinds.size();
  if (ref.size() + hyp.size() >= 4096) {
    ParallelFor(tasks, run_pass);
  } else {
    for (std::size_t t = 0; t < tasks; ++t) run_pass(t);
  }
  for (std::size_t k = 0; k < options.per_punct_kinds.size(); ++k)
    stats.per_punct[options.per_punct_kinds[k]] = per_kind[k];
  return stats;
}

MetricsReport Aggregate(std::span<const SegmentStats> per_segment,
                        bool csd_denominator) {
  if (per_segment.empty())
    throw std::invalid_argument("cannot aggregate an empty segment list");

  MetricsReport report;
  std::int64_t ser_denom = 0;
  std::map<TokenKind, std::pair<std::int64_t, std::int64_t>> per_punct;
  for (const SegmentStats& seg : per_segment) {
    report.counts.correct += seg.counts.correct;
    report.counts.insertions += seg.counts.insertions;
    report.counts.deletions += seg.counts.deletions;
    report.counts.substitutions += seg.counts.substitutions;
    report.counts.swaps += seg.counts.swaps;
    report.counts.swap_ref_tokens += seg.counts.swap_ref_tokens;
    report.counts.swap_hyp_tokens += seg.counts.swap_hyp_tokens;
    report.ref_puncts += seg.ref_puncts;
    report.hyp_puncts += seg.hyp_puncts;
    report.word_edits += seg.word_edits;
    report.ref_words += seg.ref_words;
    report.char_edits += seg.char_edits;
    report.ref_chars += seg.ref_chars;
    ser_denom += csd_denominator
                     ? seg.counts.correct + seg.counts.substitutions +
                           seg.counts.deletions
                     : seg.ref_puncts;
    for (const auto& [kind, pair] : seg.per_punct) {
      per_punct[kind].first += pair.first;
      per_punct[kind].second += pair.second;
    }
  }
  report.segments = static_cast<std::int64_t>(per_segment.size());

  report.wer = 100.0 * static_cast<double>(report.word_edits) /
               static_cast<double>(std::max<std::int64_t>(report.ref_words, 1));
  report.cer = 100.0 * static_cast<double>(report.char_edits) /
               static_cast<double>(std::max<std::int64_t>(report.ref_chars, 1));
  report.dlev_ser =
      static_cast<double>(report.counts.Errors()) /
      static_cast<double>(std::max<std::int64_t>(ser_denom, 1));
  for (const auto& [kind, pair] : per_punct) {
    report.per_punct_ser[kind] =
        static_cast<double>(pair.first) /
        static_cast<double>(std::max<std::int64_t>(pair.second, 1));
  }
  Prf prf = PrecisionRecallF(report.counts);
  report.precision = prf.precision;
  report.recall = prf.recall;
  report.f = prf.f;
  return report;
}

}  // namespace puncteval
