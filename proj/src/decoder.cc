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

#include "puncteval/decoder.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "puncteval/normalize.h"

namespace puncteval {
namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
// Probabilities below this are treated as impossible.
constexpr double kMinProb = 1e-300;

double LogAdd(double a, double b) {
  if (a == kNegInf) return b;
  if (b == kNegInf) return a;
  double hi = std::max(a, b), lo = std::min(a, b);
  return hi + std::log1p(std::exp(lo - hi));
}

bool IsMarkChar(char c) { return c == ',' || c == '.' || c == '?' || c == '!'; }

}  // namespace

char CtcSymbolChar(int index) {
  if (index == kCtcBlank || index < 0 || index >= kCtcSymbols)
    throw DecodeError("symbol index " + std::to_string(index) +
                      " has no character");
  if (index == 1) return ' ';
  if (index == 2) return '\'';
  if (index <= 28) return static_cast<char>('a' + index - 3);
  switch (index) {
    case 29:
      return ',';
    case 30:
      return '.';
    case 31:
      return '?';
    default:
      return index == 32 ? '!' : '\0';
  }
}

int CtcCharSymbol(char c) {
  if (c == ' ') return 1;
  if (c == '\'') return 2;
  if (c >= 'a' && c <= 'z') return c - 'a' + 3;
  switch (c) {
    case ',':
      return 29;
    case '.':
      return 30;
    case '?':
      return 31;
    case '!':
      return 32;
    default:
      return -1;
  }
}

std::string CollapseCtc(std::span<const int> labels) {
  std::string out;
  int prev = -1;
  for (int label : labels) {
    if (label < 0 || label >= kCtcSymbols)
      throw DecodeError("CTC label " + std::to_string(label) +
                        " out of range");
    if (label == prev) continue;
    prev = label;
    if (label != kCtcBlank) out += CtcSymbolChar(label);
  }
  return out;
}

Posteriorgram Posteriorgram::FromRows(
    const std::vector<std::vector<double>>& rows) {
  Posteriorgram post;
  post.frames_ = static_cast<int>(rows.size());
  post.probs_.reserve(rows.size() * kCtcSymbols);
  for (std::size_t t = 0; t < rows.size(); ++t) {
    const std::vector<double>& row = rows[t];
    if (row.size() != kCtcSymbols)
      throw PosteriorgramError("frame " + std::to_string(t) + " has " +
                               std::to_string(row.size()) +
                               " entries, expected 33");
    double sum = 0.0;
    for (double p : row) {
      if (!(p >= 0.0) || !std::isfinite(p))
        throw PosteriorgramError("frame " + std::to_string(t) +
                                 " has a negative or non-finite probability");
      sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-6)
      throw PosteriorgramError("frame " + std::to_string(t) +
                               " probabilities sum to " + std::to_string(sum));
    for (double p : row) post.probs_.push_back(p / sum);
  }
  return post;
}

std::optional<Posteriorgram> Posteriorgram::ReadBlock(std::istream& in) {
  long long frames = 0, width = 0;
  if (!(in >> frames)) {
    if (in.eof()) return std::nullopt;
    throw PosteriorgramError("malformed posteriorgram header");
  }
  if (!(in >> width)) throw PosteriorgramError("malformed posteriorgram header");
  if (width != kCtcSymbols)
    throw PosteriorgramError("posteriorgram width " + std::to_string(width) +
                             " does not match the 33-symbol token set");
  if (frames < 0) throw PosteriorgramError("negative frame count");

  std::vector<std::vector<double>> rows(
      static_cast<std::size_t>(frames), std::vector<double>(kCtcSymbols));
  for (auto& row : rows) {
    for (double& p : row) {
      if (!(in >> p))
        throw PosteriorgramError("posteriorgram truncated mid-frame");
    }
  }
  return FromRows(rows);
}

std::vector<std::string> WordLevelTokens(std::string_view raw) {
  std::vector<std::string> tokens;
  std::string pending;
  for (char c : raw) {
    if (c == ' ') {
      if (!pending.empty()) tokens.push_back(std::move(pending));
      pending.clear();
      continue;
    }
    if (IsMarkChar(c)) {
      if (!pending.empty()) tokens.push_back(std::move(pending));
      pending.clear();
      tokens.emplace_back(1, c);
      continue;
    }
    pending += c;
  }
  if (!pending.empty()) tokens.push_back(std::move(pending));
  return tokens;
}

namespace {

struct BeamEntry {
  double lpb = kNegInf;   // mass of paths ending in blank
  double lpnb = kNegInf;  // mass of paths ending in the last character
  double lm_sum = 0.0;    // gamma-weighted scores of completed tokens
  std::vector<std::string> history;
  std::string pending;

  double Acoustic() const { return LogAdd(lpb, lpnb); }
};

using BeamMap = std::map<std::string, BeamEntry>;

// Language-model side effect of appending one character to a prefix.
void AppendChar(BeamEntry* e, char c, const LmScorer& lm, double gamma) {
  if (gamma == 0.0) return;  // fusion disabled; keep state untouched
  auto flush_pending = [&] {
    if (e->pending.empty()) return;
    e->lm_sum += gamma * lm.LogProb(e->history, e->pending);
    e->history.push_back(std::move(e->pending));
    e->pending.clear();
  };
  if (c == ' ') {
    flush_pending();
  } else if (IsMarkChar(c)) {
    flush_pending();
    std::string mark(1, c);
    e->lm_sum += gamma * lm.LogProb(e->history, mark);
    e->history.push_back(std::move(mark));
  } else {
    e->pending += c;
  }
}

double FinalScore(const BeamEntry& e, const LmScorer& lm, double gamma) {
  double score = e.Acoustic() + e.lm_sum;
  if (gamma != 0.0 && !e.pending.empty())
    score += gamma * lm.LogProb(e.history, e.pending);
  return score;
}

}  // namespace

DecodeResult CtcBeamSearchDetailed(const Posteriorgram& post,
                                   const LmScorer& lm,
                                   const DecodeConfig& config) {
  if (config.beam_width < 1) throw DecodeError("beam width must be >= 1");

  BeamMap beams;
  {
    BeamEntry root;
    root.lpb = 0.0;
    beams.emplace("", std::move(root));
  }

  for (int t = 0; t < post.frames(); ++t) {
    std::span<const double> row = post.Row(t);
    BeamMap next;

    auto target = [&next](const std::string& prefix, const BeamEntry& parent,
                          char added, const LmScorer& lm_ref,
                          double gamma) -> BeamEntry& {
      auto it = next.find(prefix);
      if (it != next.end()) return it->second;
      BeamEntry e;
      e.lm_sum = parent.lm_sum;
      e.history = parent.history;
      e.pending = parent.pending;
      if (added != '\0') AppendChar(&e, added, lm_ref, gamma);
      return next.emplace(prefix, std::move(e)).first->second;
    };

    for (const auto& [prefix, entry] : beams) {
      for (int s = 0; s < kCtcSymbols; ++s) {
        double p = row[s];
        if (p < kMinProb) continue;
        double lp = std::log(p);
        if (s == kCtcBlank) {
          BeamEntry& tgt = target(prefix, entry, '\0', lm, config.gamma);
          tgt.lpb = LogAdd(tgt.lpb, entry.Acoustic() + lp);
          continue;
        }
        char c = CtcSymbolChar(s);
        if (!prefix.empty() && prefix.back() == c) {
          // Repeat without a separating blank keeps the same prefix.
          BeamEntry& same = target(prefix, entry, '\0', lm, config.gamma);
          same.lpnb = LogAdd(same.lpnb, entry.lpnb + lp);
          BeamEntry& grown =
              target(prefix + c, entry, c, lm, config.gamma);
          grown.lpnb = LogAdd(grown.lpnb, entry.lpb + lp);
        } else {
          BeamEntry& grown =
              target(prefix + c, entry, c, lm, config.gamma);
          grown.lpnb = LogAdd(grown.lpnb, entry.Acoustic() + lp);
        }
      }
    }

    if (next.empty()) throw DecodeError("beam underflow: no surviving prefix");

    if (static_cast<int>(next.size()) > config.beam_width) {
      std::vector<std::pair<double, const std::string*>> ranked;
      ranked.reserve(next.size());
      for (const auto& [prefix, entry] : next)
        ranked.emplace_back(entry.Acoustic() + entry.lm_sum, &prefix);
      std::sort(ranked.begin(), ranked.end(),
                [](const auto& a, const auto& b) {
                  if (a.first != b.first) return a.first > b.first;
                  return *a.second < *b.second;
                });
      BeamMap pruned;
      for (int k = 0; k < config.beam_width; ++k) {
        auto node = next.extract(*ranked[k].second);
        pruned.insert(std::move(node));
      }
      next = std::move(pruned);
    }
    beams = std::move(next);
  }

  // Lexicographic order of the map makes the first member of a score tie the
  // smallest string.
  const std::string* best_prefix = nullptr;
  double best_score = kNegInf;
  for (const auto& [prefix, entry] : beams) {
    double score = FinalScore(entry, lm, config.gamma);
    if (best_prefix == nullptr || score > best_score + config.tie_epsilon) {
      best_prefix = &prefix;
      best_score = score;
    }
  }
  if (best_prefix == nullptr) throw DecodeError("empty beam at termination");
  return DecodeResult{*best_prefix, best_score};
}

NormalizedTranscript CtcPrefixBeamSearch(const Posteriorgram& post,
                                         const LmScorer& lm,
                                         const DecodeConfig& config) {
  return Normalize(CtcBeamSearchDetailed(post, lm, config).raw);
}

std::map<std::string, double> CtcStringMasses(const Posteriorgram& post,
                                              std::uint64_t max_paths) {
  std::map<std::string, double> masses;
  const int frames = post.frames();
  if (frames == 0) {
    masses[""] = 1.0;
    return masses;
  }

  std::vector<int> active;
  for (int s = 0; s < kCtcSymbols; ++s) {
    for (int t = 0; t < frames; ++t) {
      if (post.Row(t)[s] > kMinProb) {
        active.push_back(s);
        break;
      }
    }
  }
  double space = std::pow(static_cast<double>(active.size()),
                          static_cast<double>(frames));
  if (space > static_cast<double>(max_paths))
    throw DecodeError("exhaustive decode search space exceeds the cap");

  std::vector<int> labels(frames);
  auto recurse = [&](auto&& self, int t, double prob) -> void {
    if (t == frames) {
      masses[CollapseCtc(labels)] += prob;
      return;
    }
    std::span<const double> row = post.Row(t);
    for (int s : active) {
      double p = row[s];
      if (p <= 0.0) continue;
      labels[t] = s;
      self(self, t + 1, prob * p);
    }
  };
  recurse(recurse, 0, 1.0);
  return masses;
}

DecodeResult ExhaustiveDecodeDetailed(const Posteriorgram& post,
                                      const LmScorer& lm, double gamma,
                                      std::uint64_t max_paths) {
  std::map<std::string, double> masses = CtcStringMasses(post, max_paths);

  const std::string* best = nullptr;
  double best_score = kNegInf;
  // tie_epsilon matches the beam search default so both pick the same string
  // on exact ties.
  constexpr double kTie = 1e-12;
  for (const auto& [str, mass] : masses) {
    if (mass <= 0.0) continue;
    double score = std::log(mass);
    if (gamma != 0.0) {
      std::vector<std::string> tokens = WordLevelTokens(str);
      std::vector<std::string> history;
      history.reserve(tokens.size());
      for (std::string& token : tokens) {
        score += gamma * lm.LogProb(history, token);
        history.push_back(std::move(token));
      }
    }
    if (best == nullptr || score > best_score + kTie) {
      best = &str;
      best_score = score;
    }
  }
  if (best == nullptr) throw DecodeError("no decodable string");
  return DecodeResult{*best, best_score};
}

NormalizedTranscript ExhaustiveDecode(const Posteriorgram& post,
                                      const LmScorer& lm, double gamma) {
  return Normalize(ExhaustiveDecodeDetailed(post, lm, gamma).raw);
}

}  // namespace puncteval
