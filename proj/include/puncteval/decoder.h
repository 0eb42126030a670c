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

#ifndef PUNCTEVAL_DECODER_H_
#define PUNCTEVAL_DECODER_H_

#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "puncteval/lm.h"
#include "puncteval/token.h"

namespace puncteval {

class PosteriorgramError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DecodeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// CTC symbol table: 0 blank, 1 space, 2 apostrophe, 3-28 a-z, 29 comma,
// 30 period, 31 question mark, 32 exclamation mark. The indices are a wire
// format contract for posteriorgram files.
inline constexpr int kCtcSymbols = 33;
inline constexpr int kCtcBlank = 0;

// Character for a non-blank symbol index; throws on blank or out of range.
char CtcSymbolChar(int index);
// Symbol index for a character, or -1 if it is not in the set.
int CtcCharSymbol(char c);

// Merges adjacent repeats, removes blanks, maps indices to characters.
// Throws DecodeError on out-of-range labels.
std::string CollapseCtc(std::span<const int> labels);

// T x 33 row-stochastic matrix of per-frame symbol probabilities. Rows
// within 1e-6 of summing to one are renormalized; anything further off is
// rejected.
class Posteriorgram {
 public:
  static Posteriorgram FromRows(const std::vector<std::vector<double>>& rows);

  // Reads one `T 33` block (header line, then T rows of 33 floats).
  // Returns nullopt at a clean end of stream.
  static std::optional<Posteriorgram> ReadBlock(std::istream& in);

  int frames() const { return frames_; }
  std::span<const double> Row(int t) const {
    return std::span<const double>(probs_).subspan(
        static_cast<std::size_t>(t) * kCtcSymbols, kCtcSymbols);
  }

 private:
  int frames_ = 0;
  std::vector<double> probs_;
};

struct DecodeConfig {
  int beam_width = 64;
  double gamma = 0.5;
  double tie_epsilon = 1e-12;
};

struct DecodeResult {
  std::string raw;    // collapsed character string
  double score = 0.0; // log p_ctc + gamma * log p_lm
};

// Prefix beam search over the fused objective. Each prefix tracks
// blank-ending and nonblank-ending mass; the language model scores one
// word-level token whenever a space or mark completes it (marks are tokens
// themselves), plus the trailing partial word at the end.
DecodeResult CtcBeamSearchDetailed(const Posteriorgram& post,
                                   const LmScorer& lm,
                                   const DecodeConfig& config);

NormalizedTranscript CtcPrefixBeamSearch(const Posteriorgram& post,
                                         const LmScorer& lm,
                                         const DecodeConfig& config);

// Exact per-string path mass by enumerating every label sequence over the
// symbols active in `post`. Throws DecodeError when the search space exceeds
// max_paths.
std::map<std::string, double> CtcStringMasses(
    const Posteriorgram& post, std::uint64_t max_paths = 20000000);

// Exact fused-objective argmax; the decoding oracle for small instances.
DecodeResult ExhaustiveDecodeDetailed(const Posteriorgram& post,
                                      const LmScorer& lm, double gamma,
                                      std::uint64_t max_paths = 20000000);

NormalizedTranscript ExhaustiveDecode(const Posteriorgram& post,
                                      const LmScorer& lm, double gamma);

// Splits a collapsed character string into the word-level tokens the
// language model scores: space-separated words, with each mark its own
// token.
std::vector<std::string> WordLevelTokens(std::string_view raw);

}  // namespace puncteval

#endif  // PUNCTEVAL_DECODER_H_
