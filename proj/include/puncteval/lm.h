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

#ifndef PUNCTEVAL_LM_H_
#define PUNCTEVAL_LM_H_

#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "puncteval/token.h"

namespace puncteval {

// Word-level language model. Punctuation marks count as individual tokens.
// Tokens outside the vocabulary map to a single unknown symbol, and for any
// history the probabilities over vocabulary-plus-unknown sum to one.
// Implementations must be safely shareable read-only across threads.
class LmScorer {
 public:
  virtual ~LmScorer() = default;

  virtual double LogProb(std::span<const std::string> history,
                         const std::string& next) const = 0;

  // In-vocabulary tokens (excluding the unknown symbol).
  virtual std::vector<std::string> Vocabulary() const = 0;
};

// Degenerate scorer with an empty vocabulary: every token is the unknown
// symbol with probability one, so fusion with any weight is a no-op.
class UniformLm : public LmScorer {
 public:
  double LogProb(std::span<const std::string>, const std::string&) const override {
    return 0.0;
  }
  std::vector<std::string> Vocabulary() const override { return {}; }
};

// Add-one-smoothed bigram over word-level tokens (punctuation included).
class BigramLm : public LmScorer {
 public:
  double LogProb(std::span<const std::string> history,
                 const std::string& next) const override;
  std::vector<std::string> Vocabulary() const override;

 private:
  friend BigramLm TrainBigram(std::span<const NormalizedTranscript> corpus);

  std::int64_t TokenId(const std::string& token) const;

  std::unordered_map<std::string, std::int64_t> vocab_;
  // Context rows indexed by previous-token id; kBos and kUnk use the two
  // rows past the vocabulary.
  std::vector<std::unordered_map<std::int64_t, std::int64_t>> bigram_;
  std::vector<std::int64_t> context_total_;
};

// Trains a BigramLm from normalized transcripts. Throws
// std::invalid_argument if the corpus is empty.
BigramLm TrainBigram(std::span<const NormalizedTranscript> corpus);

}  // namespace puncteval

#endif  // PUNCTEVAL_LM_H_
