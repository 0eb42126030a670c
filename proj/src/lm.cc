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

#include "puncteval/lm.h"

#include <cmath>
#include <stdexcept>

namespace puncteval {

std::int64_t BigramLm::TokenId(const std::string& token) const {
  auto it = vocab_.find(token);
  if (it != vocab_.end()) return it->second;
  return static_cast<std::int64_t>(vocab_.size());  // unknown row
}

double BigramLm::LogProb(std::span<const std::string> history,
                         const std::string& next) const {
  const std::int64_t vocab_size = static_cast<std::int64_t>(vocab_.size());
  const std::int64_t bos = vocab_size + 1;
  std::int64_t prev = history.empty() ? bos : TokenId(history.back());
  std::int64_t next_id = TokenId(next);

  std::int64_t pair_count = 0;
  auto it = bigram_[prev].find(next_id);
  if (it != bigram_[prev].end()) pair_count = it->second;
  // Add-one smoothing over vocabulary plus the unknown symbol.
  double numer = static_cast<double>(pair_count + 1);
  double denom = static_cast<double>(context_total_[prev] + vocab_size + 1);
  return std::log(numer / denom);
}

std::vector<std::string> BigramLm::Vocabulary() const {
  std::vector<std::string> out(vocab_.size());
  for (const auto& [token, id] : vocab_) out[id] = token;
  return out;
}

BigramLm TrainBigram(std::span<const NormalizedTranscript> corpus) {
  if (corpus.empty())
    throw std::invalid_argument("bigram training corpus is empty");

  BigramLm lm;
  for (const NormalizedTranscript& t : corpus) {
    for (const Token& tok : t.tokens)
      lm.vocab_.try_emplace(tok.surface,
                            static_cast<std::int64_t>(lm.vocab_.size()));
  }
  const std::int64_t vocab_size = static_cast<std::int64_t>(lm.vocab_.size());
  lm.bigram_.resize(vocab_size + 2);  // + unknown row + begin row
  lm.context_total_.assign(vocab_size + 2, 0);

  const std::int64_t bos = vocab_size + 1;
  for (const NormalizedTranscript& t : corpus) {
    std::int64_t prev = bos;
    for (const Token& tok : t.tokens) {
      std::int64_t id = lm.vocab_.at(tok.surface);
      ++lm.bigram_[prev][id];
      ++lm.context_total_[prev];
      prev = id;
    }
  }
  return lm;
}

}  // namespace puncteval
