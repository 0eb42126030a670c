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

#include "puncteval/edit_distance.h"

#include <algorithm>
#include <unordered_map>

namespace puncteval {
namespace {

std::int64_t LevenshteinDp(std::span<const std::uint32_t> a,
                           std::span<const std::uint32_t> b) {
  std::vector<std::int64_t> prev(b.size() + 1), cur(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) prev[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    cur[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      std::int64_t sub = prev[j - 1] + (a[i - 1] != b[j - 1]);
      cur[j] = std::min({sub, prev[j] + 1, cur[j - 1] + 1});
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

// Myers' bit-parallel edit distance (block-based variant after Hyyro).
// Pattern bits live in 64-bit blocks; the distance is tracked at the bit of
// the last pattern position, so garbage above it never propagates downward.
std::int64_t LevenshteinMyers(std::span<const std::uint32_t> a,
                              std::span<const std::uint32_t> b) {
  const std::size_t m = a.size();
  const std::size_t blocks = (m + 63) / 64;

  std::unordered_map<std::uint32_t, std::vector<std::uint64_t>> peq;
  peq.reserve(m * 2);
  for (std::size_t i = 0; i < m; ++i) {
    auto& mask = peq.try_emplace(a[i], blocks, 0ull).first->second;
    mask[i / 64] |= 1ull << (i % 64);
  }
  const std::vector<std::uint64_t> zero_mask(blocks, 0ull);

  std::vector<std::uint64_t> vp(blocks, ~0ull), vn(blocks, 0ull);
  const std::size_t score_block = (m - 1) / 64;
  const std::uint64_t score_bit = 1ull << ((m - 1) % 64);

  std::int64_t score = static_cast<std::int64_t>(m);
  for (std::uint32_t c : b) {
    auto it = peq.find(c);
    const std::vector<std::uint64_t>& eq_all =
        it == peq.end() ? zero_mask : it->second;

    int hin = 1;  // the top boundary row grows along b
    for (std::size_t k = 0; k < blocks; ++k) {
      std::uint64_t eq = eq_all[k];
      std::uint64_t pv = vp[k];
      std::uint64_t nv = vn[k];

      std::uint64_t xv = eq | nv;
      if (hin < 0) eq |= 1ull;
      std::uint64_t xh = (((eq & pv) + pv) ^ pv) | eq;
      std::uint64_t ph = nv | ~(xh | pv);
      std::uint64_t mh = pv & xh;

      if (k == score_block) {
        if (ph & score_bit) ++score;
        if (mh & score_bit) --score;
      }

      int hout = 0;
      if (ph & 0x8000000000000000ull) hout = 1;
      if (mh & 0x8000000000000000ull) hout = -1;

      ph <<= 1;
      mh <<= 1;
      if (hin < 0) mh |= 1ull;
      if (hin > 0) ph |= 1ull;

      vp[k] = mh | ~(xv | ph);
      vn[k] = ph & xv;
      hin = hout;
    }
  }
  return score;
}

}  // namespace

std::int64_t LevenshteinIds(std::span<const std::uint32_t> a,
                            std::span<const std::uint32_t> b) {
  if (a.empty()) return b.size();
  if (b.empty()) return a.size();
  if (a.size() * b.size() <= 4096) return LevenshteinDp(a, b);
  return LevenshteinMyers(a, b);
}

std::int64_t LevenshteinTokens(std::span<const Token> a,
                               std::span<const Token> b) {
  // Token identity is (kind, surface); a kind tag keeps punctuation marks
  // distinct from any word surface.
  std::unordered_map<std::string, std::uint32_t> ids;
  auto to_ids = [&ids](std::span<const Token> seq) {
    std::vector<std::uint32_t> out;
    out.reserve(seq.size());
    for (const Token& t : seq) {
      std::string key(1, static_cast<char>('0' + static_cast<int>(t.kind)));
      key += t.surface;
      auto [it, unused] =
          ids.try_emplace(std::move(key), static_cast<std::uint32_t>(ids.size()));
      out.push_back(it->second);
    }
    return out;
  };
  std::vector<std::uint32_t> ia = to_ids(a), ib = to_ids(b);
  return LevenshteinIds(ia, ib);
}

std::int64_t LevenshteinChars(std::string_view a, std::string_view b) {
  auto to_ids = [](std::string_view s) {
    std::vector<std::uint32_t> out(s.size());
    for (std::size_t i = 0; i < s.size(); ++i)
      out[i] = static_cast<unsigned char>(s[i]);
    return out;
  };
  std::vector<std::uint32_t> ia = to_ids(a), ib = to_ids(b);
  return LevenshteinIds(ia, ib);
}

}  // namespace puncteval
