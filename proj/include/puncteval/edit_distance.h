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

#ifndef PUNCTEVAL_EDIT_DISTANCE_H_
#define PUNCTEVAL_EDIT_DISTANCE_H_

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "puncteval/token.h"

namespace puncteval {

// Unit-cost Levenshtein distance over symbol ids. Uses the classic dynamic
// program for small inputs and Myers' bit-parallel algorithm for large ones.
std::int64_t LevenshteinIds(std::span<const std::uint32_t> a,
                            std::span<const std::uint32_t> b);

std::int64_t LevenshteinTokens(std::span<const Token> a,
                               std::span<const Token> b);

std::int64_t LevenshteinChars(std::string_view a, std::string_view b);

}  // namespace puncteval

#endif  // PUNCTEVAL_EDIT_DISTANCE_H_
