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

#ifndef PUNCTEVAL_REPORT_H_
#define PUNCTEVAL_REPORT_H_

#include <string>

#include "puncteval/metrics.h"

namespace puncteval {

// Flat key/value lines, one metric per line.
std::string ReportToText(const MetricsReport& report);

// Structured machine-readable form; the schema is versioned with a
// top-level "schema": 1 field.
std::string ReportToJson(const MetricsReport& report);

// Lowercase name used in report keys: comma, period, question, exclamation.
std::string PunctName(TokenKind kind);

}  // namespace puncteval

#endif  // PUNCTEVAL_REPORT_H_
