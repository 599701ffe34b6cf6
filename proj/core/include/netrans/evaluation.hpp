// netrans/evaluation.hpp

// Copyright 2026 netrans contributors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef NETRANS_EVALUATION_HPP
#define NETRANS_EVALUATION_HPP

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "netrans/ner.hpp"

namespace netrans {

// One scored entity: what the system emitted (nullopt = no output, the
// skip path) against a single human reference. Strings are compared after
// NFC normalization.
struct EvalRecord {
  std::string entity_text;
  EntityCategory category = EntityCategory::Misc;
  std::optional<std::string> system_output;
  std::string reference;
};

struct CategoryScore {
  std::uint64_t reference_count = 0;
  std::uint64_t system_count = 0;
  std::uint64_t correct_count = 0;
  double precision = 0.0;
  double recall = 0.0;
  double f_measure = 0.0;
  // P = correct/system is undefined at system_count == 0; reported as 0.
  bool precision_undefined = false;
};

struct EvalReport {
  std::array<CategoryScore, kCategoryCount> per_category;
  CategoryScore total;
};

// precision = correct/system, recall = correct/reference,
// F = 2PR/(P+R) (0 when P+R is 0); correct means NFC-equal strings.
// Throws EmptyInputError on an empty record list.
EvalReport score(std::span<const EvalRecord> records);

// Same aggregation; kept as a named entry point for the per-category view.
EvalReport per_category_report(std::span<const EvalRecord> records);

// Derives the three ratios from already-aggregated counts.
CategoryScore score_counts(std::uint64_t correct, std::uint64_t system,
                           std::uint64_t reference);

enum class ReportFormat { Text, Tsv, JsonLines };
std::optional<ReportFormat> parse_report_format(std::string_view name);

// Deterministic rendering; metrics printed with 4 decimal places.
// Empty categories render as zero rows, never omitted.
std::string render_report(const EvalReport& report, ReportFormat format);

// Inverse of the Tsv rendering: counts are read back, metrics recomputed.
EvalReport parse_report_tsv(std::istream& in);

// entity_text<TAB>category<TAB>system_output<TAB>reference; the literal
// "-" in column 3 means no output. Throws ParseError with line numbers.
std::vector<EvalRecord> read_eval_tsv(std::istream& in);

}  // namespace netrans

#endif  // NETRANS_EVALUATION_HPP
