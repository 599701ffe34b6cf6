// netrans/evaluation.cpp

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

#include "netrans/evaluation.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "netrans/devanagari.hpp"
#include "netrans/errors.hpp"

namespace netrans {

namespace {

constexpr std::array<EntityCategory, kCategoryCount> kAllCategories = {
    EntityCategory::Person,   EntityCategory::Location,
    EntityCategory::Organization, EntityCategory::Date,
    EntityCategory::Time,     EntityCategory::Misc};

std::string fixed4(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4f", x);
  return buf;
}

std::vector<std::string> split_tabs(std::string_view line) {
  std::vector<std::string> cols;
  std::size_t start = 0;
  while (true) {
    std::size_t tab = line.find('\t', start);
    if (tab == std::string_view::npos) {
      cols.emplace_back(line.substr(start));
      return cols;
    }
    cols.emplace_back(line.substr(start, tab - start));
    start = tab + 1;
  }
}

std::uint64_t parse_count(const std::string& s, std::size_t line_no) {
  std::uint64_t value = 0;
  if (s.empty() || s[0] == '-') {
    throw ParseError("count is not a non-negative integer: \"" + s + "\"",
                     line_no);
  }
  auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || end != s.data() + s.size()) {
    throw ParseError("count is not a non-negative integer: \"" + s + "\"",
                     line_no);
  }
  return value;
}

}  // namespace

CategoryScore score_counts(std::uint64_t correct, std::uint64_t system,
                           std::uint64_t reference) {
  CategoryScore s;
  s.correct_count = correct;
  s.system_count = system;
  s.reference_count = reference;
  if (system == 0) {
    s.precision = 0.0;
    s.precision_undefined = true;
  } else {
    s.precision = static_cast<double>(correct) / static_cast<double>(system);
  }
  s.recall = reference == 0
                 ? 0.0
                 : static_cast<double>(correct) / static_cast<double>(reference);
  s.f_measure = (s.precision + s.recall) > 0.0
                    ? 2.0 * s.precision * s.recall / (s.precision + s.recall)
                    : 0.0;
  return s;
}

EvalReport score(std::span<const EvalRecord> records) {
  if (records.empty()) {
    throw EmptyInputError("score: empty evaluation");
  }
  std::array<std::uint64_t, kCategoryCount> ref{}, sys{}, correct{};
  for (const EvalRecord& r : records) {
    const auto idx = static_cast<std::size_t>(r.category);
    ++ref[idx];
    if (r.system_output) {
      ++sys[idx];
      if (deva::nfc(*r.system_output) == deva::nfc(r.reference)) {
        ++correct[idx];
      }
    }
  }
  EvalReport report;
  std::uint64_t tr = 0, ts = 0, tc = 0;
  for (std::size_t i = 0; i < kCategoryCount; ++i) {
    report.per_category[i] = score_counts(correct[i], sys[i], ref[i]);
    tr += ref[i];
    ts += sys[i];
    tc += correct[i];
  }
  report.total = score_counts(tc, ts, tr);
  return report;
}

EvalReport per_category_report(std::span<const EvalRecord> records) {
  return score(records);
}

std::optional<ReportFormat> parse_report_format(std::string_view name) {
  if (name == "text") return ReportFormat::Text;
  if (name == "tsv") return ReportFormat::Tsv;
  if (name == "jsonl" || name == "json-lines") return ReportFormat::JsonLines;
  return std::nullopt;
}

std::string render_report(const EvalReport& report, ReportFormat format) {
  if (format == ReportFormat::Tsv) {
    std::string out =
        "category\treference\tsystem\tcorrect\tprecision\trecall\tf_measure\t"
        "precision_defined\n";
    auto row = [&](std::string_view name, const CategoryScore& s) {
      out += std::string(name) + '\t' + std::to_string(s.reference_count) +
             '\t' + std::to_string(s.system_count) + '\t' +
             std::to_string(s.correct_count) + '\t' + fixed4(s.precision) +
             '\t' + fixed4(s.recall) + '\t' + fixed4(s.f_measure) + '\t' +
             (s.precision_undefined ? "0" : "1") + '\n';
    };
    for (std::size_t i = 0; i < kCategoryCount; ++i) {
      row(to_string(kAllCategories[i]), report.per_category[i]);
    }
    row("Total", report.total);
    return out;
  }

  if (format == ReportFormat::JsonLines) {
    std::string out;
    auto line = [&](std::string_view name, const CategoryScore& s) {
      nlohmann::ordered_json j;
      j["category"] = name;
      j["reference"] = s.reference_count;
      j["system"] = s.system_count;
      j["correct"] = s.correct_count;
      j["precision"] = std::stod(fixed4(s.precision));
      j["recall"] = std::stod(fixed4(s.recall));
      j["f_measure"] = std::stod(fixed4(s.f_measure));
      j["precision_defined"] = !s.precision_undefined;
      out += j.dump();
      out.push_back('\n');
    };
    for (std::size_t i = 0; i < kCategoryCount; ++i) {
      line(to_string(kAllCategories[i]), report.per_category[i]);
    }
    line("Total", report.total);
    return out;
  }

  // Text: per-category table, then a Table-V style summary block.
  std::string out;
  char buf[160];
  std::snprintf(buf, sizeof(buf), "%-14s %9s %9s %9s %10s %8s %10s\n",
                "Category", "Reference", "System", "Correct", "Precision",
                "Recall", "F-Measure");
  out += buf;
  bool any_undefined = false;
  auto row = [&](std::string_view name, const CategoryScore& s) {
    any_undefined = any_undefined || s.precision_undefined;
    std::string p = fixed4(s.precision) + (s.precision_undefined ? "*" : " ");
    std::snprintf(buf, sizeof(buf), "%-14s %9llu %9llu %9llu %10s %8s %10s\n",
                  std::string(name).c_str(),
                  static_cast<unsigned long long>(s.reference_count),
                  static_cast<unsigned long long>(s.system_count),
                  static_cast<unsigned long long>(s.correct_count), p.c_str(),
                  fixed4(s.recall).c_str(), fixed4(s.f_measure).c_str());
    out += buf;
  };
  for (std::size_t i = 0; i < kCategoryCount; ++i) {
    row(to_string(kAllCategories[i]), report.per_category[i]);
  }
  row("Total", report.total);
  out += '\n';
  const CategoryScore& t = report.total;
  out += "Total Name Entities   " + std::to_string(t.reference_count) + '\n';
  out += "System Output         " + std::to_string(t.system_count) + '\n';
  out += "Correct               " + std::to_string(t.correct_count) + '\n';
  out += "Precision  " + fixed4(t.precision) + '\n';
  out += "Recall     " + fixed4(t.recall) + '\n';
  out += "F-Measure  " + fixed4(t.f_measure) + '\n';
  if (any_undefined) {
    out += "* precision undefined (no system output), reported as 0\n";
  }
  return out;
}

EvalReport parse_report_tsv(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  if (!std::getline(in, line)) {
    throw ParseError("empty report");
  }
  ++line_no;
  EvalReport report;
  std::array<bool, kCategoryCount> seen{};
  bool seen_total = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto cols = split_tabs(line);
    if (cols.size() != 8) {
      throw ParseError("expected 8 tab-separated columns", line_no);
    }
    CategoryScore s = score_counts(parse_count(cols[3], line_no),
                                   parse_count(cols[2], line_no),
                                   parse_count(cols[1], line_no));
    if (cols[0] == "Total") {
      report.total = s;
      seen_total = true;
      continue;
    }
    auto category = parse_category(cols[0]);
    if (!category) {
      throw ParseError("unknown category \"" + cols[0] + "\"", line_no);
    }
    report.per_category[static_cast<std::size_t>(*category)] = s;
    seen[static_cast<std::size_t>(*category)] = true;
  }
  for (std::size_t i = 0; i < kCategoryCount; ++i) {
    if (!seen[i]) {
      throw ParseError("missing category row: " +
                       std::string(to_string(kAllCategories[i])));
    }
  }
  if (!seen_total) {
    throw ParseError("missing Total row");
  }
  return report;
}

std::vector<EvalRecord> read_eval_tsv(std::istream& in) {
  std::vector<EvalRecord> records;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    auto cols = split_tabs(line);
    if (cols.size() != 4) {
      throw ParseError("expected 4 tab-separated columns", line_no);
    }
    auto category = parse_category(cols[1]);
    if (!category) {
      throw ParseError("unknown category \"" + cols[1] + "\"", line_no);
    }
    if (cols[3].empty()) {
      throw ParseError("empty reference", line_no);
    }
    EvalRecord record;
    record.entity_text = cols[0];
    record.category = *category;
    if (cols[2] != "-") record.system_output = cols[2];
    record.reference = cols[3];
    records.push_back(std::move(record));
  }
  return records;
}

}  // namespace netrans
