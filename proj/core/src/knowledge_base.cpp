// netrans/knowledge_base.cpp

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

#include "netrans/knowledge_base.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <ctime>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "netrans/devanagari.hpp"
#include "netrans/errors.hpp"

namespace netrans {

namespace {

std::string now_utc_iso8601() {
  std::time_t t = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
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

std::string strip_cr(std::string line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

bool is_lower_letters(std::string_view s) {
  if (s.empty()) return false;
  for (unsigned char c : s) {
    if (c < 'a' || c > 'z') return false;
  }
  return true;
}

// Validates and canonicalizes one pair; returns the reason on failure.
std::optional<std::string> canonicalize(std::string& english,
                                        std::string& hindi) {
  std::string folded;
  folded.reserve(english.size());
  for (unsigned char c : english) folded.push_back(static_cast<char>(std::tolower(c)));
  if (!is_lower_letters(folded)) return "english side is not Latin letters";
  english = std::move(folded);
  std::string normalized = deva::nfc(hindi);
  if (!deva::is_devanagari_text(normalized)) return "hindi side is not Devanagari";
  hindi = std::move(normalized);
  return std::nullopt;
}

}  // namespace

void CountTable::add(std::string_view english, std::string_view hindi,
                     std::uint64_t count) {
  counts_[std::string(english)][std::string(hindi)] += count;
  total_ += count;
}

std::uint64_t CountTable::count(std::string_view english,
                                std::string_view hindi) const {
  auto it = counts_.find(std::string(english));
  if (it == counts_.end()) return 0;
  auto jt = it->second.find(std::string(hindi));
  return jt == it->second.end() ? 0 : jt->second;
}

std::uint64_t CountTable::count(std::string_view english) const {
  auto it = counts_.find(std::string(english));
  if (it == counts_.end()) return 0;
  std::uint64_t sum = 0;
  for (const auto& [_, c] : it->second) sum += c;
  return sum;
}

KnowledgeBase KnowledgeBase::estimate(const CountTable& counts,
                                      std::string source) {
  if (counts.empty()) {
    throw EmptyInputError("estimate: empty count table");
  }
  KnowledgeBase kb;
  for (const auto& [english, hindi_counts] : counts.rows()) {
    std::uint64_t total = 0;
    for (const auto& [_, c] : hindi_counts) total += c;
    if (total == 0) {
      throw InvariantViolation("estimate: zero total count for phoneme \"" +
                               english + "\"");
    }
    std::vector<KbEntry> candidates;
    candidates.reserve(hindi_counts.size());
    for (const auto& [hindi, c] : hindi_counts) {
      candidates.push_back(KbEntry{english, hindi, c,
                                   static_cast<double>(c) / static_cast<double>(total)});
    }
    std::sort(candidates.begin(), candidates.end(),
              [](const KbEntry& a, const KbEntry& b) {
                if (a.prob != b.prob) return a.prob > b.prob;
                return a.hindi < b.hindi;  // UTF-8 byte order == codepoint order
              });
    kb.entries_.emplace(english, std::move(candidates));
  }
  kb.meta_.source = std::move(source);
  kb.meta_.created_at = now_utc_iso8601();
  kb.meta_.total_pairs = counts.total_pairs();
  return kb;
}

std::span<const KbEntry> KnowledgeBase::lookup(std::string_view english) const {
  auto it = entries_.find(std::string(english));
  if (it == entries_.end()) return {};
  return it->second;
}

std::vector<KbEntry> KnowledgeBase::sorted_entries() const {
  std::vector<KbEntry> all;
  for (const auto& [_, candidates] : entries_) {
    all.insert(all.end(), candidates.begin(), candidates.end());
  }
  std::sort(all.begin(), all.end(), [](const KbEntry& a, const KbEntry& b) {
    if (a.english != b.english) return a.english < b.english;
    return a.hindi < b.hindi;
  });
  return all;
}

bool operator==(const KnowledgeBase& a, const KnowledgeBase& b) {
  auto ea = a.sorted_entries();
  auto eb = b.sorted_entries();
  if (ea.size() != eb.size()) return false;
  for (std::size_t i = 0; i < ea.size(); ++i) {
    if (ea[i].english != eb[i].english || ea[i].hindi != eb[i].hindi ||
        ea[i].count != eb[i].count) {
      return false;
    }
  }
  return true;
}

IngestStats ingest_pairs(std::istream& in, CountTable& counts) {
  IngestStats stats;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    ++stats.lines_read;
    line = strip_cr(std::move(line));
    if (line.empty() || line[0] == '#') continue;
    auto cols = split_tabs(line);
    if (cols.size() != 2) {
      ++stats.skipped;
      stats.issues.emplace_back(line_no, "expected 2 tab-separated columns");
      continue;
    }
    if (auto why = canonicalize(cols[0], cols[1])) {
      ++stats.skipped;
      stats.issues.emplace_back(line_no, *why);
      continue;
    }
    counts.add(cols[0], cols[1]);
    ++stats.pairs_ingested;
  }
  if (stats.pairs_ingested == 0) {
    throw EmptyInputError("ingest_pairs: no valid records in source");
  }
  return stats;
}

void save_kb(const KnowledgeBase& kb, std::ostream& out) {
  out << "english\thindi\tcount\n";
  for (const auto& e : kb.sorted_entries()) {
    out << e.english << '\t' << e.hindi << '\t' << e.count << '\n';
  }
}

KnowledgeBase load_kb(std::istream& in, std::string source) {
  std::string line;
  std::size_t line_no = 0;
  if (!std::getline(in, line)) {
    throw ParseError("empty knowledge-base file");
  }
  ++line_no;
  line = strip_cr(std::move(line));
  if (line != "english\thindi\tcount") {
    throw ParseError("bad header, expected \"english\\thindi\\tcount\"", line_no);
  }

  CountTable counts;
  std::map<std::string, std::map<std::string, bool>> seen;
  while (std::getline(in, line)) {
    ++line_no;
    line = strip_cr(std::move(line));
    if (line.empty() || line[0] == '#') continue;
    auto cols = split_tabs(line);
    if (cols.size() != 3) {
      throw ParseError("expected 3 tab-separated columns", line_no);
    }
    if (auto why = canonicalize(cols[0], cols[1])) {
      throw ParseError(*why, line_no);
    }
    const std::string& count_str = cols[2];
    if (!count_str.empty() && count_str[0] == '-') {
      throw ParseError("negative count \"" + count_str + "\"", line_no);
    }
    std::uint64_t count = 0;
    auto [end, ec] = std::from_chars(count_str.data(),
                                     count_str.data() + count_str.size(), count);
    if (ec != std::errc{} || end != count_str.data() + count_str.size()) {
      throw ParseError("count is not a non-negative integer: \"" + count_str +
                           "\"",
                       line_no);
    }
    if (seen[cols[0]].count(cols[1])) {
      throw ParseError("duplicate pair (" + cols[0] + ", " + cols[1] + ")",
                       line_no);
    }
    seen[cols[0]][cols[1]] = true;
    counts.add(cols[0], cols[1], count);
  }
  if (counts.empty()) {
    throw ParseError("knowledge-base file has no entries");
  }
  return KnowledgeBase::estimate(counts, std::move(source));
}

KnowledgeBase load_kb_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error("cannot open knowledge base: " + path);
  }
  return load_kb(in, path);
}

std::optional<std::vector<PhonemePair>> align_word_pair(
    std::string_view english_word, std::string_view hindi_word,
    const DigraphSet& digraphs) {
  SegmentedWord segmented;
  std::vector<std::string> aksharas;
  try {
    segmented = segment_word(english_word, digraphs);
    aksharas = deva::akshara_split(hindi_word);
  } catch (const Error&) {
    return std::nullopt;
  }
  if (segmented.chunks.size() != aksharas.size()) return std::nullopt;

  std::vector<PhonemePair> pairs;
  pairs.reserve(aksharas.size());
  for (std::size_t i = 0; i < aksharas.size(); ++i) {
    pairs.push_back(PhonemePair{segmented.chunks[i].surface, aksharas[i]});
  }
  return pairs;
}

WordPairIngestStats ingest_word_pairs(std::istream& in, CountTable& counts,
                                      const DigraphSet& digraphs) {
  WordPairIngestStats stats;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    ++stats.lines_read;
    line = strip_cr(std::move(line));
    if (line.empty() || line[0] == '#') continue;
    auto cols = split_tabs(line);
    if (cols.size() != 2) {
      ++stats.skipped;
      stats.issues.emplace_back(line_no, "expected 2 tab-separated columns");
      continue;
    }
    std::string hindi = deva::nfc(cols[1]);
    if (!deva::is_devanagari_text(hindi)) {
      ++stats.skipped;
      stats.issues.emplace_back(line_no, "hindi side is not Devanagari");
      continue;
    }
    auto pairs = align_word_pair(cols[0], hindi, digraphs);
    if (!pairs) {
      ++stats.unalignable;
      continue;
    }
    for (const auto& p : *pairs) counts.add(p.english, p.hindi);
    ++stats.aligned;
  }
  return stats;
}

}  // namespace netrans
