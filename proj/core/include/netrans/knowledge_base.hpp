// netrans/knowledge_base.hpp

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

#ifndef NETRANS_KNOWLEDGE_BASE_HPP
#define NETRANS_KNOWLEDGE_BASE_HPP

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "netrans/phonology.hpp"

namespace netrans {

// One observed English-phoneme / Hindi-phoneme pair. The Hindi side is a
// fully rendered Devanagari string (consonant with matra fused), NFC.
struct PhonemePair {
  std::string english;
  std::string hindi;
};

struct KbEntry {
  std::string english;
  std::string hindi;
  std::uint64_t count = 0;
  double prob = 0.0;  // count / sum of counts sharing this english phoneme
};

// Raw pair tallies: Count(english, hindi) and, implicitly, Count(english).
class CountTable {
 public:
  void add(std::string_view english, std::string_view hindi,
           std::uint64_t count = 1);
  bool empty() const { return counts_.empty(); }
  std::uint64_t total_pairs() const { return total_; }
  std::uint64_t count(std::string_view english, std::string_view hindi) const;
  std::uint64_t count(std::string_view english) const;

  const std::map<std::string, std::map<std::string, std::uint64_t>>& rows()
      const {
    return counts_;
  }

 private:
  std::map<std::string, std::map<std::string, std::uint64_t>> counts_;
  std::uint64_t total_ = 0;
};

struct IngestStats {
  std::size_t lines_read = 0;
  std::size_t pairs_ingested = 0;
  std::size_t skipped = 0;
  std::vector<std::pair<std::size_t, std::string>> issues;  // (line, why)
};

struct KbMetadata {
  std::string source;
  std::string created_at;  // ISO-8601 UTC
  std::uint64_t total_pairs = 0;
};

// Immutable after construction. Candidates per English phoneme are sorted
// by probability descending, ties by Devanagari string codepoint order.
class KnowledgeBase {
 public:
  KnowledgeBase() = default;

  static KnowledgeBase estimate(const CountTable& counts,
                                std::string source = "");

  std::span<const KbEntry> lookup(std::string_view english) const;
  bool empty() const { return entries_.empty(); }
  std::size_t phoneme_count() const { return entries_.size(); }
  const KbMetadata& metadata() const { return meta_; }

  // All entries sorted by (english, hindi); this is the persisted order.
  std::vector<KbEntry> sorted_entries() const;

  // Equality on (english, hindi, count) triples; probs are derived.
  friend bool operator==(const KnowledgeBase& a, const KnowledgeBase& b);

 private:
  std::map<std::string, std::vector<KbEntry>> entries_;
  KbMetadata meta_;
};

// Reads english<TAB>hindi pairs into counts. '#' comments and blank lines
// are skipped; malformed lines are recorded in the stats and skipped.
// Throws EmptyInputError when the stream holds zero valid records.
IngestStats ingest_pairs(std::istream& in, CountTable& counts);

// KB file: UTF-8 TSV, header "english\thindi\tcount", rows sorted by
// (english, hindi). Probabilities are derived on load, never stored.
void save_kb(const KnowledgeBase& kb, std::ostream& out);
KnowledgeBase load_kb(std::istream& in, std::string source = "");
KnowledgeBase load_kb_file(const std::string& path);

// Positional aligner for bootstrapping training pairs from word pairs:
// segments the English word, splits the Hindi word into aksharas, and zips
// them when the counts agree. nullopt means unalignable.
std::optional<std::vector<PhonemePair>> align_word_pair(
    std::string_view english_word, std::string_view hindi_word,
    const DigraphSet& digraphs = default_digraphs());

struct WordPairIngestStats {
  std::size_t lines_read = 0;
  std::size_t aligned = 0;
  std::size_t unalignable = 0;
  std::size_t skipped = 0;
  std::vector<std::pair<std::size_t, std::string>> issues;
};

// english_word<TAB>hindi_word corpus; aligned pairs feed the count table.
WordPairIngestStats ingest_word_pairs(std::istream& in, CountTable& counts,
                                      const DigraphSet& digraphs = default_digraphs());

}  // namespace netrans

#endif  // NETRANS_KNOWLEDGE_BASE_HPP
