// netrans/decoder.cpp

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

#include "netrans/decoder.hpp"

#include <cctype>
#include <istream>
#include <sstream>

#include "netrans/devanagari.hpp"
#include "netrans/errors.hpp"

namespace netrans {

namespace {

FallbackTable build_default_table() {
  // Values are NFC-normalized on construction so the precomposed nukta
  // letters never leak through.
  const std::pair<const char*, const char*> raw[] = {
      {"a", "अ"}, {"b", "ब"}, {"c", "क"}, {"d", "द"}, {"e", "ए"},
      {"f", "फ"}, {"g", "ग"}, {"h", "ह"}, {"i", "इ"}, {"j", "ज"},
      {"k", "क"}, {"l", "ल"}, {"m", "म"}, {"n", "न"}, {"o", "ओ"},
      {"p", "प"}, {"q", "क"}, {"r", "र"}, {"s", "स"}, {"t", "त"},
      {"u", "उ"}, {"v", "व"}, {"w", "व"}, {"x", "क्स"}, {"y", "य"},
      {"z", "ज़"},
      {"bh", "भ"}, {"ch", "च"}, {"dh", "ध"}, {"gh", "घ"}, {"jh", "झ"},
      {"kh", "ख"}, {"ph", "फ"}, {"sh", "श"}, {"th", "थ"}, {"lh", "ल्ह"},
  };
  FallbackTable table;
  for (const auto& [unit, hindi] : raw) table[unit] = deva::nfc(hindi);
  return table;
}

}  // namespace

const FallbackTable& default_fallback_table() {
  static const FallbackTable table = build_default_table();
  return table;
}

FallbackTable load_fallback_table(std::istream& in) {
  FallbackTable table;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::size_t tab = line.find('\t');
    if (tab == std::string::npos || line.find('\t', tab + 1) != std::string::npos) {
      throw ParseError("expected 2 tab-separated columns", line_no);
    }
    std::string unit = line.substr(0, tab);
    std::string hindi = deva::nfc(line.substr(tab + 1));
    if (unit.empty()) {
      throw ParseError("empty unit", line_no);
    }
    for (unsigned char c : unit) {
      if (c < 'a' || c > 'z') {
        throw ParseError("unit must be lowercase letters: \"" + unit + "\"",
                         line_no);
      }
    }
    if (!deva::is_devanagari_text(hindi)) {
      throw ParseError("value is not Devanagari for unit \"" + unit + "\"",
                       line_no);
    }
    if (table.count(unit)) {
      throw ParseError("duplicate unit \"" + unit + "\"", line_no);
    }
    table[unit] = std::move(hindi);
  }
  if (table.empty()) throw ParseError("fallback table has no entries");
  return table;
}

Transliterator::Transliterator(const KnowledgeBase& kb,
                               TransliteratorConfig config)
    : kb_(kb), config_(std::move(config)) {}

ChunkChoice Transliterator::choose_phoneme(std::string_view chunk) const {
  if (chunk.empty()) {
    throw EmptyInputError("choose_phoneme: empty chunk");
  }
  auto candidates = kb_.lookup(chunk);
  if (!candidates.empty()) {
    const KbEntry& best = candidates.front();
    return ChunkChoice{std::string(chunk), best.hindi, best.prob, Origin::Kb};
  }
  // Letter-level fallback; guaranteed to emit for alphabetic chunks.
  std::string hindi;
  for (const std::string& unit : group_units(chunk, config_.digraphs)) {
    auto it = config_.fallback.find(unit);
    if (it != config_.fallback.end()) {
      hindi += it->second;
      continue;
    }
    for (char c : unit) {
      auto letter = config_.fallback.find(std::string(1, c));
      if (letter != config_.fallback.end()) hindi += letter->second;
    }
  }
  return ChunkChoice{std::string(chunk), std::move(hindi), 1.0, Origin::Fallback};
}

TransliterationResult Transliterator::transliterate_word(
    std::string_view word) const {
  if (word.empty()) {
    throw EmptyInputError("transliterate_word: empty input");
  }
  TransliterationResult result;
  result.source = std::string(word);

  std::size_t i = 0;
  while (i < word.size()) {
    const bool letters = std::isalpha(static_cast<unsigned char>(word[i])) != 0;
    std::size_t start = i;
    while (i < word.size() &&
           (std::isalpha(static_cast<unsigned char>(word[i])) != 0) == letters) {
      ++i;
    }
    std::string_view span = word.substr(start, i - start);
    if (!letters) {
      // digits, punctuation, non-ASCII bytes: pass through untouched
      result.per_chunk.push_back(ChunkChoice{std::string(span),
                                             std::string(span), 1.0,
                                             Origin::PassThrough});
      result.low_confidence = true;
      continue;
    }
    for (const PhonemeChunk& chunk : segment_word(span, config_.digraphs).chunks) {
      ChunkChoice choice = choose_phoneme(chunk.surface);
      if (choice.origin == Origin::Kb) {
        result.confidence *= choice.prob;
      } else {
        result.low_confidence = true;
      }
      result.per_chunk.push_back(std::move(choice));
    }
  }
  for (const auto& choice : result.per_chunk) result.hindi += choice.hindi;
  return result;
}

EntityResult Transliterator::transliterate_entity(
    const TaggedEntity& entity) const {
  if (entity.text.empty()) {
    throw EmptyInputError("transliterate_entity: empty entity text");
  }
  EntityResult result;
  result.source = entity.text;
  if (config_.skip.count(entity.category)) {
    result.hindi = std::nullopt;
    return result;
  }
  std::istringstream tokens(entity.text);
  std::string token;
  std::string joined;
  while (tokens >> token) {
    TransliterationResult word = transliterate_word(token);
    if (!joined.empty()) joined.push_back(' ');
    joined += word.hindi;
    result.confidence *= word.confidence;
    result.low_confidence = result.low_confidence || word.low_confidence;
    result.words.push_back(std::move(word));
  }
  result.hindi = std::move(joined);
  return result;
}

}  // namespace netrans
