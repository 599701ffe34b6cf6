// netrans/phonology.cpp

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

#include "netrans/phonology.hpp"

#include <array>
#include <cctype>

#include "netrans/errors.hpp"

namespace netrans {

std::string_view to_string(ChunkPattern p) {
  switch (p) {
    case ChunkPattern::V: return "V";
    case ChunkPattern::CV: return "CV";
    case ChunkPattern::VC: return "VC";
    case ChunkPattern::CVC: return "CVC";
    case ChunkPattern::CCVC: return "CCVC";
    case ChunkPattern::CVCC: return "CVCC";
    case ChunkPattern::VCC: return "VCC";
    case ChunkPattern::C: return "C";
    case ChunkPattern::CC: return "CC";
    case ChunkPattern::CCV: return "CCV";
    case ChunkPattern::Other: return "Other";
  }
  return "Other";
}

const DigraphSet& default_digraphs() {
  static const DigraphSet set = {"bh", "ch", "dh", "gh", "jh",
                                 "kh", "ph", "sh", "th", "lh"};
  return set;
}

CharClass classify_char(char32_t c) {
  if (c >= 'A' && c <= 'Z') c += 'a' - 'A';
  if (c < 'a' || c > 'z') return CharClass::Other;
  switch (c) {
    case 'a':
    case 'e':
    case 'i':
    case 'o':
    case 'u':
      return CharClass::Vowel;
    default:
      return CharClass::Consonant;
  }
}

std::vector<std::string> group_units(std::string_view word,
                                     const DigraphSet& digraphs) {
  std::vector<std::string> units;
  std::size_t i = 0;
  while (i < word.size()) {
    if (i + 1 < word.size() &&
        classify_char(word[i]) == CharClass::Consonant &&
        digraphs.count(std::string(word.substr(i, 2)))) {
      units.emplace_back(word.substr(i, 2));
      i += 2;
    } else {
      units.emplace_back(word.substr(i, 1));
      i += 1;
    }
  }
  return units;
}

ChunkPattern classify_chunk(const std::vector<std::string>& units) {
  std::string shape;
  for (const auto& u : units) {
    switch (classify_char(u[0])) {
      case CharClass::Vowel: shape.push_back('V'); break;
      case CharClass::Consonant: shape.push_back('C'); break;
      case CharClass::Other: return ChunkPattern::Other;
    }
  }
  static const std::array<std::pair<std::string_view, ChunkPattern>, 10> table{{
      {"V", ChunkPattern::V},
      {"CV", ChunkPattern::CV},
      {"VC", ChunkPattern::VC},
      {"CVC", ChunkPattern::CVC},
      {"CCVC", ChunkPattern::CCVC},
      {"CVCC", ChunkPattern::CVCC},
      {"VCC", ChunkPattern::VCC},
      {"C", ChunkPattern::C},
      {"CC", ChunkPattern::CC},
      {"CCV", ChunkPattern::CCV},
  }};
  for (const auto& [key, value] : table) {
    if (shape == key) return value;
  }
  return ChunkPattern::Other;
}

std::string letters_only_lower(std::string_view word) {
  std::string letters;
  letters.reserve(word.size());
  for (unsigned char c : word) {
    if (std::isalpha(c)) letters.push_back(static_cast<char>(std::tolower(c)));
  }
  return letters;
}

SegmentedWord segment_word(std::string_view word, const DigraphSet& digraphs) {
  const std::string letters = letters_only_lower(word);
  if (letters.empty()) {
    throw EmptyInputError("segment_word: no letters in input \"" +
                          std::string(word) + "\"");
  }

  const std::vector<std::string> units = group_units(letters, digraphs);
  SegmentedWord result;
  result.original = std::string(word);

  std::size_t i = 0;
  while (i < units.size()) {
    std::vector<std::string> chunk_units;
    while (i < units.size() &&
           classify_char(units[i][0]) == CharClass::Consonant) {
      chunk_units.push_back(units[i++]);
    }
    while (i < units.size() && classify_char(units[i][0]) == CharClass::Vowel) {
      chunk_units.push_back(units[i++]);
    }
    std::string surface;
    for (const auto& u : chunk_units) surface += u;
    result.chunks.push_back(PhonemeChunk{std::move(surface),
                                         classify_chunk(chunk_units),
                                         result.chunks.size()});
  }
  return result;
}

}  // namespace netrans
