// netrans/phonology.hpp

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

#ifndef NETRANS_PHONOLOGY_HPP
#define NETRANS_PHONOLOGY_HPP

#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace netrans {

enum class CharClass { Vowel, Consonant, Other };

// Consonant/vowel shape of one chunk. V..VCC are the base pattern set;
// C, CC and CCV cover shapes the segmentation legitimately produces
// (word-final bare consonants, cluster onsets); anything else is Other.
enum class ChunkPattern { V, CV, VC, CVC, CCVC, CVCC, VCC, C, CC, CCV, Other };

std::string_view to_string(ChunkPattern p);

struct PhonemeChunk {
  std::string surface;   // lowercase letters
  ChunkPattern pattern;
  std::size_t index;     // 0-based position in the word
};

struct SegmentedWord {
  std::string original;
  std::vector<PhonemeChunk> chunks;
};

// Consonant digraphs treated as a single consonant unit.
using DigraphSet = std::set<std::string>;
const DigraphSet& default_digraphs();  // bh ch dh gh jh kh ph sh th lh

// a/e/i/o/u (either case) are vowels, other Latin letters consonants,
// everything else Other. 'y' and 'w' classify as consonants.
CharClass classify_char(char32_t c);

// Splits a lowercase all-letter string into single-vowel, single-consonant
// and digraph units. A digraph counts as one consonant unit downstream.
std::vector<std::string> group_units(std::string_view word,
                                     const DigraphSet& digraphs = default_digraphs());

// Pattern of a unit sequence (each unit one C or V position).
ChunkPattern classify_chunk(const std::vector<std::string>& units);

// Onset-maximal segmentation: each chunk is a maximal consonant-unit run
// followed by a maximal vowel-unit run (C*V+); a trailing vowel-less
// consonant run forms a final all-consonant chunk. Operates on the
// case-folded letters of word; non-letters are stripped first.
// Throws EmptyInputError when no letters remain.
SegmentedWord segment_word(std::string_view word,
                           const DigraphSet& digraphs = default_digraphs());

// Case-folded letters of word, in order (what segment_word reconstructs).
std::string letters_only_lower(std::string_view word);

}  // namespace netrans

#endif  // NETRANS_PHONOLOGY_HPP
