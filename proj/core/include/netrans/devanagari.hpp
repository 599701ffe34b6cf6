// netrans/devanagari.hpp

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

#ifndef NETRANS_DEVANAGARI_HPP
#define NETRANS_DEVANAGARI_HPP

#include <string>
#include <string_view>
#include <vector>

namespace netrans::deva {

inline constexpr char32_t kZwnj = 0x200C;
inline constexpr char32_t kZwj = 0x200D;
inline constexpr char32_t kVirama = 0x094D;
inline constexpr char32_t kNukta = 0x093C;

bool is_devanagari(char32_t cp);          // U+0900..U+097F
bool is_consonant(char32_t cp);           // क..ह plus nukta forms
bool is_independent_vowel(char32_t cp);   // अ..औ plus ॠ/ॡ etc.
bool is_vowel_sign(char32_t cp);          // dependent matras
bool is_modifier(char32_t cp);            // candrabindu/anusvara/visarga

// True when every codepoint is Devanagari, ZWJ or ZWNJ.
bool is_devanagari_text(std::string_view text);

// Canonical composition restricted to the Devanagari block: the precomposed
// nukta letters (क़..य़, ऩ, ऱ, ऴ) are composition exclusions, so NFC means
// decomposing them to base+nukta and putting combining marks in canonical
// order. Codepoints outside the block pass through untouched.
std::string nfc(std::string_view text);

// Splits a Devanagari word into orthographic syllables: zero or more
// (consonant+virama) links, then a consonant with an optional vowel sign, or
// an independent vowel; trailing candrabindu/anusvara/visarga attach to the
// syllable. Throws ParseError on codepoints that fit no syllable position.
std::vector<std::string> akshara_split(std::string_view word);

}  // namespace netrans::deva

#endif  // NETRANS_DEVANAGARI_HPP
