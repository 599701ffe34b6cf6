// netrans/devanagari.cpp

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

#include "netrans/devanagari.hpp"

#include <algorithm>

#include "netrans/errors.hpp"
#include "netrans/utf8.hpp"

namespace netrans::deva {

namespace {

// Canonical combining classes inside the block; everything else is 0.
int combining_class(char32_t cp) {
  switch (cp) {
    case 0x093C: return 7;    // nukta
    case 0x094D: return 9;    // virama
    case 0x0951: return 230;  // udatta
    case 0x0952: return 220;  // anudatta
    case 0x0953: return 230;  // grave accent
    case 0x0954: return 230;  // acute accent
    default: return 0;
  }
}

// Precomposed nukta letters; all are composition exclusions, so their NFC
// form is the decomposed pair.
char32_t nukta_base(char32_t cp) {
  switch (cp) {
    case 0x0929: return 0x0928;  // ऩ
    case 0x0931: return 0x0930;  // ऱ
    case 0x0934: return 0x0933;  // ऴ
    case 0x0958: return 0x0915;  // क़
    case 0x0959: return 0x0916;  // ख़
    case 0x095A: return 0x0917;  // ग़
    case 0x095B: return 0x091C;  // ज़
    case 0x095C: return 0x0921;  // ड़
    case 0x095D: return 0x0922;  // ढ़
    case 0x095E: return 0x092B;  // फ़
    case 0x095F: return 0x092F;  // य़
    default: return 0;
  }
}

}  // namespace

bool is_devanagari(char32_t cp) { return cp >= 0x0900 && cp <= 0x097F; }

bool is_consonant(char32_t cp) {
  return (cp >= 0x0915 && cp <= 0x0939) || (cp >= 0x0958 && cp <= 0x095F) ||
         (cp >= 0x0979 && cp <= 0x097F);
}

bool is_independent_vowel(char32_t cp) {
  return (cp >= 0x0904 && cp <= 0x0914) || cp == 0x0960 || cp == 0x0961 ||
         (cp >= 0x0972 && cp <= 0x0977);
}

bool is_vowel_sign(char32_t cp) {
  return cp == 0x093A || cp == 0x093B || (cp >= 0x093E && cp <= 0x094C) ||
         cp == 0x094E || cp == 0x094F || (cp >= 0x0955 && cp <= 0x0957) ||
         cp == 0x0962 || cp == 0x0963;
}

bool is_modifier(char32_t cp) { return cp >= 0x0900 && cp <= 0x0903; }

bool is_devanagari_text(std::string_view text) {
  if (text.empty() || !utf8::is_well_formed(text)) return false;
  for (char32_t cp : utf8::decode_all(text)) {
    if (!is_devanagari(cp) && cp != kZwj && cp != kZwnj) return false;
  }
  return true;
}

std::string nfc(std::string_view text) {
  std::vector<char32_t> cps;
  cps.reserve(text.size());
  std::size_t pos = 0;
  while (pos < text.size()) {
    char32_t cp = utf8::decode(text, pos);
    if (char32_t base = nukta_base(cp)) {
      cps.push_back(base);
      cps.push_back(kNukta);
    } else {
      cps.push_back(cp);
    }
  }
  // Canonical ordering: stable-sort maximal runs of nonzero-ccc marks.
  std::size_t i = 0;
  while (i < cps.size()) {
    if (combining_class(cps[i]) == 0) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < cps.size() && combining_class(cps[j]) != 0) ++j;
    std::stable_sort(cps.begin() + i, cps.begin() + j,
                     [](char32_t a, char32_t b) {
                       return combining_class(a) < combining_class(b);
                     });
    i = j;
  }
  return utf8::encode(cps);
}

std::vector<std::string> akshara_split(std::string_view word) {
  const std::string normalized = nfc(word);
  const std::vector<char32_t> cps = utf8::decode_all(normalized);
  std::vector<std::string> out;
  std::size_t i = 0;
  const std::size_t n = cps.size();

  auto take_consonant = [&](std::vector<char32_t>& akshara) {
    akshara.push_back(cps[i++]);
    if (i < n && cps[i] == kNukta) akshara.push_back(cps[i++]);
  };

  while (i < n) {
    std::vector<char32_t> akshara;
    if (is_independent_vowel(cps[i])) {
      akshara.push_back(cps[i++]);
    } else if (is_consonant(cps[i])) {
      take_consonant(akshara);
      while (i < n && cps[i] == kVirama) {
        // consonant cluster link, or a word-final dead consonant
        akshara.push_back(cps[i++]);
        if (i < n && (cps[i] == kZwj || cps[i] == kZwnj)) akshara.push_back(cps[i++]);
        if (i < n && is_consonant(cps[i])) {
          take_consonant(akshara);
        } else {
          break;
        }
      }
      if (i < n && is_vowel_sign(cps[i])) akshara.push_back(cps[i++]);
    } else {
      throw ParseError("unexpected codepoint in Devanagari word: U+" +
                       [](char32_t cp) {
                         static const char* hex = "0123456789ABCDEF";
                         std::string s;
                         for (int shift = 12; shift >= 0; shift -= 4)
                           s.push_back(hex[(cp >> shift) & 0xF]);
                         return s;
                       }(cps[i]));
    }
    while (i < n && is_modifier(cps[i])) akshara.push_back(cps[i++]);
    out.push_back(utf8::encode(akshara));
  }
  return out;
}

}  // namespace netrans::deva
