// netrans/utf8.hpp

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

#ifndef NETRANS_UTF8_HPP
#define NETRANS_UTF8_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace netrans::utf8 {

inline constexpr char32_t kReplacementChar = 0xFFFD;

// Decodes the codepoint starting at byte offset pos and advances pos past it.
// Malformed sequences decode as U+FFFD and advance one byte; never throws.
char32_t decode(std::string_view text, std::size_t& pos);

// Lossy full decode; malformed bytes become U+FFFD.
std::vector<char32_t> decode_all(std::string_view text);

void append(std::string& out, char32_t cp);
std::string encode(const std::vector<char32_t>& cps);

// True when the whole string is well-formed UTF-8.
bool is_well_formed(std::string_view text);

}  // namespace netrans::utf8

#endif  // NETRANS_UTF8_HPP
