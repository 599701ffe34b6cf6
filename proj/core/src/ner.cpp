// netrans/ner.cpp

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

#include "netrans/ner.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <set>
#include <sstream>

#include "netrans/errors.hpp"

namespace netrans {

namespace {

std::vector<std::string> split_whitespace(std::string_view line) {
  std::vector<std::string> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) tokens.emplace_back(line.substr(start, i - start));
  }
  return tokens;
}

std::string lower(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (unsigned char c : s) out.push_back(static_cast<char>(std::tolower(c)));
  return out;
}

bool is_sentence_punct(char c) {
  return c == '.' || c == ',' || c == ';' || c == ':' || c == '!' || c == '?';
}

// Lowercase connectives absorbed into a surrounding multi-word entity.
bool is_function_word(std::string_view token) {
  static const std::set<std::string, std::less<>> words = {
      "of", "the", "and", "for", "de", "da", "von", "van", "bin", "al"};
  return words.count(token) > 0;
}

std::string join_tokens(const std::vector<std::string>& tokens,
                        std::size_t begin, std::size_t end) {
  std::string out;
  for (std::size_t i = begin; i < end; ++i) {
    if (i > begin) out.push_back(' ');
    out += tokens[i];
  }
  return out;
}

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isdigit(c) != 0;
  });
}

}  // namespace

std::string_view to_string(EntityCategory c) {
  switch (c) {
    case EntityCategory::Person: return "Person";
    case EntityCategory::Location: return "Location";
    case EntityCategory::Organization: return "Organization";
    case EntityCategory::Date: return "Date";
    case EntityCategory::Time: return "Time";
    case EntityCategory::Misc: return "Misc";
  }
  return "Misc";
}

std::optional<EntityCategory> parse_category(std::string_view name) {
  const std::string key = lower(name);
  if (key == "person" || key == "per") return EntityCategory::Person;
  if (key == "location" || key == "loc") return EntityCategory::Location;
  if (key == "organization" || key == "organisation" || key == "org")
    return EntityCategory::Organization;
  if (key == "date") return EntityCategory::Date;
  if (key == "time") return EntityCategory::Time;
  if (key == "misc" || key == "miscellaneous") return EntityCategory::Misc;
  return std::nullopt;
}

TaggedSentence parse_inline(std::string_view line, int sentence_id) {
  TaggedSentence sentence;
  sentence.id = sentence_id;

  std::vector<std::optional<EntityCategory>> tags;
  std::size_t position = 0;
  for (const std::string& raw : split_whitespace(line)) {
    ++position;
    std::size_t slash = raw.rfind('/');
    if (slash == std::string::npos) {
      sentence.tokens.push_back(raw);
      tags.push_back(std::nullopt);
      continue;
    }
    std::string surface = raw.substr(0, slash);
    std::string suffix = raw.substr(slash + 1);
    std::string trailing;
    while (!suffix.empty() && is_sentence_punct(suffix.back())) {
      trailing.insert(trailing.begin(), suffix.back());
      suffix.pop_back();
    }
    if (surface.empty() || suffix.empty()) {
      throw ParseError("malformed tag \"" + raw + "\" at token " +
                       std::to_string(position));
    }
    auto category = parse_category(suffix);
    if (!category) {
      throw ParseError("unknown category \"" + suffix + "\" at token " +
                       std::to_string(position));
    }
    sentence.tokens.push_back(surface);
    tags.push_back(*category);
    if (!trailing.empty()) {
      sentence.tokens.push_back(trailing);
      tags.push_back(std::nullopt);
    }
  }

  // Merge adjacent same-category tokens, absorbing one lowercase connective.
  std::size_t i = 0;
  while (i < sentence.tokens.size()) {
    if (!tags[i]) {
      ++i;
      continue;
    }
    EntityCategory category = *tags[i];
    std::size_t begin = i;
    std::size_t end = i + 1;
    while (end < sentence.tokens.size()) {
      if (tags[end] && *tags[end] == category) {
        ++end;
      } else if (!tags[end] && is_function_word(sentence.tokens[end]) &&
                 end + 1 < sentence.tokens.size() && tags[end + 1] &&
                 *tags[end + 1] == category) {
        end += 2;
      } else {
        break;
      }
    }
    sentence.entities.push_back(TaggedEntity{
        join_tokens(sentence.tokens, begin, end), category, sentence_id,
        begin, end});
    i = end;
  }
  return sentence;
}

std::string render_inline(const TaggedSentence& sentence) {
  std::vector<std::optional<EntityCategory>> tags(sentence.tokens.size());
  for (const auto& e : sentence.entities) {
    for (std::size_t i = e.begin; i < e.end && i < tags.size(); ++i) {
      tags[i] = e.category;
    }
  }
  std::string out;
  for (std::size_t i = 0; i < sentence.tokens.size(); ++i) {
    if (i > 0) out.push_back(' ');
    out += sentence.tokens[i];
    if (tags[i]) {
      out.push_back('/');
      out += to_string(*tags[i]);
    }
  }
  return out;
}

std::vector<TaggedSentence> parse_conll(std::istream& in) {
  std::vector<TaggedSentence> sentences;
  TaggedSentence current;
  std::vector<std::optional<EntityCategory>> tags;
  std::vector<bool> boundary;  // true where B- forces a new entity
  std::size_t line_no = 0;

  auto flush = [&]() {
    if (current.tokens.empty()) return;
    std::size_t i = 0;
    while (i < current.tokens.size()) {
      if (!tags[i]) {
        ++i;
        continue;
      }
      EntityCategory category = *tags[i];
      std::size_t begin = i;
      std::size_t end = i + 1;
      while (end < current.tokens.size() && tags[end] &&
             *tags[end] == category && !boundary[end]) {
        ++end;
      }
      current.entities.push_back(TaggedEntity{
          join_tokens(current.tokens, begin, end), category,
          current.id, begin, end});
      i = end;
    }
    sentences.push_back(std::move(current));
    current = TaggedSentence{};
    current.id = static_cast<int>(sentences.size());
    tags.clear();
    boundary.clear();
  };

  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) {
      flush();
      continue;
    }
    std::size_t tab = line.find('\t');
    if (tab == std::string::npos || line.find('\t', tab + 1) != std::string::npos) {
      throw ParseError("expected 2 tab-separated columns", line_no);
    }
    std::string token = line.substr(0, tab);
    std::string label = line.substr(tab + 1);
    if (token.empty()) {
      throw ParseError("empty token", line_no);
    }
    current.tokens.push_back(token);
    if (label == "O" || label == "o") {
      tags.push_back(std::nullopt);
      boundary.push_back(false);
      continue;
    }
    bool begins = false;
    std::string_view name = label;
    if (name.size() > 2 && (name.substr(0, 2) == "B-" || name.substr(0, 2) == "I-")) {
      begins = name.substr(0, 2) == "B-";
      name.remove_prefix(2);
    }
    auto category = parse_category(name);
    if (!category) {
      throw ParseError("unknown category label \"" + label + "\"", line_no);
    }
    tags.push_back(*category);
    boundary.push_back(begins);
  }
  flush();
  return sentences;
}

std::string render_conll(const TaggedSentence& sentence) {
  std::vector<std::optional<EntityCategory>> tags(sentence.tokens.size());
  std::vector<bool> begins(sentence.tokens.size(), false);
  for (const auto& e : sentence.entities) {
    for (std::size_t i = e.begin; i < e.end && i < tags.size(); ++i) {
      tags[i] = e.category;
      begins[i] = (i == e.begin);
    }
  }
  std::string out;
  for (std::size_t i = 0; i < sentence.tokens.size(); ++i) {
    out += sentence.tokens[i];
    out.push_back('\t');
    if (tags[i]) {
      out += begins[i] ? "B-" : "I-";
      out += to_string(*tags[i]);
    } else {
      out.push_back('O');
    }
    out.push_back('\n');
  }
  return out;
}

TaggedSentence fallback_tag(std::string_view line, int sentence_id) {
  TaggedSentence sentence;
  sentence.id = sentence_id;
  sentence.tokens = split_whitespace(line);
  const auto& tokens = sentence.tokens;

  auto is_year = [](const std::string& t) {
    return t.size() == 4 && all_digits(t);
  };
  auto is_era = [](const std::string& t) {
    std::string s = t;
    if (!s.empty() && s.back() == '.') s.pop_back();
    return s == "AD" || s == "BC";
  };
  auto is_clock = [](const std::string& t) {
    std::size_t colon = t.find(':');
    if (colon == std::string::npos || colon == 0 || colon > 2) return false;
    if (t.size() - colon - 1 != 2) return false;
    return all_digits(t.substr(0, colon)) && all_digits(t.substr(colon + 1));
  };
  auto starts_upper = [](const std::string& t) {
    return !t.empty() && t[0] >= 'A' && t[0] <= 'Z';
  };

  std::size_t i = 0;
  while (i < tokens.size()) {
    if (is_year(tokens[i])) {
      std::size_t end = i + 1;
      if (end < tokens.size() && is_era(tokens[end])) ++end;
      sentence.entities.push_back(TaggedEntity{
          join_tokens(tokens, i, end), EntityCategory::Date, sentence_id, i, end});
      i = end;
    } else if (is_clock(tokens[i])) {
      sentence.entities.push_back(TaggedEntity{
          tokens[i], EntityCategory::Time, sentence_id, i, i + 1});
      ++i;
    } else if (i > 0 && starts_upper(tokens[i])) {
      std::size_t end = i + 1;
      while (end < tokens.size() && starts_upper(tokens[end]) &&
             !is_year(tokens[end])) {
        ++end;
      }
      sentence.entities.push_back(TaggedEntity{
          join_tokens(tokens, i, end), EntityCategory::Misc, sentence_id, i, end});
      i = end;
    } else {
      ++i;
    }
  }
  return sentence;
}

}  // namespace netrans
