// netrans/ner.hpp

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

#ifndef NETRANS_NER_HPP
#define NETRANS_NER_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace netrans {

enum class EntityCategory { Person, Location, Organization, Date, Time, Misc };
inline constexpr int kCategoryCount = 6;

std::string_view to_string(EntityCategory c);
// Case-insensitive; accepts the full names plus the usual NER-tool
// abbreviations (PER, LOC, ORG). nullopt for unknown names.
std::optional<EntityCategory> parse_category(std::string_view name);

struct TaggedEntity {
  std::string text;  // surface, possibly multi-word
  EntityCategory category = EntityCategory::Misc;
  int sentence_id = 0;
  std::size_t begin = 0;  // token span [begin, end)
  std::size_t end = 0;
};

struct TaggedSentence {
  int id = 0;
  std::vector<std::string> tokens;                 // tag-free surfaces
  std::vector<TaggedEntity> entities;              // disjoint, sorted spans
};

// Parses "Ram/Person is going to Bhopal/Location". Adjacent tokens with the
// same category merge into one entity; a single lowercase function word
// ("of", "the", ...) between two same-category tokens is absorbed. Trailing
// sentence punctuation after a tag becomes its own token.
// Throws ParseError for unknown categories or dangling '/'.
TaggedSentence parse_inline(std::string_view line, int sentence_id = 0);

// Inverse of parse_inline: every token inside an entity span carries the
// /Category suffix.
std::string render_inline(const TaggedSentence& sentence);

// token<TAB>label lines, blank line between sentences. Labels are O or a
// category name with optional B-/I- prefix; B- forces an entity boundary.
std::vector<TaggedSentence> parse_conll(std::istream& in);
std::string render_conll(const TaggedSentence& sentence);

// Heuristic stand-in for a real NER tool, for untagged text only:
// capitalized token runs (not sentence-initial) -> Misc, 4-digit years with
// an optional AD/BC -> Date, HH:MM -> Time. Low quality by construction;
// use external tagger output whenever available.
TaggedSentence fallback_tag(std::string_view line, int sentence_id = 0);

}  // namespace netrans

#endif  // NETRANS_NER_HPP
