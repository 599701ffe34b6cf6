// netrans/decoder.hpp

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

#ifndef NETRANS_DECODER_HPP
#define NETRANS_DECODER_HPP

#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "netrans/knowledge_base.hpp"
#include "netrans/ner.hpp"
#include "netrans/phonology.hpp"

namespace netrans {

enum class Origin { Kb, Fallback, PassThrough };

struct ChunkChoice {
  std::string english;
  std::string hindi;
  double prob = 1.0;  // 1.0 for Fallback/PassThrough, which flag low_confidence
  Origin origin = Origin::Kb;
};

struct TransliterationResult {
  std::string source;
  std::string hindi;
  std::vector<ChunkChoice> per_chunk;
  double confidence = 1.0;  // product of KB-chosen probabilities
  bool low_confidence = false;
};

// Letter/digraph unit -> Devanagari, used when a chunk is absent from the
// KB. Covers all 26 letters and the default digraphs.
using FallbackTable = std::map<std::string, std::string>;
const FallbackTable& default_fallback_table();
// unit<TAB>hindi file; every value must be Devanagari. Throws ParseError.
FallbackTable load_fallback_table(std::istream& in);

using SkipSet = std::set<EntityCategory>;
inline SkipSet default_skip_set() { return {EntityCategory::Misc}; }

struct TransliteratorConfig {
  DigraphSet digraphs = default_digraphs();
  FallbackTable fallback = default_fallback_table();
  SkipSet skip = default_skip_set();
};

struct EntityResult {
  std::string source;
  std::optional<std::string> hindi;  // nullopt = category in the skip set
  double confidence = 1.0;
  bool low_confidence = false;
  std::vector<TransliterationResult> words;
};

// Per-chunk maximum-probability conversion over an immutable KB. Because
// chunk choices are independent, the per-chunk argmax is the global argmax
// over product-scored candidate combinations.
class Transliterator {
 public:
  explicit Transliterator(const KnowledgeBase& kb,
                          TransliteratorConfig config = {});

  // Top KB candidate for one chunk, or the letter-level fallback rendering
  // when the chunk is unknown. Always produces output for letter chunks.
  ChunkChoice choose_phoneme(std::string_view chunk) const;

  // Whole-word conversion. Letter spans are segmented and decoded; digit
  // and punctuation spans pass through unchanged. Throws EmptyInputError
  // on an empty word.
  TransliterationResult transliterate_word(std::string_view word) const;

  // Token-wise conversion of a (possibly multi-word) entity, joined with
  // single spaces. Entities in the skip set yield no output.
  EntityResult transliterate_entity(const TaggedEntity& entity) const;

  const TransliteratorConfig& config() const { return config_; }

 private:
  const KnowledgeBase& kb_;
  TransliteratorConfig config_;
};

}  // namespace netrans

#endif  // NETRANS_DECODER_HPP
