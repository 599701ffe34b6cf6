// netrans/pipeline.hpp

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

#ifndef NETRANS_PIPELINE_HPP
#define NETRANS_PIPELINE_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "netrans/decoder.hpp"
#include "netrans/ner.hpp"

namespace netrans {

struct PipelineEntry {
  int sentence_id = 0;
  std::string entity_text;
  EntityCategory category = EntityCategory::Misc;
  std::optional<std::string> hindi;  // nullopt when skipped
  double confidence = 1.0;
  bool low_confidence = false;
};

// Tagged sentences -> per-entity transliterations, in input order.
std::vector<PipelineEntry> run_pipeline(std::span<const TaggedSentence> sentences,
                                        const Transliterator& transliterator);

// One TSV line: sentence_id, entity, category, output ("-" when skipped),
// confidence to 4 decimals ("-" when skipped).
std::string format_pipeline_entry(const PipelineEntry& entry);

}  // namespace netrans

#endif  // NETRANS_PIPELINE_HPP
