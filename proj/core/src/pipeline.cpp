// netrans/pipeline.cpp

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

#include "netrans/pipeline.hpp"

#include <cstdio>

namespace netrans {

std::vector<PipelineEntry> run_pipeline(
    std::span<const TaggedSentence> sentences,
    const Transliterator& transliterator) {
  std::vector<PipelineEntry> out;
  for (const TaggedSentence& sentence : sentences) {
    for (const TaggedEntity& entity : sentence.entities) {
      EntityResult result = transliterator.transliterate_entity(entity);
      out.push_back(PipelineEntry{sentence.id, entity.text, entity.category,
                                  std::move(result.hindi), result.confidence,
                                  result.low_confidence});
    }
  }
  return out;
}

std::string format_pipeline_entry(const PipelineEntry& entry) {
  std::string line = std::to_string(entry.sentence_id) + '\t' +
                     entry.entity_text + '\t' +
                     std::string(to_string(entry.category)) + '\t';
  if (entry.hindi) {
    char conf[32];
    std::snprintf(conf, sizeof(conf), "%.4f", entry.confidence);
    line += *entry.hindi + '\t' + conf;
  } else {
    line += "-\t-";
  }
  return line;
}

}  // namespace netrans
