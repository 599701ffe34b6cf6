// netrans/config.hpp

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

#ifndef NETRANS_CONFIG_HPP
#define NETRANS_CONFIG_HPP

#include <iosfwd>
#include <optional>
#include <string>

#include "netrans/decoder.hpp"
#include "netrans/evaluation.hpp"

namespace netrans {

// Flat key=value configuration. Recognized keys:
//   digraphs       comma-separated digraph list (replaces the default set)
//   skip           comma-separated category names ("" empties the set)
//   fallback_table path to a unit<TAB>hindi override table
//   format         text | tsv | jsonl
// Unknown keys are rejected. Defaults reproduce the stock pipeline.
struct Config {
  DigraphSet digraphs = default_digraphs();
  SkipSet skip = default_skip_set();
  std::optional<std::string> fallback_table_path;
  ReportFormat format = ReportFormat::Text;

  TransliteratorConfig transliterator_config() const;
};

Config parse_config(std::istream& in);
Config load_config_file(const std::string& path);

// Comma-separated category list, e.g. "Misc,Organization". Empty string
// yields the empty set. Throws UsageError on unknown names.
SkipSet parse_skip_list(std::string_view list);
DigraphSet parse_digraph_list(std::string_view list);

}  // namespace netrans

#endif  // NETRANS_CONFIG_HPP
