// netrans/config.cpp

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

#include "netrans/config.hpp"

#include <fstream>
#include <istream>

#include "netrans/errors.hpp"

namespace netrans {

namespace {

std::vector<std::string> split_commas(std::string_view list) {
  std::vector<std::string> items;
  std::size_t start = 0;
  while (start <= list.size()) {
    std::size_t comma = list.find(',', start);
    std::string_view item = comma == std::string_view::npos
                                ? list.substr(start)
                                : list.substr(start, comma - start);
    if (!item.empty()) items.emplace_back(item);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return items;
}

}  // namespace

SkipSet parse_skip_list(std::string_view list) {
  SkipSet skip;
  for (const std::string& name : split_commas(list)) {
    auto category = parse_category(name);
    if (!category) {
      throw UsageError("unknown category in skip list: \"" + name + "\"");
    }
    skip.insert(*category);
  }
  return skip;
}

DigraphSet parse_digraph_list(std::string_view list) {
  DigraphSet digraphs;
  for (const std::string& d : split_commas(list)) {
    if (d.size() != 2 || classify_char(d[0]) != CharClass::Consonant ||
        classify_char(d[1]) == CharClass::Other) {
      throw UsageError("bad digraph \"" + d +
                       "\": want two lowercase letters starting with a consonant");
    }
    digraphs.insert(d);
  }
  return digraphs;
}

TransliteratorConfig Config::transliterator_config() const {
  TransliteratorConfig tc;
  tc.digraphs = digraphs;
  tc.skip = skip;
  if (fallback_table_path) {
    std::ifstream in(*fallback_table_path, std::ios::binary);
    if (!in) {
      throw Error("cannot open fallback table: " + *fallback_table_path);
    }
    tc.fallback = load_fallback_table(in);
  }
  return tc;
}

Config parse_config(std::istream& in) {
  Config config;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::size_t eq = line.find('=');
    if (eq == std::string::npos) {
      throw ParseError("expected key=value", line_no);
    }
    std::string key = line.substr(0, eq);
    std::string value = line.substr(eq + 1);
    if (key == "digraphs") {
      config.digraphs = parse_digraph_list(value);
    } else if (key == "skip") {
      config.skip = parse_skip_list(value);
    } else if (key == "fallback_table") {
      config.fallback_table_path = value;
    } else if (key == "format") {
      auto format = parse_report_format(value);
      if (!format) {
        throw ParseError("unknown format \"" + value + "\"", line_no);
      }
      config.format = *format;
    } else {
      throw ParseError("unknown config key \"" + key + "\"", line_no);
    }
  }
  return config;
}

Config load_config_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error("cannot open config: " + path);
  }
  return parse_config(in);
}

}  // namespace netrans
