// tools/netrans_main.cpp
//
// Command-line front end for the English->Hindi named-entity
// transliteration pipeline: segment, train, tag, translit, eval.

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

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "netrans/config.hpp"
#include "netrans/decoder.hpp"
#include "netrans/errors.hpp"
#include "netrans/evaluation.hpp"
#include "netrans/knowledge_base.hpp"
#include "netrans/ner.hpp"
#include "netrans/phonology.hpp"
#include "netrans/pipeline.hpp"

namespace {

using namespace netrans;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;

struct CommonOpts {
  std::string config_path;
  std::string digraph_list;  // explicit flag overrides config file
  bool digraphs_set = false;
};

Config resolve_config(const CommonOpts& opts) {
  Config config;
  if (!opts.config_path.empty()) {
    config = load_config_file(opts.config_path);
  }
  if (opts.digraphs_set) {
    config.digraphs = parse_digraph_list(opts.digraph_list);
  }
  return config;
}

std::string fixed4(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4f", x);
  return buf;
}

int cmd_segment(const CommonOpts& common, const std::vector<std::string>& words) {
  Config config = resolve_config(common);
  for (const std::string& word : words) {
    SegmentedWord segmented = segment_word(word, config.digraphs);
    std::string chunks, patterns;
    for (const PhonemeChunk& c : segmented.chunks) {
      if (!chunks.empty()) {
        chunks.push_back('|');
        patterns.push_back('|');
      }
      chunks += c.surface;
      patterns += to_string(c.pattern);
    }
    std::cout << word << '\t' << chunks << '\t' << patterns << '\n';
  }
  return kExitOk;
}

int cmd_train(const CommonOpts& common, const std::vector<std::string>& pair_files,
              const std::vector<std::string>& word_pair_files,
              const std::string& out_path, const std::string& source) {
  Config config = resolve_config(common);
  CountTable counts;
  std::size_t pairs_read = 0, skipped = 0, unalignable = 0;

  for (const std::string& path : pair_files) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open pair corpus: " + path);
    IngestStats stats = ingest_pairs(in, counts);
    pairs_read += stats.pairs_ingested;
    skipped += stats.skipped;
    for (const auto& [line, why] : stats.issues) {
      std::cerr << path << ":" << line << ": skipped: " << why << '\n';
    }
  }
  for (const std::string& path : word_pair_files) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open word-pair corpus: " + path);
    WordPairIngestStats stats = ingest_word_pairs(in, counts, config.digraphs);
    pairs_read += stats.aligned;
    skipped += stats.skipped;
    unalignable += stats.unalignable;
    for (const auto& [line, why] : stats.issues) {
      std::cerr << path << ":" << line << ": skipped: " << why << '\n';
    }
  }

  KnowledgeBase kb = KnowledgeBase::estimate(
      counts, source.empty() ? "netrans train" : source);
  if (out_path == "-") {
    save_kb(kb, std::cout);
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw Error("cannot write knowledge base: " + out_path);
    save_kb(kb, out);
  }
  std::cerr << "pairs read: " << pairs_read << ", skipped: " << skipped
            << ", unalignable: " << unalignable
            << ", phonemes: " << kb.phoneme_count() << '\n';
  return kExitOk;
}

int cmd_tag() {
  std::string line;
  int sentence_id = 0;
  while (std::getline(std::cin, line)) {
    ++sentence_id;
    std::cout << render_inline(fallback_tag(line, sentence_id)) << '\n';
  }
  return kExitOk;
}

int cmd_translit(const CommonOpts& common, const std::string& kb_path,
                 const std::optional<std::string>& skip_list, bool show_chunks) {
  Config config = resolve_config(common);
  if (skip_list) config.skip = parse_skip_list(*skip_list);
  KnowledgeBase kb = load_kb_file(kb_path);
  TransliteratorConfig tc = config.transliterator_config();
  Transliterator transliterator(kb, tc);

  auto chunk_detail = [](const TransliterationResult& result) {
    std::string detail;
    for (const ChunkChoice& c : result.per_chunk) {
      if (!detail.empty()) detail.push_back('|');
      detail += c.english + ':' + c.hindi + ':' + fixed4(c.prob) + ':';
      switch (c.origin) {
        case Origin::Kb: detail += "KB"; break;
        case Origin::Fallback: detail += "Fallback"; break;
        case Origin::PassThrough: detail += "PassThrough"; break;
      }
    }
    return detail;
  };

  std::string line;
  int sentence_id = 0;
  while (std::getline(std::cin, line)) {
    ++sentence_id;
    if (line.find('/') != std::string::npos) {
      // pre-tagged sentence: emit one line per entity
      TaggedSentence sentence = parse_inline(line, sentence_id);
      for (const PipelineEntry& entry :
           run_pipeline(std::span(&sentence, 1), transliterator)) {
        std::cout << format_pipeline_entry(entry) << '\n';
      }
      continue;
    }
    // plain words: one line per whitespace token
    std::istringstream tokens(line);
    std::string token;
    while (tokens >> token) {
      TransliterationResult result = transliterator.transliterate_word(token);
      std::cout << token << '\t' << result.hindi << '\t'
                << fixed4(result.confidence);
      if (show_chunks) std::cout << '\t' << chunk_detail(result);
      std::cout << '\n';
    }
  }
  return kExitOk;
}

int cmd_eval(const CommonOpts& common, const std::string& in_path,
             const std::optional<std::string>& format_name) {
  Config config = resolve_config(common);
  if (format_name) {
    auto format = parse_report_format(*format_name);
    if (!format) throw UsageError("unknown format \"" + *format_name + "\"");
    config.format = *format;
  }
  std::vector<EvalRecord> records;
  if (in_path == "-") {
    records = read_eval_tsv(std::cin);
  } else {
    std::ifstream in(in_path, std::ios::binary);
    if (!in) throw Error("cannot open evaluation input: " + in_path);
    records = read_eval_tsv(in);
  }
  std::cout << render_report(score(records), config.format);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"English->Hindi named-entity transliteration pipeline"};
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::help);

  CommonOpts common;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", common.config_path, "flat key=value config file");
    sub->add_option("--digraphs", common.digraph_list,
                    "comma-separated consonant digraphs (replaces default set)")
        ->each([&](const std::string&) { common.digraphs_set = true; });
  };

  // segment
  std::vector<std::string> words;
  CLI::App* segment = app.add_subcommand("segment", "split words into phoneme chunks");
  segment->add_option("words", words, "words to segment")->required();
  add_common(segment);

  // train
  std::vector<std::string> pair_files, word_pair_files;
  std::string out_path, source;
  CLI::App* train = app.add_subcommand("train", "estimate a phoneme knowledge base");
  train->add_option("--pairs", pair_files, "english<TAB>hindi phoneme pair corpus");
  train->add_option("--word-pairs", word_pair_files,
                    "english_word<TAB>hindi_word corpus (positional aligner)");
  train->add_option("--out", out_path, "output KB path, '-' for stdout")->required();
  train->add_option("--source", source, "source description stored in metadata");
  add_common(train);

  // tag
  CLI::App* tag = app.add_subcommand(
      "tag", "heuristic fallback tagger: untagged stdin -> inline format");

  // translit
  std::string kb_path;
  std::optional<std::string> skip_list;
  bool show_chunks = false;
  CLI::App* translit = app.add_subcommand(
      "translit", "transliterate words or pre-tagged sentences from stdin");
  translit->add_option("--kb", kb_path, "knowledge base TSV")->required();
  translit->add_option("--skip", skip_list,
                       "categories to skip (default Misc; '' disables)");
  translit->add_flag("--show-chunks", show_chunks, "append per-chunk detail column");
  add_common(translit);

  // eval
  std::string eval_in;
  std::optional<std::string> format_name;
  CLI::App* eval = app.add_subcommand("eval", "score system output against references");
  eval->add_option("--in", eval_in, "evaluation TSV, '-' for stdin")->required();
  eval->add_option("--format", format_name, "text | tsv | jsonl");
  add_common(eval);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*segment) return cmd_segment(common, words);
    if (*train)
      return cmd_train(common, pair_files, word_pair_files, out_path, source);
    if (*tag) return cmd_tag();
    if (*translit) return cmd_translit(common, kb_path, skip_list, show_chunks);
    if (*eval) return cmd_eval(common, eval_in, format_name);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitData;
  }
  return kExitUsage;
}
