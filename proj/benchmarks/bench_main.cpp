#include <benchmark/benchmark.h>

#include <random>
#include <string>
#include <vector>

#include "netrans/decoder.hpp"
#include "netrans/knowledge_base.hpp"
#include "netrans/phonology.hpp"

using namespace netrans;

namespace {

std::vector<std::string> random_words(std::size_t n, unsigned seed) {
  std::mt19937 rng(seed);
  std::vector<std::string> words(n);
  for (auto& w : words) {
    int len = 3 + static_cast<int>(rng() % 10);
    for (int i = 0; i < len; ++i)
      w += static_cast<char>('a' + rng() % 26);
  }
  return words;
}

KnowledgeBase bench_kb() {
  CountTable table;
  std::mt19937 rng(42);
  const char* hindi[] = {"रा", "र", "मे", "म", "श", "भो", "पा", "ल", "सु"};
  for (const auto& word : random_words(500, 7)) {
    for (const auto& chunk : segment_word(word).chunks)
      table.add(chunk.surface, hindi[rng() % 9], 1 + rng() % 100);
  }
  return KnowledgeBase::estimate(table);
}

void BM_SegmentWord(benchmark::State& state) {
  auto words = random_words(1024, 11);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(segment_word(words[i++ & 1023]));
  }
}
BENCHMARK(BM_SegmentWord);

void BM_KbLookup(benchmark::State& state) {
  KnowledgeBase kb = bench_kb();
  auto words = random_words(1024, 11);
  std::vector<std::string> keys;
  for (const auto& w : words)
    for (const auto& c : segment_word(w).chunks) keys.push_back(c.surface);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(kb.lookup(keys[i++ % keys.size()]));
  }
}
BENCHMARK(BM_KbLookup);

void BM_TransliterateWord(benchmark::State& state) {
  KnowledgeBase kb = bench_kb();
  Transliterator t(kb, TransliteratorConfig{});
  auto words = random_words(1024, 13);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(t.transliterate_word(words[i++ & 1023]));
  }
}
BENCHMARK(BM_TransliterateWord);

}  // namespace

BENCHMARK_MAIN();
