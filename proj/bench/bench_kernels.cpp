// Parallel kernels against their serial reference versions.

#include <benchmark/benchmark.h>

#include <random>
#include <string>
#include <vector>

#include "textgraph/kernels.hpp"

namespace {

std::vector<std::string> synthetic_documents(std::size_t count, std::size_t words) {
  static const std::vector<std::string> vocabulary = {
      "rebels",   "embassy", "hostages", "government", "police", "talks",   "released", "capital",
      "soldiers", "guards",  "minister", "residence",  "crisis", "demands", "prisoners", "negotiator",
      "the",      "of",      "and",      "in",         "a",      "was",     "were",      "on"};
  std::mt19937 rng(42);
  std::uniform_int_distribution<std::size_t> pick(0, vocabulary.size() - 1);
  std::vector<std::string> docs(count);
  for (std::string& doc : docs) {
    for (std::size_t i = 0; i < words; ++i) {
      doc += vocabulary[pick(rng)];
      doc += (i % 12 == 11) ? ". " : " ";
    }
    // Distinct terms per document keep the vocabulary growing with the corpus.
    doc += "term" + std::to_string(rng() % 5000) + ".";
  }
  return docs;
}

const textgraph::StopWords& stopwords() {
  static const textgraph::StopWords words = textgraph::bundled_stopwords();
  return words;
}

void BM_CountDfParallel(benchmark::State& state) {
  const auto docs = synthetic_documents(static_cast<std::size_t>(state.range(0)), 300);
  for (auto _ : state) benchmark::DoNotOptimize(textgraph::kernels::count_document_frequencies(docs, stopwords()));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_CountDfSerial(benchmark::State& state) {
  const auto docs = synthetic_documents(static_cast<std::size_t>(state.range(0)), 300);
  for (auto _ : state) benchmark::DoNotOptimize(textgraph::kernels::count_document_frequencies_serial(docs, stopwords()));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_AnalyzeAllParallel(benchmark::State& state) {
  const auto docs = synthetic_documents(static_cast<std::size_t>(state.range(0)), 300);
  const textgraph::TextResources resources;
  for (auto _ : state) benchmark::DoNotOptimize(textgraph::kernels::analyze_all(docs, resources));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_AnalyzeAllSerial(benchmark::State& state) {
  const auto docs = synthetic_documents(static_cast<std::size_t>(state.range(0)), 300);
  const textgraph::TextResources resources;
  for (auto _ : state) benchmark::DoNotOptimize(textgraph::kernels::analyze_all_serial(docs, resources));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(BM_CountDfParallel)->Arg(100)->Arg(1000);
BENCHMARK(BM_CountDfSerial)->Arg(100)->Arg(1000);
BENCHMARK(BM_AnalyzeAllParallel)->Arg(100)->Arg(1000);
BENCHMARK(BM_AnalyzeAllSerial)->Arg(100)->Arg(1000);

BENCHMARK_MAIN();
