#pragma once

// Bundled sample data and small helpers shared by the test binaries.

#include <fstream>
#include <memory>
#include <sstream>
#include <string>
#include <string_view>

#include "textgraph/activation.hpp"
#include "textgraph/corpus.hpp"
#include "textgraph/docgraph.hpp"

namespace fixtures {

inline std::string sample_path(std::string_view name) { return std::string(TEXTGRAPH_SAMPLE_DIR) + "/" + std::string(name); }

inline std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

struct Sample {
  textgraph::TextResources resources;
  textgraph::SynonymLexicon synonyms;
  textgraph::ReferenceCorpus corpus = textgraph::ReferenceCorpus::uniform();
  std::string text_a;
  std::string text_b;
};

inline const Sample& sample() {
  static const Sample s = [] {
    Sample out;
    out.resources.aliases = textgraph::AliasLexicon::load(sample_path("aliases.tsv"));
    out.synonyms = textgraph::SynonymLexicon::load(sample_path("synonyms.tsv"));
    out.corpus = textgraph::load_corpus(sample_path("reference.corpus"));
    out.text_a = slurp(sample_path("doc_a.txt"));
    out.text_b = slurp(sample_path("doc_b.txt"));
    return out;
  }();
  return s;
}

inline std::shared_ptr<const textgraph::DocumentGraph> make_graph(
    const std::string& doc_id, const std::string& text, const textgraph::TextResources& resources,
    const textgraph::ReferenceCorpus& corpus, const textgraph::SynonymLexicon& synonyms) {
  auto graph = std::make_shared<textgraph::DocumentGraph>(
      textgraph::build_graph(doc_id, textgraph::analyze(text, resources), corpus, synonyms, resources.aliases));
  textgraph::extract_phrases(*graph, {});
  return graph;
}

inline std::shared_ptr<const textgraph::DocumentGraph> sample_graph(char which) {
  const Sample& s = sample();
  return make_graph(which == 'a' ? "doc_a" : "doc_b", which == 'a' ? s.text_a : s.text_b, s.resources, s.corpus,
                    s.synonyms);
}

}  // namespace fixtures
