#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "textgraph/corpus.hpp"
#include "textgraph/textprep.hpp"

namespace textgraph {

enum class EdgeKind { kAdj, kSame, kPhrase, kName, kCoref, kAlpha };

std::string_view to_string(EdgeKind kind);

// Kind plus the strength carried by ALPHA (synonymy) links. Strength is
// present iff kind == kAlpha, and then lies in (0, 1].
class EdgeType {
 public:
  static EdgeType plain(EdgeKind kind);
  static EdgeType alpha(double strength);

  EdgeKind kind() const { return kind_; }
  const std::optional<double>& strength() const { return strength_; }

  auto operator<=>(const EdgeType&) const = default;

 private:
  EdgeType(EdgeKind kind, std::optional<double> strength) : kind_(kind), strength_(strength) {}

  EdgeKind kind_;
  std::optional<double> strength_;
};

// Undirected; stored with from < to.
struct Edge {
  std::size_t from = 0;
  std::size_t to = 0;
  EdgeType type = EdgeType::plain(EdgeKind::kAdj);

  auto operator<=>(const Edge&) const = default;
};

struct GraphNode {
  Token token;
  double weight = 0.0;  // tf.idf of the token's stem; 0 for stop words
};

struct PhraseCandidate {
  TokenRange range;
  std::vector<std::size_t> content_words;  // positions, in order
  std::vector<int> theta;                  // 0 if the stem was consumed by an earlier candidate
  double length_bonus = 0.0;
  double weight = 0.0;
};

// Symmetric stem-pair strengths used for ALPHA links and synonym concept
// matching. File format: `<word_a>\t<word_b>\t<strength in (0,1]>`; both
// words are stemmed on load.
class SynonymLexicon {
 public:
  void add(std::string_view a, std::string_view b, double strength);
  std::optional<double> strength(std::string_view stem_a, std::string_view stem_b) const;
  // Stems paired with `stem`, in ascending order.
  std::vector<std::pair<std::string, double>> neighbors(std::string_view stem) const;
  bool empty() const { return table_.empty(); }
  std::size_t size() const { return table_.size() / 2; }

  static SynonymLexicon parse(std::string_view contents, const std::string& source);
  static SynonymLexicon load(const std::string& path);

 private:
  std::map<std::pair<std::string, std::string>, double, std::less<>> table_;
};

struct PhraseParams {
  double beta_coefficient = 0.05;

  double beta(std::size_t content_words) const { return beta_coefficient * static_cast<double>(content_words); }
};

// Positional occurrence graph of one document.
struct DocumentGraph {
  std::string doc_id;
  std::string text;
  std::vector<GraphNode> nodes;      // indexed by token position
  std::vector<Edge> edges;           // sorted, unique
  std::vector<PhraseCandidate> phrases;
  std::vector<NameMention> names;
  std::vector<TokenRange> sentences;  // token range of each sentence

  std::size_t size() const { return nodes.size(); }
  const Token& token(std::size_t position) const { return nodes[position].token; }
  double max_weight() const;
  // Character extent of a sentence, widened over adjacent punctuation and quotes.
  CharSpan sentence_span(std::size_t sentence_index) const;
  std::string sentence_text(std::size_t sentence_index) const;
};

// tf * (ln n - ln df + 1). Requires n >= 1 and 1 <= df <= n.
double tfidf_weight(std::uint64_t tf, std::uint64_t df, std::uint64_t n);

// Nodes with tf.idf weights over within-document stem counts, plus ADJ, SAME,
// NAME, COREF and ALPHA edges. Phrases are added by extract_phrases.
DocumentGraph build_graph(std::string doc_id, AnalyzedText analyzed, const ReferenceCorpus& corpus,
                          const SynonymLexicon& synonyms, const AliasLexicon& aliases);

// Maximal ADJ* NOUN+ runs in document order, weighted as
//   beta(n) + sum(theta_k * dw_k) / n,
// and installs PHRASE links inside each run. Stores and returns the list.
const std::vector<PhraseCandidate>& extract_phrases(DocumentGraph& graph, const PhraseParams& params);

// Deterministic text dump: nodes, edges, phrases and names in canonical order.
std::string dump_graph(const DocumentGraph& graph);

}  // namespace textgraph
