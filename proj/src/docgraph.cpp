#include "textgraph/docgraph.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>
#include <unordered_map>

#include "textgraph/errors.hpp"
#include "text_util.hpp"

namespace textgraph {

std::string_view to_string(EdgeKind kind) {
  switch (kind) {
    case EdgeKind::kAdj: return "ADJ";
    case EdgeKind::kSame: return "SAME";
    case EdgeKind::kPhrase: return "PHRASE";
    case EdgeKind::kName: return "NAME";
    case EdgeKind::kCoref: return "COREF";
    case EdgeKind::kAlpha: return "ALPHA";
  }
  return "?";
}

EdgeType EdgeType::plain(EdgeKind kind) {
  if (kind == EdgeKind::kAlpha) throw ContractError("ALPHA edges carry a strength");
  return EdgeType(kind, std::nullopt);
}

EdgeType EdgeType::alpha(double strength) {
  if (!(strength > 0.0 && strength <= 1.0)) throw ContractError("ALPHA strength must lie in (0, 1]");
  return EdgeType(EdgeKind::kAlpha, strength);
}

double tfidf_weight(std::uint64_t tf, std::uint64_t df, std::uint64_t n) {
  if (n < 1) throw ContractError("tfidf_weight: n must be >= 1");
  if (df < 1 || df > n) throw ContractError("tfidf_weight: df must lie in [1, n]");
  return static_cast<double>(tf) * (std::log(static_cast<double>(n)) - std::log(static_cast<double>(df)) + 1.0);
}

double DocumentGraph::max_weight() const {
  double best = 0.0;
  for (const GraphNode& node : nodes) best = std::max(best, node.weight);
  return best;
}

CharSpan DocumentGraph::sentence_span(std::size_t sentence_index) const {
  const TokenRange range = sentences.at(sentence_index);
  std::size_t begin = nodes[range.begin].token.span.begin;
  std::size_t end = nodes[range.end - 1].token.span.end;
  const std::size_t lower = range.begin == 0 ? 0 : nodes[range.begin - 1].token.span.end;
  const std::size_t limit = range.end < nodes.size() ? nodes[range.end].token.span.begin : text.size();
  while (begin > lower && !detail::is_ascii_space(text[begin - 1])) --begin;
  while (end < limit && !detail::is_ascii_space(text[end])) ++end;
  return {begin, end};
}

std::string DocumentGraph::sentence_text(std::size_t sentence_index) const {
  const CharSpan span = sentence_span(sentence_index);
  return text.substr(span.begin, span.end - span.begin);
}

DocumentGraph build_graph(std::string doc_id, AnalyzedText analyzed, const ReferenceCorpus& corpus,
                          const SynonymLexicon& synonyms, const AliasLexicon& aliases) {
  if (analyzed.tokens.empty()) throw EmptyDocumentError("document '" + doc_id + "' has no tokens");

  DocumentGraph graph;
  graph.doc_id = std::move(doc_id);
  graph.text = std::move(analyzed.text);
  graph.names = std::move(analyzed.names);

  std::unordered_map<std::string, std::uint64_t> tf;
  for (const Token& token : analyzed.tokens) {
    if (!token.is_stop()) ++tf[token.stem];
  }

  std::unordered_map<std::string, double> weight_of;
  graph.nodes.reserve(analyzed.tokens.size());
  for (Token& token : analyzed.tokens) {
    double weight = 0.0;
    if (!token.is_stop()) {
      auto it = weight_of.find(token.stem);
      if (it == weight_of.end()) {
        it = weight_of.emplace(token.stem, tfidf_weight(tf[token.stem], corpus.document_frequency(token.stem), corpus.n())).first;
      }
      weight = it->second;
    }
    graph.nodes.push_back({std::move(token), weight});
  }

  for (std::size_t p = 0; p < graph.nodes.size(); ++p) {
    const std::size_t sentence = graph.nodes[p].token.sentence_index;
    if (sentence == graph.sentences.size()) graph.sentences.push_back({p, p + 1});
    graph.sentences.back().end = p + 1;
  }

  std::vector<Edge>& edges = graph.edges;
  const auto link = [&edges](std::size_t a, std::size_t b, EdgeType type) {
    if (a == b) return;
    edges.push_back({std::min(a, b), std::max(a, b), type});
  };

  for (std::size_t p = 0; p + 1 < graph.nodes.size(); ++p) link(p, p + 1, EdgeType::plain(EdgeKind::kAdj));

  // SAME: each occurrence of a content stem linked to the next one.
  std::unordered_map<std::string, std::size_t> last_seen;
  std::map<std::string, std::vector<std::size_t>> occurrences;
  for (const GraphNode& node : graph.nodes) {
    if (node.token.is_stop()) continue;
    const auto [it, inserted] = last_seen.try_emplace(node.token.stem, node.token.position);
    if (!inserted) {
      link(it->second, node.token.position, EdgeType::plain(EdgeKind::kSame));
      it->second = node.token.position;
    }
    occurrences[node.token.stem].push_back(node.token.position);
  }

  for (const NameMention& mention : graph.names) {
    for (std::size_t p = mention.range.begin; p + 1 < mention.range.end; ++p) {
      link(p, p + 1, EdgeType::plain(EdgeKind::kName));
    }
  }

  // COREF between the heads of every pair of mentions that alias-match.
  for (std::size_t i = 0; i < graph.names.size(); ++i) {
    for (std::size_t j = i + 1; j < graph.names.size(); ++j) {
      if (alias_match(graph.names[i], graph.names[j], aliases)) {
        link(graph.names[i].range.begin, graph.names[j].range.begin, EdgeType::plain(EdgeKind::kCoref));
      }
    }
  }

  if (!synonyms.empty()) {
    for (const auto& [stem_a, positions_a] : occurrences) {
      for (const auto& [stem_b, strength] : synonyms.neighbors(stem_a)) {
        if (stem_b <= stem_a) continue;  // each unordered pair once
        const auto other = occurrences.find(stem_b);
        if (other == occurrences.end()) continue;
        for (std::size_t a : positions_a) {
          for (std::size_t b : other->second) link(a, b, EdgeType::alpha(strength));
        }
      }
    }
  }

  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return graph;
}

std::string dump_graph(const DocumentGraph& graph) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(6);
  out << "doc " << graph.doc_id << '\n';
  for (const GraphNode& node : graph.nodes) {
    const Token& t = node.token;
    out << "node " << t.position << ' ' << t.surface << " stem=" << t.stem << " pos=" << to_string(t.pos_tag)
        << " sent=" << t.sentence_index << " para=" << t.paragraph_index << " weight=" << node.weight << '\n';
  }
  for (const Edge& edge : graph.edges) {
    out << "edge " << edge.from << ' ' << edge.to << ' ' << to_string(edge.type.kind());
    if (edge.type.strength()) out << " strength=" << *edge.type.strength();
    out << '\n';
  }
  for (const PhraseCandidate& phrase : graph.phrases) {
    out << "phrase " << phrase.range.begin << ' ' << phrase.range.end << " weight=" << phrase.weight << '\n';
  }
  for (const NameMention& name : graph.names) {
    out << "name " << name.range.begin << ' ' << name.range.end << ' ' << to_string(name.type) << ' '
        << name.canonical << '\n';
  }
  return out.str();
}

}  // namespace textgraph
