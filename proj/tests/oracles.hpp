#pragma once

// Independent reference computations used to check the library. Each one
// follows the definition directly and favors clarity over speed.

#include <algorithm>
#include <cctype>
#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "textgraph/compare.hpp"
#include "textgraph/stemmer.hpp"

namespace oracle {

using namespace textgraph;

// tf * (1 + ln(n / df)) evaluated in extended precision.
inline double tfidf(std::uint64_t tf, std::uint64_t df, std::uint64_t n) {
  const long double ratio = static_cast<long double>(n) / static_cast<long double>(df);
  return static_cast<double>(static_cast<long double>(tf) * (1.0L + std::log(ratio)));
}

// Phrase weight recomputed from its stored parts.
inline double phrase_weight(const DocumentGraph& graph, const PhraseCandidate& phrase, double beta_coefficient) {
  double sum = 0.0;
  for (std::size_t i = 0; i < phrase.content_words.size(); ++i) {
    sum += phrase.theta[i] * graph.nodes[phrase.content_words[i]].weight;
  }
  const auto n = static_cast<double>(phrase.content_words.size());
  return beta_coefficient * n + sum / n;
}

struct OracleHop {
  std::size_t to;
  double factor;
};

// Hops between content nodes: along the token chain to the nearest content
// word on either side (stop words in between add distance), plus every typed
// edge whose endpoints are both content words.
inline std::vector<std::vector<OracleHop>> hop_graph(const DocumentGraph& g, const SpreadParams& params) {
  const std::size_t n = g.size();
  std::vector<std::vector<OracleHop>> hops(n);
  const auto stop = [&](std::size_t p) { return g.nodes[p].token.pos_tag == PosTag::kStop; };
  for (std::size_t u = 0; u < n; ++u) {
    if (stop(u)) continue;
    std::size_t v = u + 1;
    while (v < n && stop(v)) ++v;
    if (v >= n) continue;
    const Token& a = g.nodes[u].token;
    const Token& b = g.nodes[v].token;
    const double paragraphs = static_cast<double>(b.paragraph_index) - static_cast<double>(a.paragraph_index);
    const double sentences = static_cast<double>(b.sentence_index) - static_cast<double>(a.sentence_index);
    const double distance = static_cast<double>(v - u) + params.sentence_crossing_cost * (sentences - paragraphs) +
                            params.paragraph_crossing_cost * paragraphs;
    const double factor = std::exp(-params.decay_rate * distance);
    hops[u].push_back({v, factor});
    hops[v].push_back({u, factor});
  }
  for (const Edge& e : g.edges) {
    if (e.type.kind() == EdgeKind::kAdj || stop(e.from) || stop(e.to)) continue;
    double factor = 0.0;
    switch (e.type.kind()) {
      case EdgeKind::kSame: factor = params.link_weights.same; break;
      case EdgeKind::kPhrase: factor = params.link_weights.phrase; break;
      case EdgeKind::kName: factor = params.link_weights.name; break;
      case EdgeKind::kCoref: factor = params.link_weights.coref; break;
      case EdgeKind::kAlpha: factor = *e.type.strength(); break;
      case EdgeKind::kAdj: break;
    }
    hops[e.from].push_back({e.to, factor});
    hops[e.to].push_back({e.from, factor});
  }
  return hops;
}

// Maximum over all simple paths from any content entry of entry activation
// times the product of hop factors. -1 marks nodes no path reaches.
inline std::vector<double> path_max(const DocumentGraph& g, const std::vector<std::size_t>& entries,
                                    const SpreadParams& params) {
  const auto hops = hop_graph(g, params);
  double start = 0.0;
  for (const GraphNode& node : g.nodes) start = std::max(start, node.weight);
  std::vector<double> best(g.size(), -1.0);
  std::vector<char> on_path(g.size(), 0);
  std::function<void(std::size_t, double)> walk = [&](std::size_t u, double value) {
    best[u] = std::max(best[u], value);
    on_path[u] = 1;
    for (const OracleHop& h : hops[u]) {
      if (!on_path[h.to]) walk(h.to, value * h.factor);
    }
    on_path[u] = 0;
  };
  for (std::size_t e : entries) {
    if (g.nodes[e].token.pos_tag != PosTag::kStop) walk(e, start);
  }
  return best;
}

inline bool ranks_before(double score_a, std::size_t index_a, const std::string& doc_a, double score_b,
                         std::size_t index_b, const std::string& doc_b) {
  if (score_a != score_b) return score_a > score_b;
  if (index_a != index_b) return index_a < index_b;
  return doc_a < doc_b;
}

// Greedy selection replayed from the original scores: every step recomputes
// each sentence's remaining coverage from scratch.
inline std::vector<SentenceScore> greedy_replay(const std::vector<SentenceScore>& original, std::size_t k,
                                                SelectionMode mode) {
  std::vector<SentenceScore> out;
  if (mode == SelectionMode::kPlainTopK) {
    std::vector<const SentenceScore*> order;
    for (const SentenceScore& s : original) {
      if (!s.covered.empty()) order.push_back(&s);
    }
    std::sort(order.begin(), order.end(), [](const SentenceScore* a, const SentenceScore* b) {
      return ranks_before(a->score, a->sentence_index, a->doc_id, b->score, b->sentence_index, b->doc_id);
    });
    for (std::size_t i = 0; i < order.size() && i < k; ++i) out.push_back(*order[i]);
    return out;
  }
  std::set<ConceptKey> taken;
  std::vector<char> used(original.size(), 0);
  while (out.size() < k) {
    std::size_t best = original.size();
    SentenceScore best_value;
    for (std::size_t i = 0; i < original.size(); ++i) {
      if (used[i]) continue;
      SentenceScore candidate{original[i].doc_id, original[i].sentence_index, 0.0, {}};
      for (const auto& [key, activation] : original[i].covered) {
        if (!taken.contains(key)) candidate.covered.emplace(key, activation);
      }
      if (candidate.covered.empty()) continue;
      double sum = 0.0;
      for (const auto& [key, activation] : candidate.covered) sum += activation;
      candidate.score = sum / static_cast<double>(candidate.covered.size());
      if (best == original.size() || ranks_before(candidate.score, candidate.sentence_index, candidate.doc_id,
                                                  best_value.score, best_value.sentence_index, best_value.doc_id)) {
        best = i;
        best_value = candidate;
      }
    }
    if (best == original.size()) break;
    used[best] = 1;
    for (const auto& [key, activation] : best_value.covered) taken.insert(key);
    out.push_back(best_value);
  }
  return out;
}

// Concept universe and partition by plain set algebra over reached stems and
// reached mention canonicals.
struct ConceptSets {
  std::set<ConceptKey> common;
  std::set<ConceptKey> only_g1;
  std::set<ConceptKey> only_g2;
};

inline ConceptSets partition(const ActivatedGraph& g1, const ActivatedGraph& g2, const SynonymLexicon& synonyms,
                             const AliasLexicon& aliases) {
  const auto keys_of = [](const ActivatedGraph& a) {
    std::set<ConceptKey> keys;
    for (std::size_t p = 0; p < a.graph->size(); ++p) {
      if (a.is_reached(p)) keys.insert({ConceptKind::kWord, a.graph->nodes[p].token.stem});
    }
    for (const NameMention& m : a.graph->names) {
      bool hit = false;
      for (std::size_t p = m.range.begin; p < m.range.end; ++p) hit = hit || a.is_reached(p);
      if (hit) keys.insert({ConceptKind::kName, m.canonical});
    }
    return keys;
  };
  const std::set<ConceptKey> k1 = keys_of(g1);
  const std::set<ConceptKey> k2 = keys_of(g2);
  const auto matches = [&](const ConceptKey& key, const std::set<ConceptKey>& in) {
    for (const ConceptKey& other : in) {
      if (other.kind != key.kind) continue;
      if (key.kind == ConceptKind::kWord &&
          (other.text == key.text || synonyms.strength(key.text, other.text).has_value())) {
        return true;
      }
      if (key.kind == ConceptKind::kName && alias_match(key.text, other.text, aliases)) return true;
    }
    return false;
  };
  ConceptSets out;
  std::set<ConceptKey> all = k1;
  all.insert(k2.begin(), k2.end());
  for (const ConceptKey& key : all) {
    if (matches(key, k1) && matches(key, k2)) {
      out.common.insert(key);
    } else if (k1.contains(key)) {
      out.only_g1.insert(key);
    } else {
      out.only_g2.insert(key);
    }
  }
  return out;
}

// Random text over a fixed vocabulary: content words, stop words, capitalized
// names mid-sentence, sentence and paragraph breaks.
inline std::string random_text(std::mt19937& rng, std::size_t words, const std::vector<std::string>& content,
                               const std::vector<std::string>& names) {
  static const std::vector<std::string> stops = {"the", "of", "and", "in", "a", "was", "to", "with"};
  std::uniform_int_distribution<int> roll(0, 99);
  std::string text = "Start";
  for (std::size_t i = 1; i < words; ++i) {
    const int r = roll(rng);
    std::string word;
    if (r < 25) {
      word = stops[std::uniform_int_distribution<std::size_t>(0, stops.size() - 1)(rng)];
    } else if (r < 33 && !names.empty()) {
      word = names[std::uniform_int_distribution<std::size_t>(0, names.size() - 1)(rng)];
    } else {
      word = content[std::uniform_int_distribution<std::size_t>(0, content.size() - 1)(rng)];
    }
    const int gap = roll(rng);
    if (gap < 6) {
      text += ". ";
      word[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(word[0])));
    } else if (gap < 8) {
      text += ".\n\n";
      word[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(word[0])));
    } else if (gap < 10) {
      text += ", ";
    } else {
      text += ' ';
    }
    text += word;
  }
  return text + ".";
}

}  // namespace oracle
