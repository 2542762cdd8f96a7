#include "textgraph/compare.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <set>

#include "textgraph/errors.hpp"
#include "text_util.hpp"

namespace textgraph {
namespace {

// Name mentions with at least one reached position.
std::vector<const NameMention*> reached_mentions(const ActivatedGraph& graph) {
  std::vector<const NameMention*> out;
  for (const NameMention& mention : graph.graph->names) {
    for (std::size_t p = mention.range.begin; p < mention.range.end; ++p) {
      if (graph.is_reached(p)) {
        out.push_back(&mention);
        break;
      }
    }
  }
  return out;
}

std::set<ConceptKey> reached_concepts(const ActivatedGraph& graph) {
  std::set<ConceptKey> keys;
  for (std::size_t p : graph.reached) {
    keys.insert({ConceptKind::kWord, graph.graph->token(p).stem});
  }
  for (const NameMention* mention : reached_mentions(graph)) keys.insert({ConceptKind::kName, mention->canonical});
  return keys;
}

bool related(const ConceptKey& a, const ConceptKey& b, const SynonymLexicon& synonyms, const AliasLexicon& aliases) {
  if (a.kind != b.kind) return false;
  if (a.kind == ConceptKind::kWord) return synonyms.strength(a.text, b.text).has_value();
  return alias_match(a.text, b.text, aliases);
}

// Reached positions of `graph` covered by a concept with these members.
std::vector<std::size_t> covered_positions(const ActivatedGraph& graph, ConceptKind kind,
                                           const std::vector<std::string>& members) {
  const auto is_member = [&members](const std::string& s) {
    return std::find(members.begin(), members.end(), s) != members.end();
  };
  std::vector<std::size_t> out;
  if (kind == ConceptKind::kWord) {
    for (std::size_t p : graph.reached) {
      if (is_member(graph.graph->token(p).stem)) out.push_back(p);
    }
    return out;
  }
  for (const NameMention& mention : graph.graph->names) {
    if (!is_member(mention.canonical)) continue;
    for (std::size_t p = mention.range.begin; p < mention.range.end; ++p) {
      if (graph.is_reached(p)) out.push_back(p);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void fill_occurrences(Concept& concept_value, const ActivatedGraph& graph, std::size_t index) {
  concept_value.occurrences[index] = covered_positions(graph, concept_value.key.kind, concept_value.members);
  double best = 0.0;
  for (std::size_t p : concept_value.occurrences[index]) best = std::max(best, graph.activation[p]);
  concept_value.best_weight[index] = best;
}

struct DisjointSets {
  std::vector<std::size_t> parent;

  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), std::size_t{0}); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  // Keeps the smaller index as root, so a group's root is its smallest key.
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

bool selection_before(const SentenceScore& a, const SentenceScore& b) {
  if (a.score != b.score) return a.score > b.score;
  if (a.sentence_index != b.sentence_index) return a.sentence_index < b.sentence_index;
  return a.doc_id < b.doc_id;
}

}  // namespace

std::string to_string(const ConceptKey& key) {
  return (key.kind == ConceptKind::kWord ? "word:" : "name:") + key.text;
}

bool concept_match(const ConceptKey& key, const ActivatedGraph& graph, const SynonymLexicon& synonyms,
                   const AliasLexicon& aliases) {
  if (key.kind == ConceptKind::kWord) {
    return std::any_of(graph.reached.begin(), graph.reached.end(), [&](std::size_t p) {
      const std::string& s = graph.graph->token(p).stem;
      return s == key.text || synonyms.strength(key.text, s).has_value();
    });
  }
  const auto mentions = reached_mentions(graph);
  return std::any_of(mentions.begin(), mentions.end(),
                     [&](const NameMention* m) { return alias_match(key.text, m->canonical, aliases); });
}

ConceptPartition find_common_and_differences(const ActivatedGraph& g1, const ActivatedGraph& g2,
                                             const SynonymLexicon& synonyms, const AliasLexicon& aliases) {
  const std::set<ConceptKey> in1 = reached_concepts(g1);
  const std::set<ConceptKey> in2 = reached_concepts(g2);
  std::set<ConceptKey> universe = in1;
  universe.insert(in2.begin(), in2.end());

  std::vector<ConceptKey> common_keys;
  ConceptPartition out;
  for (const ConceptKey& key : universe) {
    if (concept_match(key, g1, synonyms, aliases) && concept_match(key, g2, synonyms, aliases)) {
      common_keys.push_back(key);
      continue;
    }
    Concept diff{key, {key.text}, {}, {}};
    const std::size_t source = in1.contains(key) ? 0 : 1;
    fill_occurrences(diff, source == 0 ? g1 : g2, source);
    (source == 0 ? out.differences_g1 : out.differences_g2).push_back(std::move(diff));
  }

  // common_keys is sorted, so each group's root is its smallest member.
  DisjointSets groups(common_keys.size());
  for (std::size_t i = 0; i < common_keys.size(); ++i) {
    for (std::size_t j = i + 1; j < common_keys.size(); ++j) {
      if (related(common_keys[i], common_keys[j], synonyms, aliases)) groups.unite(i, j);
    }
  }
  std::map<std::size_t, Concept> merged;
  for (std::size_t i = 0; i < common_keys.size(); ++i) {
    Concept& c = merged[groups.find(i)];
    if (c.members.empty()) c.key = common_keys[i];
    c.members.push_back(common_keys[i].text);
  }
  for (auto& [root, c] : merged) {
    fill_occurrences(c, g1, 0);
    fill_occurrences(c, g2, 1);
    out.common.push_back(std::move(c));
  }

  std::sort(out.common.begin(), out.common.end(), [](const Concept& a, const Concept& b) {
    if (a.combined_weight() != b.combined_weight()) return a.combined_weight() > b.combined_weight();
    return a.key < b.key;
  });
  const auto by_weight_in = [](std::size_t g) {
    return [g](const Concept& a, const Concept& b) {
      if (a.best_weight[g] != b.best_weight[g]) return a.best_weight[g] > b.best_weight[g];
      return a.key < b.key;
    };
  };
  std::sort(out.differences_g1.begin(), out.differences_g1.end(), by_weight_in(0));
  std::sort(out.differences_g2.begin(), out.differences_g2.end(), by_weight_in(1));
  return out;
}

double coverage_score(const std::map<ConceptKey, double>& covered) {
  if (covered.empty()) return 0.0;
  double sum = 0.0;
  for (const auto& [key, activation] : covered) sum += activation;
  return sum / static_cast<double>(covered.size());
}

ScoredSentences score_sentences(const ActivatedGraph& activated, std::span<const Concept> targets) {
  ScoredSentences out;
  if (targets.empty()) {
    out.status = ScoreStatus::kEmptyTarget;
    return out;
  }
  const DocumentGraph& graph = *activated.graph;
  std::vector<std::map<ConceptKey, double>> per_sentence(graph.sentences.size());
  for (const Concept& target : targets) {
    for (std::size_t p : covered_positions(activated, target.key.kind, target.members)) {
      double& slot = per_sentence[graph.token(p).sentence_index][target.key];
      slot = std::max(slot, activated.activation[p]);
    }
  }
  for (std::size_t s = 0; s < per_sentence.size(); ++s) {
    if (per_sentence[s].empty()) continue;
    SentenceScore score{graph.doc_id, s, coverage_score(per_sentence[s]), std::move(per_sentence[s])};
    out.scores.push_back(std::move(score));
  }
  return out;
}

std::vector<SentenceScore> select_sentences(std::vector<SentenceScore> scores, std::size_t k, SelectionMode mode) {
  std::erase_if(scores, [](const SentenceScore& s) { return s.covered.empty(); });
  std::vector<SentenceScore> picked;
  if (mode == SelectionMode::kPlainTopK) {
    std::sort(scores.begin(), scores.end(), selection_before);
    if (scores.size() > k) scores.resize(k);
    return scores;
  }
  while (picked.size() < k && !scores.empty()) {
    const auto best = std::min_element(scores.begin(), scores.end(), selection_before);
    picked.push_back(std::move(*best));
    scores.erase(best);
    const auto& taken = picked.back().covered;
    for (SentenceScore& rest : scores) {
      for (const auto& [key, activation] : taken) rest.covered.erase(key);
      rest.score = coverage_score(rest.covered);
    }
    std::erase_if(scores, [](const SentenceScore& s) { return s.covered.empty(); });
  }
  return picked;
}

std::vector<TopicSuggestion> suggest_topics(const DocumentGraph& g1, const DocumentGraph& g2,
                                            const AliasLexicon& aliases, std::size_t limit) {
  struct StemInfo {
    double weight = 0.0;
    std::string surface;
  };
  const auto stems_of = [](const DocumentGraph& g) {
    std::map<std::string, StemInfo> out;
    for (const GraphNode& node : g.nodes) {
      if (node.token.is_stop()) continue;
      auto [it, inserted] = out.try_emplace(node.token.stem);
      if (inserted) it->second.surface = detail::ascii_lower(node.token.surface);
      it->second.weight = std::max(it->second.weight, node.weight);
    }
    return out;
  };
  const auto name_weights = [](const DocumentGraph& g) {
    std::map<std::string, double> out;
    for (const NameMention& m : g.names) {
      double& w = out[m.canonical];
      for (std::size_t p = m.range.begin; p < m.range.end; ++p) w = std::max(w, g.nodes[p].weight);
    }
    return out;
  };

  const auto stems1 = stems_of(g1);
  const auto stems2 = stems_of(g2);
  const auto names1 = name_weights(g1);
  const auto names2 = name_weights(g2);

  // Names of one entity share a group: the closure of alias_match over the
  // names of both documents. The names of g1 come first.
  std::vector<std::string> canonicals;
  for (const auto& entry : names1) canonicals.push_back(entry.first);
  const std::size_t g1_names = canonicals.size();
  for (const auto& entry : names2) {
    if (!names1.contains(entry.first)) canonicals.push_back(entry.first);
  }
  std::vector<std::size_t> group(canonicals.size());
  std::iota(group.begin(), group.end(), std::size_t{0});
  const auto find = [&](std::size_t x) {
    while (group[x] != x) x = group[x] = group[group[x]];
    return x;
  };
  for (std::size_t i = 0; i < canonicals.size(); ++i) {
    for (std::size_t j = i + 1; j < canonicals.size(); ++j) {
      if (alias_match(canonicals[i], canonicals[j], aliases)) group[find(j)] = find(i);
    }
  }

  struct Candidate {
    TopicSuggestion suggestion;
    std::optional<std::size_t> name_index;
  };
  std::vector<Candidate> candidates;
  std::set<std::string> single_word_names;
  for (std::size_t i = 0; i < g1_names; ++i) {
    const std::string& canonical = canonicals[i];
    double w2 = -1.0;
    for (const auto& [other, weight] : names2) {
      if (alias_match(canonical, other, aliases)) w2 = std::max(w2, weight);
    }
    if (w2 < 0.0) continue;
    candidates.push_back({{canonical, std::min(names1.at(canonical), w2)}, i});
    if (canonical.find(' ') == std::string::npos) single_word_names.insert(detail::ascii_lower(canonical));
  }
  for (const auto& [s, info] : stems1) {
    const auto other = stems2.find(s);
    if (other == stems2.end() || single_word_names.contains(info.surface)) continue;
    candidates.push_back({{info.surface, std::min(info.weight, other->second.weight)}, std::nullopt});
  }

  std::sort(candidates.begin(), candidates.end(), [](const Candidate& a, const Candidate& b) {
    if (a.suggestion.weight != b.suggestion.weight) return a.suggestion.weight > b.suggestion.weight;
    return a.suggestion.term < b.suggestion.term;
  });
  // One suggestion per entity: the best-ranked name of each group.
  std::vector<TopicSuggestion> out;
  std::set<std::size_t> used_groups;
  for (const Candidate& c : candidates) {
    if (out.size() == limit) break;
    if (c.name_index && !used_groups.insert(find(*c.name_index)).second) continue;
    out.push_back(c.suggestion);
  }
  return out;
}

void CompareParams::validate() const {
  if (max_common_sentences < 1) throw ConfigError("max common sentences must be at least 1");
  if (max_difference_sentences < 1) throw ConfigError("max difference sentences must be at least 1");
  if (min_coverage_weight && !(std::isfinite(*min_coverage_weight) && *min_coverage_weight >= 0.0)) {
    throw ConfigError("min coverage weight must be a non-negative number");
  }
}

ComparisonResult compare_graphs(const ActivatedGraph& g1, const ActivatedGraph& g2, const SynonymLexicon& synonyms,
                                const AliasLexicon& aliases, const CompareParams& params) {
  params.validate();
  if (g1.graph->doc_id == g2.graph->doc_id) throw ContractError("compared documents need distinct ids");

  ComparisonResult result;
  result.concepts = find_common_and_differences(g1, g2, synonyms, aliases);
  const ConceptPartition& c = result.concepts;

  std::vector<SentenceScore> common = score_sentences(g1, c.common).scores;
  std::vector<SentenceScore> common2 = score_sentences(g2, c.common).scores;
  common.insert(common.end(), std::make_move_iterator(common2.begin()), std::make_move_iterator(common2.end()));
  result.selected_common = select_sentences(std::move(common), params.max_common_sentences, params.mode);
  result.selected_diff_g1 =
      select_sentences(score_sentences(g1, c.differences_g1).scores, params.max_difference_sentences, params.mode);
  result.selected_diff_g2 =
      select_sentences(score_sentences(g2, c.differences_g2).scores, params.max_difference_sentences, params.mode);
  return result;
}

ThresholdOutcome apply_thresholds(const ComparisonResult& result, const CompareParams& params) {
  ThresholdOutcome outcome;
  outcome.unique_concepts = result.concepts.differences_g1.size() + result.concepts.differences_g2.size();
  for (const auto* selection : {&result.selected_common, &result.selected_diff_g1, &result.selected_diff_g2}) {
    for (const SentenceScore& s : *selection) outcome.coverage_weight += s.score;
  }
  if (params.min_unique_concepts && outcome.unique_concepts < *params.min_unique_concepts) outcome.passed = false;
  if (params.min_coverage_weight && outcome.coverage_weight < *params.min_coverage_weight) outcome.passed = false;
  return outcome;
}

}  // namespace textgraph
