#include <cctype>
#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "textgraph/compare.hpp"
#include "textgraph/errors.hpp"

using namespace textgraph;

namespace {

ActivatedGraph activate(const std::shared_ptr<const DocumentGraph>& g, const std::vector<std::string>& topic,
                        const AliasLexicon& aliases = {}, std::size_t cap = 100) {
  SpreadParams params;
  params.max_output_nodes = cap;
  return spread(g, Topic::from_terms(topic, bundled_stopwords()), aliases, params);
}

std::shared_ptr<const DocumentGraph> plain_graph(const std::string& id, const std::string& text,
                                                 const SynonymLexicon& synonyms = {}, const AliasLexicon& aliases = {}) {
  TextResources resources;
  resources.aliases = aliases;
  return fixtures::make_graph(id, text, resources, ReferenceCorpus::uniform(), synonyms);
}

std::set<ConceptKey> keys(const std::vector<Concept>& concepts) {
  std::set<ConceptKey> out;
  for (const Concept& c : concepts) out.insert(c.key);
  return out;
}

std::set<ConceptKey> members(const std::vector<Concept>& concepts) {
  std::set<ConceptKey> out;
  for (const Concept& c : concepts) {
    for (const std::string& m : c.members) out.insert({c.key.kind, m});
  }
  return out;
}

SentenceScore make_score(const std::string& doc, std::size_t index, std::map<ConceptKey, double> covered) {
  const double score = coverage_score(covered);
  return {doc, index, score, std::move(covered)};
}

ConceptKey word(const std::string& s) { return {ConceptKind::kWord, s}; }

}  // namespace

TEST_CASE("concept_match") {
  SynonymLexicon synonyms;
  synonyms.add("residence", "house", 0.8);
  const auto g = plain_graph("g", "Guards left the house quietly.", synonyms);
  const ActivatedGraph a = activate(g, {"guards"});
  REQUIRE(a.is_reached(3));
  CHECK(concept_match(word(stem("residence")), a, synonyms, {}));
  CHECK(concept_match(word("guard"), a, synonyms, {}));
  CHECK_FALSE(concept_match(word("zebra"), a, synonyms, {}));
  CHECK_FALSE(concept_match(word(stem("residence")), a, {}, {}));

  const auto& s = fixtures::sample();
  const ActivatedGraph a1 = activate(fixtures::sample_graph('a'), {"CDLF"}, s.resources.aliases);
  const ActivatedGraph a2 = activate(fixtures::sample_graph('b'), {"CDLF"}, s.resources.aliases);
  for (const ActivatedGraph* x : {&a1, &a2}) {
    CHECK(concept_match(word("oldan"), *x, s.synonyms, s.resources.aliases));
    CHECK(concept_match({ConceptKind::kName, "Oldan"}, *x, s.synonyms, s.resources.aliases));
  }
}

TEST_CASE("self-comparison has no differences") {
  const auto& s = fixtures::sample();
  const auto g = fixtures::sample_graph('a');
  const auto copy = fixtures::make_graph("copy", s.text_a, s.resources, s.corpus, s.synonyms);
  const ActivatedGraph a1 = activate(g, {"CDLF"}, s.resources.aliases);
  const ActivatedGraph a2 = activate(copy, {"CDLF"}, s.resources.aliases);
  const ConceptPartition p = find_common_and_differences(a1, a2, s.synonyms, s.resources.aliases);
  CHECK(p.differences_g1.empty());
  CHECK(p.differences_g2.empty());
  CHECK(members(p.common).size() == oracle::partition(a1, a2, s.synonyms, s.resources.aliases).common.size());

  CompareParams params;
  params.min_unique_concepts = 1;
  const ComparisonResult r = compare_graphs(a1, a2, s.synonyms, s.resources.aliases, params);
  CHECK(r.selected_diff_g1.empty());
  CHECK(r.selected_diff_g2.empty());
  CHECK_FALSE(apply_thresholds(r, params).passed);
  CHECK_THROWS_AS(compare_graphs(a1, a1, s.synonyms, s.resources.aliases, params), ContractError);
}

TEST_CASE("disjoint vocabularies share nothing") {
  const ActivatedGraph a1 = activate(plain_graph("x", "Apples grow on trees."), {"apples"});
  const ActivatedGraph a2 = activate(plain_graph("y", "Rivers reach oceans."), {"rivers"});
  const ConceptPartition p = find_common_and_differences(a1, a2, {}, {});
  CHECK(p.common.empty());
  CHECK(keys(p.differences_g1) == std::set<ConceptKey>{word("appl"), word("grow"), word("tree")});
  CHECK(suggest_topics(*a1.graph, *a2.graph, {}, 10).empty());
}

TEST_CASE("synonyms merge into one concept keyed by the smaller stem") {
  SynonymLexicon synonyms;
  synonyms.add("residence", "house", 0.8);
  const ActivatedGraph a1 = activate(plain_graph("x", "Guards watched the residence.", synonyms), {"guards"});
  const ActivatedGraph a2 = activate(plain_graph("y", "Guards watched the house.", synonyms), {"guards"});
  const ConceptPartition p = find_common_and_differences(a1, a2, synonyms, {});
  const auto it = std::find_if(p.common.begin(), p.common.end(), [](const Concept& c) { return c.key == word("hou"); });
  REQUIRE(it != p.common.end());
  CHECK(it->members == std::vector<std::string>{"hou", "resid"});
  CHECK(it->present_in(0));
  CHECK(it->present_in(1));
  CHECK(it->occurrences[0] == std::vector<std::size_t>{3});
  CHECK(it->best_weight[0] == a1.activation[3]);
  CHECK(p.differences_g1.empty());
}

TEST_CASE("sample pair partition matches set algebra and is symmetric") {
  const auto& s = fixtures::sample();
  const ActivatedGraph a1 = activate(fixtures::sample_graph('a'), {"Crimson Dawn Liberation Front"}, s.resources.aliases);
  const ActivatedGraph a2 = activate(fixtures::sample_graph('b'), {"Crimson Dawn Liberation Front"}, s.resources.aliases);
  const ConceptPartition p = find_common_and_differences(a1, a2, s.synonyms, s.resources.aliases);
  const oracle::ConceptSets expected = oracle::partition(a1, a2, s.synonyms, s.resources.aliases);
  CHECK(members(p.common) == expected.common);
  CHECK(keys(p.differences_g1) == expected.only_g1);
  CHECK(keys(p.differences_g2) == expected.only_g2);
  CHECK(members(p.common).contains({ConceptKind::kName, "Marek Oldan"}));
  CHECK(members(p.common).contains(word("cdlf")));
  for (std::size_t i = 0; i + 1 < p.common.size(); ++i) {
    CHECK(p.common[i].combined_weight() >= p.common[i + 1].combined_weight());
  }

  const ConceptPartition swapped = find_common_and_differences(a2, a1, s.synonyms, s.resources.aliases);
  CHECK(keys(swapped.common) == keys(p.common));
  CHECK(keys(swapped.differences_g1) == keys(p.differences_g2));
  CHECK(keys(swapped.differences_g2) == keys(p.differences_g1));
}

TEST_CASE("sentence scores average the covered activations") {
  CHECK(coverage_score({{word("a"), 0.8}, {word("b"), 0.4}}) == doctest::Approx(0.6));
  CHECK(coverage_score({{word("a"), 0.7}}) == 0.7);

  const auto g = plain_graph("x", "Guards watched. Nothing else. Guards slept.");
  const ActivatedGraph a = activate(g, {"guards"});
  const ConceptPartition p = find_common_and_differences(a, activate(plain_graph("y", "Guards"), {"guards"}), {}, {});
  const ScoredSentences scored = score_sentences(a, p.common);
  REQUIRE(scored.scores.size() == 2);
  CHECK(scored.scores[0].sentence_index == 0);
  CHECK(scored.scores[1].sentence_index == 2);
  CHECK(scored.scores[0].score == a.activation[0]);
  CHECK(score_sentences(a, {}).status == ScoreStatus::kEmptyTarget);
}

TEST_CASE("select_sentences") {
  const std::vector<SentenceScore> scores = {
      make_score("a", 0, {{word("x"), 1.0}, {word("y"), 0.5}}),
      make_score("a", 1, {{word("x"), 0.9}, {word("y"), 0.6}}),
      make_score("b", 0, {{word("z"), 0.2}}),
  };
  for (SelectionMode mode : {SelectionMode::kPlainTopK, SelectionMode::kRedundancyReducing}) {
    const auto one = select_sentences(scores, 1, mode);
    REQUIRE(one.size() == 1);
    CHECK(one[0].doc_id == "a");
    CHECK(one[0].sentence_index == 0);
  }
  // Equal scores in two documents: the earlier sentence wins, then the smaller id.
  const auto tie = select_sentences({make_score("b", 1, {{word("q"), 0.5}}), make_score("a", 1, {{word("q"), 0.5}}),
                                     make_score("c", 0, {{word("r"), 0.5}})},
                                    3, SelectionMode::kPlainTopK);
  CHECK(tie[0].doc_id == "c");
  CHECK(tie[1].doc_id == "a");

  const auto reduced = select_sentences(scores, 3, SelectionMode::kRedundancyReducing);
  REQUIRE(reduced.size() == 2);  // sentence a#1 lost all its concepts
  CHECK(reduced[1].doc_id == "b");

  const std::vector<SentenceScore> instance = {
      make_score("d", 0, {{word("c1"), 0.9}, {word("c2"), 0.3}}),
      make_score("d", 1, {{word("c2"), 0.8}, {word("c3"), 0.7}}),
      make_score("d", 2, {{word("c3"), 0.6}, {word("c4"), 0.6}, {word("c5"), 0.1}}),
      make_score("d", 3, {{word("c5"), 0.95}}),
  };
  for (SelectionMode mode : {SelectionMode::kPlainTopK, SelectionMode::kRedundancyReducing}) {
    for (std::size_t k = 0; k <= 5; ++k) CHECK(select_sentences(instance, k, mode) == oracle::greedy_replay(instance, k, mode));
  }
}

TEST_CASE("suggest_topics") {
  const auto& s = fixtures::sample();
  const auto ga = fixtures::sample_graph('a');
  const auto suggestions = suggest_topics(*ga, *fixtures::sample_graph('b'), s.resources.aliases, 5);
  REQUIRE(suggestions.size() == 5);
  const bool event_name = std::any_of(suggestions.begin(), suggestions.end(), [](const TopicSuggestion& t) {
    return t.term == "CDLF" || t.term == "Crimson Dawn Liberation Front";
  });
  CHECK(event_name);
  for (std::size_t i = 0; i + 1 < suggestions.size(); ++i) CHECK(suggestions[i].weight >= suggestions[i + 1].weight);
  // Aliases of one entity are suggested once.
  const auto all = suggest_topics(*ga, *fixtures::sample_graph('b'), s.resources.aliases, 1000);
  std::vector<std::string> names;
  for (const TopicSuggestion& t : all) {
    if (t.term.find(' ') != std::string::npos || std::isupper(static_cast<unsigned char>(t.term[0]))) names.push_back(t.term);
  }
  for (std::size_t i = 0; i < names.size(); ++i) {
    for (std::size_t j = i + 1; j < names.size(); ++j) CHECK_FALSE(alias_match(names[i], names[j], s.resources.aliases));
  }
  const auto entity = [&](const std::string& n) { return std::count(names.begin(), names.end(), n); };
  CHECK(entity("Oldan's") + entity("Marek Oldan") + entity("Oldan") == 1);
  CHECK(entity("CDLF") + entity("Crimson Dawn") + entity("Crimson Dawn Liberation Front") == 1);

  // Self-suggestions follow the document's own weights.
  const auto self = suggest_topics(*ga, *ga, {}, 1000);
  std::map<std::string, double> best;
  for (const GraphNode& n : ga->nodes) {
    if (!n.token.is_stop()) best[n.token.stem] = std::max(best[n.token.stem], n.weight);
  }
  for (const TopicSuggestion& t : self) {
    if (t.term.find(' ') == std::string::npos && best.contains(stem(t.term))) CHECK(t.weight == best[stem(t.term)]);
  }
}

TEST_CASE("thresholds use at-least semantics") {
  ComparisonResult r;
  r.concepts.differences_g1.push_back({word("a"), {"a"}, {1.0, 0.0}, {}});
  r.selected_common.push_back(make_score("x", 0, {{word("b"), 2.5}}));
  CompareParams params;
  params.min_unique_concepts = 0;
  CHECK(apply_thresholds(r, params).passed);
  params.min_unique_concepts = 1;
  params.min_coverage_weight = 2.5;
  const ThresholdOutcome at = apply_thresholds(r, params);
  CHECK(at.passed);
  CHECK(at.unique_concepts == 1);
  CHECK(at.coverage_weight == 2.5);
  params.min_coverage_weight = 2.6;
  CHECK_FALSE(apply_thresholds(r, params).passed);
  params.max_common_sentences = 0;
  CHECK_THROWS_AS(params.validate(), ConfigError);
}

TEST_CASE("selection caps and score recompute on the sample") {
  const auto& s = fixtures::sample();
  const ActivatedGraph a1 = activate(fixtures::sample_graph('a'), {"CDLF"}, s.resources.aliases);
  const ActivatedGraph a2 = activate(fixtures::sample_graph('b'), {"CDLF"}, s.resources.aliases);
  for (SelectionMode mode : {SelectionMode::kPlainTopK, SelectionMode::kRedundancyReducing}) {
    CompareParams params;
    params.mode = mode;
    params.max_common_sentences = 3;
    params.max_difference_sentences = 2;
    const ComparisonResult r = compare_graphs(a1, a2, s.synonyms, s.resources.aliases, params);
    CHECK(r.selected_common.size() <= 3);
    CHECK(r.selected_diff_g1.size() <= 2);
    CHECK(r.selected_diff_g2.size() <= 2);
    for (const auto* selection : {&r.selected_common, &r.selected_diff_g1, &r.selected_diff_g2}) {
      for (const SentenceScore& score : *selection) {
        CHECK_FALSE(score.covered.empty());
        CHECK(score.score == coverage_score(score.covered));
      }
    }
    for (const SentenceScore& score : r.selected_diff_g1) CHECK(score.doc_id == "doc_a");
  }
}
