#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "textgraph/activation.hpp"

namespace textgraph {

enum class ConceptKind { kWord, kName };

// A stem for words, a canonical name string for names.
struct ConceptKey {
  ConceptKind kind = ConceptKind::kWord;
  std::string text;

  auto operator<=>(const ConceptKey&) const = default;
};

std::string to_string(const ConceptKey& key);

struct Concept {
  ConceptKey key;
  // Stems or canonical names folded into this concept; key.text is the
  // smallest. Each document keeps its own wording here.
  std::vector<std::string> members;
  std::array<double, 2> best_weight{0.0, 0.0};                // max activation per graph
  std::array<std::vector<std::size_t>, 2> occurrences;       // reached positions per graph

  double combined_weight() const { return best_weight[0] + best_weight[1]; }
  bool present_in(std::size_t graph) const { return !occurrences[graph].empty(); }
};

struct ConceptPartition {
  std::vector<Concept> common;          // by combined weight, descending
  std::vector<Concept> differences_g1;  // by weight in graph 1, descending
  std::vector<Concept> differences_g2;
};

// Holds if a reached node of `graph` shares the key's stem or is paired with
// it in the synonym lexicon; name keys alias-match reached name mentions.
bool concept_match(const ConceptKey& key, const ActivatedGraph& graph, const SynonymLexicon& synonyms,
                   const AliasLexicon& aliases);

// Splits the reached concepts of both graphs into those matched by both and
// those present in only one. Common synonyms (or aliases) fold into one
// concept keyed by the smallest member.
ConceptPartition find_common_and_differences(const ActivatedGraph& g1, const ActivatedGraph& g2,
                                             const SynonymLexicon& synonyms, const AliasLexicon& aliases);

struct SentenceScore {
  std::string doc_id;
  std::size_t sentence_index = 0;
  double score = 0.0;
  // Covered concept -> activation of its strongest reached occurrence in the sentence.
  std::map<ConceptKey, double> covered;

  bool operator==(const SentenceScore&) const = default;
};

// Mean of the covered activations; the score invariant in one place.
double coverage_score(const std::map<ConceptKey, double>& covered);

enum class ScoreStatus { kOk, kEmptyTarget };

struct ScoredSentences {
  std::vector<SentenceScore> scores;  // by sentence index
  ScoreStatus status = ScoreStatus::kOk;
};

// Scores each sentence holding a reached occurrence of a target concept by the
// average activation of the target concepts it covers.
// A word concept covers reached positions whose stem is a member; a name
// concept covers reached positions inside mentions whose canonical is a member.
ScoredSentences score_sentences(const ActivatedGraph& activated, std::span<const Concept> targets);

enum class SelectionMode { kRedundancyReducing, kPlainTopK };

// Greedy pick of up to k sentences, best first; ties go to the earlier
// sentence, then the smaller doc id. In redundancy-reducing mode each pick
// removes its concepts from every remaining sentence, which is then rescored
// (or dropped when nothing is left).
std::vector<SentenceScore> select_sentences(std::vector<SentenceScore> scores, std::size_t k, SelectionMode mode);

struct TopicSuggestion {
  std::string term;
  double weight = 0.0;  // min over the two documents of the best tf.idf weight

  bool operator==(const TopicSuggestion&) const = default;
};

// Terms and names present in both documents, ranked by min(best weight in g1,
// best weight in g2), highest first.
std::vector<TopicSuggestion> suggest_topics(const DocumentGraph& g1, const DocumentGraph& g2,
                                            const AliasLexicon& aliases, std::size_t limit);

struct CompareParams {
  std::optional<std::size_t> min_unique_concepts;
  std::optional<double> min_coverage_weight;
  std::size_t max_common_sentences = 5;
  std::size_t max_difference_sentences = 5;
  SelectionMode mode = SelectionMode::kRedundancyReducing;

  void validate() const;  // throws ConfigError
};

struct ComparisonResult {
  ConceptPartition concepts;
  std::vector<SentenceScore> selected_common;  // drawn from both documents
  std::vector<SentenceScore> selected_diff_g1;
  std::vector<SentenceScore> selected_diff_g2;
};

ComparisonResult compare_graphs(const ActivatedGraph& g1, const ActivatedGraph& g2, const SynonymLexicon& synonyms,
                                const AliasLexicon& aliases, const CompareParams& params);

struct ThresholdOutcome {
  bool passed = true;
  std::size_t unique_concepts = 0;  // |diff1| + |diff2|
  double coverage_weight = 0.0;     // sum of all selected sentence scores
};

// Fails when unique_concepts < min_unique_concepts or coverage_weight <
// min_coverage_weight; a value equal to its threshold passes.
ThresholdOutcome apply_thresholds(const ComparisonResult& result, const CompareParams& params);

}  // namespace textgraph
