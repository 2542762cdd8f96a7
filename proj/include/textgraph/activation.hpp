#pragma once

#include <cstddef>
#include <iosfwd>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "textgraph/docgraph.hpp"

namespace textgraph {

struct LinkWeights {
  double same = 0.9;
  double phrase = 0.8;
  double name = 0.9;
  double coref = 0.85;
};

struct SpreadParams {
  double decay_rate = 0.5;
  double sentence_crossing_cost = 3.0;
  double paragraph_crossing_cost = 6.0;
  LinkWeights link_weights;
  std::size_t max_output_nodes = 100;

  // Throws ConfigError unless every value is positive, every link weight is
  // in (0, 1] and sentence_crossing_cost < paragraph_crossing_cost.
  void validate() const;
  // Multiplier for SAME/PHRASE/NAME/COREF links.
  double link_weight(EdgeKind kind) const;
};

// Distance used by ADJ traversal between two positions: the position gap plus
// the crossing cost of every sentence boundary (that is not also a paragraph
// boundary) and every paragraph boundary between them.
double adjacency_distance(const DocumentGraph& graph, std::size_t from, std::size_t to, const SpreadParams& params);

struct Topic {
  std::vector<std::string> terms;

  // Drops terms made only of stop words. Throws ConfigError if none remain.
  static Topic from_terms(std::vector<std::string> terms, const StopWords& stopwords);
};

enum class SpreadStatus { kOk, kTopicNotFound };

struct ActivatedGraph {
  std::shared_ptr<const DocumentGraph> graph;
  std::vector<double> activation;          // by position; 0 outside `reached`
  std::vector<std::size_t> entry_positions;  // sorted
  std::vector<std::size_t> reached;          // sorted
  std::vector<std::size_t> expansion_order;  // `reached` in the order nodes were output
  SpreadStatus status = SpreadStatus::kOk;

  bool is_reached(std::size_t position) const;
  double max_activation() const;
};

// Positions whose stem equals the stem of a single-word topic term, plus the
// positions of every name mention in the coreference class of a mention that
// alias-matches a term. Closing over the class makes aliases of one entity
// (full name, partial name, acronym) select the same entry set.
std::vector<std::size_t> entry_points(const DocumentGraph& graph, const Topic& topic, const AliasLexicon& aliases);

// Best-first spreading from the topic's entry points. Every entry starts at
// the document's maximum node weight; a hop multiplies activation by
// exp(-decay * distance) over ADJ links and by the link weight (or ALPHA
// strength) otherwise; multiple arrivals keep the maximum. The highest active
// node is output each round until the output holds max_output_nodes nodes
// (entries are always output) or nothing is left to expand.
ActivatedGraph spread(std::shared_ptr<const DocumentGraph> graph, const Topic& topic, const AliasLexicon& aliases,
                      const SpreadParams& params);

// Same procedure from an explicit entry set; stop-word entries are ignored.
ActivatedGraph spread_from(std::shared_ptr<const DocumentGraph> graph, std::span<const std::size_t> entries,
                           const SpreadParams& params);

struct ProfileRow {
  std::size_t sentence_index = 0;
  double mean = 0.0;
};

// Mean activation of each sentence's non-stop tokens (0 for sentences
// without any).
std::vector<ProfileRow> sentence_profile(const ActivatedGraph& activated);
// Same shape over raw tf.idf node weights.
std::vector<ProfileRow> raw_profile(const DocumentGraph& graph);

// `sentence_index,mean_activation` header, then one row per sentence.
void write_profile_csv(std::ostream& out, std::span<const ProfileRow> rows);

}  // namespace textgraph
