#pragma once

#include <iosfwd>
#include <string>

#include "json.hpp"
#include "textgraph/compare.hpp"

namespace textgraph {

struct ComparisonReport {
  const ActivatedGraph& g1;
  const ActivatedGraph& g2;
  const Topic& topic;
  const ComparisonResult& result;
  ThresholdOutcome thresholds;
};

// Plain-text report. Selected sentences are grouped under COMMON and
// UNIQUE TO <doc>; covered common terms appear as [term], unique ones as {term}.
void write_human_report(std::ostream& out, const ComparisonReport& report);

// Machine-readable report (schema "textgraph-compare/1"). Object keys are
// sorted, so the same inputs always serialize to the same bytes.
nlohmann::json report_json(const ComparisonReport& report);

// Sentence text with common positions wrapped as [..] and unique ones as {..}.
// Consecutive marked tokens of one kind share a single bracket pair.
std::string mark_sentence(const DocumentGraph& graph, std::size_t sentence_index,
                          const std::vector<std::size_t>& common_positions,
                          const std::vector<std::size_t>& unique_positions);

// Four fixed decimals, as used in human-readable output.
std::string format_weight(double value);

}  // namespace textgraph
