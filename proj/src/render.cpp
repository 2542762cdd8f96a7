#include <algorithm>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "textgraph/report.hpp"
#include "text_util.hpp"

namespace textgraph {
namespace {

enum class Mark { kNone, kCommon, kUnique };

// Display label: canonical names as written, words by their first surface
// form in either document. Merged members are joined with '/'.
std::string concept_label(const Concept& c, const ActivatedGraph& g1, const ActivatedGraph& g2) {
  if (c.key.kind == ConceptKind::kName) {
    std::string label;
    for (const std::string& m : c.members) label += (label.empty() ? "" : "/") + m;
    return label;
  }
  std::vector<std::string> surfaces;
  for (const std::string& member : c.members) {
    std::string surface = member;
    for (const ActivatedGraph* g : {&g1, &g2}) {
      const auto it = std::find_if(g->graph->nodes.begin(), g->graph->nodes.end(),
                                   [&](const GraphNode& n) { return !n.token.is_stop() && n.token.stem == member; });
      if (it != g->graph->nodes.end()) {
        surface = detail::ascii_lower(it->token.surface);
        break;
      }
    }
    if (std::find(surfaces.begin(), surfaces.end(), surface) == surfaces.end()) surfaces.push_back(surface);
  }
  std::string label;
  for (const std::string& s : surfaces) label += (label.empty() ? "" : "/") + s;
  return label;
}

std::vector<std::size_t> positions_in(const std::vector<Concept>& concepts, std::size_t g, const TokenRange& sentence) {
  std::vector<std::size_t> out;
  for (const Concept& c : concepts) {
    for (std::size_t p : c.occurrences[g]) {
      if (sentence.contains(p)) out.push_back(p);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

nlohmann::json concepts_json(const std::vector<Concept>& concepts, const ActivatedGraph& g1, const ActivatedGraph& g2) {
  nlohmann::json out = nlohmann::json::array();
  for (const Concept& c : concepts) {
    out.push_back({{"key", c.key.text},
                   {"kind", c.key.kind == ConceptKind::kWord ? "word" : "name"},
                   {"label", concept_label(c, g1, g2)},
                   {"members", c.members},
                   {"weights", {c.best_weight[0], c.best_weight[1]}}});
  }
  return out;
}

nlohmann::json selection_json(const std::vector<SentenceScore>& selection, const ActivatedGraph& g1,
                              const ActivatedGraph& g2) {
  nlohmann::json out = nlohmann::json::array();
  for (const SentenceScore& s : selection) {
    const DocumentGraph& graph = s.doc_id == g1.graph->doc_id ? *g1.graph : *g2.graph;
    nlohmann::json covered = nlohmann::json::array();
    for (const auto& [key, activation] : s.covered) covered.push_back(to_string(key));
    out.push_back({{"doc_id", s.doc_id},
                   {"sentence_index", s.sentence_index},
                   {"score", s.score},
                   {"covered", covered},
                   {"text", graph.sentence_text(s.sentence_index)}});
  }
  return out;
}

std::string_view status_name(SpreadStatus status) {
  return status == SpreadStatus::kOk ? "ok" : "topic_not_found";
}

}  // namespace

std::string format_weight(double value) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(4) << value;
  return out.str();
}

std::string mark_sentence(const DocumentGraph& graph, std::size_t sentence_index,
                          const std::vector<std::size_t>& common_positions,
                          const std::vector<std::size_t>& unique_positions) {
  const TokenRange range = graph.sentences.at(sentence_index);
  const CharSpan extent = graph.sentence_span(sentence_index);
  const auto mark_of = [&](std::size_t p) {
    if (std::binary_search(common_positions.begin(), common_positions.end(), p)) return Mark::kCommon;
    if (std::binary_search(unique_positions.begin(), unique_positions.end(), p)) return Mark::kUnique;
    return Mark::kNone;
  };
  // Two marked tokens share brackets only when just whitespace separates them.
  const auto joined = [&](std::size_t p) {
    for (std::size_t i = graph.token(p).span.end; i < graph.token(p + 1).span.begin; ++i) {
      if (!detail::is_ascii_space(graph.text[i])) return false;
    }
    return true;
  };

  std::string out;
  std::size_t cursor = extent.begin;
  for (std::size_t p = range.begin; p < range.end; ++p) {
    const Mark mark = mark_of(p);
    const CharSpan span = graph.token(p).span;
    out.append(graph.text, cursor, span.begin - cursor);
    const bool opens = mark != Mark::kNone && (p == range.begin || mark_of(p - 1) != mark || !joined(p - 1));
    const bool closes = mark != Mark::kNone && (p + 1 == range.end || mark_of(p + 1) != mark || !joined(p));
    if (opens) out += mark == Mark::kCommon ? '[' : '{';
    out.append(graph.text, span.begin, span.end - span.begin);
    if (closes) out += mark == Mark::kCommon ? ']' : '}';
    cursor = span.end;
  }
  out.append(graph.text, cursor, extent.end - cursor);
  return out;
}

void write_human_report(std::ostream& out, const ComparisonReport& report) {
  const ActivatedGraph& g1 = report.g1;
  const ActivatedGraph& g2 = report.g2;
  const ConceptPartition& concepts = report.result.concepts;

  out << "topic:";
  for (const std::string& term : report.topic.terms) out << ' ' << '"' << term << '"';
  out << "\ndocuments: " << g1.graph->doc_id << ", " << g2.graph->doc_id << "\n";

  const auto write_concepts = [&](const std::vector<Concept>& list, bool combined, std::size_t g) {
    out << "  concepts:";
    if (list.empty()) out << " (none)";
    for (const Concept& c : list) {
      out << ' ' << concept_label(c, g1, g2) << '=' << format_weight(combined ? c.combined_weight() : c.best_weight[g]);
    }
    out << '\n';
  };
  const auto write_selection = [&](const std::vector<SentenceScore>& selection) {
    if (selection.empty()) out << "  (no sentences)\n";
    for (const SentenceScore& s : selection) {
      const bool first = s.doc_id == g1.graph->doc_id;
      const ActivatedGraph& g = first ? g1 : g2;
      const std::size_t gi = first ? 0 : 1;
      const TokenRange range = g.graph->sentences[s.sentence_index];
      const auto common = positions_in(concepts.common, gi, range);
      const auto unique = positions_in(first ? concepts.differences_g1 : concepts.differences_g2, gi, range);
      out << "  " << s.doc_id << " #" << s.sentence_index << " score=" << format_weight(s.score) << '\n';
      out << "    " << mark_sentence(*g.graph, s.sentence_index, common, unique) << '\n';
    }
  };

  out << "\nCOMMON (" << concepts.common.size() << " concepts)\n";
  write_concepts(concepts.common, true, 0);
  write_selection(report.result.selected_common);
  out << "\nUNIQUE TO " << g1.graph->doc_id << " (" << concepts.differences_g1.size() << " concepts)\n";
  write_concepts(concepts.differences_g1, false, 0);
  write_selection(report.result.selected_diff_g1);
  out << "\nUNIQUE TO " << g2.graph->doc_id << " (" << concepts.differences_g2.size() << " concepts)\n";
  write_concepts(concepts.differences_g2, false, 1);
  write_selection(report.result.selected_diff_g2);

  out << "\nthresholds: " << (report.thresholds.passed ? "passed" : "BELOW THRESHOLD")
      << " (unique concepts " << report.thresholds.unique_concepts << ", coverage weight "
      << format_weight(report.thresholds.coverage_weight) << ")\n";
}

nlohmann::json report_json(const ComparisonReport& report) {
  const ActivatedGraph& g1 = report.g1;
  const ActivatedGraph& g2 = report.g2;
  const ConceptPartition& concepts = report.result.concepts;
  nlohmann::json documents = nlohmann::json::array();
  for (const ActivatedGraph* g : {&g1, &g2}) {
    documents.push_back({{"id", g->graph->doc_id},
                         {"status", status_name(g->status)},
                         {"sentences", g->graph->sentences.size()},
                         {"reached_nodes", g->reached.size()}});
  }
  return {
      {"schema", "textgraph-compare/1"},
      {"topic", report.topic.terms},
      {"documents", documents},
      {"concepts",
       {{"common", concepts_json(concepts.common, g1, g2)},
        {"unique_g1", concepts_json(concepts.differences_g1, g1, g2)},
        {"unique_g2", concepts_json(concepts.differences_g2, g1, g2)}}},
      {"selections",
       {{"common", selection_json(report.result.selected_common, g1, g2)},
        {"unique_g1", selection_json(report.result.selected_diff_g1, g1, g2)},
        {"unique_g2", selection_json(report.result.selected_diff_g2, g1, g2)}}},
      {"thresholds",
       {{"passed", report.thresholds.passed},
        {"unique_concepts", report.thresholds.unique_concepts},
        {"coverage_weight", report.thresholds.coverage_weight}}},
  };
}

}  // namespace textgraph
