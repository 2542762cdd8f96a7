#include "textgraph/activation.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <queue>

#include "textgraph/errors.hpp"
#include "textgraph/stemmer.hpp"
#include "text_util.hpp"

namespace textgraph {
namespace {

struct Hop {
  std::size_t to;
  double factor;
};

// Per-node outgoing hops between non-stop nodes. ADJ hops walk across stop
// words to the nearest content word on each side; stop words only add to the
// distance.
std::vector<std::vector<Hop>> build_hops(const DocumentGraph& graph, const SpreadParams& params) {
  const std::size_t n = graph.size();
  std::vector<std::vector<std::size_t>> adjacent(n);
  std::vector<std::vector<Hop>> hops(n);
  const auto is_stop = [&graph](std::size_t p) { return graph.token(p).is_stop(); };

  for (const Edge& edge : graph.edges) {
    const EdgeKind kind = edge.type.kind();
    if (kind == EdgeKind::kAdj) {
      adjacent[edge.from].push_back(edge.to);
      adjacent[edge.to].push_back(edge.from);
      continue;
    }
    if (is_stop(edge.from) || is_stop(edge.to)) continue;
    const double factor = kind == EdgeKind::kAlpha ? *edge.type.strength() : params.link_weight(kind);
    hops[edge.from].push_back({edge.to, factor});
    hops[edge.to].push_back({edge.from, factor});
  }

  std::vector<std::size_t> stack;
  std::vector<char> visited(n, 0);
  std::vector<std::size_t> touched;
  for (std::size_t u = 0; u < n; ++u) {
    if (is_stop(u)) continue;
    visited[u] = 1;
    touched.assign(1, u);
    stack.assign(adjacent[u].begin(), adjacent[u].end());
    while (!stack.empty()) {
      const std::size_t w = stack.back();
      stack.pop_back();
      if (visited[w]) continue;
      visited[w] = 1;
      touched.push_back(w);
      if (is_stop(w)) {
        stack.insert(stack.end(), adjacent[w].begin(), adjacent[w].end());
      } else {
        hops[u].push_back({w, std::exp(-params.decay_rate * adjacency_distance(graph, u, w, params))});
      }
    }
    for (std::size_t t : touched) visited[t] = 0;
  }
  return hops;
}

struct Pending {
  double activation;
  std::size_t position;
};

// Highest activation first; ties go to the earlier position.
struct PendingOrder {
  bool operator()(const Pending& a, const Pending& b) const {
    if (a.activation != b.activation) return a.activation < b.activation;
    return a.position > b.position;
  }
};

}  // namespace

void SpreadParams::validate() const {
  if (!(decay_rate > 0.0)) throw ConfigError("decay rate must be positive");
  if (!(sentence_crossing_cost > 0.0)) throw ConfigError("sentence crossing cost must be positive");
  if (!(paragraph_crossing_cost > 0.0)) throw ConfigError("paragraph crossing cost must be positive");
  if (!(sentence_crossing_cost < paragraph_crossing_cost)) {
    throw ConfigError("sentence crossing cost must be lower than paragraph crossing cost");
  }
  for (double w : {link_weights.same, link_weights.phrase, link_weights.name, link_weights.coref}) {
    if (!(w > 0.0 && w <= 1.0)) throw ConfigError("link weights must lie in (0, 1]");
  }
  if (max_output_nodes == 0) throw ConfigError("max output nodes must be positive");
}

double SpreadParams::link_weight(EdgeKind kind) const {
  switch (kind) {
    case EdgeKind::kSame: return link_weights.same;
    case EdgeKind::kPhrase: return link_weights.phrase;
    case EdgeKind::kName: return link_weights.name;
    case EdgeKind::kCoref: return link_weights.coref;
    case EdgeKind::kAdj:
    case EdgeKind::kAlpha:
      break;
  }
  throw ContractError("link_weight is defined for SAME, PHRASE, NAME and COREF only");
}

double adjacency_distance(const DocumentGraph& graph, std::size_t from, std::size_t to, const SpreadParams& params) {
  const Token& a = graph.token(std::min(from, to));
  const Token& b = graph.token(std::max(from, to));
  const auto sentences = static_cast<double>(b.sentence_index - a.sentence_index);
  const auto paragraphs = static_cast<double>(b.paragraph_index - a.paragraph_index);
  return static_cast<double>(b.position - a.position) + params.sentence_crossing_cost * (sentences - paragraphs) +
         params.paragraph_crossing_cost * paragraphs;
}

Topic Topic::from_terms(std::vector<std::string> terms, const StopWords& stopwords) {
  Topic topic;
  for (std::string& term : terms) {
    const auto words = detail::split_whitespace(term);
    const bool content = std::any_of(words.begin(), words.end(), [&](std::string_view w) { return !stopwords.contains(w); });
    if (content) topic.terms.push_back(std::string(detail::trim(term)));
  }
  if (topic.terms.empty()) throw ConfigError("topic is empty after removing stop words");
  return topic;
}

bool ActivatedGraph::is_reached(std::size_t position) const {
  return std::binary_search(reached.begin(), reached.end(), position);
}

double ActivatedGraph::max_activation() const {
  double best = 0.0;
  for (double a : activation) best = std::max(best, a);
  return best;
}

std::vector<std::size_t> entry_points(const DocumentGraph& graph, const Topic& topic, const AliasLexicon& aliases) {
  std::vector<char> selected(graph.size(), 0);
  const auto select_stem = [&](const std::string& s) {
    for (const GraphNode& node : graph.nodes) {
      if (!node.token.is_stop() && node.token.stem == s) selected[node.token.position] = 1;
    }
  };

  std::vector<char> in_class(graph.names.size(), 0);
  std::vector<std::size_t> frontier;
  for (const std::string& term : topic.terms) {
    const auto words = detail::split_whitespace(term);
    if (words.size() == 1) select_stem(stem(words.front()));
    for (std::size_t i = 0; i < graph.names.size(); ++i) {
      if (!in_class[i] && alias_match(term, graph.names[i].canonical, aliases)) {
        in_class[i] = 1;
        frontier.push_back(i);
      }
    }
  }
  while (!frontier.empty()) {
    const std::size_t i = frontier.back();
    frontier.pop_back();
    for (std::size_t j = 0; j < graph.names.size(); ++j) {
      if (!in_class[j] && alias_match(graph.names[i], graph.names[j], aliases)) {
        in_class[j] = 1;
        frontier.push_back(j);
      }
    }
  }
  for (std::size_t i = 0; i < graph.names.size(); ++i) {
    if (!in_class[i]) continue;
    const NameMention& mention = graph.names[i];
    for (std::size_t p = mention.range.begin; p < mention.range.end; ++p) {
      if (!graph.token(p).is_stop()) selected[p] = 1;
    }
    if (mention.range.size() == 1) select_stem(graph.token(mention.range.begin).stem);
  }

  std::vector<std::size_t> entries;
  for (std::size_t p = 0; p < selected.size(); ++p) {
    if (selected[p]) entries.push_back(p);
  }
  return entries;
}

ActivatedGraph spread(std::shared_ptr<const DocumentGraph> graph, const Topic& topic, const AliasLexicon& aliases,
                      const SpreadParams& params) {
  const std::vector<std::size_t> entries = entry_points(*graph, topic, aliases);
  return spread_from(std::move(graph), entries, params);
}

ActivatedGraph spread_from(std::shared_ptr<const DocumentGraph> graph, std::span<const std::size_t> entries,
                           const SpreadParams& params) {
  params.validate();
  const std::size_t n = graph->size();

  ActivatedGraph out;
  out.activation.assign(n, 0.0);
  for (std::size_t p : entries) {
    if (p >= n) throw ContractError("entry position out of range");
    if (!graph->token(p).is_stop()) out.entry_positions.push_back(p);
  }
  std::sort(out.entry_positions.begin(), out.entry_positions.end());
  out.entry_positions.erase(std::unique(out.entry_positions.begin(), out.entry_positions.end()), out.entry_positions.end());
  if (out.entry_positions.empty()) {
    out.status = SpreadStatus::kTopicNotFound;
    out.graph = std::move(graph);
    return out;
  }

  const std::vector<std::vector<Hop>> hops = build_hops(*graph, params);
  const double entry_activation = graph->max_weight();

  std::vector<double> best(n, -1.0);
  std::vector<char> done(n, 0);
  std::vector<char> is_entry(n, 0);
  std::priority_queue<Pending, std::vector<Pending>, PendingOrder> active;
  for (std::size_t p : out.entry_positions) {
    best[p] = entry_activation;
    is_entry[p] = 1;
    active.push({entry_activation, p});
  }

  std::size_t entries_left = out.entry_positions.size();
  while (!active.empty()) {
    if (out.expansion_order.size() >= params.max_output_nodes && entries_left == 0) break;
    const Pending top = active.top();
    active.pop();
    if (done[top.position] || top.activation < best[top.position]) continue;
    done[top.position] = 1;
    out.activation[top.position] = top.activation;
    out.expansion_order.push_back(top.position);
    if (is_entry[top.position]) --entries_left;

    for (const Hop& hop : hops[top.position]) {
      if (done[hop.to]) continue;
      const double candidate = top.activation * hop.factor;
      if (candidate > best[hop.to]) {
        best[hop.to] = candidate;
        active.push({candidate, hop.to});
      }
    }
  }

  out.reached = out.expansion_order;
  std::sort(out.reached.begin(), out.reached.end());
  out.graph = std::move(graph);
  return out;
}

namespace {

template <typename Value>
std::vector<ProfileRow> sentence_means(const DocumentGraph& graph, Value value) {
  std::vector<ProfileRow> rows;
  rows.reserve(graph.sentences.size());
  for (std::size_t s = 0; s < graph.sentences.size(); ++s) {
    double sum = 0.0;
    std::size_t count = 0;
    for (std::size_t p = graph.sentences[s].begin; p < graph.sentences[s].end; ++p) {
      if (graph.token(p).is_stop()) continue;
      sum += value(p);
      ++count;
    }
    rows.push_back({s, count == 0 ? 0.0 : sum / static_cast<double>(count)});
  }
  return rows;
}

}  // namespace

std::vector<ProfileRow> sentence_profile(const ActivatedGraph& activated) {
  return sentence_means(*activated.graph, [&](std::size_t p) { return activated.activation[p]; });
}

std::vector<ProfileRow> raw_profile(const DocumentGraph& graph) {
  return sentence_means(graph, [&](std::size_t p) { return graph.nodes[p].weight; });
}

void write_profile_csv(std::ostream& out, std::span<const ProfileRow> rows) {
  const auto flags = out.flags();
  const auto precision = out.precision();
  out << "sentence_index,mean_activation\n" << std::fixed << std::setprecision(6);
  for (const ProfileRow& row : rows) out << row.sentence_index << ',' << row.mean << '\n';
  out.flags(flags);
  out.precision(precision);
}

}  // namespace textgraph
