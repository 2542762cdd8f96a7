#include <algorithm>
#include <set>

#include "textgraph/docgraph.hpp"
#include "text_util.hpp"

namespace textgraph {
namespace {

// Phrase runs never span a sentence boundary or punctuation.
bool continues_run(const DocumentGraph& graph, std::size_t p) {
  const Token& prev = graph.token(p - 1);
  const Token& next = graph.token(p);
  if (prev.sentence_index != next.sentence_index) return false;
  for (std::size_t i = prev.span.end; i < next.span.begin; ++i) {
    if (!detail::is_ascii_space(graph.text[i])) return false;
  }
  return true;
}

}  // namespace

const std::vector<PhraseCandidate>& extract_phrases(DocumentGraph& graph, const PhraseParams& params) {
  std::vector<PhraseCandidate> phrases;
  std::set<std::string> consumed;
  const std::size_t count = graph.size();

  std::size_t p = 0;
  while (p < count) {
    const PosTag tag = graph.token(p).pos_tag;
    if (tag != PosTag::kAdj && tag != PosTag::kNoun) {
      ++p;
      continue;
    }
    const std::size_t begin = p;
    std::size_t q = p;
    while (q < count && graph.token(q).pos_tag == PosTag::kAdj && (q == begin || continues_run(graph, q))) ++q;
    const std::size_t nouns_begin = q;
    while (q < count && graph.token(q).pos_tag == PosTag::kNoun && (q == begin || continues_run(graph, q))) ++q;
    if (q == nouns_begin) {
      // Adjectives without a following noun; resume after them.
      p = std::max(q, begin + 1);
      continue;
    }

    PhraseCandidate phrase;
    phrase.range = {begin, q};
    double sum = 0.0;
    for (std::size_t i = begin; i < q; ++i) {
      const int theta = consumed.contains(graph.token(i).stem) ? 0 : 1;
      phrase.content_words.push_back(i);
      phrase.theta.push_back(theta);
      sum += theta * graph.nodes[i].weight;
    }
    const std::size_t n = phrase.content_words.size();
    phrase.length_bonus = params.beta(n);
    phrase.weight = phrase.length_bonus + sum / static_cast<double>(n);
    for (std::size_t i = begin; i < q; ++i) consumed.insert(graph.token(i).stem);
    phrases.push_back(std::move(phrase));
    p = q;
  }

  for (const PhraseCandidate& phrase : phrases) {
    for (std::size_t i = phrase.range.begin; i + 1 < phrase.range.end; ++i) {
      graph.edges.push_back({i, i + 1, EdgeType::plain(EdgeKind::kPhrase)});
    }
  }
  std::sort(graph.edges.begin(), graph.edges.end());
  graph.edges.erase(std::unique(graph.edges.begin(), graph.edges.end()), graph.edges.end());
  graph.phrases = std::move(phrases);
  return graph.phrases;
}

}  // namespace textgraph
