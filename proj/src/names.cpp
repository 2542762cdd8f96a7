#include <algorithm>
#include <array>

#include "textgraph/textprep.hpp"
#include "text_util.hpp"

namespace textgraph {
namespace {

constexpr std::array<std::string_view, 16> kTitles = {
    "president", "mr", "mrs", "ms", "dr", "prof", "gen", "general", "minister",
    "ambassador", "senator", "gov", "governor", "judge", "commander", "colonel"};

constexpr std::array<std::string_view, 18> kOrgHeads = {
    "movement", "front", "party", "army", "group", "inc", "corp", "co", "ltd",
    "company", "council", "ministry", "agency", "union", "bank", "association", "committee", "police"};

constexpr std::array<std::string_view, 3> kPlacePrepositions = {"in", "at", "near"};

template <std::size_t N>
bool listed(const std::array<std::string_view, N>& list, std::string_view word) {
  const std::string lower = detail::ascii_lower(word);
  return std::find(list.begin(), list.end(), lower) != list.end();
}

bool capitalized(const Token& token) { return detail::is_ascii_upper(token.surface.front()); }

bool all_caps(std::string_view word) {
  return word.size() >= 2 && std::all_of(word.begin(), word.end(), [](char c) {
           return detail::is_ascii_upper(c) || c == '.' || c == '&';
         });
}

bool only_space_between(std::string_view text, const Token& a, const Token& b) {
  for (std::size_t i = a.span.end; i < b.span.begin; ++i) {
    if (!detail::is_ascii_space(text[i])) return false;
  }
  return true;
}

NameType classify(std::span<const Token> tokens, const NameMention& mention) {
  const Token& first = tokens[mention.range.begin];
  const Token& last = tokens[mention.range.end - 1];
  if (listed(kOrgHeads, last.surface) || (mention.range.size() == 1 && all_caps(first.surface))) return NameType::kOrg;
  if (listed(kTitles, first.surface) && mention.range.size() > 1) return NameType::kPerson;
  if (mention.range.begin > 0) {
    const Token& before = tokens[mention.range.begin - 1];
    if (before.sentence_index == first.sentence_index) {
      if (listed(kTitles, before.surface)) return NameType::kPerson;
      if (listed(kPlacePrepositions, before.surface)) return NameType::kPlace;
    }
  }
  return NameType::kUnknown;
}

}  // namespace

std::vector<NameMention> find_names(std::span<const Token> tokens, std::string_view text) {
  std::vector<NameMention> mentions;
  std::size_t p = 0;
  while (p < tokens.size()) {
    if (!capitalized(tokens[p]) || tokens[p].is_stop()) {
      ++p;
      continue;
    }
    std::size_t end = p + 1;
    while (end < tokens.size() && capitalized(tokens[end]) && !tokens[end].is_stop() &&
           tokens[end].sentence_index == tokens[p].sentence_index && only_space_between(text, tokens[end - 1], tokens[end])) {
      ++end;
    }
    if (!(tokens[p].sentence_initial && end - p == 1)) {
      NameMention mention;
      mention.range = {p, end};
      for (std::size_t i = p; i < end; ++i) {
        if (i > p) mention.canonical += ' ';
        mention.canonical += tokens[i].surface;
      }
      mention.type = classify(tokens, mention);
      mentions.push_back(std::move(mention));
    }
    p = end;
  }
  return mentions;
}

bool alias_match(std::string_view a, std::string_view b, const AliasLexicon& aliases) {
  const std::string x = detail::normalize_name(a);
  const std::string y = detail::normalize_name(b);
  if (x.empty() || y.empty()) return false;
  if (x == y) return true;

  // Contiguous token run: compare on whole words by padding with spaces.
  const std::string& shorter = x.size() <= y.size() ? x : y;
  const std::string& longer = x.size() <= y.size() ? y : x;
  if (std::string(" ").append(longer).append(" ").find(std::string(" ").append(shorter).append(" ")) !=
      std::string::npos) {
    return true;
  }
  return aliases.pairs(x, y);
}

bool alias_match(const NameMention& a, const NameMention& b, const AliasLexicon& aliases) {
  return alias_match(a.canonical, b.canonical, aliases);
}

AnalyzedText analyze(std::string text, const TextResources& resources) {
  AnalyzedText out;
  out.tokens = segment(text, resources.abbreviations);
  tag_pos(out.tokens, resources.stopwords);
  out.names = find_names(out.tokens, text);
  out.text = std::move(text);
  return out;
}

}  // namespace textgraph
