#include <charconv>
#include <cmath>

#include "textgraph/docgraph.hpp"
#include "textgraph/errors.hpp"
#include "textgraph/stemmer.hpp"
#include "text_util.hpp"

namespace textgraph {

void SynonymLexicon::add(std::string_view a, std::string_view b, double strength) {
  if (!(strength > 0.0 && strength <= 1.0)) throw ContractError("synonym strength must lie in (0, 1]");
  std::string x = stem(a);
  std::string y = stem(b);
  if (x.empty() || y.empty()) throw ContractError("synonym entries must be non-empty");
  if (x == y) throw ContractError("synonym pair '" + std::string(a) + "', '" + std::string(b) + "' shares one stem");
  if (const auto existing = this->strength(x, y); existing && *existing != strength) {
    throw ContractError("conflicting strengths for synonym pair '" + x + "', '" + y + "'");
  }
  table_[{x, y}] = strength;
  table_[{y, x}] = strength;
}

std::optional<double> SynonymLexicon::strength(std::string_view stem_a, std::string_view stem_b) const {
  const auto it = table_.find(std::pair<std::string, std::string>(stem_a, stem_b));
  if (it == table_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::pair<std::string, double>> SynonymLexicon::neighbors(std::string_view stem_value) const {
  std::vector<std::pair<std::string, double>> out;
  for (auto it = table_.lower_bound(std::pair<std::string, std::string>(stem_value, ""));
       it != table_.end() && it->first.first == stem_value; ++it) {
    out.emplace_back(it->first.second, it->second);
  }
  return out;
}

SynonymLexicon SynonymLexicon::parse(std::string_view contents, const std::string& source) {
  SynonymLexicon lexicon;
  std::size_t line_number = 0;
  for (std::string_view line : detail::split_lines(contents)) {
    ++line_number;
    if (detail::trim(line).empty()) continue;
    const auto fields = detail::split(line, '\t');
    if (fields.size() != 3) throw ParseError(source, line_number, "expected <word_a>\\t<word_b>\\t<strength>");
    const std::string_view a = detail::trim(fields[0]);
    const std::string_view b = detail::trim(fields[1]);
    const std::string_view s = detail::trim(fields[2]);
    if (a.empty() || b.empty()) throw ParseError(source, line_number, "empty word field");
    double strength = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), strength);
    if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(strength)) {
      throw ParseError(source, line_number, "strength is not a number");
    }
    if (!(strength > 0.0 && strength <= 1.0)) throw ParseError(source, line_number, "strength outside (0, 1]");
    try {
      lexicon.add(a, b, strength);
    } catch (const ContractError& e) {
      throw ParseError(source, line_number, e.what());
    }
  }
  return lexicon;
}

SynonymLexicon SynonymLexicon::load(const std::string& path) { return parse(detail::read_file(path), path); }

}  // namespace textgraph
