#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "textgraph/errors.hpp"
#include "textgraph/textprep.hpp"
#include "text_util.hpp"

namespace textgraph {

namespace bundled {
extern const std::string_view kStopWords;
extern const std::string_view kAbbreviations;
}  // namespace bundled

std::string_view to_string(PosTag tag) {
  switch (tag) {
    case PosTag::kNoun: return "NOUN";
    case PosTag::kAdj: return "ADJ";
    case PosTag::kVerb: return "VERB";
    case PosTag::kOther: return "OTHER";
    case PosTag::kStop: return "STOP";
  }
  return "?";
}

std::string_view to_string(NameType type) {
  switch (type) {
    case NameType::kPerson: return "PERSON";
    case NameType::kOrg: return "ORG";
    case NameType::kPlace: return "PLACE";
    case NameType::kUnknown: return "UNKNOWN";
  }
  return "?";
}

WordList WordList::parse(std::string_view contents) {
  std::set<std::string> words;
  for (std::string_view line : detail::split_lines(contents)) {
    std::string_view entry = detail::trim(line);
    if (!entry.empty()) words.insert(detail::ascii_lower(entry));
  }
  return WordList(std::move(words));
}

WordList WordList::load(const std::string& path) { return parse(detail::read_file(path)); }

bool WordList::contains(std::string_view word) const { return words_.contains(detail::ascii_lower(word)); }

void WordList::merge(const WordList& other) { words_.insert(other.words_.begin(), other.words_.end()); }

StopWords bundled_stopwords() {
  static const WordList list = WordList::parse(bundled::kStopWords);
  return list;
}

Abbreviations bundled_abbreviations() {
  static const WordList list = WordList::parse(bundled::kAbbreviations);
  return list;
}

void AliasLexicon::add(std::string_view canonical, std::string_view alias) {
  std::string a = detail::normalize_name(canonical);
  std::string b = detail::normalize_name(alias);
  if (a.empty() || b.empty()) throw ContractError("alias lexicon entries must be non-empty");
  if (b < a) std::swap(a, b);
  pairs_.emplace(std::move(a), std::move(b));
}

bool AliasLexicon::pairs(std::string_view a, std::string_view b) const {
  std::string x = detail::normalize_name(a);
  std::string y = detail::normalize_name(b);
  if (y < x) std::swap(x, y);
  return pairs_.contains({x, y});
}

AliasLexicon AliasLexicon::parse(std::string_view contents, const std::string& source) {
  AliasLexicon lexicon;
  std::size_t line_number = 0;
  for (std::string_view line : detail::split_lines(contents)) {
    ++line_number;
    if (detail::trim(line).empty()) continue;
    const auto fields = detail::split(line, '\t');
    if (fields.size() != 2) throw ParseError(source, line_number, "expected <canonical>\\t<alias>");
    if (detail::trim(fields[0]).empty() || detail::trim(fields[1]).empty()) {
      throw ParseError(source, line_number, "empty name field");
    }
    lexicon.add(fields[0], fields[1]);
  }
  return lexicon;
}

AliasLexicon AliasLexicon::load(const std::string& path) { return parse(detail::read_file(path), path); }

}  // namespace textgraph
