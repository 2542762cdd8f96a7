#include "textgraph/corpus.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>

#include "textgraph/errors.hpp"
#include "textgraph/kernels.hpp"

namespace textgraph {
namespace {

constexpr std::string_view kMagic = "#textgraph-corpus v1 ";

// Strict decimal: digits only, no sign, no leading zeros except "0".
bool parse_count(std::string_view s, std::uint64_t& value) {
  if (s.empty() || (s.size() > 1 && s.front() == '0')) return false;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  return ec == std::errc() && ptr == s.data() + s.size();
}

}  // namespace

ReferenceCorpus::ReferenceCorpus(std::uint64_t n, Table df, std::string stemmer_id)
    : n_(n), df_(std::move(df)), stemmer_id_(std::move(stemmer_id)) {
  if (n_ < 1) throw ContractError("reference corpus needs n >= 1");
  for (const auto& [term, count] : df_) {
    if (count < 1 || count > n_) throw ContractError("df of '" + term + "' outside [1, n]");
  }
}

ReferenceCorpus ReferenceCorpus::uniform() { return ReferenceCorpus(1, {}); }

std::uint64_t ReferenceCorpus::document_frequency(std::string_view term) const {
  if (!is_stemmed(term)) throw ContractError("document_frequency expects a stemmed term, got '" + std::string(term) + "'");
  const auto it = df_.find(term);
  return it == df_.end() ? 1 : it->second;
}

ReferenceCorpus build_corpus(std::span<const std::string> documents, const StopWords& stopwords) {
  if (documents.empty()) throw ConfigError("cannot build a reference corpus from zero documents");
  return ReferenceCorpus(documents.size(), kernels::count_document_frequencies(documents, stopwords));
}

ReferenceCorpus build_corpus_serial(std::span<const std::string> documents, const StopWords& stopwords) {
  if (documents.empty()) throw ConfigError("cannot build a reference corpus from zero documents");
  return ReferenceCorpus(documents.size(), kernels::count_document_frequencies_serial(documents, stopwords));
}

void write_corpus(std::ostream& out, const ReferenceCorpus& corpus) {
  out << kMagic << "n=" << corpus.n() << " stemmer=" << corpus.stemmer_id() << '\n';
  for (const auto& [term, count] : corpus.df()) out << term << '\t' << count << '\n';
}

void save_corpus(const ReferenceCorpus& corpus, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write " + path);
  write_corpus(out, corpus);
  if (!out) throw ConfigError("failed writing " + path);
}

ReferenceCorpus read_corpus(std::istream& in, const std::string& source, std::string_view expected_stemmer) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError(source, 1, "missing header");
  std::string_view header = line;
  if (!header.starts_with(kMagic)) throw ParseError(source, 1, "header must start with '#textgraph-corpus v1'");
  header.remove_prefix(kMagic.size());
  if (!header.starts_with("n=")) throw ParseError(source, 1, "header field n= expected");
  header.remove_prefix(2);
  const auto space = header.find(' ');
  if (space == std::string_view::npos) throw ParseError(source, 1, "header field stemmer= expected");
  std::uint64_t n = 0;
  if (!parse_count(header.substr(0, space), n)) throw ParseError(source, 1, "n is not a decimal count");
  if (n < 1) throw ParseError(source, 1, "n must be at least 1");
  header.remove_prefix(space + 1);
  if (!header.starts_with("stemmer=")) throw ParseError(source, 1, "header field stemmer= expected");
  header.remove_prefix(8);
  if (header.empty() || header.find_first_of(" \t\r") != std::string_view::npos) {
    throw ParseError(source, 1, "malformed stemmer id");
  }
  if (header != expected_stemmer) {
    throw ParseError(source, 1, "stemmer '" + std::string(header) + "' does not match '" + std::string(expected_stemmer) + "'");
  }
  const std::string stemmer_id(header);

  ReferenceCorpus::Table df;
  std::string previous;
  std::size_t line_number = 1;
  while (std::getline(in, line)) {
    ++line_number;
    const auto tab = line.find('\t');
    if (tab == std::string::npos || line.find('\t', tab + 1) != std::string::npos) {
      throw ParseError(source, line_number, "expected <term>\\t<df>");
    }
    const std::string term = line.substr(0, tab);
    std::uint64_t count = 0;
    if (term.empty()) throw ParseError(source, line_number, "empty term");
    if (term.find_first_of(" \r\n\v\f") != std::string::npos) throw ParseError(source, line_number, "whitespace in term");
    if (!is_stemmed(term)) throw ParseError(source, line_number, "term '" + term + "' is not in stemmed form");
    if (!parse_count(std::string_view(line).substr(tab + 1), count)) {
      throw ParseError(source, line_number, "df is not a decimal count");
    }
    if (count < 1 || count > n) throw ParseError(source, line_number, "df outside [1, n]");
    if (!previous.empty() && term <= previous) throw ParseError(source, line_number, "terms not strictly sorted");
    df.emplace(term, count);
    previous = term;
  }
  return ReferenceCorpus(n, std::move(df), stemmer_id);
}

ReferenceCorpus load_corpus(const std::string& path, std::string_view expected_stemmer) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open " + path);
  return read_corpus(in, path, expected_stemmer);
}

}  // namespace textgraph
