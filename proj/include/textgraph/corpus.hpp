#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <string_view>

#include "textgraph/stemmer.hpp"
#include "textgraph/textprep.hpp"

namespace textgraph {

// Document-frequency statistics of a reference collection.
//
// Invariants: n >= 1; every df value lies in [1, n]; every key is a stemmed,
// lowercase term. build_corpus never inserts stop words.
class ReferenceCorpus {
 public:
  using Table = std::map<std::string, std::uint64_t, std::less<>>;

  // Throws ContractError if the invariants do not hold.
  ReferenceCorpus(std::uint64_t n, Table df, std::string stemmer_id = std::string(kStemmerId));

  // n = 1 with an empty table: every term has df = 1, so weights reduce to
  // tf * (log 1 - log 1 + 1) = tf.
  static ReferenceCorpus uniform();

  std::uint64_t n() const { return n_; }
  const Table& df() const { return df_; }
  const std::string& stemmer_id() const { return stemmer_id_; }
  std::size_t vocabulary_size() const { return df_.size(); }

  // df of a stemmed term; unseen terms report 1. Throws ContractError if the
  // term is not in stemmed form.
  std::uint64_t document_frequency(std::string_view term) const;

  bool operator==(const ReferenceCorpus&) const = default;

 private:
  std::uint64_t n_;
  Table df_;
  std::string stemmer_id_;
};

// Counts, for every stemmed non-stop term, the number of documents containing
// it. Documents are processed in parallel and merged in input order.
// Throws ConfigError for an empty collection and EmptyDocumentError (naming
// the index) for a document without tokens.
ReferenceCorpus build_corpus(std::span<const std::string> documents, const StopWords& stopwords);

// Single-threaded reference for build_corpus; same contract, same result.
ReferenceCorpus build_corpus_serial(std::span<const std::string> documents, const StopWords& stopwords);

// Corpus file, line-oriented UTF-8:
//   #textgraph-corpus v1 n=<int> stemmer=<id>
//   <term>\t<df>          (one per term, sorted by term bytewise)
void write_corpus(std::ostream& out, const ReferenceCorpus& corpus);
void save_corpus(const ReferenceCorpus& corpus, const std::string& path);

// Throws ParseError naming the offending line for any deviation from the
// format, and for a stemmer id other than `expected_stemmer`.
ReferenceCorpus read_corpus(std::istream& in, const std::string& source,
                            std::string_view expected_stemmer = kStemmerId);
ReferenceCorpus load_corpus(const std::string& path, std::string_view expected_stemmer = kStemmerId);

}  // namespace textgraph
