#include <algorithm>
#include <filesystem>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "textgraph/corpus.hpp"
#include "textgraph/errors.hpp"
#include "textgraph/kernels.hpp"

using namespace textgraph;

namespace {

ReferenceCorpus parse(const std::string& contents) {
  std::istringstream in(contents);
  return read_corpus(in, "mem");
}

std::string serialize(const ReferenceCorpus& c) {
  std::ostringstream out;
  write_corpus(out, c);
  return out.str();
}

std::vector<std::string> random_collection(std::mt19937& rng, std::size_t count) {
  const std::vector<std::string> content = {"rebels", "embassy", "hostage", "talks", "police", "release", "releases",
                                            "guards", "leader", "chief", "house", "residence", "crisis", "demand"};
  std::vector<std::string> docs;
  for (std::size_t i = 0; i < count; ++i) {
    docs.push_back(oracle::random_text(rng, std::uniform_int_distribution<std::size_t>(3, 40)(rng), content, {}));
  }
  return docs;
}

}  // namespace

TEST_CASE("document_frequency lookups") {
  const ReferenceCorpus c(10, {{"relea", 7}});
  CHECK(c.document_frequency("relea") == 7);
  CHECK(c.document_frequency("absent") == 1);
  CHECK_THROWS_AS(c.document_frequency("Releases"), ContractError);
  CHECK(ReferenceCorpus::uniform().n() == 1);
}

TEST_CASE("constructor enforces invariants") {
  CHECK_THROWS_AS(ReferenceCorpus(0, {}), ContractError);
  CHECK_THROWS_AS(ReferenceCorpus(3, {{"cat", 5}}), ContractError);
  CHECK_THROWS_AS(ReferenceCorpus(3, {{"cat", 0}}), ContractError);
}

TEST_CASE("build counts one per document and skips stop words") {
  const std::vector<std::string> docs = {"Cats chase cats.", "The cat sleeps.", "Dogs bark."};
  const ReferenceCorpus c = build_corpus(docs, bundled_stopwords());
  CHECK(c.n() == 3);
  CHECK(c.document_frequency("cat") == 2);
  CHECK(c.document_frequency("dog") == 1);
  CHECK_FALSE(c.df().contains("the"));
  CHECK(c == build_corpus_serial(docs, bundled_stopwords()));
  CHECK_THROWS_AS(build_corpus(std::vector<std::string>{}, bundled_stopwords()), ConfigError);
  CHECK_THROWS_AS(build_corpus(std::vector<std::string>{"ok words", "..."}, bundled_stopwords()), EmptyDocumentError);
}

TEST_CASE("file round-trip") {
  std::mt19937 rng(3);
  for (int round = 0; round < 20; ++round) {
    const ReferenceCorpus c = build_corpus(random_collection(rng, 12), bundled_stopwords());
    const std::string text = serialize(c);
    CHECK(parse(text) == c);
    CHECK(serialize(parse(text)) == text);
  }
}

TEST_CASE("reader rejects malformed files") {
  const std::string header = "#textgraph-corpus v1 n=3 stemmer=" + std::string(kStemmerId) + "\n";
  CHECK_NOTHROW(parse(header + "cat\t2\n"));
  CHECK_THROWS_AS(parse("#textgraph-corpus v1 n=0 stemmer=" + std::string(kStemmerId) + "\n"), ParseError);
  CHECK_THROWS_AS(parse(header + "cat\t5\n"), ParseError);
  CHECK_THROWS_AS(parse(header + "cat\t0\n"), ParseError);
  CHECK_THROWS_AS(parse(header + "cat\t02\n"), ParseError);
  CHECK_THROWS_AS(parse(header + "cat 2\n"), ParseError);
  CHECK_THROWS_AS(parse(header + "dog\t1\ncat\t1\n"), ParseError);
  CHECK_THROWS_AS(parse(header + "cat\t1\ncat\t1\n"), ParseError);
  CHECK_THROWS_AS(parse(header + "Cats\t1\n"), ParseError);
  CHECK_THROWS_AS(parse(header + "\n"), ParseError);
  CHECK_THROWS_AS(parse("#textgraph-corpus v1 n=3 stemmer=other\n"), ParseError);
  CHECK_THROWS_AS(parse("#textgraph-corpus v2 n=3 stemmer=" + std::string(kStemmerId) + "\n"), ParseError);
  CHECK_THROWS_AS(parse(""), ParseError);
  try {
    parse(header + "ant\t1\ncat\t9\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
}

TEST_CASE("df equals a brute-force count") {
  std::mt19937 rng(11);
  for (int round = 0; round < 20; ++round) {
    const auto docs = random_collection(rng, 15);
    std::map<std::string, std::uint64_t> expected;
    for (const std::string& doc : docs) {
      std::set<std::string> seen;
      for (std::string_view w : tokenize_words(doc)) {
        if (!bundled_stopwords().contains(w)) seen.insert(stem(w));
      }
      for (const std::string& s : seen) ++expected[s];
    }
    const ReferenceCorpus c = build_corpus(docs, bundled_stopwords());
    CHECK(ReferenceCorpus::Table(expected.begin(), expected.end()) == c.df());
  }
}

TEST_CASE("adding a document never lowers df and adds one to n") {
  std::mt19937 rng(5);
  for (int round = 0; round < 20; ++round) {
    auto docs = random_collection(rng, 8);
    const ReferenceCorpus before = build_corpus(docs, bundled_stopwords());
    docs.push_back(random_collection(rng, 1).front());
    const ReferenceCorpus after = build_corpus(docs, bundled_stopwords());
    CHECK(after.n() == before.n() + 1);
    for (const auto& [term, df] : before.df()) CHECK(after.document_frequency(term) >= df);
  }
}

TEST_CASE("parallel kernels match their serial references") {
  std::mt19937 rng(17);
  const auto docs = random_collection(rng, 200);
  CHECK(kernels::count_document_frequencies(docs, bundled_stopwords()) ==
        kernels::count_document_frequencies_serial(docs, bundled_stopwords()));
  const TextResources resources;
  const auto parallel = kernels::analyze_all(docs, resources);
  const auto serial = kernels::analyze_all_serial(docs, resources);
  REQUIRE(parallel.size() == serial.size());
  for (std::size_t i = 0; i < parallel.size(); ++i) {
    CHECK(parallel[i].tokens == serial[i].tokens);
    CHECK(parallel[i].names == serial[i].names);
  }
  std::vector<std::string> bad = docs;
  bad[50] = "--";
  CHECK_THROWS_AS(kernels::analyze_all(bad, resources), EmptyDocumentError);
}

TEST_CASE("bundled reference corpus matches a fresh build") {
  std::vector<std::filesystem::path> paths;
  for (const auto& entry : std::filesystem::directory_iterator(fixtures::sample_path("reference"))) {
    paths.push_back(entry.path());
  }
  std::sort(paths.begin(), paths.end());
  std::vector<std::string> docs;
  for (const auto& path : paths) docs.push_back(fixtures::slurp(path.string()));
  const ReferenceCorpus rebuilt = build_corpus(docs, bundled_stopwords());
  CHECK(serialize(rebuilt) == fixtures::slurp(fixtures::sample_path("reference.corpus")));
}
