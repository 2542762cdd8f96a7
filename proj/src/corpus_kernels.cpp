#include <algorithm>
#include <exception>
#include <set>

#include "textgraph/errors.hpp"
#include "textgraph/kernels.hpp"
#include "textgraph/stemmer.hpp"

namespace textgraph::kernels {
namespace {

[[noreturn]] void throw_empty(std::size_t index) {
  throw EmptyDocumentError("document " + std::to_string(index) + " contains no word tokens");
}

}  // namespace

std::vector<std::string> document_terms(std::string_view text, const StopWords& stopwords) {
  std::vector<std::string> terms;
  for (std::string_view word : tokenize_words(text)) {
    if (!stopwords.contains(word)) terms.push_back(stem(word));
  }
  std::sort(terms.begin(), terms.end());
  terms.erase(std::unique(terms.begin(), terms.end()), terms.end());
  return terms;
}

ReferenceCorpus::Table count_document_frequencies(std::span<const std::string> documents, const StopWords& stopwords) {
  const auto count = static_cast<std::ptrdiff_t>(documents.size());
  std::vector<std::vector<std::string>> per_document(documents.size());
  std::vector<char> empty(documents.size(), 0);

#pragma omp parallel for schedule(dynamic, 8)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    const std::string& text = documents[static_cast<std::size_t>(i)];
    if (tokenize_words(text).empty()) {
      empty[static_cast<std::size_t>(i)] = 1;
      continue;
    }
    per_document[static_cast<std::size_t>(i)] = document_terms(text, stopwords);
  }

  if (const auto it = std::find(empty.begin(), empty.end(), 1); it != empty.end()) {
    throw_empty(static_cast<std::size_t>(it - empty.begin()));
  }

  // Merge in document order so the table is independent of scheduling.
  ReferenceCorpus::Table df;
  for (const auto& terms : per_document) {
    for (const std::string& term : terms) ++df[term];
  }
  return df;
}

ReferenceCorpus::Table count_document_frequencies_serial(std::span<const std::string> documents,
                                                         const StopWords& stopwords) {
  ReferenceCorpus::Table df;
  for (std::size_t i = 0; i < documents.size(); ++i) {
    const auto words = tokenize_words(documents[i]);
    if (words.empty()) throw_empty(i);
    std::set<std::string> seen;
    for (std::string_view word : words) {
      if (stopwords.contains(word)) continue;
      if (seen.insert(stem(word)).second) ++df[stem(word)];
    }
  }
  return df;
}

std::vector<AnalyzedText> analyze_all(std::span<const std::string> texts, const TextResources& resources) {
  const auto count = static_cast<std::ptrdiff_t>(texts.size());
  std::vector<AnalyzedText> out(texts.size());
  std::vector<std::exception_ptr> errors(texts.size());

#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    const auto index = static_cast<std::size_t>(i);
    try {
      out[index] = analyze(texts[index], resources);
    } catch (...) {
      errors[index] = std::current_exception();
    }
  }

  for (const auto& error : errors) {
    if (error) std::rethrow_exception(error);
  }
  return out;
}

std::vector<AnalyzedText> analyze_all_serial(std::span<const std::string> texts, const TextResources& resources) {
  std::vector<AnalyzedText> out;
  out.reserve(texts.size());
  for (const std::string& text : texts) out.push_back(analyze(text, resources));
  return out;
}

}  // namespace textgraph::kernels
