#pragma once

// Data-parallel kernels (OpenMP) and the serial reference versions they are
// tested and benchmarked against. Results never depend on the thread count.

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "textgraph/corpus.hpp"
#include "textgraph/textprep.hpp"

namespace textgraph::kernels {

// Sorted, unique stems of the non-stop words of one document.
std::vector<std::string> document_terms(std::string_view text, const StopWords& stopwords);

// Document frequencies over `documents`. Throws EmptyDocumentError naming the
// first document without tokens.
ReferenceCorpus::Table count_document_frequencies(std::span<const std::string> documents, const StopWords& stopwords);
ReferenceCorpus::Table count_document_frequencies_serial(std::span<const std::string> documents,
                                                         const StopWords& stopwords);

// analyze() over several texts. Throws the error of the first failing text.
std::vector<AnalyzedText> analyze_all(std::span<const std::string> texts, const TextResources& resources);
std::vector<AnalyzedText> analyze_all_serial(std::span<const std::string> texts, const TextResources& resources);

}  // namespace textgraph::kernels
