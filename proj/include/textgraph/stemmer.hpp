#pragma once

#include <string>
#include <string_view>

namespace textgraph {

// Identifies the stemming procedure; persisted in corpus files so that a
// corpus is never mixed with graphs stemmed differently.
inline constexpr std::string_view kStemmerId = "porter-fixpoint-v1";

// One pass of the Porter (1980) suffix-stripping algorithm over a lowercase
// ASCII word. Words of length <= 2 are returned unchanged.
std::string porter_stem(std::string_view lowercase_word);

// Normalizes a surface word to its stem: ASCII-lowercases, drops a trailing
// possessive, then applies porter_stem until a fixed point is reached. Words
// containing anything other than ASCII letters are only lowercased.
//
// stem(stem(w)) == stem(w) for every w, and the result is never longer than w.
std::string stem(std::string_view word);

// True if `term` is already in stemmed form.
bool is_stemmed(std::string_view term);

}  // namespace textgraph
