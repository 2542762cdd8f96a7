#pragma once

#include <cstddef>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace textgraph {

enum class PosTag { kNoun, kAdj, kVerb, kOther, kStop };

std::string_view to_string(PosTag tag);

// Half-open byte range [begin, end) into the source text.
struct CharSpan {
  std::size_t begin = 0;
  std::size_t end = 0;

  bool operator==(const CharSpan&) const = default;
};

// Half-open range [begin, end) of token positions.
struct TokenRange {
  std::size_t begin = 0;
  std::size_t end = 0;

  std::size_t size() const { return end - begin; }
  bool contains(std::size_t position) const { return position >= begin && position < end; }
  bool operator==(const TokenRange&) const = default;
};

struct Token {
  std::string surface;
  std::string stem;
  std::size_t position = 0;
  std::size_t sentence_index = 0;
  std::size_t paragraph_index = 0;
  PosTag pos_tag = PosTag::kOther;
  CharSpan span;
  bool sentence_initial = false;

  bool is_stop() const { return pos_tag == PosTag::kStop; }
  bool operator==(const Token&) const = default;
};

enum class NameType { kPerson, kOrg, kPlace, kUnknown };

std::string_view to_string(NameType type);

struct NameMention {
  TokenRange range;
  std::string canonical;  // surfaces joined by single spaces
  NameType type = NameType::kUnknown;

  bool operator==(const NameMention&) const = default;
};

// A set of lowercase words loaded from a one-entry-per-line file.
class WordList {
 public:
  WordList() = default;
  explicit WordList(std::set<std::string> words) : words_(std::move(words)) {}

  // Blank lines are ignored; entries are lowercased.
  static WordList parse(std::string_view contents);
  static WordList load(const std::string& path);

  bool contains(std::string_view word) const;  // case-insensitive
  void merge(const WordList& other);
  std::size_t size() const { return words_.size(); }
  const std::set<std::string>& words() const { return words_; }

 private:
  std::set<std::string> words_;
};

using StopWords = WordList;
// Entries keep their trailing period, e.g. "dr." and "u.s.".
using Abbreviations = WordList;

StopWords bundled_stopwords();
Abbreviations bundled_abbreviations();

// Symmetric table of name variants, e.g. an organization and its acronym.
// File format: `<canonical>\t<alias>` per line.
class AliasLexicon {
 public:
  void add(std::string_view canonical, std::string_view alias);
  bool pairs(std::string_view a, std::string_view b) const;  // case-insensitive, symmetric
  std::size_t size() const { return pairs_.size(); }

  static AliasLexicon parse(std::string_view contents, const std::string& source);
  static AliasLexicon load(const std::string& path);

 private:
  std::set<std::pair<std::string, std::string>> pairs_;
};

// Word-level tokenization with sentence and paragraph assignment. A sentence
// ends at . ! or ? followed by whitespace and a capitalized word (closing
// quotes and brackets may sit between them), unless the period belongs to a
// listed abbreviation. A blank line ends both the sentence and the paragraph.
// Throws EmptyDocumentError if the text holds no word tokens.
std::vector<Token> segment(std::string_view text, const Abbreviations& abbreviations);

// Just the word surfaces, in order; shares segment()'s tokenization rules.
std::vector<std::string_view> tokenize_words(std::string_view text);

// Fills pos_tag on every token: stop list, closed lexicon, suffix rules, then
// NOUN as the default for remaining words. Tokens without letters are OTHER.
void tag_pos(std::span<Token> tokens, const StopWords& stopwords);

// Maximal runs of capitalized, non-stop tokens within one sentence and not
// separated by punctuation. A sentence-initial token only counts when another
// capitalized token follows it. Requires tagged tokens.
std::vector<NameMention> find_names(std::span<const Token> tokens, std::string_view text);

// True iff the canonical forms are equal, one token sequence is a contiguous
// run inside the other, or the alias lexicon pairs them. Case-insensitive.
bool alias_match(std::string_view a, std::string_view b, const AliasLexicon& aliases);
bool alias_match(const NameMention& a, const NameMention& b, const AliasLexicon& aliases);

struct TextResources {
  StopWords stopwords = bundled_stopwords();
  Abbreviations abbreviations = bundled_abbreviations();
  AliasLexicon aliases;
};

struct AnalyzedText {
  std::string text;
  std::vector<Token> tokens;
  std::vector<NameMention> names;
};

// segment + tag_pos + find_names.
AnalyzedText analyze(std::string text, const TextResources& resources);

}  // namespace textgraph
