#include <string>

#include "textgraph/errors.hpp"
#include "textgraph/stemmer.hpp"
#include "textgraph/textprep.hpp"
#include "text_util.hpp"

namespace textgraph {
namespace {

enum class Glyph { kWord, kSpace, kTerminator, kQuote, kOpener, kCloser, kJoiner, kOther };

struct Classified {
  Glyph glyph;
  std::size_t length;
};

// Classifies the (possibly multi-byte) character at `i`. Non-ASCII code
// points are word characters except for the punctuation handled below.
Classified classify(std::string_view text, std::size_t i) {
  const auto c = static_cast<unsigned char>(text[i]);
  if (c < 0x80) {
    const char ch = static_cast<char>(c);
    if (detail::is_ascii_alpha(ch) || detail::is_ascii_digit(ch)) return {Glyph::kWord, 1};
    if (detail::is_ascii_space(ch)) return {Glyph::kSpace, 1};
    switch (ch) {
      case '.': case '!': case '?': return {Glyph::kTerminator, 1};
      case '\'': case '"': return {Glyph::kQuote, 1};
      case '(': case '[': case '{': return {Glyph::kOpener, 1};
      case ')': case ']': case '}': return {Glyph::kCloser, 1};
      case '-': case '&': return {Glyph::kJoiner, 1};
      default: return {Glyph::kOther, 1};
    }
  }
  std::size_t length = 1;
  if ((c & 0xE0) == 0xC0) length = 2;
  else if ((c & 0xF0) == 0xE0) length = 3;
  else if ((c & 0xF8) == 0xF0) length = 4;
  else return {Glyph::kOther, 1};  // stray continuation byte
  if (i + length > text.size()) return {Glyph::kOther, text.size() - i};

  const std::string_view seq = text.substr(i, length);
  if (seq == "\xC2\xA0") return {Glyph::kSpace, length};                 // no-break space
  if (seq == "\xC2\xAB") return {Glyph::kOpener, length};                // «
  if (seq == "\xC2\xBB") return {Glyph::kCloser, length};                // »
  if (seq == "\xE2\x80\x98" || seq == "\xE2\x80\x9C") return {Glyph::kOpener, length};  // ‘ “
  if (seq == "\xE2\x80\x99") return {Glyph::kQuote, length};             // ’ (also an apostrophe)
  if (seq == "\xE2\x80\x9D") return {Glyph::kCloser, length};            // ”
  if (seq == "\xE2\x80\xA6") return {Glyph::kTerminator, length};        // …
  if (length == 3 && c == 0xE2 && (static_cast<unsigned char>(seq[1]) == 0x80 || static_cast<unsigned char>(seq[1]) == 0x81)) {
    return {Glyph::kOther, length};  // rest of General Punctuation: dashes, bullets, ...
  }
  return {Glyph::kWord, length};
}

bool is_word_at(std::string_view text, std::size_t i) { return i < text.size() && classify(text, i).glyph == Glyph::kWord; }

// Apostrophes, hyphens, periods and ampersands join two word runs ("don't",
// "Hood-style", "U.S", "AT&T"); a period may also lead into a hyphen
// ("U.S.-backed"); a comma joins digits ("1,000").
bool joins(std::string_view text, std::size_t i, const Classified& g) {
  const char ch = text[i];
  const bool joiner = g.glyph == Glyph::kJoiner || ch == '.' || ch == '\'' ||
                      text.substr(i, g.length) == "\xE2\x80\x99";
  if (ch == '.' && i + 1 < text.size() && text[i + 1] == '-') return is_word_at(text, i + 2);
  if (joiner) return is_word_at(text, i + g.length);
  if (ch == ',') {
    return i > 0 && detail::is_ascii_digit(text[i - 1]) && i + 1 < text.size() && detail::is_ascii_digit(text[i + 1]);
  }
  return false;
}

std::vector<CharSpan> word_spans(std::string_view text) {
  std::vector<CharSpan> spans;
  std::size_t i = 0;
  while (i < text.size()) {
    Classified g = classify(text, i);
    if (g.glyph != Glyph::kWord) {
      i += g.length;
      continue;
    }
    const std::size_t begin = i;
    i += g.length;
    while (i < text.size()) {
      g = classify(text, i);
      if (g.glyph == Glyph::kWord) {
        i += g.length;
      } else if (joins(text, i, g)) {
        i += g.length;
      } else {
        break;
      }
    }
    spans.push_back({begin, i});
  }
  return spans;
}

bool has_blank_line(std::string_view gap) {
  std::size_t nl = gap.find('\n');
  while (nl != std::string_view::npos) {
    std::size_t j = nl + 1;
    while (j < gap.size() && (gap[j] == ' ' || gap[j] == '\t' || gap[j] == '\r')) ++j;
    if (j < gap.size() && gap[j] == '\n') return true;
    nl = gap.find('\n', nl + 1);
  }
  return false;
}

// The gap must read: closers* terminators+ closers* whitespace+ openers*.
// Returns false for anything else. `period_only_at_start` reports a gap
// whose terminator run is a single "." right after the previous word.
bool terminates_sentence(std::string_view gap, bool& period_only_at_start) {
  enum class Phase { kLeadingClosers, kTerminators, kTrailingClosers, kSpace, kOpeners };
  Phase phase = Phase::kLeadingClosers;
  std::size_t terminator_begin = 0;
  std::size_t terminator_end = 0;
  std::size_t i = 0;
  while (i < gap.size()) {
    const Classified g = classify(gap, i);
    const bool closer = g.glyph == Glyph::kCloser || g.glyph == Glyph::kQuote;
    const bool opener = g.glyph == Glyph::kOpener || g.glyph == Glyph::kQuote;
    switch (phase) {
      case Phase::kLeadingClosers:
        if (g.glyph == Glyph::kTerminator) {
          phase = Phase::kTerminators;
          terminator_begin = i;
          terminator_end = i + g.length;
        } else if (!closer) {
          return false;
        }
        break;
      case Phase::kTerminators:
        if (g.glyph == Glyph::kTerminator) {
          terminator_end = i + g.length;
        } else if (g.glyph == Glyph::kSpace) {
          phase = Phase::kSpace;
        } else if (closer) {
          phase = Phase::kTrailingClosers;
        } else {
          return false;
        }
        break;
      case Phase::kTrailingClosers:
        if (g.glyph == Glyph::kSpace) phase = Phase::kSpace;
        else if (!closer) return false;
        break;
      case Phase::kSpace:
        if (opener) phase = Phase::kOpeners;
        else if (g.glyph != Glyph::kSpace) return false;
        break;
      case Phase::kOpeners:
        if (!opener) return false;
        break;
    }
    i += g.length;
  }
  if (phase != Phase::kSpace && phase != Phase::kOpeners) return false;
  period_only_at_start = terminator_begin == 0 && gap.substr(terminator_begin, terminator_end - terminator_begin) == ".";
  return true;
}

}  // namespace

std::vector<std::string_view> tokenize_words(std::string_view text) {
  std::vector<std::string_view> words;
  for (const CharSpan& span : word_spans(text)) words.push_back(text.substr(span.begin, span.end - span.begin));
  return words;
}

std::vector<Token> segment(std::string_view text, const Abbreviations& abbreviations) {
  const std::vector<CharSpan> spans = word_spans(text);
  if (spans.empty()) throw EmptyDocumentError("text contains no word tokens");

  std::vector<Token> tokens;
  tokens.reserve(spans.size());
  std::size_t sentence = 0;
  std::size_t paragraph = 0;
  for (std::size_t p = 0; p < spans.size(); ++p) {
    bool starts_sentence = p == 0;
    if (p > 0) {
      const std::string_view gap = text.substr(spans[p - 1].end, spans[p].begin - spans[p - 1].end);
      const std::string_view previous = text.substr(spans[p - 1].begin, spans[p - 1].end - spans[p - 1].begin);
      if (has_blank_line(gap)) {
        ++paragraph;
        ++sentence;
        starts_sentence = true;
      } else if (bool period_only = false;
                 detail::is_ascii_upper(text[spans[p].begin]) && terminates_sentence(gap, period_only)) {
        if (!(period_only && abbreviations.contains(std::string(previous) + "."))) {
          ++sentence;
          starts_sentence = true;
        }
      }
    }
    Token token;
    token.surface = std::string(text.substr(spans[p].begin, spans[p].end - spans[p].begin));
    token.stem = stem(token.surface);
    token.position = p;
    token.sentence_index = sentence;
    token.paragraph_index = paragraph;
    token.span = spans[p];
    token.sentence_initial = starts_sentence;
    tokens.push_back(std::move(token));
  }
  return tokens;
}

}  // namespace textgraph
