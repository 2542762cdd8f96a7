#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace textgraph {

// Base for every recoverable failure raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid parameters, missing inputs, or an inconsistent run configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// A data file (corpus, lexicon, word list) that does not follow its format.
class ParseError : public Error {
 public:
  ParseError(const std::string& source, std::size_t line, const std::string& message)
      : Error(source + ":" + std::to_string(line) + ": " + message), source_(source), line_(line) {}

  const std::string& source() const { return source_; }
  std::size_t line() const { return line_; }

 private:
  std::string source_;
  std::size_t line_;
};

// Text that yields no word tokens.
class EmptyDocumentError : public Error {
 public:
  using Error::Error;
};

// A caller broke a documented precondition.
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace textgraph
