#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "cascost/source_span.hpp"

namespace cascost {

// Base for every error this library raises on bad input. Callers that only
// need "did it fail and where" can catch this and read span()/what().
class Error : public std::runtime_error {
 public:
  Error(SourceSpan span, std::string message)
      : std::runtime_error(std::move(message)), span_(span) {}
  explicit Error(std::string message)
      : std::runtime_error(std::move(message)) {}

  const SourceSpan& span() const { return span_; }

 private:
  SourceSpan span_{};
};

// A character outside the token alphabet.
class LexError : public Error {
 public:
  LexError(SourceSpan span, std::string message) : Error(span, std::move(message)) {}
};

// Grammar violation; carries what was expected and what was found.
class ParseError : public Error {
 public:
  ParseError(SourceSpan span, std::string expected, std::string found)
      : Error(span, "expected " + expected + ", found " + found),
        expected_(std::move(expected)),
        found_(std::move(found)) {}

  const std::string& expected() const { return expected_; }
  const std::string& found() const { return found_; }

 private:
  std::string expected_;
  std::string found_;
};

class MissingSectionError : public Error {
 public:
  MissingSectionError(SourceSpan span, std::string section)
      : Error(span, "missing required section '" + section + "'"),
        section_(std::move(section)) {}

  const std::string& section() const { return section_; }

 private:
  std::string section_;
};

// Name resolution / kind-checking failure on a parsed spec.
class SemanticError : public Error {
 public:
  SemanticError(SourceSpan span, std::string message) : Error(span, std::move(message)) {}
};

// Cost-model file is not the expected JSON shape.
class ModelFormatError : public Error {
 public:
  explicit ModelFormatError(std::string message) : Error(std::move(message)) {}
};

// Cost-model file is well-formed but carries an invalid value.
class ModelValueError : public Error {
 public:
  explicit ModelValueError(std::string message) : Error(std::move(message)) {}
};

class IoError : public Error {
 public:
  explicit IoError(std::string message) : Error(std::move(message)) {}
};

// Result-store failures.
class StoreError : public Error {
 public:
  explicit StoreError(std::string message) : Error(std::move(message)) {}
};

class NotFoundError : public StoreError {
 public:
  explicit NotFoundError(std::vector<std::string> missing)
      : StoreError(join(missing)), missing_(std::move(missing)) {}

  const std::vector<std::string>& missing() const { return missing_; }

 private:
  static std::string join(const std::vector<std::string>& names) {
    std::string out = "no stored result for:";
    for (const auto& n : names) out += " '" + n + "'";
    return out;
  }
  std::vector<std::string> missing_;
};

class SlugCollisionError : public StoreError {
 public:
  SlugCollisionError(const std::string& a, const std::string& b, const std::string& slug)
      : StoreError("protocol names '" + a + "' and '" + b +
                   "' collide on result file slug '" + slug + "'") {}
};

class EmptySetError : public StoreError {
 public:
  EmptySetError() : StoreError("comparison set is empty") {}
};

class ResultFormatError : public StoreError {
 public:
  explicit ResultFormatError(std::string message) : StoreError(std::move(message)) {}
};

class ChartError : public Error {
 public:
  explicit ChartError(std::string message) : Error(std::move(message)) {}
};

// A non-fatal finding surfaced during resolution or analysis.
struct Diagnostic {
  SourceSpan span;
  bool has_span = false;
  std::string message;

  static Diagnostic at(SourceSpan span, std::string message) {
    return Diagnostic{span, true, std::move(message)};
  }
  static Diagnostic plain(std::string message) {
    return Diagnostic{{}, false, std::move(message)};
  }

  // "12:5: warning: ..." or "warning: ..." when no location applies.
  std::string to_string() const;
};

}  // namespace cascost
