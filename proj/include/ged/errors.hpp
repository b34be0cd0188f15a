#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ged {

class GedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A node map, swap cycle or graph violates a structural invariant.
class StructuralError : public GedError {
 public:
  using GedError::GedError;
};

/// An algorithm parameter is out of its admissible range.
class ParameterError : public GedError {
 public:
  using GedError::GedError;
};

/// Input too large for an exhaustive routine.
class SizeGuardError : public GedError {
 public:
  using GedError::GedError;
};

enum class ParseErrorKind {
  kMalformed,
  kDanglingIndex,
  kDuplicateEdge,
  kSelfLoop,
  kDuplicateNode,
  kMissingNode,
  kUnknownNodeRef,
  kMissingId,
};

const char* to_string(ParseErrorKind kind);

class ParseError : public GedError {
 public:
  ParseError(ParseErrorKind kind, std::size_t line, const std::string& what);

  ParseErrorKind kind() const noexcept { return kind_; }
  /// 1-based line number, 0 when not applicable.
  std::size_t line() const noexcept { return line_; }
  /// Message without the kind/line prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  ParseErrorKind kind_;
  std::size_t line_;
  std::string detail_;
};

}  // namespace ged
