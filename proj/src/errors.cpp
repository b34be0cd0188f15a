#include "ged/errors.hpp"

namespace ged {

const char* to_string(ParseErrorKind kind) {
  switch (kind) {
    case ParseErrorKind::kMalformed: return "malformed";
    case ParseErrorKind::kDanglingIndex: return "dangling-index";
    case ParseErrorKind::kDuplicateEdge: return "duplicate-edge";
    case ParseErrorKind::kSelfLoop: return "self-loop";
    case ParseErrorKind::kDuplicateNode: return "duplicate-node";
    case ParseErrorKind::kMissingNode: return "missing-node";
    case ParseErrorKind::kUnknownNodeRef: return "unknown-node-ref";
    case ParseErrorKind::kMissingId: return "missing-id";
  }
  return "unknown";
}

namespace {

std::string format_message(ParseErrorKind kind, std::size_t line, const std::string& what) {
  std::string msg = to_string(kind);
  if (line != 0) msg += " at line " + std::to_string(line);
  msg += ": " + what;
  return msg;
}

}  // namespace

ParseError::ParseError(ParseErrorKind kind, std::size_t line, const std::string& what)
    : GedError(format_message(kind, line, what)), kind_(kind), line_(line), detail_(what) {}

}  // namespace ged
