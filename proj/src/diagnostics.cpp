#include "sctlint/diagnostics.hpp"

namespace sctlint {

std::string to_string(SourcePos pos) {
  return std::to_string(pos.line) + ":" + std::to_string(pos.column);
}

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::DuplicateBinder: return "DuplicateBinder";
    case ErrorKind::UnknownSymbol: return "UnknownSymbol";
    case ErrorKind::DuplicateDeclaration: return "DuplicateDeclaration";
    case ErrorKind::RuleHeadUndeclared: return "RuleHeadUndeclared";
    case ErrorKind::HeadNotFunction: return "HeadNotFunction";
    case ErrorKind::UnsaturatedHead: return "UnsaturatedHead";
    case ErrorKind::OverappliedHead: return "OverappliedHead";
    case ErrorKind::NonPatternArgument: return "NonPatternArgument";
    case ErrorKind::UnusedRuleVariable: return "UnusedRuleVariable";
    case ErrorKind::RhsNotBetaNormal: return "RhsNotBetaNormal";
    case ErrorKind::UnboundRhsVariable: return "UnboundRhsVariable";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
  }
  return "Unknown";
}

std::string_view to_string(WarningKind kind) {
  switch (kind) {
    case WarningKind::PartialApplication: return "PartialApplication";
    case WarningKind::NonLeftLinear: return "NonLeftLinear";
    case WarningKind::Overlap: return "Overlap";
    case WarningKind::DefinedPatternSymbol: return "DefinedPatternSymbol";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, SourcePos pos, const std::string& message,
             std::vector<std::string> expected)
    : std::runtime_error(std::string(to_string(kind)) + " at " + to_string(pos) + ": " + message),
      kind_(kind),
      pos_(pos),
      message_(message),
      expected_(std::move(expected)) {}

std::string format_path(const Path& path) {
  if (path.empty()) return "root";
  std::string out;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i) out += '.';
    out += std::to_string(path[i]);
  }
  return out;
}

}  // namespace sctlint
