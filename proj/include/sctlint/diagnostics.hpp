// Errors and warnings shared by every stage of the checker.
#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sctlint {

struct SourcePos {
  int line = 0;
  int column = 0;

  friend bool operator==(const SourcePos&, const SourcePos&) = default;
};

std::string to_string(SourcePos pos);

enum class ErrorKind {
  ParseError,
  DuplicateBinder,
  UnknownSymbol,
  DuplicateDeclaration,
  RuleHeadUndeclared,
  HeadNotFunction,
  UnsaturatedHead,
  OverappliedHead,
  NonPatternArgument,
  UnusedRuleVariable,
  RhsNotBetaNormal,
  UnboundRhsVariable,
  DimensionMismatch,
};

std::string_view to_string(ErrorKind kind);

/// Thrown by the parser, the signature builder and rule validation.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, SourcePos pos, const std::string& message,
        std::vector<std::string> expected = {});

  [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }
  [[nodiscard]] SourcePos pos() const noexcept { return pos_; }
  /// Tokens the parser would have accepted; only set for ParseError.
  [[nodiscard]] const std::vector<std::string>& expected() const noexcept {
    return expected_;
  }
  [[nodiscard]] const std::string& message() const noexcept { return message_; }

 private:
  ErrorKind kind_;
  SourcePos pos_;
  std::string message_;
  std::vector<std::string> expected_;
};

enum class WarningKind {
  PartialApplication,
  NonLeftLinear,
  Overlap,
  DefinedPatternSymbol,
};

std::string_view to_string(WarningKind kind);

/// Positions inside a term: child indices from the root. App: 0 function,
/// 1 argument. Lambda: 0 annotation, 1 body. Product: 0 domain, 1 codomain.
using Path = std::vector<int>;

std::string format_path(const Path& path);

struct Warning {
  WarningKind kind;
  std::size_t rule = 0;
  std::optional<std::size_t> other_rule;
  Path position;
  SourcePos pos;
  std::string message;
};

}  // namespace sctlint
