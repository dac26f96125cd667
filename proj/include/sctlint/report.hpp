// End-to-end analysis of one source file and its renderings.
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "sctlint/callgraph.hpp"
#include "sctlint/cc.hpp"
#include "sctlint/diagnostics.hpp"
#include "sctlint/parser.hpp"
#include "sctlint/rules.hpp"
#include "sctlint/sct.hpp"
#include "sctlint/signature.hpp"

namespace sctlint {

struct AnalysisOptions {
  SctMode mode = SctMode::Idempotent;
  bool check_cc = true;
  bool strict_partial = false;
  bool lint = false;
};

enum class Overall { Accept, Reject, Error };

std::string_view to_string(Overall overall);

struct ErrorInfo {
  ErrorKind kind;
  SourcePos pos;
  std::string message;
  std::vector<std::string> expected;

  static ErrorInfo from(const Error& e);
};

struct RuleEntry {
  RawRule raw;
  std::size_t index = 0;
  std::optional<Rule> rule;
  std::optional<ErrorInfo> error;
};

/// Calls that a plain strict-decrease order would have to orient: calls
/// between mutually recursive symbols without a lexicographic decrease.
struct SingleCriteria {
  std::vector<std::size_t> non_decreasing_calls;
  /// Constructors that appear in patterns and have rules of their own.
  std::vector<std::string> defined_pattern_constructors;
};

struct Analysis {
  std::string file;
  AnalysisOptions options;
  std::optional<ErrorInfo> error;
  SourceFile source;
  Signature sig;
  std::vector<RuleEntry> rules;
  std::vector<Call> calls;
  CallGraph graph;
  CallGraph closed;
  Verdict sct;
  Verdict sct_idempotent;
  Verdict sct_all_loops;
  std::optional<CcReport> cc;
  std::vector<Warning> warnings;
  SingleCriteria single;
  Overall overall = Overall::Error;

  [[nodiscard]] std::vector<Rule> valid_rules() const;
  [[nodiscard]] bool has_validation_errors() const;
  [[nodiscard]] std::size_t partial_application_count() const;
};

/// Accept iff SCT holds, every CC entry passes (when checked), nothing failed
/// validation and, under strict_partial, nothing is partially applied.
Overall decide(const Analysis& a);

Analysis analyze(std::string_view text, std::string file, const AnalysisOptions& options = {});

/// Lexicographic strict decrease along the common argument positions.
bool lexicographic_decrease(const CallMatrix& m);

nlohmann::ordered_json to_json(const Analysis& a);
std::string summary(const Analysis& a);
/// Loops of `symbol` in the closure, each with a witness path.
std::string explain(const Analysis& a, std::string_view symbol);

int exit_code(Overall overall);

}  // namespace sctlint
