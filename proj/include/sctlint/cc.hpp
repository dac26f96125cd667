// Computability-closure check of right-hand sides, with the formal call
// relation standing in for a decreasing order on calls.
//
// A term belongs to the closure of a left-hand side when it is derivable by
// these clauses:
//   var   an lhs pattern variable or a variable bound inside the rhs
//   cons  c u1 .. un, c a constructor of arity n without rules, every ui in
//         the closure
//   call  g u1 .. un, any other function symbol of arity n, every ui in the
//         closure
//   app   a b with a and b in the closure
//   lam   x : U => b with U in the closure and b in the closure under x
//   prod  (x : U) -> V likewise
//   sort  Type
//   sym   a type constant, or any declared symbol of arity 0
//   acc   a strict constructor subterm of an lhs argument
#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sctlint/diagnostics.hpp"
#include "sctlint/rules.hpp"
#include "sctlint/signature.hpp"
#include "sctlint/term.hpp"

namespace sctlint {

enum class CcClause { Var, Acc, Cons, Call, App, Lam, Prod, Sort, Sym };

std::string_view to_string(CcClause clause);

struct ClosureContext {
  std::vector<Term> lhs_args;
  /// Variables assumed computable; initially FV of the lhs.
  std::set<std::string> base;
  /// Binders entered on the way down the rhs, innermost last.
  std::vector<std::string> locally_bound;

  static ClosureContext from_rule(const Rule& rule);
};

struct TraceStep {
  Path position;
  CcClause clause;
  /// Set for cons and call steps: the symbol being called.
  std::optional<std::string> callee;
};

struct CcFailure {
  Path position;
  Term term;
  std::string reason;
};

struct CcResult {
  bool member = false;
  /// Pre-order; on failure, the steps derived before the failing node.
  std::vector<TraceStep> trace;
  std::optional<CcFailure> failure;
};

CcResult cc_member(const Term& t, const ClosureContext& ctx, const Signature& sig);

struct RuleCc {
  std::size_t rule = 0;
  CcResult result;
};

struct CcReport {
  std::vector<RuleCc> rules;

  [[nodiscard]] bool all_pass() const;
};

CcReport check_all(std::span<const Rule> rules, const Signature& sig);

}  // namespace sctlint
