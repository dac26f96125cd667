// Validated rewrite rules and the orthogonality lint.
#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "sctlint/diagnostics.hpp"
#include "sctlint/parser.hpp"
#include "sctlint/signature.hpp"
#include "sctlint/term.hpp"

namespace sctlint {

/// `head lhs_args... --> rhs` where every argument is a pattern, the head is
/// applied to exactly its arity, and rhs is beta-normal with FV(rhs) in vars.
struct Rule {
  std::string head;
  std::vector<Term> lhs_args;
  Term rhs = Term::sort();
  /// FV(lhs_args), sorted.
  std::vector<std::string> vars;
  /// Ordinal among the file's rules.
  std::size_t index = 0;
  SourcePos pos;
  std::vector<std::string> wildcards;

  [[nodiscard]] Term lhs() const;
};

/// Throws HeadNotFunction, UnsaturatedHead, OverappliedHead,
/// NonPatternArgument, UnusedRuleVariable, RhsNotBetaNormal or
/// UnboundRhsVariable.
Rule validate_rule(const RawRule& raw, const Signature& sig, std::size_t index);

/// No subterm of the form `(x : A => b) u`.
bool beta_normal(const Term& t);

/// Left-linearity and overlap warnings, ordered by rule then position.
std::vector<Warning> orthogonality_lint(std::span<const Rule> rules, const Signature& sig);

/// Pattern symbols that also head rules of their own, in rule order.
std::vector<Warning> defined_pattern_lint(std::span<const Rule> rules, const Signature& sig);

/// Most general unifier existence for binder-free terms; variables of the two
/// sides are treated as distinct.
bool unifiable_apart(const Term& a, const Term& b);

}  // namespace sctlint
