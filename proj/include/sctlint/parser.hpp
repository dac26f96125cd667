// Reader for the Dedukti-style surface syntax.
//
//   file := item* ;  item := decl | rule ;
//   decl := "def"? IDENT ":" term "." ;
//   rule := "[" (IDENT ("," IDENT)*)? "]" term "-->" term "." ;
//   term := prod ;
//   prod := app ("->" prod)? | "(" IDENT ":" term ")" "->" prod ;
//   app  := atom+ ;
//   atom := IDENT | "_" | "Type" | "(" term ")" | IDENT ":" atom "=>" term ;
//
// Comments are `(; ... ;)` and nest. Identifiers bound by a rule's bracket
// list or by an enclosing binder become variables, everything else a symbol.
#pragma once

#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "sctlint/diagnostics.hpp"
#include "sctlint/signature.hpp"
#include "sctlint/term.hpp"

namespace sctlint {

struct Declaration {
  bool def_flag = false;
  std::string name;
  Term type = Term::sort();
  SourcePos pos;
};

struct RawRule {
  /// Exactly the names written between the brackets.
  std::vector<std::string> bound_vars;
  /// Fresh variables introduced for `_`, numbered `_1`, `_2`, ... per rule.
  std::vector<std::string> wildcards;
  Term lhs = Term::sort();
  Term rhs = Term::sort();
  SourcePos pos;
};

using Item = std::variant<Declaration, RawRule>;

struct SourceFile {
  std::vector<Item> items;

  [[nodiscard]] std::vector<RawRule> rules() const;
};

/// Throws Error (ParseError or DuplicateBinder).
SourceFile parse(std::string_view text);

/// Declarations in order, then definability and constructor flags.
/// Throws UnknownSymbol, DuplicateDeclaration or RuleHeadUndeclared.
Signature build_signature(const SourceFile& file);

std::string to_string(const Declaration& decl);
std::string to_string(const RawRule& rule);
/// Re-parsable rendering, one item per line.
std::string to_string(const SourceFile& file);

}  // namespace sctlint
