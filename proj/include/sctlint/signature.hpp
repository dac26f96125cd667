// Symbol table and the shape-based symbol classification.
#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "sctlint/diagnostics.hpp"
#include "sctlint/term.hpp"

namespace sctlint {

enum class Level {
  ObjectFun,  // object-level function symbol; may carry rules
  TypeConst,  // type constant: no rules, can head constructor types
  TypeFun,    // type-level symbol declared with `def`
};

std::string_view to_string(Level level);

struct SymbolInfo {
  std::string name;
  Term declared_type = Term::sort();
  Level level = Level::ObjectFun;
  std::size_t arity = 0;
  bool definable = false;
  bool is_constructor = false;
  SourcePos pos;
};

/// Declaration-ordered symbol table.
class Signature {
 public:
  /// Throws DuplicateDeclaration.
  void add(SymbolInfo info);

  [[nodiscard]] const SymbolInfo* find(std::string_view name) const;
  /// Throws UnknownSymbol.
  [[nodiscard]] const SymbolInfo& at(std::string_view name) const;
  [[nodiscard]] bool contains(std::string_view name) const { return find(name) != nullptr; }

  [[nodiscard]] bool is_constructor(std::string_view name) const;
  /// Member of F_T or F_o, i.e. anything that is not a type constant.
  [[nodiscard]] bool is_function_symbol(std::string_view name) const;

  void mark_definable(std::string_view name);
  /// Recomputes `is_constructor` for every object-level symbol.
  void finalize_constructors();

  [[nodiscard]] std::size_t size() const noexcept { return symbols_.size(); }
  [[nodiscard]] bool empty() const noexcept { return symbols_.empty(); }
  [[nodiscard]] auto begin() const noexcept { return symbols_.begin(); }
  [[nodiscard]] auto end() const noexcept { return symbols_.end(); }

 private:
  std::vector<SymbolInfo> symbols_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// The domains of the leading products of a type and what remains after them.
struct ProductTelescope {
  std::vector<Term> domains;
  Term codomain;
};

ProductTelescope decompose_product(const Term& type);

/// Number of leading products of a declared type.
std::size_t arity_of(const Term& declared_type);

/// Level a declaration gets from its type and `def` marker.
Level level_of(const Term& declared_type, bool def_flag);

/// Shape test: every argument type and the result type is a type constant
/// applied to exactly its arity. Throws UnknownSymbol for undeclared heads.
bool classify_constructor(const SymbolInfo& symbol, const Signature& sig);

/// A variable, or a constructor applied to exactly its arity of patterns.
bool is_pattern(const Term& t, const Signature& sig);

}  // namespace sctlint
