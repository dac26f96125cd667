// Terms of the lambda-Pi calculus modulo rewriting.
//
// Kinds, types and objects share one representation. Nodes are immutable and
// shared, so copying a Term is a reference-count bump.
#pragma once

#include <cstddef>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "sctlint/diagnostics.hpp"

namespace sctlint {

enum class TermKind { Var, Symbol, App, Lambda, Product, Sort };

class Term {
 public:
  static Term var(std::string name);
  static Term symbol(std::string name);
  static Term app(Term head, Term arg);
  /// Left-nested application spine `head args[0] ... args[n-1]`.
  static Term apply(Term head, const std::vector<Term>& args);
  static Term lambda(std::string bound, Term annotation, Term body);
  /// An empty `bound` name is an anonymous arrow `domain -> codomain`.
  static Term product(std::string bound, Term domain, Term codomain);
  static Term arrow(Term domain, Term codomain);
  static Term sort();

  [[nodiscard]] TermKind kind() const noexcept;
  [[nodiscard]] bool is(TermKind k) const noexcept { return kind() == k; }

  /// Variable or symbol name, or the binder of a Lambda/Product.
  [[nodiscard]] const std::string& name() const noexcept;

  // App
  [[nodiscard]] Term fun() const;
  [[nodiscard]] Term arg() const;
  // Lambda
  [[nodiscard]] Term annotation() const;
  [[nodiscard]] Term body() const;
  // Product
  [[nodiscard]] Term domain() const;
  [[nodiscard]] Term codomain() const;

  /// Child 0 or 1 of a binary node, following the Path convention.
  [[nodiscard]] Term child(int index) const;
  [[nodiscard]] Term at(const Path& path) const;

  [[nodiscard]] bool same_node(const Term& other) const noexcept {
    return node_ == other.node_;
  }

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Head and arguments of a left-nested application.
struct Spine {
  Term head;
  std::vector<Term> args;
};

Spine spine_of(const Term& t);

/// Path from a spine's top node to the prefix applying the head to its first
/// `n` of `total` arguments.
Path spine_prefix_path(std::size_t total, std::size_t n);

/// Syntactic equality up to renaming of bound variables.
bool term_eq(const Term& a, const Term& b);

std::set<std::string> free_vars(const Term& t);
bool occurs_free(const Term& t, std::string_view name);

/// Symbol names occurring anywhere in `t`, in first-occurrence order.
std::vector<std::string> symbols_of(const Term& t);

std::size_t node_count(const Term& t);

/// Concrete syntax accepted by the parser. Variables listed in `wildcards`
/// print as `_`.
std::string to_string(const Term& t, const std::set<std::string>& wildcards = {});

}  // namespace sctlint
