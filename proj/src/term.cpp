#include "sctlint/term.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace sctlint {

struct Term::Node {
  TermKind kind;
  std::string name;
  std::shared_ptr<const Node> left;
  std::shared_ptr<const Node> right;
};

Term Term::var(std::string name) {
  return Term(std::make_shared<const Node>(Node{TermKind::Var, std::move(name), nullptr, nullptr}));
}

Term Term::symbol(std::string name) {
  return Term(
      std::make_shared<const Node>(Node{TermKind::Symbol, std::move(name), nullptr, nullptr}));
}

Term Term::app(Term head, Term arg) {
  return Term(std::make_shared<const Node>(
      Node{TermKind::App, {}, std::move(head.node_), std::move(arg.node_)}));
}

Term Term::apply(Term head, const std::vector<Term>& args) {
  for (const auto& a : args) head = app(std::move(head), a);
  return head;
}

Term Term::lambda(std::string bound, Term annotation, Term body) {
  return Term(std::make_shared<const Node>(Node{TermKind::Lambda, std::move(bound),
                                                std::move(annotation.node_),
                                                std::move(body.node_)}));
}

Term Term::product(std::string bound, Term domain, Term codomain) {
  return Term(std::make_shared<const Node>(
      Node{TermKind::Product, std::move(bound), std::move(domain.node_), std::move(codomain.node_)}));
}

Term Term::arrow(Term domain, Term codomain) {
  return product({}, std::move(domain), std::move(codomain));
}

Term Term::sort() {
  static const Term type_sort(
      std::make_shared<const Node>(Node{TermKind::Sort, "Type", nullptr, nullptr}));
  return type_sort;
}

TermKind Term::kind() const noexcept { return node_->kind; }

const std::string& Term::name() const noexcept { return node_->name; }

Term Term::fun() const {
  assert(is(TermKind::App));
  return Term(node_->left);
}

Term Term::arg() const {
  assert(is(TermKind::App));
  return Term(node_->right);
}

Term Term::annotation() const {
  assert(is(TermKind::Lambda));
  return Term(node_->left);
}

Term Term::body() const {
  assert(is(TermKind::Lambda));
  return Term(node_->right);
}

Term Term::domain() const {
  assert(is(TermKind::Product));
  return Term(node_->left);
}

Term Term::codomain() const {
  assert(is(TermKind::Product));
  return Term(node_->right);
}

Term Term::child(int index) const {
  if (!node_->left || (index != 0 && index != 1))
    throw std::out_of_range("term has no child " + std::to_string(index));
  return Term(index == 0 ? node_->left : node_->right);
}

Term Term::at(const Path& path) const {
  Term t = *this;
  for (int step : path) t = t.child(step);
  return t;
}

Spine spine_of(const Term& t) {
  Spine s{t, {}};
  while (s.head.is(TermKind::App)) {
    s.args.push_back(s.head.arg());
    s.head = s.head.fun();
  }
  std::reverse(s.args.begin(), s.args.end());
  return s;
}

Path spine_prefix_path(std::size_t total, std::size_t n) {
  assert(n <= total);
  return Path(total - n, 0);
}

namespace {

// Binder stacks hold the names bound on the way down; a variable is compared
// by the depth of its innermost binder, or by name when free.
using BinderStack = std::vector<std::string>;

std::ptrdiff_t binder_index(const BinderStack& stack, const std::string& name) {
  for (std::size_t i = stack.size(); i-- > 0;) {
    if (stack[i] == name) return static_cast<std::ptrdiff_t>(i);
  }
  return -1;
}

bool alpha_eq(const Term& a, const Term& b, BinderStack& left, BinderStack& right) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case TermKind::Var: {
      const auto i = binder_index(left, a.name());
      const auto j = binder_index(right, b.name());
      if (i < 0 && j < 0) return a.name() == b.name();
      return i == j;
    }
    case TermKind::Symbol:
      return a.name() == b.name();
    case TermKind::Sort:
      return true;
    case TermKind::App:
      return alpha_eq(a.fun(), b.fun(), left, right) && alpha_eq(a.arg(), b.arg(), left, right);
    case TermKind::Lambda:
    case TermKind::Product: {
      if (!alpha_eq(a.child(0), b.child(0), left, right)) return false;
      left.push_back(a.name());
      right.push_back(b.name());
      const bool eq = alpha_eq(a.child(1), b.child(1), left, right);
      left.pop_back();
      right.pop_back();
      return eq;
    }
  }
  return false;
}

void collect_free(const Term& t, BinderStack& bound, std::set<std::string>& out) {
  switch (t.kind()) {
    case TermKind::Var:
      if (binder_index(bound, t.name()) < 0) out.insert(t.name());
      return;
    case TermKind::Symbol:
    case TermKind::Sort:
      return;
    case TermKind::App:
      collect_free(t.fun(), bound, out);
      collect_free(t.arg(), bound, out);
      return;
    case TermKind::Lambda:
    case TermKind::Product:
      collect_free(t.child(0), bound, out);
      bound.push_back(t.name());
      collect_free(t.child(1), bound, out);
      bound.pop_back();
      return;
  }
}

void collect_symbols(const Term& t, std::vector<std::string>& out) {
  switch (t.kind()) {
    case TermKind::Symbol:
      if (std::find(out.begin(), out.end(), t.name()) == out.end()) out.push_back(t.name());
      return;
    case TermKind::Var:
    case TermKind::Sort:
      return;
    default:
      collect_symbols(t.child(0), out);
      collect_symbols(t.child(1), out);
  }
}

enum class Context { Top, ProdDomain, AppFun, AppArg, Annotation };

void print(const Term& t, Context ctx, const std::set<std::string>& wildcards, std::string& out) {
  switch (t.kind()) {
    case TermKind::Var:
      out += wildcards.contains(t.name()) ? std::string("_") : t.name();
      return;
    case TermKind::Symbol:
      out += t.name();
      return;
    case TermKind::Sort:
      out += "Type";
      return;
    case TermKind::App: {
      const bool parens = ctx == Context::AppArg || ctx == Context::Annotation;
      if (parens) out += '(';
      print(t.fun(), Context::AppFun, wildcards, out);
      out += ' ';
      print(t.arg(), Context::AppArg, wildcards, out);
      if (parens) out += ')';
      return;
    }
    case TermKind::Lambda: {
      const bool parens = ctx != Context::Top;
      if (parens) out += '(';
      out += t.name();
      out += " : ";
      print(t.annotation(), Context::Annotation, wildcards, out);
      out += " => ";
      print(t.body(), Context::Top, wildcards, out);
      if (parens) out += ')';
      return;
    }
    case TermKind::Product: {
      const bool parens = ctx != Context::Top;
      if (parens) out += '(';
      if (!t.name().empty() && occurs_free(t.codomain(), t.name())) {
        out += '(';
        out += t.name();
        out += " : ";
        print(t.domain(), Context::Top, wildcards, out);
        out += ')';
      } else {
        print(t.domain(), Context::ProdDomain, wildcards, out);
      }
      out += " -> ";
      print(t.codomain(), Context::Top, wildcards, out);
      if (parens) out += ')';
      return;
    }
  }
}

}  // namespace

bool term_eq(const Term& a, const Term& b) {
  if (a.same_node(b)) return true;
  BinderStack left, right;
  return alpha_eq(a, b, left, right);
}

std::set<std::string> free_vars(const Term& t) {
  std::set<std::string> out;
  BinderStack bound;
  collect_free(t, bound, out);
  return out;
}

bool occurs_free(const Term& t, std::string_view name) {
  return free_vars(t).contains(std::string(name));
}

std::vector<std::string> symbols_of(const Term& t) {
  std::vector<std::string> out;
  collect_symbols(t, out);
  return out;
}

std::size_t node_count(const Term& t) {
  switch (t.kind()) {
    case TermKind::Var:
    case TermKind::Symbol:
    case TermKind::Sort:
      return 1;
    default:
      return 1 + node_count(t.child(0)) + node_count(t.child(1));
  }
}

std::string to_string(const Term& t, const std::set<std::string>& wildcards) {
  std::string out;
  print(t, Context::Top, wildcards, out);
  return out;
}

}  // namespace sctlint
