#include "sctlint/rules.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace sctlint {

Term Rule::lhs() const { return Term::apply(Term::symbol(head), lhs_args); }

Rule validate_rule(const RawRule& raw, const Signature& sig, std::size_t index) {
  const Spine lhs = spine_of(raw.lhs);
  const SymbolInfo* head =
      lhs.head.is(TermKind::Symbol) ? sig.find(lhs.head.name()) : nullptr;
  if (!head || head->level == Level::TypeConst) {
    throw Error(ErrorKind::HeadNotFunction, raw.pos,
                "rule head '" + to_string(lhs.head) + "' is not a definable function symbol");
  }
  if (lhs.args.size() < head->arity) {
    throw Error(ErrorKind::UnsaturatedHead, raw.pos,
                "'" + head->name + "' expects " + std::to_string(head->arity) +
                    " arguments, got " + std::to_string(lhs.args.size()));
  }
  if (lhs.args.size() > head->arity) {
    throw Error(ErrorKind::OverappliedHead, raw.pos,
                "'" + head->name + "' expects " + std::to_string(head->arity) +
                    " arguments, got " + std::to_string(lhs.args.size()));
  }
  for (std::size_t i = 0; i < lhs.args.size(); ++i) {
    if (!is_pattern(lhs.args[i], sig)) {
      throw Error(ErrorKind::NonPatternArgument, raw.pos,
                  "argument " + std::to_string(i + 1) + " '" + to_string(lhs.args[i]) +
                      "' is not a pattern");
    }
  }
  const std::set<std::string> lhs_vars = free_vars(raw.lhs);
  for (const auto& v : raw.bound_vars) {
    if (!lhs_vars.contains(v)) {
      throw Error(ErrorKind::UnusedRuleVariable, raw.pos,
                  "variable '" + v + "' does not occur in the left-hand side");
    }
  }
  if (!beta_normal(raw.rhs)) {
    throw Error(ErrorKind::RhsNotBetaNormal, raw.pos, "right-hand side contains a beta-redex");
  }
  for (const auto& v : free_vars(raw.rhs)) {
    if (!lhs_vars.contains(v)) {
      throw Error(ErrorKind::UnboundRhsVariable, raw.pos,
                  "variable '" + (v.starts_with('_') ? std::string("_") : v) +
                      "' of the right-hand side is not bound by the left-hand side");
    }
  }
  return Rule{head->name,
              lhs.args,
              raw.rhs,
              {lhs_vars.begin(), lhs_vars.end()},
              index,
              raw.pos,
              raw.wildcards};
}

bool beta_normal(const Term& t) {
  switch (t.kind()) {
    case TermKind::Var:
    case TermKind::Symbol:
    case TermKind::Sort:
      return true;
    case TermKind::App:
      if (t.fun().is(TermKind::Lambda)) return false;
      [[fallthrough]];
    default:
      return beta_normal(t.child(0)) && beta_normal(t.child(1));
  }
}

namespace {

Term rename(const Term& t, const std::string& prefix) {
  switch (t.kind()) {
    case TermKind::Var:
      return Term::var(prefix + t.name());
    case TermKind::App:
      return Term::app(rename(t.fun(), prefix), rename(t.arg(), prefix));
    default:
      return t;
  }
}

class Unifier {
 public:
  bool unify(const Term& a, const Term& b) {
    const Term x = walk(a);
    const Term y = walk(b);
    if (x.is(TermKind::Var) && y.is(TermKind::Var) && x.name() == y.name()) return true;
    if (x.is(TermKind::Var)) return bind(x.name(), y);
    if (y.is(TermKind::Var)) return bind(y.name(), x);
    if (x.kind() != y.kind()) return false;
    if (x.is(TermKind::Symbol)) return x.name() == y.name();
    if (x.is(TermKind::App)) return unify(x.fun(), y.fun()) && unify(x.arg(), y.arg());
    return false;
  }

 private:
  Term walk(Term t) const {
    while (t.is(TermKind::Var)) {
      const auto it = subst_.find(t.name());
      if (it == subst_.end()) break;
      t = it->second;
    }
    return t;
  }

  bool occurs(const std::string& v, const Term& t) const {
    const Term w = walk(t);
    if (w.is(TermKind::Var)) return w.name() == v;
    if (w.is(TermKind::App)) return occurs(v, w.fun()) || occurs(v, w.arg());
    return false;
  }

  bool bind(const std::string& v, const Term& t) {
    if (occurs(v, t)) return false;
    subst_.emplace(v, t);
    return true;
  }

  std::map<std::string, Term> subst_;
};

// Non-variable subterms below the root, with their paths.
void non_variable_positions(const Term& t, Path& path, std::vector<Path>& out) {
  if (t.is(TermKind::Var)) return;
  const Spine s = spine_of(t);
  if (!path.empty()) out.push_back(path);
  for (std::size_t j = 0; j < s.args.size(); ++j) {
    const Path prefix = spine_prefix_path(s.args.size(), j + 1);
    const std::size_t depth = path.size();
    path.insert(path.end(), prefix.begin(), prefix.end());
    path.push_back(1);
    non_variable_positions(s.args[j], path, out);
    path.resize(depth);
  }
}

void count_vars(const Term& t, std::map<std::string, int>& counts) {
  if (t.is(TermKind::Var)) ++counts[t.name()];
  else if (t.is(TermKind::App)) {
    count_vars(t.fun(), counts);
    count_vars(t.arg(), counts);
  }
}

}  // namespace

bool unifiable_apart(const Term& a, const Term& b) {
  Unifier u;
  return u.unify(rename(a, "1:"), rename(b, "2:"));
}

std::vector<Warning> orthogonality_lint(std::span<const Rule> rules, const Signature&) {
  std::vector<Warning> out;
  for (const Rule& a : rules) {
    const Term lhs_a = a.lhs();
    std::map<std::string, int> counts;
    count_vars(lhs_a, counts);
    for (const auto& [name, n] : counts) {
      if (n > 1) {
        out.push_back({WarningKind::NonLeftLinear, a.index, std::nullopt, {}, a.pos,
                       "variable '" + name + "' occurs " + std::to_string(n) +
                           " times in the left-hand side"});
      }
    }

    std::vector<Path> positions;
    Path root;
    non_variable_positions(lhs_a, root, positions);
    for (const Rule& b : rules) {
      const Term lhs_b = b.lhs();
      if (a.index != b.index && unifiable_apart(lhs_a, lhs_b)) {
        out.push_back({WarningKind::Overlap, a.index, b.index, {}, a.pos,
                       "left-hand side overlaps rule " + std::to_string(b.index) + " at the root"});
      }
      for (const Path& p : positions) {
        const Term sub = lhs_a.at(p);
        if (unifiable_apart(sub, lhs_b)) {
          out.push_back({WarningKind::Overlap, a.index, b.index, p, a.pos,
                         "subterm '" + to_string(sub) + "' overlaps the left-hand side of rule " +
                             std::to_string(b.index)});
        }
      }
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const Warning& x, const Warning& y) {
    return std::tie(x.rule, x.position, x.other_rule) < std::tie(y.rule, y.position, y.other_rule);
  });
  return out;
}

std::vector<Warning> defined_pattern_lint(std::span<const Rule> rules, const Signature& sig) {
  std::set<std::string> heads;
  for (const Rule& r : rules) heads.insert(r.head);
  std::vector<Warning> out;
  for (const Rule& r : rules) {
    std::vector<std::string> seen;
    for (const Term& arg : r.lhs_args) {
      for (const auto& name : symbols_of(arg)) {
        if (heads.contains(name) && sig.is_constructor(name) &&
            std::find(seen.begin(), seen.end(), name) == seen.end()) {
          seen.push_back(name);
          out.push_back({WarningKind::DefinedPatternSymbol, r.index, std::nullopt, {}, r.pos,
                         "pattern matches on '" + name + "', which has rewrite rules of its own"});
        }
      }
    }
  }
  return out;
}

}  // namespace sctlint
