#include "sctlint/cc.hpp"

#include <algorithm>

#include "sctlint/callgraph.hpp"

namespace sctlint {

std::string_view to_string(CcClause clause) {
  switch (clause) {
    case CcClause::Var: return "var";
    case CcClause::Acc: return "acc";
    case CcClause::Cons: return "cons";
    case CcClause::Call: return "call";
    case CcClause::App: return "app";
    case CcClause::Lam: return "lam";
    case CcClause::Prod: return "prod";
    case CcClause::Sort: return "sort";
    case CcClause::Sym: return "sym";
  }
  return "?";
}

ClosureContext ClosureContext::from_rule(const Rule& rule) {
  return {rule.lhs_args, {rule.vars.begin(), rule.vars.end()}, {}};
}

namespace {

class Deriver {
 public:
  Deriver(ClosureContext ctx, const Signature& sig) : ctx_(std::move(ctx)), sig_(sig) {}

  CcResult run(const Term& t) {
    Path path;
    CcResult r;
    r.member = derive(t, path);
    r.trace = std::move(trace_);
    r.failure = std::move(failure_);
    return r;
  }

 private:
  bool derive(const Term& t, Path& path) {
    const std::size_t mark = trace_.size();
    if (structural(t, path)) return true;
    // Fall back to accessibility before giving up on this node.
    if (is_accessible(t)) {
      trace_.resize(mark);
      failure_.reset();
      trace_.push_back({path, CcClause::Acc, std::nullopt});
      return true;
    }
    return false;
  }

  bool structural(const Term& t, Path& path) {
    switch (t.kind()) {
      case TermKind::Var:
        if (ctx_.base.contains(t.name()) ||
            std::find(ctx_.locally_bound.begin(), ctx_.locally_bound.end(), t.name()) !=
                ctx_.locally_bound.end()) {
          step(path, CcClause::Var);
          return true;
        }
        return fail(t, path, "variable '" + t.name() + "' is not computable in this context");
      case TermKind::Sort:
        step(path, CcClause::Sort);
        return true;
      case TermKind::Lambda:
      case TermKind::Product: {
        step(path, t.is(TermKind::Lambda) ? CcClause::Lam : CcClause::Prod);
        if (!child(t, 0, path)) return false;
        ctx_.locally_bound.push_back(t.name());
        const bool ok = child(t, 1, path);
        ctx_.locally_bound.pop_back();
        return ok;
      }
      case TermKind::Symbol:
      case TermKind::App:
        return spine(t, path);
    }
    return false;
  }

  bool spine(const Term& t, Path& path) {
    const Spine s = spine_of(t);
    if (s.head.is(TermKind::Symbol)) {
      const SymbolInfo* g = sig_.find(s.head.name());
      if (!g) return fail(t, path, "symbol '" + s.head.name() + "' is not declared");
      if (g->level != Level::TypeConst && s.args.size() == g->arity) {
        step(path, g->is_constructor && !g->definable ? CcClause::Cons : CcClause::Call, g->name);
        for (std::size_t j = 0; j < s.args.size(); ++j) {
          Path arg_path = path;
          const Path prefix = spine_prefix_path(s.args.size(), j + 1);
          arg_path.insert(arg_path.end(), prefix.begin(), prefix.end());
          arg_path.push_back(1);
          if (!derive(s.args[j], arg_path)) return false;
        }
        return true;
      }
      if (t.is(TermKind::Symbol)) {
        if (g->level == Level::TypeConst || g->arity == 0) {
          step(path, CcClause::Sym);
          return true;
        }
        return fail(t, path,
                    "'" + g->name + "' is used with fewer than its " + std::to_string(g->arity) +
                        " arguments");
      }
    } else if (t.is(TermKind::Symbol)) {
      return false;
    }
    step(path, CcClause::App);
    return child(t, 0, path) && child(t, 1, path);
  }

  bool child(const Term& t, int index, Path& path) {
    path.push_back(index);
    const bool ok = derive(t.child(index), path);
    path.pop_back();
    return ok;
  }

  [[nodiscard]] bool is_accessible(const Term& t) const {
    return std::any_of(ctx_.lhs_args.begin(), ctx_.lhs_args.end(),
                       [&](const Term& p) { return strict_subterm(t, p, sig_); });
  }

  void step(const Path& path, CcClause clause, std::optional<std::string> callee = std::nullopt) {
    trace_.push_back({path, clause, std::move(callee)});
  }

  bool fail(const Term& t, const Path& path, std::string reason) {
    if (!failure_) failure_ = CcFailure{path, t, std::move(reason)};
    return false;
  }

  ClosureContext ctx_;
  const Signature& sig_;
  std::vector<TraceStep> trace_;
  std::optional<CcFailure> failure_;
};

}  // namespace

CcResult cc_member(const Term& t, const ClosureContext& ctx, const Signature& sig) {
  return Deriver(ctx, sig).run(t);
}

bool CcReport::all_pass() const {
  return std::all_of(rules.begin(), rules.end(), [](const RuleCc& r) { return r.result.member; });
}

CcReport check_all(std::span<const Rule> rules, const Signature& sig) {
  CcReport report;
  for (const Rule& r : rules) {
    report.rules.push_back({r.index, cc_member(r.rhs, ClosureContext::from_rule(r), sig)});
  }
  return report;
}

}  // namespace sctlint
