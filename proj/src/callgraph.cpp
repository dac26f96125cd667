#include "sctlint/callgraph.hpp"

#include <algorithm>
#include <stdexcept>

namespace sctlint {

SizeEntry entry_compose(SizeEntry a, SizeEntry b) noexcept {
  if (a == SizeEntry::Unknown || b == SizeEntry::Unknown) return SizeEntry::Unknown;
  if (a == SizeEntry::Less || b == SizeEntry::Less) return SizeEntry::Less;
  return SizeEntry::Equal;
}

SizeEntry entry_choose(SizeEntry a, SizeEntry b) noexcept { return std::min(a, b); }

std::string_view to_string(SizeEntry e) noexcept {
  switch (e) {
    case SizeEntry::Less: return "-1";
    case SizeEntry::Equal: return "0";
    case SizeEntry::Unknown: return "?";
  }
  return "?";
}

CallMatrix::CallMatrix(std::size_t rows, std::size_t cols, SizeEntry fill)
    : rows_(rows), cols_(cols), cells_(rows * cols, fill) {}

CallMatrix CallMatrix::from_rows(const std::vector<std::vector<SizeEntry>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  CallMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("ragged call matrix");
    for (std::size_t j = 0; j < cols; ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

CallMatrix CallMatrix::identity(std::size_t n) {
  CallMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, SizeEntry::Equal);
  return m;
}

bool CallMatrix::has_strict_diagonal() const {
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) {
    if (at(i, i) == SizeEntry::Less) return true;
  }
  return false;
}

std::string to_string(const CallMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return "[]";
  std::string out = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) out += "; ";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out += ' ';
      out += to_string(m.at(i, j));
    }
  }
  out += ']';
  return out;
}

CallMatrix matrix_mul(const CallMatrix& a, const CallMatrix& b) {
  if (a.cols() != b.rows()) {
    throw Error(ErrorKind::DimensionMismatch, {},
                "cannot multiply " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                    " by " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
  CallMatrix c(a.rows(), b.cols(), SizeEntry::Unknown);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < b.cols(); ++k) {
      SizeEntry best = SizeEntry::Unknown;
      for (std::size_t j = 0; j < a.cols(); ++j) {
        best = entry_choose(best, entry_compose(a.at(i, j), b.at(j, k)));
      }
      c.set(i, k, best);
    }
  }
  return c;
}

bool strict_subterm(const Term& t, const Term& p, const Signature& sig) {
  const Spine s = spine_of(p);
  if (!s.head.is(TermKind::Symbol) || !sig.is_constructor(s.head.name())) return false;
  return std::any_of(s.args.begin(), s.args.end(), [&](const Term& q) {
    return term_eq(t, q) || strict_subterm(t, q, sig);
  });
}

SizeEntry compare(const Term& t, const Term& p, const Signature& sig) {
  if (strict_subterm(t, p, sig)) return SizeEntry::Less;
  if (term_eq(t, p)) return SizeEntry::Equal;
  return SizeEntry::Unknown;
}

CallMatrix call_matrix(std::span<const Term> lhs_args, std::span<const Term> call_args,
                       const Signature& sig) {
  CallMatrix m(lhs_args.size(), call_args.size());
  for (std::size_t i = 0; i < lhs_args.size(); ++i) {
    for (std::size_t j = 0; j < call_args.size(); ++j) {
      m.set(i, j, compare(call_args[j], lhs_args[i], sig));
    }
  }
  return m;
}

namespace {

class CallCollector {
 public:
  CallCollector(const Rule& rule, const Signature& sig) : rule_(rule), sig_(sig) {}

  CallExtraction run() {
    Path path;
    visit(rule_.rhs, path);
    std::stable_sort(out_.calls.begin(), out_.calls.end(),
                     [](const Call& a, const Call& b) { return a.origin < b.origin; });
    return std::move(out_);
  }

 private:
  void visit(const Term& t, Path& path) {
    switch (t.kind()) {
      case TermKind::Var:
      case TermKind::Sort:
        return;
      case TermKind::Lambda:
      case TermKind::Product:
        descend(t.child(0), path, 0);
        descend(t.child(1), path, 1);
        return;
      case TermKind::Symbol:
      case TermKind::App:
        visit_spine(t, path);
        return;
    }
  }

  void descend(const Term& t, Path& path, int step) {
    path.push_back(step);
    visit(t, path);
    path.pop_back();
  }

  void visit_spine(const Term& t, Path& path) {
    const Spine s = spine_of(t);
    const std::size_t n = s.args.size();
    if (s.head.is(TermKind::Symbol) && sig_.is_function_symbol(s.head.name())) {
      const SymbolInfo& g = sig_.at(s.head.name());
      if (n >= g.arity) {
        Path at = path;
        const Path prefix = spine_prefix_path(n, g.arity);
        at.insert(at.end(), prefix.begin(), prefix.end());
        const std::span<const Term> args(s.args.data(), g.arity);
        out_.calls.push_back({rule_.head, g.name, call_matrix(rule_.lhs_args, args, sig_),
                              CallOrigin{rule_.index, std::move(at)}});
      } else {
        out_.warnings.push_back(
            {WarningKind::PartialApplication, rule_.index, std::nullopt, path, rule_.pos,
             "'" + g.name + "' expects " + std::to_string(g.arity) + " arguments but is applied to " +
                 std::to_string(n)});
      }
    } else if (!s.head.is(TermKind::Symbol) && !s.head.is(TermKind::Var)) {
      // Heads that are neither symbols nor variables (a product or a sort
      // applied to something) are ill-typed, but their insides may still call.
      const Path head_path = spine_prefix_path(n, 0);
      const std::size_t depth = path.size();
      path.insert(path.end(), head_path.begin(), head_path.end());
      visit(s.head, path);
      path.resize(depth);
    }
    for (std::size_t j = 0; j < n; ++j) {
      const Path prefix = spine_prefix_path(n, j + 1);
      const std::size_t depth = path.size();
      path.insert(path.end(), prefix.begin(), prefix.end());
      path.push_back(1);
      visit(s.args[j], path);
      path.resize(depth);
    }
  }

  const Rule& rule_;
  const Signature& sig_;
  CallExtraction out_;
};

}  // namespace

CallExtraction extract_calls(const Rule& rule, const Signature& sig) {
  return CallCollector(rule, sig).run();
}

}  // namespace sctlint
