// Helpers shared by the unit and acceptance suites: corpus access, random
// generators and an oracle for call graph closure that does not go through
// the library's matrix product or worklist.
#pragma once

#include <array>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "sctlint/callgraph.hpp"
#include "sctlint/parser.hpp"
#include "sctlint/report.hpp"
#include "sctlint/rules.hpp"
#include "sctlint/sct.hpp"

namespace sctlint::testing {

inline const std::vector<std::string>& corpus_names() {
  static const std::vector<std::string> names{
      "ackermann", "int", "int_aux", "lists", "loop", "mutual", "peano", "permute", "swap", "type_level"};
  return names;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

inline std::string corpus_path(const std::string& name) {
  return std::string(SCTLINT_CORPUS_DIR) + "/" + name + ".dk";
}

inline std::string corpus_text(const std::string& name) { return read_file(corpus_path(name)); }

inline std::string golden_path(const std::string& name) {
  return std::string(SCTLINT_GOLDEN_DIR) + "/" + name;
}

struct Loaded {
  SourceFile file;
  Signature sig;
  std::vector<Rule> rules;
};

inline Loaded load(std::string_view text) {
  Loaded l;
  l.file = parse(text);
  l.sig = build_signature(l.file);
  std::size_t i = 0;
  for (const auto& raw : l.file.rules()) l.rules.push_back(validate_rule(raw, l.sig, i++));
  return l;
}

inline std::vector<Call> all_calls(const Loaded& l) {
  std::vector<Call> calls;
  for (const auto& r : l.rules) {
    auto ex = extract_calls(r, l.sig);
    calls.insert(calls.end(), ex.calls.begin(), ex.calls.end());
  }
  return calls;
}

inline SizeEntry entry(char c) {
  switch (c) {
    case '<': return SizeEntry::Less;
    case '=': return SizeEntry::Equal;
    default: return SizeEntry::Unknown;
  }
}

/// Rows written as strings over `<`, `=` and `?`, e.g. {"<?", "?="}.
inline CallMatrix mat(const std::vector<std::string>& rows) {
  std::vector<std::vector<SizeEntry>> cells;
  for (const auto& r : rows) {
    std::vector<SizeEntry> row;
    for (char c : r) row.push_back(entry(c));
    cells.push_back(row);
  }
  return CallMatrix::from_rows(cells);
}

inline CallMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols) {
  static constexpr std::array<SizeEntry, 3> values{SizeEntry::Less, SizeEntry::Equal,
                                                   SizeEntry::Unknown};
  std::uniform_int_distribution<int> pick(0, 2);
  CallMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m.set(i, j, values[pick(rng)]);
  }
  return m;
}

// Oracle matrices: entries are integers -1, 0 or 1 (for unknown), products
// computed as plain min over sums with clamping, written independently of
// entry_compose / matrix_mul.
using OracleMatrix = std::vector<std::vector<int>>;

inline OracleMatrix to_oracle(const CallMatrix& m) {
  OracleMatrix o(m.rows(), std::vector<int>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) o[i][j] = static_cast<int>(m.at(i, j));
  }
  return o;
}

inline int oracle_plus(int a, int b) {
  if (a == 1 || b == 1) return 1;
  const int s = a + b;
  return s < -1 ? -1 : s;
}

inline OracleMatrix oracle_mul(const OracleMatrix& a, const OracleMatrix& b, std::size_t inner,
                               std::size_t cols) {
  OracleMatrix c(a.size(), std::vector<int>(cols, 1));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t k = 0; k < cols; ++k) {
      int best = 1;
      for (std::size_t j = 0; j < inner; ++j) best = std::min(best, oracle_plus(a[i][j], b[j][k]));
      c[i][k] = best;
    }
  }
  return c;
}

struct OracleEdge {
  int from;
  int to;
  OracleMatrix m;
};

/// All products of paths in the graph, grouped by endpoints. Paths are
/// extended one edge at a time until a whole length adds nothing new.
inline std::map<std::pair<int, int>, std::set<OracleMatrix>> path_products(
    const std::vector<OracleEdge>& edges, const std::vector<std::size_t>& arity) {
  std::map<std::pair<int, int>, std::set<OracleMatrix>> seen;
  std::set<std::tuple<int, int, OracleMatrix>> frontier;
  for (const auto& e : edges) {
    if (seen[{e.from, e.to}].insert(e.m).second) frontier.insert({e.from, e.to, e.m});
  }
  while (!frontier.empty()) {
    std::set<std::tuple<int, int, OracleMatrix>> next;
    for (const auto& [from, to, m] : frontier) {
      for (const auto& e : edges) {
        if (e.from != to) continue;
        OracleMatrix p = oracle_mul(m, e.m, arity[to], arity[e.to]);
        if (seen[{from, e.to}].insert(p).second) next.insert({from, e.to, p});
      }
    }
    frontier = std::move(next);
  }
  return seen;
}

struct RandomGraph {
  std::vector<std::size_t> arity;
  std::vector<OracleEdge> edges;
  CallGraph graph;
};

inline std::string node_name(int i) { return "f" + std::to_string(i); }

/// Up to 4 symbols of arity at most 2 and up to 6 edges.
inline RandomGraph random_graph(std::mt19937& rng) {
  RandomGraph g;
  const int nodes = std::uniform_int_distribution<int>(1, 4)(rng);
  for (int i = 0; i < nodes; ++i) g.arity.push_back(std::uniform_int_distribution<std::size_t>(0, 2)(rng));
  const int edges = std::uniform_int_distribution<int>(1, 6)(rng);
  for (int i = 0; i < nodes; ++i) g.graph.add_node(node_name(i));
  for (int e = 0; e < edges; ++e) {
    const int from = std::uniform_int_distribution<int>(0, nodes - 1)(rng);
    const int to = std::uniform_int_distribution<int>(0, nodes - 1)(rng);
    const CallMatrix m = random_matrix(rng, g.arity[from], g.arity[to]);
    g.edges.push_back({from, to, to_oracle(m)});
    g.graph.add_edge(node_name(from), node_name(to), m);
  }
  return g;
}

/// Compares a closed graph with the oracle path products, both inclusions.
inline bool closure_matches_oracle(const RandomGraph& g, const CallGraph& closed) {
  const auto expected = path_products(g.edges, g.arity);
  std::size_t expected_count = 0;
  for (const auto& [key, ms] : expected) {
    expected_count += ms.size();
    std::set<OracleMatrix> got;
    for (const auto& m : closed.matrices(node_name(key.first), node_name(key.second))) {
      got.insert(to_oracle(m));
    }
    if (got != ms) return false;
  }
  return expected_count == closed.edge_count();
}

// Random terms over a small vocabulary, for equivalence-relation properties.
class TermGen {
 public:
  explicit TermGen(unsigned seed) : rng_(seed) {}

  Term term(int depth) {
    std::uniform_int_distribution<int> kind(0, depth <= 0 ? 2 : 5);
    switch (kind(rng_)) {
      case 0: return Term::var(pick(vars_));
      case 1: return Term::symbol(pick(symbols_));
      case 2: return Term::sort();
      case 3: return Term::app(term(depth - 1), term(depth - 1));
      case 4: return Term::lambda(pick(binders_), term(depth - 1), term(depth - 1));
      default: return Term::product(pick(binders_), term(depth - 1), term(depth - 1));
    }
  }

  std::mt19937& rng() { return rng_; }

 private:
  std::string pick(const std::vector<std::string>& from) {
    return from[std::uniform_int_distribution<std::size_t>(0, from.size() - 1)(rng_)];
  }

  std::mt19937 rng_;
  std::vector<std::string> vars_{"x", "y", "z"};
  std::vector<std::string> symbols_{"f", "g", "0"};
  std::vector<std::string> binders_{"x", "y", "a", "b"};
};

/// Renames every binder by appending `suffix`; free variables are untouched.
inline Term rename_binders(const Term& t, const std::string& suffix,
                           std::map<std::string, std::string> env = {}) {
  switch (t.kind()) {
    case TermKind::Var: {
      const auto it = env.find(t.name());
      return it == env.end() ? t : Term::var(it->second);
    }
    case TermKind::Symbol:
    case TermKind::Sort:
      return t;
    case TermKind::App:
      return Term::app(rename_binders(t.fun(), suffix, env), rename_binders(t.arg(), suffix, env));
    case TermKind::Lambda:
    case TermKind::Product: {
      Term first = rename_binders(t.child(0), suffix, env);
      const std::string fresh = t.name().empty() ? std::string() : t.name() + suffix;
      if (!t.name().empty()) env[t.name()] = fresh;
      Term second = rename_binders(t.child(1), suffix, env);
      return t.is(TermKind::Lambda) ? Term::lambda(fresh, first, second)
                                    : Term::product(fresh, first, second);
    }
  }
  return t;
}

}  // namespace sctlint::testing
