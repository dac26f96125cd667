#include "sctlint/sct.hpp"

#include <deque>
#include <sstream>

namespace sctlint {

CallGraph CallGraph::from_calls(std::span<const Call> calls, const Signature& sig) {
  CallGraph g;
  for (const SymbolInfo& s : sig) {
    if (s.definable) g.add_node(s.name);
  }
  for (const Call& c : calls) g.add_edge(c.caller, c.callee, c.matrix);
  return g;
}

void CallGraph::add_node(const std::string& name) { nodes_.insert(name); }

bool CallGraph::add_edge(const std::string& caller, const std::string& callee,
                         const CallMatrix& m) {
  nodes_.insert(caller);
  nodes_.insert(callee);
  return edges_[{caller, callee}].insert(m).second;
}

const std::set<CallMatrix>& CallGraph::matrices(const std::string& caller,
                                                const std::string& callee) const {
  static const std::set<CallMatrix> none;
  const auto it = edges_.find({caller, callee});
  return it == edges_.end() ? none : it->second;
}

std::size_t CallGraph::edge_count() const noexcept {
  std::size_t n = 0;
  for (const auto& [key, ms] : edges_) n += ms.size();
  return n;
}

CallGraph closure(const CallGraph& g) {
  struct Pending {
    std::string from;
    std::string to;
    CallMatrix m;
  };
  CallGraph closed = g;
  std::deque<Pending> worklist;
  for (const auto& [key, ms] : g.edges()) {
    for (const auto& m : ms) worklist.push_back({key.first, key.second, m});
  }
  std::vector<Pending> found;
  while (!worklist.empty()) {
    const Pending p = std::move(worklist.front());
    worklist.pop_front();
    found.clear();
    for (const auto& [key, ms] : closed.edges()) {
      if (key.first == p.to) {
        for (const auto& m : ms) found.push_back({p.from, key.second, matrix_mul(p.m, m)});
      }
      if (key.second == p.from) {
        for (const auto& m : ms) found.push_back({key.first, p.to, matrix_mul(m, p.m)});
      }
    }
    for (auto& f : found) {
      if (closed.add_edge(f.from, f.to, f.m)) worklist.push_back(std::move(f));
    }
  }
  return closed;
}

std::string_view to_string(SctMode mode) {
  return mode == SctMode::Idempotent ? "idempotent" : "all-loops";
}

std::string_view to_string(SctStatus status) {
  return status == SctStatus::SctHolds ? "SctHolds" : "SctFails";
}

std::optional<std::vector<std::size_t>> find_witness(std::span<const Call> calls,
                                                     const std::string& symbol,
                                                     const CallMatrix& target) {
  struct State {
    std::string node;
    CallMatrix product;
    std::size_t call;
    std::ptrdiff_t parent;
  };
  std::vector<State> states;
  std::set<std::pair<std::string, CallMatrix>> seen;
  std::size_t head = 0;

  const auto rebuild = [&](std::size_t i) {
    std::vector<std::size_t> path;
    for (auto k = static_cast<std::ptrdiff_t>(i); k >= 0; k = states[k].parent) {
      path.push_back(states[k].call);
    }
    return std::vector<std::size_t>(path.rbegin(), path.rend());
  };
  const auto push = [&](std::string node, CallMatrix product, std::size_t call,
                        std::ptrdiff_t parent) -> bool {
    if (!seen.emplace(node, product).second) return false;
    states.push_back({std::move(node), std::move(product), call, parent});
    const State& s = states.back();
    return s.node == symbol && s.product == target;
  };

  for (std::size_t c = 0; c < calls.size(); ++c) {
    if (calls[c].caller == symbol && push(calls[c].callee, calls[c].matrix, c, -1)) {
      return rebuild(states.size() - 1);
    }
  }
  for (; head < states.size(); ++head) {
    for (std::size_t c = 0; c < calls.size(); ++c) {
      if (calls[c].caller != states[head].node) continue;
      CallMatrix next = matrix_mul(states[head].product, calls[c].matrix);
      if (push(calls[c].callee, std::move(next), c, static_cast<std::ptrdiff_t>(head))) {
        return rebuild(states.size() - 1);
      }
    }
  }
  return std::nullopt;
}

Verdict sct_check(const CallGraph& closed, std::span<const Call> calls, SctMode mode) {
  Verdict v;
  v.mode = mode;
  for (const auto& node : closed.nodes()) {
    for (const auto& m : closed.matrices(node, node)) {
      if (mode == SctMode::Idempotent && matrix_mul(m, m) != m) continue;
      if (m.has_strict_diagonal()) continue;
      v.failures.push_back({node, m, find_witness(calls, node, m).value_or(std::vector<std::size_t>{})});
    }
  }
  v.status = v.failures.empty() ? SctStatus::SctHolds : SctStatus::SctFails;
  return v;
}

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + '"';
}

}  // namespace

std::string to_dot(const CallGraph& g) {
  if (g.nodes().empty()) return "digraph calls { }\n";
  std::ostringstream out;
  out << "digraph calls {\n";
  for (const auto& n : g.nodes()) out << "  " << quoted(n) << ";\n";
  for (const auto& [key, ms] : g.edges()) {
    for (const auto& m : ms) {
      out << "  " << quoted(key.first) << " -> " << quoted(key.second)
          << " [label=" << quoted(to_string(m)) << "];\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace sctlint
