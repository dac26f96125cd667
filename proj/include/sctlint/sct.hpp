// Call graph closure and the size-change termination test.
#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sctlint/callgraph.hpp"
#include "sctlint/signature.hpp"

namespace sctlint {

/// Multigraph over symbols. Each (caller, callee) slot holds a set of
/// distinct matrices; matrices are never merged entrywise.
class CallGraph {
 public:
  using EdgeKey = std::pair<std::string, std::string>;

  /// Nodes are the definable symbols plus every endpoint of a call.
  static CallGraph from_calls(std::span<const Call> calls, const Signature& sig);

  void add_node(const std::string& name);
  /// Returns false when the matrix was already present.
  bool add_edge(const std::string& caller, const std::string& callee, const CallMatrix& m);

  [[nodiscard]] const std::set<std::string>& nodes() const noexcept { return nodes_; }
  [[nodiscard]] const std::map<EdgeKey, std::set<CallMatrix>>& edges() const noexcept {
    return edges_;
  }
  /// Empty set when there is no such edge.
  [[nodiscard]] const std::set<CallMatrix>& matrices(const std::string& caller,
                                                     const std::string& callee) const;
  /// Total number of matrices over all slots.
  [[nodiscard]] std::size_t edge_count() const noexcept;

  friend bool operator==(const CallGraph&, const CallGraph&) = default;

 private:
  std::set<std::string> nodes_;
  std::map<EdgeKey, std::set<CallMatrix>> edges_;
};

/// Least supergraph closed under composition of consecutive edges.
CallGraph closure(const CallGraph& g);

enum class SctMode {
  Idempotent,  // only loops M with M*M = M must decrease
  AllLoops,    // every loop must decrease
};

std::string_view to_string(SctMode mode);

enum class SctStatus { SctHolds, SctFails };

std::string_view to_string(SctStatus status);

struct SctFailure {
  std::string symbol;
  CallMatrix matrix;
  /// Indices into the call list whose ordered product is `matrix`.
  std::vector<std::size_t> witness;
};

struct Verdict {
  SctMode mode = SctMode::Idempotent;
  SctStatus status = SctStatus::SctHolds;
  std::vector<SctFailure> failures;
};

/// Tests every self-loop of `closed`. `calls` are the original edges, used to
/// rebuild a shortest witness path for each failure.
Verdict sct_check(const CallGraph& closed, std::span<const Call> calls, SctMode mode);

/// Shortest sequence of calls from `symbol` back to itself whose product is
/// `target`, or nothing if no such path exists. Ties go to the earliest calls.
std::optional<std::vector<std::size_t>> find_witness(std::span<const Call> calls,
                                                     const std::string& symbol,
                                                     const CallMatrix& target);

/// Graphviz digraph with one labelled edge per matrix, in sorted order.
std::string to_dot(const CallGraph& g);

}  // namespace sctlint
