// Size relations between a rule's left-hand side and the calls in its
// right-hand side.
//
// Entries live in the tropical semiring over {-1, 0, ?}: paths compose by
// saturated addition (? annihilates, -1 + -1 stays -1) and alternatives are
// combined by taking the minimum under Less < Equal < Unknown.
#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "sctlint/diagnostics.hpp"
#include "sctlint/rules.hpp"
#include "sctlint/signature.hpp"
#include "sctlint/term.hpp"

namespace sctlint {

enum class SizeEntry : std::int8_t { Less = -1, Equal = 0, Unknown = 1 };

/// Sequential composition (saturated +).
SizeEntry entry_compose(SizeEntry a, SizeEntry b) noexcept;
/// Choice between alternatives (min).
SizeEntry entry_choose(SizeEntry a, SizeEntry b) noexcept;

/// `-1`, `0` or `?`.
std::string_view to_string(SizeEntry e) noexcept;

class CallMatrix {
 public:
  CallMatrix() = default;
  CallMatrix(std::size_t rows, std::size_t cols, SizeEntry fill = SizeEntry::Unknown);
  /// Throws std::invalid_argument on ragged input.
  static CallMatrix from_rows(const std::vector<std::vector<SizeEntry>>& rows);
  /// Equal on the diagonal, Unknown elsewhere.
  static CallMatrix identity(std::size_t n);

  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
  [[nodiscard]] SizeEntry at(std::size_t i, std::size_t j) const { return cells_.at(i * cols_ + j); }
  void set(std::size_t i, std::size_t j, SizeEntry e) { cells_.at(i * cols_ + j) = e; }

  [[nodiscard]] bool is_square() const noexcept { return rows_ == cols_; }
  /// Some diagonal entry is Less.
  [[nodiscard]] bool has_strict_diagonal() const;

  friend bool operator==(const CallMatrix&, const CallMatrix&) = default;
  friend auto operator<=>(const CallMatrix&, const CallMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<SizeEntry> cells_;
};

/// `[-1 ?; ? 0]`; empty matrices print as `[]`.
std::string to_string(const CallMatrix& m);

/// Throws Error(DimensionMismatch) unless a.cols() == b.rows().
CallMatrix matrix_mul(const CallMatrix& a, const CallMatrix& b);

struct CallOrigin {
  std::size_t rule = 0;
  /// Position of the call `g t1 ... tn` inside the rule's right-hand side.
  Path position;

  friend auto operator<=>(const CallOrigin&, const CallOrigin&) = default;
};

struct Call {
  std::string caller;
  std::string callee;
  CallMatrix matrix;
  CallOrigin origin;
};

struct CallExtraction {
  std::vector<Call> calls;
  std::vector<Warning> warnings;
};

/// `t` is a proper subterm of pattern `p` through constructor arguments only.
bool strict_subterm(const Term& t, const Term& p, const Signature& sig);

/// Less if `t` is a strict constructor subterm of `p`, Equal if they are the
/// same term, Unknown otherwise.
SizeEntry compare(const Term& t, const Term& p, const Signature& sig);

/// Row i, column j holds compare(call_args[j], lhs_args[i]).
CallMatrix call_matrix(std::span<const Term> lhs_args, std::span<const Term> call_args,
                       const Signature& sig);

/// Calls ordered by position. Unsaturated symbol occurrences are reported as
/// PartialApplication warnings instead of calls.
CallExtraction extract_calls(const Rule& rule, const Signature& sig);

}  // namespace sctlint
