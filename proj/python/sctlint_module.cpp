#include <optional>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sctlint/report.hpp"

namespace py = pybind11;

namespace {

sctlint::AnalysisOptions make_options(const std::string& mode, bool check_cc, bool strict_partial,
                                      bool lint) {
  sctlint::AnalysisOptions o;
  if (mode == "idempotent") {
    o.mode = sctlint::SctMode::Idempotent;
  } else if (mode == "all-loops") {
    o.mode = sctlint::SctMode::AllLoops;
  } else {
    throw py::value_error("mode must be 'idempotent' or 'all-loops'");
  }
  o.check_cc = check_cc;
  o.strict_partial = strict_partial;
  o.lint = lint;
  return o;
}

using Row = std::vector<std::optional<int>>;

sctlint::SizeEntry to_entry(const std::optional<int>& v) {
  if (!v) return sctlint::SizeEntry::Unknown;
  if (*v == -1) return sctlint::SizeEntry::Less;
  if (*v == 0) return sctlint::SizeEntry::Equal;
  throw py::value_error("matrix entries are -1, 0 or None");
}

sctlint::CallMatrix to_matrix(const std::vector<Row>& rows, std::size_t cols) {
  sctlint::CallMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw py::value_error("ragged matrix");
    for (std::size_t j = 0; j < cols; ++j) m.set(i, j, to_entry(rows[i][j]));
  }
  return m;
}

std::vector<Row> from_matrix(const sctlint::CallMatrix& m) {
  std::vector<Row> out(m.rows(), Row(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const auto e = m.at(i, j);
      if (e != sctlint::SizeEntry::Unknown) out[i][j] = static_cast<int>(e);
    }
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Termination checking for rewrite systems";

  m.def(
      "analyze_json",
      [](const std::string& text, const std::string& file, const std::string& mode, bool check_cc,
         bool strict_partial, bool lint) {
        const auto a = sctlint::analyze(text, file, make_options(mode, check_cc, strict_partial, lint));
        return sctlint::to_json(a).dump();
      },
      py::arg("text"), py::arg("file") = "<string>", py::arg("mode") = "idempotent",
      py::arg("check_cc") = true, py::arg("strict_partial") = false, py::arg("lint") = false);

  m.def(
      "summary",
      [](const std::string& text, const std::string& file, const std::string& mode, bool check_cc) {
        return sctlint::summary(sctlint::analyze(text, file, make_options(mode, check_cc, false, false)));
      },
      py::arg("text"), py::arg("file") = "<string>", py::arg("mode") = "idempotent",
      py::arg("check_cc") = true);

  m.def(
      "to_dot",
      [](const std::string& text, bool closed) {
        const auto a = sctlint::analyze(text, "<string>");
        return sctlint::to_dot(closed ? a.closed : a.graph);
      },
      py::arg("text"), py::arg("closed") = false);

  m.def(
      "matrix_mul",
      [](const std::vector<Row>& a, const std::vector<Row>& b) {
        const std::size_t inner = b.size();
        const std::size_t cols = b.empty() ? 0 : b[0].size();
        const std::size_t a_cols = a.empty() ? inner : a[0].size();
        try {
          return from_matrix(sctlint::matrix_mul(to_matrix(a, a_cols), to_matrix(b, cols)));
        } catch (const sctlint::Error& e) {
          throw py::value_error(e.what());
        }
      },
      py::arg("a"), py::arg("b"));
}
