// sct-lint: termination check for Dedukti-style rewrite systems.
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "sctlint/report.hpp"

namespace {

bool write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  out << contents;
  if (!out) {
    std::cerr << "sct-lint: cannot write " << path << '\n';
    return false;
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Size-change termination checker for Dedukti-style rewrite systems"};
  app.name("sct-lint");

  std::string file;
  std::string json_path;
  std::string dot_path;
  std::string dot_closure_path;
  std::string explain_symbol;
  sctlint::AnalysisOptions options;
  bool no_cc = false;

  const std::map<std::string, sctlint::SctMode> modes{{"idempotent", sctlint::SctMode::Idempotent},
                                                      {"all-loops", sctlint::SctMode::AllLoops}};
  app.add_option("FILE", file, "Input file")->required();
  app.add_option_no_stream("--mode", options.mode, "Which loops must decrease")
      ->transform(CLI::CheckedTransformer(modes, CLI::ignore_case));
  app.add_option("--json", json_path, "Write the JSON report to PATH");
  app.add_option("--dot", dot_path, "Write the call graph to PATH");
  app.add_option("--dot-closure", dot_closure_path, "Write the closed call graph to PATH");
  app.add_flag("--no-cc", no_cc, "Skip the computability-closure check");
  app.add_flag("--strict-partial", options.strict_partial,
               "Reject partially applied function symbols");
  app.add_flag("--lint", options.lint, "Report left-linearity and overlap warnings");
  app.add_option("--explain", explain_symbol, "Print the loops of SYMBOL with witnesses");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  options.check_cc = !no_cc;

  std::ifstream in(file, std::ios::binary);
  if (!in) {
    std::cerr << "sct-lint: cannot read " << file << '\n';
    return 2;
  }
  std::ostringstream text;
  text << in.rdbuf();

  const sctlint::Analysis analysis = sctlint::analyze(text.str(), file, options);
  std::cout << sctlint::summary(analysis);
  if (!explain_symbol.empty()) std::cout << sctlint::explain(analysis, explain_symbol);

  bool ok = true;
  if (!json_path.empty()) ok &= write_file(json_path, sctlint::to_json(analysis).dump(2) + "\n");
  if (!dot_path.empty()) ok &= write_file(dot_path, sctlint::to_dot(analysis.graph));
  if (!dot_closure_path.empty()) {
    ok &= write_file(dot_closure_path, sctlint::to_dot(analysis.closed));
  }
  return ok ? sctlint::exit_code(analysis.overall) : 2;
}
