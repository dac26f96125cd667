#include "sctlint/report.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace sctlint {

using nlohmann::ordered_json;

std::string_view to_string(Overall overall) {
  switch (overall) {
    case Overall::Accept: return "Accept";
    case Overall::Reject: return "Reject";
    case Overall::Error: return "Error";
  }
  return "Error";
}

ErrorInfo ErrorInfo::from(const Error& e) { return {e.kind(), e.pos(), e.message(), e.expected()}; }

std::vector<Rule> Analysis::valid_rules() const {
  std::vector<Rule> out;
  for (const auto& r : rules) {
    if (r.rule) out.push_back(*r.rule);
  }
  return out;
}

bool Analysis::has_validation_errors() const {
  return std::any_of(rules.begin(), rules.end(), [](const RuleEntry& r) { return r.error.has_value(); });
}

std::size_t Analysis::partial_application_count() const {
  return static_cast<std::size_t>(std::count_if(warnings.begin(), warnings.end(), [](const Warning& w) {
    return w.kind == WarningKind::PartialApplication;
  }));
}

Overall decide(const Analysis& a) {
  if (a.error || a.has_validation_errors()) return Overall::Error;
  if (a.sct.status != SctStatus::SctHolds) return Overall::Reject;
  if (a.options.check_cc && (!a.cc || !a.cc->all_pass())) return Overall::Reject;
  if (a.options.strict_partial && a.partial_application_count() > 0) return Overall::Reject;
  return Overall::Accept;
}

bool lexicographic_decrease(const CallMatrix& m) {
  for (std::size_t k = 0; k < std::min(m.rows(), m.cols()); ++k) {
    if (m.at(k, k) == SizeEntry::Less) return true;
    if (m.at(k, k) != SizeEntry::Equal) return false;
  }
  return false;
}

namespace {

SingleCriteria single_criteria(const Analysis& a, const std::vector<Rule>& rules) {
  SingleCriteria out;
  for (std::size_t i = 0; i < a.calls.size(); ++i) {
    const Call& c = a.calls[i];
    const bool recursive = !a.closed.matrices(c.caller, c.callee).empty() &&
                           !a.closed.matrices(c.callee, c.caller).empty();
    if (recursive && !lexicographic_decrease(c.matrix)) out.non_decreasing_calls.push_back(i);
  }
  std::set<std::string> heads, in_patterns;
  for (const Rule& r : rules) {
    heads.insert(r.head);
    for (const Term& p : r.lhs_args) {
      for (const auto& s : symbols_of(p)) in_patterns.insert(s);
    }
  }
  for (const SymbolInfo& s : a.sig) {
    if (s.is_constructor && heads.contains(s.name) && in_patterns.contains(s.name)) {
      out.defined_pattern_constructors.push_back(s.name);
    }
  }
  return out;
}

}  // namespace

Analysis analyze(std::string_view text, std::string file, const AnalysisOptions& options) {
  Analysis a;
  a.file = std::move(file);
  a.options = options;
  a.sct.mode = options.mode;
  try {
    a.source = parse(text);
    a.sig = build_signature(a.source);
  } catch (const Error& e) {
    a.error = ErrorInfo::from(e);
    a.overall = decide(a);
    return a;
  }

  std::size_t index = 0;
  for (const auto& raw : a.source.rules()) {
    RuleEntry entry{raw, index, std::nullopt, std::nullopt};
    try {
      entry.rule = validate_rule(raw, a.sig, index);
    } catch (const Error& e) {
      entry.error = ErrorInfo::from(e);
    }
    a.rules.push_back(std::move(entry));
    ++index;
  }

  const std::vector<Rule> rules = a.valid_rules();
  for (const Rule& r : rules) {
    CallExtraction ex = extract_calls(r, a.sig);
    a.calls.insert(a.calls.end(), ex.calls.begin(), ex.calls.end());
    a.warnings.insert(a.warnings.end(), ex.warnings.begin(), ex.warnings.end());
  }
  a.graph = CallGraph::from_calls(a.calls, a.sig);
  a.closed = closure(a.graph);
  a.sct_idempotent = sct_check(a.closed, a.calls, SctMode::Idempotent);
  a.sct_all_loops = sct_check(a.closed, a.calls, SctMode::AllLoops);
  a.sct = options.mode == SctMode::Idempotent ? a.sct_idempotent : a.sct_all_loops;
  if (options.check_cc) a.cc = check_all(rules, a.sig);
  if (options.lint) {
    for (auto& w : orthogonality_lint(rules, a.sig)) a.warnings.push_back(std::move(w));
    for (auto& w : defined_pattern_lint(rules, a.sig)) a.warnings.push_back(std::move(w));
  }
  std::stable_sort(a.warnings.begin(), a.warnings.end(),
                   [](const Warning& x, const Warning& y) { return x.rule < y.rule; });
  a.single = single_criteria(a, rules);
  a.overall = decide(a);
  return a;
}

namespace {

ordered_json path_json(const Path& p) { return ordered_json(p); }

ordered_json error_json(const ErrorInfo& e) {
  return {{"kind", to_string(e.kind)},
          {"line", e.pos.line},
          {"column", e.pos.column},
          {"message", e.message},
          {"expected", e.expected}};
}

ordered_json call_ref(const Analysis& a, std::size_t i) {
  const Call& c = a.calls[i];
  return {{"call", i},
          {"caller", c.caller},
          {"callee", c.callee},
          {"rule", c.origin.rule},
          {"position", path_json(c.origin.position)}};
}

ordered_json trace_json(const std::vector<TraceStep>& trace) {
  ordered_json out = ordered_json::array();
  for (const auto& s : trace) {
    ordered_json step{{"position", path_json(s.position)}, {"clause", to_string(s.clause)}};
    if (s.callee) step["callee"] = *s.callee;
    out.push_back(std::move(step));
  }
  return out;
}

ordered_json verdict_json(const Analysis& a, const Verdict& v) {
  ordered_json failures = ordered_json::array();
  for (const auto& f : v.failures) {
    ordered_json witness = ordered_json::array();
    for (std::size_t i : f.witness) witness.push_back(call_ref(a, i));
    failures.push_back({{"symbol", f.symbol}, {"matrix", to_string(f.matrix)}, {"witness", witness}});
  }
  return {{"mode", to_string(v.mode)}, {"status", to_string(v.status)}, {"failures", failures}};
}

std::string rule_text(const RawRule& raw, const Term& t) {
  return to_string(t, {raw.wildcards.begin(), raw.wildcards.end()});
}

std::string describe_call(const Analysis& a, std::size_t i) {
  const Call& c = a.calls[i];
  return c.caller + " -> " + c.callee + " " + to_string(c.matrix) + " (rule " +
         std::to_string(c.origin.rule) + " at " + format_path(c.origin.position) + ")";
}

}  // namespace

ordered_json to_json(const Analysis& a) {
  ordered_json j;
  j["file"] = a.file;
  j["counts"] = {{"symbols", a.sig.size()},
                 {"rules", a.rules.size()},
                 {"calls", a.calls.size()},
                 {"closure_edges", a.closed.edge_count()}};

  ordered_json symbols = ordered_json::array();
  for (const SymbolInfo& s : a.sig) {
    symbols.push_back({{"name", s.name},
                       {"level", to_string(s.level)},
                       {"arity", s.arity},
                       {"constructor", s.is_constructor},
                       {"definable", s.definable}});
  }
  j["symbols"] = std::move(symbols);

  ordered_json rules = ordered_json::array();
  for (const auto& r : a.rules) {
    ordered_json rj{{"index", r.index},
                    {"head", to_string(spine_of(r.raw.lhs).head)},
                    {"lhs", rule_text(r.raw, r.raw.lhs)},
                    {"rhs", rule_text(r.raw, r.raw.rhs)},
                    {"status", r.error ? std::string(to_string(r.error->kind)) : std::string("ok")}};
    if (r.error) rj["error"] = error_json(*r.error);
    rules.push_back(std::move(rj));
  }
  j["rules"] = std::move(rules);

  ordered_json calls = ordered_json::array();
  for (std::size_t i = 0; i < a.calls.size(); ++i) {
    const Call& c = a.calls[i];
    calls.push_back({{"index", i},
                     {"caller", c.caller},
                     {"callee", c.callee},
                     {"matrix", to_string(c.matrix)},
                     {"rule", c.origin.rule},
                     {"position", path_json(c.origin.position)}});
  }
  j["calls"] = std::move(calls);

  j["closure"] = {{"edge_count", a.closed.edge_count()},
                  {"modes",
                   {{"idempotent", to_string(a.sct_idempotent.status)},
                    {"all-loops", to_string(a.sct_all_loops.status)}}}};
  j["sct"] = verdict_json(a, a.sct);

  j["cc_checked"] = a.options.check_cc;
  ordered_json cc = ordered_json::array();
  if (a.cc) {
    for (const auto& r : a.cc->rules) {
      ordered_json entry{{"rule", r.rule}, {"status", r.result.member ? "pass" : "fail"}};
      if (r.result.member) {
        entry["trace_or_failure"] = trace_json(r.result.trace);
      } else {
        const auto& f = *r.result.failure;
        entry["trace_or_failure"] = {{"position", path_json(f.position)},
                                     {"term", to_string(f.term)},
                                     {"reason", f.reason},
                                     {"trace", trace_json(r.result.trace)}};
      }
      cc.push_back(std::move(entry));
    }
  }
  j["cc"] = std::move(cc);

  ordered_json non_decreasing = ordered_json::array();
  for (std::size_t i : a.single.non_decreasing_calls) non_decreasing.push_back(call_ref(a, i));
  j["single_criteria"] = {{"strict_decrease_failures", non_decreasing},
                          {"defined_pattern_constructors", a.single.defined_pattern_constructors}};

  ordered_json warnings = ordered_json::array();
  for (const auto& w : a.warnings) {
    ordered_json wj{{"kind", to_string(w.kind)}, {"rule", w.rule}};
    if (w.other_rule) wj["other_rule"] = *w.other_rule;
    wj["position"] = path_json(w.position);
    wj["line"] = w.pos.line;
    wj["column"] = w.pos.column;
    wj["message"] = w.message;
    warnings.push_back(std::move(wj));
  }
  j["warnings"] = std::move(warnings);

  j["unchecked_assumptions"] = {"confluence", "type preservation"};
  j["error"] = a.error ? error_json(*a.error) : ordered_json(nullptr);
  j["overall"] = to_string(a.overall);
  return j;
}

std::string summary(const Analysis& a) {
  std::ostringstream out;
  out << a.file << ": ";
  if (a.error) {
    out << to_string(a.error->kind) << " at " << to_string(a.error->pos) << ": " << a.error->message;
    if (!a.error->expected.empty()) {
      out << " (expected";
      for (const auto& e : a.error->expected) out << ' ' << e;
      out << ')';
    }
    out << "\nverdict: " << to_string(a.overall) << '\n';
    return out.str();
  }
  out << a.sig.size() << " symbols, " << a.rules.size() << " rules, " << a.calls.size()
      << " calls, " << a.closed.edge_count() << " closure edges\n";
  for (const auto& r : a.rules) {
    if (r.error) {
      out << "rule " << r.index << " (" << to_string(r.error->pos) << "): "
          << to_string(r.error->kind) << ": " << r.error->message << '\n';
    }
  }
  out << "size-change (" << to_string(a.sct.mode) << "): " << to_string(a.sct.status) << '\n';
  for (const auto& f : a.sct.failures) {
    out << "  loop on " << f.symbol << " with " << to_string(f.matrix)
        << " has no decreasing diagonal entry\n";
    for (std::size_t i : f.witness) out << "    " << describe_call(a, i) << '\n';
  }
  if (!a.cc) {
    out << "computability closure: skipped\n";
  } else {
    std::size_t failed = 0;
    for (const auto& r : a.cc->rules) {
      if (r.result.member) continue;
      ++failed;
      const auto& f = *r.result.failure;
      out << "  rule " << r.rule << ": '" << to_string(f.term) << "' at "
          << format_path(f.position) << ": " << f.reason << '\n';
    }
    out << "computability closure: " << (a.cc->rules.size() - failed) << "/" << a.cc->rules.size()
        << " rules pass\n";
  }
  if (!a.single.non_decreasing_calls.empty()) {
    out << "calls without a strict decrease:\n";
    for (std::size_t i : a.single.non_decreasing_calls) out << "  " << describe_call(a, i) << '\n';
  }
  if (!a.single.defined_pattern_constructors.empty()) {
    out << "constructors with rules:";
    for (const auto& s : a.single.defined_pattern_constructors) out << ' ' << s;
    out << '\n';
  }
  for (const auto& w : a.warnings) {
    out << "warning: rule " << w.rule << " (" << to_string(w.pos) << "): " << to_string(w.kind)
        << ": " << w.message << '\n';
  }
  if (a.overall == Overall::Accept) {
    out << "assuming confluence and type preservation (not checked)\n";
  }
  out << "verdict: " << to_string(a.overall) << '\n';
  return out.str();
}

std::string explain(const Analysis& a, std::string_view symbol) {
  std::ostringstream out;
  const std::string name(symbol);
  if (!a.closed.nodes().contains(name)) {
    out << name << ": not in the call graph\n";
    return out.str();
  }
  const auto& loops = a.closed.matrices(name, name);
  if (loops.empty()) {
    out << name << ": no loops\n";
    return out.str();
  }
  for (const auto& m : loops) {
    const bool idempotent = matrix_mul(m, m) == m;
    out << name << " -> " << name << " " << to_string(m) << (idempotent ? " idempotent" : "")
        << (m.has_strict_diagonal() ? " decreasing" : " not decreasing") << '\n';
    if (const auto w = find_witness(a.calls, name, m)) {
      for (std::size_t i : *w) out << "  " << describe_call(a, i) << '\n';
    }
  }
  return out.str();
}

int exit_code(Overall overall) {
  switch (overall) {
    case Overall::Accept: return 0;
    case Overall::Reject: return 1;
    case Overall::Error: return 2;
  }
  return 2;
}

}  // namespace sctlint
