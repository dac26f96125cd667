#include <algorithm>

#include "doctest.h"
#include "sctlint/cc.hpp"
#include "support.hpp"

using namespace sctlint;

namespace {

std::vector<CcClause> clauses(const CcResult& r) {
  std::vector<CcClause> out;
  for (const auto& s : r.trace) out.push_back(s.clause);
  return out;
}

CcResult rhs_result(const testing::Loaded& l, std::size_t rule) {
  const Rule& r = l.rules.at(rule);
  return cc_member(r.rhs, ClosureContext::from_rule(r), l.sig);
}

std::set<Path> call_positions(const CcResult& r) {
  std::set<Path> out;
  for (const auto& s : r.trace) {
    if (s.clause == CcClause::Call || s.clause == CcClause::Cons) out.insert(s.position);
  }
  return out;
}

}  // namespace

TEST_CASE("integer example") {
  const auto l = testing::load(testing::corpus_text("int_aux"));
  const CcResult x = rhs_result(l, 0);
  CHECK(x.member);
  CHECK(clauses(x) == std::vector<CcClause>{CcClause::Var});
  const CcResult aux = rhs_result(l, 2);
  CHECK(aux.member);
  CHECK(clauses(aux) == std::vector<CcClause>{CcClause::Call, CcClause::Var});
  REQUIRE(aux.trace[0].callee);
  CHECK(*aux.trace[0].callee == "aux");
  CHECK(aux.trace[1].position == Path{1});
  CHECK(check_all(l.rules, l.sig).all_pass());
}

TEST_CASE("Peano plus: cons over call over variables") {
  const auto l = testing::load(testing::corpus_text("peano"));
  const CcResult r = rhs_result(l, 1);
  CHECK(r.member);
  CHECK(clauses(r) ==
        std::vector<CcClause>{CcClause::Cons, CcClause::Call, CcClause::Var, CcClause::Var});
  CHECK(r.trace[1].position == Path{1});
  CHECK(r.trace[2].position == (Path{1, 0, 1}));
  CHECK(r.trace[3].position == (Path{1, 1}));
}

TEST_CASE("type-level rule") {
  const auto l = testing::load(testing::corpus_text("type_level"));
  const CcResult r = rhs_result(l, 1);
  CHECK(r.member);
  CHECK(clauses(r) ==
        std::vector<CcClause>{CcClause::Prod, CcClause::Sym, CcClause::Call, CcClause::Var});
  CHECK(clauses(rhs_result(l, 0)) == std::vector<CcClause>{CcClause::Sym});
  CHECK(check_all(l.rules, l.sig).all_pass());
}

TEST_CASE("lambda binders are locally computable") {
  const auto l = testing::load(testing::corpus_text("lists"));
  const CcResult r = rhs_result(l, 4);
  CHECK(r.member);
  CHECK(std::find_if(r.trace.begin(), r.trace.end(),
                     [](const TraceStep& s) { return s.clause == CcClause::Lam; }) != r.trace.end());
  CHECK(check_all(l.rules, l.sig).all_pass());
}

TEST_CASE("an undeclared symbol cannot enter the closure") {
  Signature sig;
  sig.add({"Nat", Term::sort(), Level::TypeConst, 0, false, false, {}});
  const Term nat = Term::symbol("Nat");
  sig.add({"f", Term::arrow(nat, nat), Level::ObjectFun, 1, true, false, {}});
  sig.add({"g", Term::arrow(nat, nat), Level::ObjectFun, 1, true, false, {}});
  const Term x = Term::var("x");
  Rule r;
  r.head = "f";
  r.lhs_args = {x};
  r.rhs = Term::app(Term::symbol("g"), Term::app(Term::symbol("h"), x));
  r.vars = {"x"};
  const CcResult res = cc_member(r.rhs, ClosureContext::from_rule(r), sig);
  CHECK_FALSE(res.member);
  REQUIRE(res.failure);
  CHECK(res.failure->position == Path{1});
  CHECK(term_eq(res.failure->term, Term::app(Term::symbol("h"), x)));
  CHECK(res.failure->reason.find("'h'") != std::string::npos);
}

TEST_CASE("partial application and unbound variables fail") {
  const auto l = testing::load(
      "N : Type. 0 : N.\n"
      "def k : N -> N -> N.\n"
      "def h : (N -> N) -> N.\n"
      "[x] h x --> h (k 0).\n");
  const CcResult r = rhs_result(l, 0);
  CHECK_FALSE(r.member);
  REQUIRE(r.failure);
  CHECK(r.failure->position == (Path{1, 0}));

  ClosureContext empty;
  CHECK_FALSE(cc_member(Term::var("z"), empty, l.sig).member);
}

TEST_CASE("accessible subterms are admitted") {
  const auto l = testing::load(testing::corpus_text("peano"));
  ClosureContext ctx;
  const Term m = Term::var("m");
  ctx.lhs_args = {Term::app(Term::symbol("S"), m)};
  // m is not in base but is a strict subterm of the lhs argument.
  const CcResult r = cc_member(m, ctx, l.sig);
  CHECK(r.member);
  CHECK(clauses(r) == std::vector<CcClause>{CcClause::Acc});
}

TEST_CASE("cc_member is monotone in the base") {
  std::vector<std::string> names{"ackermann", "int_aux", "lists", "peano", "type_level", "loop"};
  for (const auto& name : names) {
    const auto l = testing::load(testing::corpus_text(name));
    for (const auto& r : l.rules) {
      ClosureContext ctx = ClosureContext::from_rule(r);
      // Remove variables one at a time; membership may only be lost.
      bool previous = cc_member(r.rhs, ctx, l.sig).member;
      ClosureContext bigger = ctx;
      bigger.base.insert("extra");
      if (previous) CHECK(cc_member(r.rhs, bigger, l.sig).member);
      while (!ctx.base.empty()) {
        ctx.base.erase(ctx.base.begin());
        const bool now = cc_member(r.rhs, ctx, l.sig).member;
        if (!previous) CHECK_FALSE(now);
        previous = now;
      }
    }
  }
}

TEST_CASE("left-hand side arguments are in their own closure") {
  for (const auto& name : testing::corpus_names()) {
    CAPTURE(name);
    const auto l = testing::load(testing::corpus_text(name));
    for (const auto& r : l.rules) {
      for (const auto& p : r.lhs_args) {
        const CcResult res = cc_member(p, ClosureContext::from_rule(r), l.sig);
        CHECK(res.member);
        for (const auto& s : res.trace) {
          CHECK((s.clause == CcClause::Var || s.clause == CcClause::Cons ||
                 s.clause == CcClause::Call));
        }
      }
    }
  }
}

TEST_CASE("call clauses sit exactly at the extracted calls") {
  for (const auto& name : testing::corpus_names()) {
    CAPTURE(name);
    const auto l = testing::load(testing::corpus_text(name));
    for (const auto& r : l.rules) {
      const CcResult res = cc_member(r.rhs, ClosureContext::from_rule(r), l.sig);
      std::set<Path> expected;
      std::map<Path, std::string> callee_at;
      for (const auto& c : extract_calls(r, l.sig).calls) {
        expected.insert(c.origin.position);
        callee_at[c.origin.position] = c.callee;
      }
      CHECK(call_positions(res) == expected);
      for (const auto& s : res.trace) {
        if (s.callee) CHECK(callee_at[s.position] == *s.callee);
      }
    }
  }
}

TEST_CASE("clause names") {
  CHECK(to_string(CcClause::Var) == "var");
  CHECK(to_string(CcClause::Acc) == "acc");
  CHECK(to_string(CcClause::Sym) == "sym");
}
