#include "doctest.h"
#include "sctlint/parser.hpp"
#include "support.hpp"

using namespace sctlint;

namespace {

Error parse_error(std::string_view text) {
  try {
    (void)parse(text);
  } catch (const Error& e) {
    return e;
  }
  FAIL("expected a parse error");
  return Error(ErrorKind::ParseError, {}, "");
}

Error signature_error(std::string_view text) {
  const SourceFile f = parse(text);
  try {
    (void)build_signature(f);
  } catch (const Error& e) {
    return e;
  }
  FAIL("expected a signature error");
  return Error(ErrorKind::ParseError, {}, "");
}

bool items_alpha_equal(const SourceFile& a, const SourceFile& b) {
  if (a.items.size() != b.items.size()) return false;
  for (std::size_t i = 0; i < a.items.size(); ++i) {
    if (a.items[i].index() != b.items[i].index()) return false;
    if (const auto* d = std::get_if<Declaration>(&a.items[i])) {
      const auto& e = std::get<Declaration>(b.items[i]);
      if (d->def_flag != e.def_flag || d->name != e.name || !term_eq(d->type, e.type)) return false;
    } else {
      const auto& r = std::get<RawRule>(a.items[i]);
      const auto& s = std::get<RawRule>(b.items[i]);
      if (r.bound_vars != s.bound_vars || !term_eq(r.lhs, s.lhs) || !term_eq(r.rhs, s.rhs)) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("declaration with def marker") {
  const SourceFile f = parse("def F : Nat -> Type.");
  REQUIRE(f.items.size() == 1);
  const auto& d = std::get<Declaration>(f.items[0]);
  CHECK(d.def_flag);
  CHECK(d.name == "F");
  CHECK(term_eq(d.type, Term::arrow(Term::symbol("Nat"), Term::sort())));
  CHECK(d.pos == SourcePos{1, 1});
}

TEST_CASE("type-level rule") {
  const SourceFile f = parse("[n] F (S n) --> Nat -> (F n).");
  const auto& r = std::get<RawRule>(f.items.at(0));
  CHECK(r.bound_vars == std::vector<std::string>{"n"});
  const Term n = Term::var("n");
  CHECK(term_eq(r.lhs, Term::app(Term::symbol("F"), Term::app(Term::symbol("S"), n))));
  CHECK(term_eq(r.rhs, Term::arrow(Term::symbol("Nat"), Term::app(Term::symbol("F"), n))));
}

TEST_CASE("inverse constructor rule") {
  const SourceFile f = parse("[x] S (P x) --> x.");
  const auto& r = std::get<RawRule>(f.items.at(0));
  const Term x = Term::var("x");
  CHECK(term_eq(r.lhs, Term::app(Term::symbol("S"), Term::app(Term::symbol("P"), x))));
  CHECK(r.rhs.is(TermKind::Var));
}

TEST_CASE("binders, lambdas and precedence") {
  const SourceFile f = parse(
      "def g : (n : Nat) -> Vec n -> Nat.\n"
      "[x] g x --> (y : Nat => y) x.\n"
      "[] h --> x : (Nat -> Nat) => x 0.");
  const auto& d = std::get<Declaration>(f.items[0]);
  REQUIRE(d.type.is(TermKind::Product));
  CHECK(d.type.name() == "n");
  CHECK(d.type.codomain().domain().arg().is(TermKind::Var));

  const auto& r = std::get<RawRule>(f.items[1]);
  REQUIRE(r.rhs.is(TermKind::App));
  CHECK(r.rhs.fun().is(TermKind::Lambda));

  const auto& h = std::get<RawRule>(f.items[2]);
  REQUIRE(h.rhs.is(TermKind::Lambda));
  CHECK(h.rhs.annotation().is(TermKind::Product));
  CHECK(h.rhs.body().fun().is(TermKind::Var));
}

TEST_CASE("arrows associate to the right, application binds tighter") {
  const auto& d = std::get<Declaration>(parse("f : A -> B c -> D.").items[0]);
  CHECK(to_string(d.type) == "A -> B c -> D");
  CHECK(d.type.codomain().domain().is(TermKind::App));
}

TEST_CASE("wildcards become fresh numbered variables") {
  const SourceFile f = parse("[] mult 0 _ --> 0. [x] k _ x _ --> x.");
  const auto& r = std::get<RawRule>(f.items[0]);
  CHECK(r.wildcards == std::vector<std::string>{"_1"});
  CHECK(spine_of(r.lhs).args[1].name() == "_1");
  const auto& s = std::get<RawRule>(f.items[1]);
  CHECK(s.wildcards == std::vector<std::string>{"_1", "_2"});
  CHECK(to_string(s) == "[x] k _ x _ --> x.");
}

TEST_CASE("nested comments") {
  const SourceFile f = parse("(; outer (; inner ;) still ;) Nat : Type. (;;)");
  CHECK(f.items.size() == 1);
}

TEST_CASE("parse errors carry a position and the expected tokens") {
  const Error e = parse_error("Nat : Type.\ndef f : Nat -> Nat\n[x] f x --> x.");
  CHECK(e.kind() == ErrorKind::ParseError);
  CHECK(e.pos() == SourcePos{3, 1});
  CHECK(e.expected() == std::vector<std::string>{"'.'"});

  const Error missing_dot = parse_error("Nat : Type");
  CHECK(missing_dot.expected() == std::vector<std::string>{"'.'"});
  CHECK(parse_error("Nat : Type. $").kind() == ErrorKind::ParseError);
  CHECK(parse_error("(; open").kind() == ErrorKind::ParseError);
  CHECK(parse_error("f : _.").kind() == ErrorKind::ParseError);
  CHECK(parse_error("[x] f x --> .").pos() == SourcePos{1, 13});
}

TEST_CASE("duplicate rule binders") {
  const Error e = parse_error("[x, x] f x --> x.");
  CHECK(e.kind() == ErrorKind::DuplicateBinder);
  CHECK(e.pos() == SourcePos{1, 5});
}

TEST_CASE("build_signature on the integer example") {
  const Signature sig = build_signature(parse(testing::corpus_text("int_aux")));
  const auto& i = sig.at("Int");
  CHECK(i.level == Level::TypeConst);
  CHECK(i.arity == 0);
  const auto& zero = sig.at("0");
  CHECK(zero.is_constructor);
  CHECK(zero.arity == 0);
  for (const char* name : {"S", "P"}) {
    const auto& s = sig.at(name);
    CHECK(s.is_constructor);
    CHECK(s.definable);
    CHECK(s.arity == 1);
  }
  CHECK_FALSE(sig.at("0").definable);
}

TEST_CASE("build_signature on the type-level example") {
  const Signature sig = build_signature(parse(testing::corpus_text("type_level")));
  CHECK(sig.at("F").level == Level::TypeFun);
  CHECK(sig.at("F").arity == 1);
  CHECK_FALSE(sig.at("F").is_constructor);
}

TEST_CASE("build_signature bookkeeping") {
  CHECK(build_signature(parse("")).empty());
  // Rule heads make object symbols definable.
  const Signature sig = build_signature(parse("N : Type. z : N. f : N -> N. [x] f x --> x."));
  CHECK(sig.at("f").definable);
  CHECK_FALSE(sig.at("z").definable);
  // Declaration order is preserved.
  std::vector<std::string> order;
  for (const auto& s : sig) order.push_back(s.name);
  CHECK(order == std::vector<std::string>{"N", "z", "f"});
}

TEST_CASE("build_signature errors") {
  CHECK(signature_error("f : Nat -> Nat.").kind() == ErrorKind::UnknownSymbol);
  CHECK(signature_error("Nat : Type. Nat : Type.").kind() == ErrorKind::DuplicateDeclaration);
  CHECK(signature_error("Nat : Type. [x] f x --> x.").kind() == ErrorKind::RuleHeadUndeclared);
  CHECK(signature_error("Nat : Type. def f : Nat -> Nat. [x] f x --> g x.").kind() ==
        ErrorKind::UnknownSymbol);
  // Use before declaration.
  CHECK(signature_error("Nat : Type. def f : Nat -> Nat. [x] f x --> g x. def g : Nat -> Nat.")
            .kind() == ErrorKind::UnknownSymbol);
  const Error e = signature_error("Nat : Type.\nf : Nat -> Bool.");
  CHECK(e.pos() == SourcePos{2, 1});
}

TEST_CASE("printing and reparsing the corpus gives alpha-equivalent files") {
  for (const auto& name : testing::corpus_names()) {
    CAPTURE(name);
    const SourceFile f = parse(testing::corpus_text(name));
    const std::string printed = to_string(f);
    const SourceFile g = parse(printed);
    CHECK(items_alpha_equal(f, g));
    CHECK(to_string(g) == printed);
  }
}

TEST_CASE("round trip keeps binders, lambdas and shadowing") {
  const char* text =
      "A : Type. B : A -> Type.\n"
      "def k : (a : A) -> (b : B a) -> A -> A.\n"
      "[x, y, z] k x y z --> (u : A => v : (B u) => k u v) x y.\n"
      "[x] k x _ _ --> x : A => x.\n";
  const SourceFile f = parse(text);
  CHECK(items_alpha_equal(f, parse(to_string(f))));
}
