#include "doctest.h"
#include "strata/corpus.hpp"
#include "support.hpp"

using namespace strata;
using namespace strata::test;

namespace {

std::vector<ParseError> errors_of(std::string_view src) {
  auto r = parse_theory(src);
  REQUIRE_FALSE(r.ok());
  return r.errors();
}

}  // namespace

TEST_CASE("parse a core axiom") {
  auto t = theory("(axiom a1 :core (forall (x) (-> (penguin^u x) (bird^u x))))");
  REQUIRE(t.size() == 1);
  const auto& ax = t.axioms().front();
  CHECK(ax.id == "a1");
  CHECK(ax.tag == AxiomTag::Core);
  CHECK(ax.formula.kind() == Formula::Kind::ForAll);
  CHECK(ax.formula.body().kind() == Formula::Kind::Implies);
}

TEST_CASE("parse a language-use axiom with the metapredicate") {
  auto t = theory("(axiom l1 :language-use (forall (x) (-> (defref x) (E!^d x))))");
  const auto& ax = t.axioms().front();
  CHECK(ax.tag == AxiomTag::LanguageUse);
  CHECK(ax.formula.body().antecedent().literal().meta());
  CHECK(ax.formula.body().consequent().literal().strength == Strength::D);
}

TEST_CASE("duplicate axiom id") {
  auto errs = errors_of("(axiom a1 :core (bird^u T)) (axiom a1 :core (bird^u T))");
  REQUIRE(errs.size() == 1);
  CHECK(errs[0].kind == ErrorKind::DuplicateAxiomId);
  CHECK(errs[0].span.line == 1);
  CHECK(errs[0].span.column == 36);
  CHECK(errs[0].span.length == 2);
}

TEST_CASE("arity errors point at the offending literal") {
  auto errs = errors_of("(axiom a1 :core (bird^u T))\n(axiom a2 :core (bird^u T U))");
  REQUIRE(errs.size() == 1);
  CHECK(errs[0].kind == ErrorKind::Arity);
  CHECK(errs[0].span.line == 2);
  CHECK(errs[0].span.column == 18);
}

TEST_CASE("arity is checked within one statement too") {
  auto errs = errors_of("(axiom a1 :core (and (bird^u T) (bird^u T U)))");
  CHECK(errs[0].kind == ErrorKind::Arity);
}

TEST_CASE("variable used outside its binder") {
  auto errs = errors_of("(axiom a1 :core (and (forall (x) (p^u x)) (q^u x)))");
  REQUIRE(errs.size() == 1);
  CHECK(errs[0].kind == ErrorKind::UnboundVariable);
  CHECK(errs[0].span.column == 48);
}

TEST_CASE("syntax errors") {
  CHECK(errors_of("(axiom a1 :core (bird^u T)")[0].kind == ErrorKind::Syntax);
  CHECK(errors_of("(axiom a1 :core (bird T))")[0].kind == ErrorKind::Syntax);
  CHECK(errors_of("(axiom a1 :fact (bird^u T))")[0].kind == ErrorKind::Syntax);
  CHECK(errors_of("(axiom a1 :core (not (defref T)))")[0].kind == ErrorKind::Syntax);
  CHECK(errors_of("(axiom a1 :core (defref^d T))")[0].kind == ErrorKind::Syntax);
  CHECK(errors_of("(axiom a1 :core (p^u xi0))")[0].kind == ErrorKind::Syntax);
  CHECK(errors_of("(axiom a1 :core (p^x a))")[0].kind == ErrorKind::Syntax);
  CHECK(errors_of("(axiom a1 :core (forall () (p^u a)))")[0].kind == ErrorKind::Syntax);
  CHECK(errors_of(")")[0].kind == ErrorKind::Syntax);
}

TEST_CASE("every bad statement is reported") {
  auto errs = errors_of(
      "(axiom a1 :core (bird^u T))\n"
      "(axiom a1 :core (fish^u T))\n"
      "(axiom a3 :core (bird^u T T))\n"
      "(axiom a4 :core (ok^u T))\n");
  REQUIRE(errs.size() == 2);
  CHECK(errs[0].span.line == 2);
  CHECK(errs[1].span.line == 3);
}

TEST_CASE("columns count code points") {
  auto errs = errors_of("; ξ comment\n(axiom a1 :core (p^u ξ))  )");
  REQUIRE_FALSE(errs.empty());
  CHECK(errs.back().span.line == 2);
  CHECK(errs.back().span.column == 27);
}

TEST_CASE("format_error") {
  ParseError e{{3, 14, 4}, "predicate 'bird' used with 2 arguments", ErrorKind::Arity};
  CHECK(format_error(e) == "3:14: arity: predicate 'bird' used with 2 arguments");
}

TEST_CASE("comments and whitespace are ignored") {
  auto t = theory("; a comment\n\n  (axiom a1 ; trailing\n :core (bird^u T))\r\n");
  CHECK(t.size() == 1);
}

TEST_CASE("function terms and builtins") {
  auto t = theory(
      "(axiom u1 :utterance (not (regret^u john (come mary party))))\n"
      "(axiom u2 :utterance (exists (x y) (and (p^u x) (neq x y))))");
  const auto& lit = t.axioms()[0].formula.literal();
  REQUIRE(lit.atom.args.size() == 2);
  CHECK(lit.atom.args[1].kind == Term::Kind::Apply);
  CHECK(lit.atom.args[1].name == "come");
}

TEST_CASE("render round-trips") {
  SUBCASE("tweety") {
    auto t = theory(fixture("tweety").theory_source);
    auto again = theory(render_theory(t));
    CHECK(again == t);
    CHECK(again.size() == 4);
  }
  SUBCASE("empty theory") {
    Theory t;
    CHECK(render_theory(t).empty());
    CHECK(theory(render_theory(t)) == t);
  }
  SUBCASE("strike keeps the UE! axiom") {
    auto t = theory(fixture("strike").theory_source);
    auto again = theory(render_theory(t));
    CHECK(again == t);
    CHECK(render_theory(again).find("(UE!^u x)") != std::string::npos);
  }
  SUBCASE("whole corpus") {
    for (const auto& f : fixtures()) {
      CAPTURE(f.name);
      auto t = theory(f.theory_source);
      CHECK(theory(render_theory(t)) == t);
    }
  }
}

TEST_CASE("parse_formula checks the context signature") {
  auto ctx = theory("(axiom a1 :core (come^u mary party))");
  CHECK(parse_formula("(not (come^u mary party))", ctx).ok());
  auto bad = parse_formula("(come^u mary)", ctx);
  REQUIRE_FALSE(bad.ok());
  CHECK(bad.errors()[0].kind == ErrorKind::Arity);
  // An undeclared symbol is a constant, so this is closed.
  CHECK(is_closed(parse_formula("(p^u x)", ctx).value()));
  CHECK_FALSE(parse_formula("(p^u a) (q^u a)").ok());
  CHECK_FALSE(parse_formula("").ok());
}

TEST_CASE("ParseResult::value throws on failure") {
  CHECK_THROWS_AS(parse_theory("(axiom").value(), Error);
}
