#include "doctest.h"
#include "oracle.hpp"
#include "support.hpp"

using namespace strata;
using namespace strata::test;

namespace {

Formula p_u(const char* c) { return Formula::lit(Literal::make("p", {Term::constant(c)}, Strength::U)); }
Term x() { return Term::variable("x"); }

}  // namespace

TEST_CASE("negate flips literal polarity and keeps strength") {
  auto f = negate(p_u("a"));
  REQUIRE(f.kind() == Formula::Kind::Lit);
  CHECK_FALSE(f.literal().positive());
  CHECK(f.literal().strength == Strength::U);

  auto d = Formula::lit(Literal::make("q", {Term::constant("a")}, Strength::D, Polarity::Neg));
  CHECK(negate(d).literal().positive());
  CHECK(negate(d).literal().strength == Strength::D);
}

TEST_CASE("negate dualizes quantifiers") {
  auto f = formula("(forall (x) (bird^u x))");
  auto g = negate(f);
  REQUIRE(g.kind() == Formula::Kind::Exists);
  CHECK(g.vars() == std::vector<std::string>{"x"});
  CHECK(g.body() == Formula::lit(Literal::make("bird", {x()}, Strength::U, Polarity::Neg)));
}

TEST_CASE("negate expands an implication") {
  auto g = negate(formula("(-> (p^u a) (q^d a))"));
  CHECK(g == formula("(and (p^u a) (not (q^d a)))"));
}

TEST_CASE("negation of a literal never wraps it") {
  auto f = Formula::negation(p_u("a"));
  CHECK(f.kind() == Formula::Kind::Lit);
  CHECK(formula("(not (not (p^u a)))").kind() == Formula::Kind::Lit);
  CHECK(formula("(not (and (p^u a) (q^u a)))").kind() == Formula::Kind::Not);
}

TEST_CASE("negate round-trips to the negation normal form") {
  std::vector<Formula> samples{
      formula("(forall (x) (-> (penguin^u x) (not (flies^u x))))"),
      formula("(exists (x) (and (king_of_france^u x) (defref x) (bald^u x)))"),
      formula("(not (or (p^u a) (and (q^d a) (not (-> (p^d b) (q^u b))))))"),
      formula("(forall (x y) (exists (z) (or (r^u x y) (not (r^d y z)))))"),
  };
  for (std::uint32_t seed = 1; seed <= 50; ++seed) {
    const Theory t = random_ground_theory(seed);
    for (const auto& ax : t.axioms()) samples.push_back(ax.formula);
  }
  for (const auto& f : samples) {
    CAPTURE(render_formula(f));
    CHECK(negate(negate(f)) == nnf(f));
    CHECK(nnf(nnf(f)) == nnf(f));
  }
}

TEST_CASE("substitute replaces free occurrences only") {
  CHECK(substitute(formula("(forall (x) (bird^u x))").body(), "x", Term::constant("T")) == formula("(bird^u T)"));

  auto shadowed = formula("(exists (x) (p^u x))");
  CHECK(substitute(shadowed, "x", Term::constant("a")) == shadowed);

  auto f = formula("(forall (y) (regret^u john (come y party)))").body();
  CHECK(substitute(f, "y", Term::constant("mary")) == formula("(regret^u john (come mary party))"));
}

TEST_CASE("substitute rejects non-ground terms") {
  auto f = formula("(forall (x) (p^u x))").body();
  CHECK_THROWS_AS(substitute(f, "x", Term::variable("y")), Error);
  CHECK_THROWS_AS(substitute(f, "x", Term::apply("g", {Term::variable("y")})), Error);
}

TEST_CASE("free_variables") {
  CHECK(free_variables(formula("(bird^u T)")).empty());

  auto body = Formula::lit(Literal::make("p", {x(), Term::variable("y")}, Strength::U));
  CHECK(free_variables(Formula::forall({"x"}, body)) == std::set<std::string>{"y"});

  auto mixed = Formula::conj({Formula::lit(Literal::make("p", {x()}, Strength::U)),
                              Formula::exists({"x"}, Formula::lit(Literal::make("q", {x()}, Strength::D)))});
  CHECK(free_variables(mixed) == std::set<std::string>{"x"});
}

TEST_CASE("substituted variables are no longer free") {
  auto body = Formula::conj({Formula::lit(Literal::make("p", {x(), Term::variable("y")}, Strength::U)),
                             Formula::forall({"y"}, Formula::lit(Literal::make("q", {Term::variable("y"), x()},
                                                                                Strength::D)))});
  for (const char* v : {"x", "y"}) {
    auto g = substitute(body, v, Term::constant("c"));
    CHECK_FALSE(free_variables(g).contains(v));
  }
}

TEST_CASE("term ordering and grounding") {
  auto w0 = Term::witness(0);
  auto w1 = Term::witness(1);
  CHECK(w0 < w1);
  CHECK(Term::apply("come", {Term::constant("mary"), Term::constant("party")}).is_ground());
  CHECK_FALSE(Term::apply("come", {x(), Term::constant("party")}).is_ground());

  std::vector<Term> subs;
  Term::apply("f", {Term::apply("g", {Term::constant("a")})}).collect_subterms(subs);
  CHECK(subs.size() == 3);
}

TEST_CASE("builtin inequality is syntactic") {
  CHECK(Literal::neq(Term::constant("a"), Term::constant("b")).builtin_holds());
  CHECK_FALSE(Literal::neq(Term::witness(0), Term::witness(0)).builtin_holds());
  CHECK(Literal::neq(Term::witness(0), Term::witness(0)).flipped().builtin_holds());
}

TEST_CASE("meta literals always carry strength U") {
  auto l = Literal::make("defref", {Term::constant("a")}, Strength::D);
  CHECK(l.meta());
  CHECK(l.strength == Strength::U);
  CHECK(Literal::defref(Term::constant("a")) == l);
}

TEST_CASE("theory validation") {
  Theory t;
  t.add({"a1", formula("(bird^u T)"), AxiomTag::Core});

  SUBCASE("duplicate id") {
    try {
      t.add({"a1", formula("(bird^u U)"), AxiomTag::Core});
      FAIL("expected TheoryError");
    } catch (const TheoryError& e) {
      CHECK(e.kind() == ErrorKind::DuplicateAxiomId);
    }
    CHECK(t.size() == 1);
  }
  SUBCASE("arity mismatch") {
    try {
      t.add({"a2", formula("(bird^u T U)"), AxiomTag::Core});
      FAIL("expected TheoryError");
    } catch (const TheoryError& e) {
      CHECK(e.kind() == ErrorKind::Arity);
    }
  }
  SUBCASE("open formula") {
    auto open = Formula::lit(Literal::make("bird", {x()}, Strength::U));
    try {
      t.add({"a2", open, AxiomTag::Core});
      FAIL("expected TheoryError");
    } catch (const TheoryError& e) {
      CHECK(e.kind() == ErrorKind::UnboundVariable);
    }
  }
  SUBCASE("language use needs a defeasible consequent") {
    CHECK_THROWS_AS(t.add({"l1", formula("(forall (x) (-> (defref x) (E!^u x)))"), AxiomTag::LanguageUse}),
                    TheoryError);
    CHECK_THROWS_AS(t.add({"l1", formula("(forall (x) (-> (E!^d x) (bird^u x)))"), AxiomTag::LanguageUse}),
                    TheoryError);
    t.add({"l1", formula("(forall (x) (-> (defref x) (E!^d x)))"), AxiomTag::LanguageUse});
    CHECK(t.contains("l1"));
  }
  SUBCASE("ontology predicates are unary") {
    auto binary = Formula::lit(Literal::make("E!", {Term::constant("a"), Term::constant("b")}, Strength::U));
    CHECK_THROWS_AS(t.add({"a2", binary, AxiomTag::Core}), TheoryError);
  }
  SUBCASE("functor arity") {
    t.add({"a2", formula("(regret^u john (come mary party))"), AxiomTag::Core});
    CHECK(t.functor_arities().at("come") == 2);
    CHECK_THROWS_AS(t.add({"a3", formula("(regret^u john (come mary))"), AxiomTag::Core}), TheoryError);
  }
}

TEST_CASE("defeasible consequent detection") {
  CHECK(has_defeasible_consequent(formula("(forall (x) (-> (defref x) (E!^d x)))")));
  CHECK(has_defeasible_consequent(formula("(p^d a)")));
  CHECK_FALSE(has_defeasible_consequent(formula("(-> (p^d a) (q^u a))")));
}
