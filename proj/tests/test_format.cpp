#include "doctest.h"
#include "strata/corpus.hpp"
#include "strata/serialize.hpp"
#include "support.hpp"

using namespace strata;
using namespace strata::test;

TEST_CASE("table notation") {
  const ModelSchema m1 = schema({"bird^u(T)", "~penguin^u(T)", "flies^d(T)"});
  CHECK(format_schema(m1) == "{bird^u(T), ¬penguin^u(T)} ∪ {flies^d(T)}");
  CHECK(format_schema(ModelSchema{}) == "∅^u ∪ ∅^d");
  CHECK(format_schema(ModelSchema{}, Notation::Machine) == "{} U {}");
  CHECK(format_term(Term::witness(12), Notation::Table) == "ξ₁₂");
  CHECK(format_term(Term::witness(12), Notation::Machine) == "xi12");
  CHECK(format_literal(lit("~regret^u(john,come(mary,party))"), Notation::Table) ==
        "¬regret^u(john,come(mary,party))");
  CHECK(format_literal(Literal::defref(Term::witness(0)), Notation::Machine) == "defref(xi0)");
}

TEST_CASE("machine notation round-trips") {
  for (const char* s : {"bird^u(T)", "~flies^d(T)", "E!^d(xi0)", "~regret^u(john,come(mary,party))",
                        "more_famous^u(xi0,xi1)", "defref(xi3)", "neq(a,b)", "~neq(xi0,xi0)"}) {
    CAPTURE(s);
    CHECK(format_literal(parse_machine_literal(s), Notation::Machine) == s);
  }
  CHECK(parse_machine_term("xi7") == Term::witness(7));
  CHECK(parse_machine_term("xiv") == Term::constant("xiv"));
  CHECK(format_atom(parse_machine_atom("come(mary,party)"), Notation::Machine) == "come(mary,party)");
}

TEST_CASE("malformed machine notation") {
  for (const char* s : {"", "bird^u(", "bird^u(T", "bird^u(T))", "bird^x(T)", "bird(T)", "~~bird^u(T)",
                        "defref^d(T)", "defref(a,b)", "bird^u(,)", "bird^u(T) x"}) {
    CAPTURE(std::string(s));
    CHECK_THROWS_AS(parse_machine_literal(s), Error);
  }
  CHECK_THROWS_AS(parse_machine_term(""), Error);
  CHECK_THROWS_AS(parse_machine_atom("p("), Error);
}

TEST_CASE("schema json round-trips") {
  const ModelSchema m = schema({"king_of_france^u(xi0)", "~E!^u(xi0)", "E!^d(xi0)", "~q^d(come(a,b))"});
  const Json j = to_json(m);
  CHECK(j["ru_bar"] == Json::array({"E!(xi0)"}));
  CHECK(schema_from_json(nlohmann::json::parse(j.dump())) == m);
  CHECK_THROWS(schema_from_json(nlohmann::json::parse(R"({"ru": 3})")));
}

TEST_CASE("every fixture report round-trips through json") {
  for (const auto& f : fixtures()) {
    CAPTURE(f.name);
    const auto r = analyze(theory(f.theory_source));
    const std::string text = dump(to_json(r));
    CHECK(report_from_json(nlohmann::json::parse(text)) == r);
    CHECK(dump(to_json(r)) == text);
  }
}

TEST_CASE("analysis json marks minimal and optimistic schemata") {
  const Analysis a = solve(theory(fixture("tweety").theory_source));
  const Json all = to_json(a, false);
  REQUIRE(all["schemata"].size() == 3);
  CHECK(all["schemata"][0]["name"] == "m1");
  CHECK(all["schemata"][0]["optimistic"] == true);
  CHECK(all["schemata"][1]["minimal"] == false);
  CHECK(all["schemata"][1]["cancelled"] == Json::array({"flies^d(T)"}));
  CHECK(to_json(a, true)["schemata"].size() == 1);
}

TEST_CASE("malformed report json") {
  CHECK_THROWS(report_from_json(nlohmann::json::parse("[]")));
  CHECK_THROWS(report_from_json(nlohmann::json::parse(
      R"j({"unsatisfiable": false, "optimistic_models": [], "presuppositions": [{"literal": "E!^d(xi0)", "status": "maybe", "sources": []}], "disputed": []})j")));
}
