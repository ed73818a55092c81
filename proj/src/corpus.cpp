#include "strata/corpus.hpp"

#include <algorithm>

#include "strata/parser.hpp"

namespace strata {

namespace {

constexpr std::string_view kOntology = R"slt(; Definite reference weakly implies physical existence.
(axiom l1 :language-use (forall (x) (-> (defref x) (E!^d x))))
; The other modes of existence exclude physical existence.
(axiom o1 :core (forall (x) (-> (UE!^u x) (not (E!^u x)))))
(axiom o2 :core (forall (x) (-> (F!^u x) (not (E!^u x)))))
(axiom o3 :core (forall (x) (-> (EOW!^u x) (not (E!^u x)))))
)slt";

}  // namespace

std::string_view ontology_source() { return kOntology; }

std::vector<Axiom> ontology_axioms() {
  const Theory t = parse_theory(kOntology).value();
  return {t.axioms().begin(), t.axioms().end()};
}

const std::vector<Fixture>& fixtures() {
  static const std::vector<Fixture> all = [] {
    std::vector<Fixture> out;
    for (const auto& raw : detail::raw_fixtures()) out.push_back({raw.name, raw.source, raw.golden});
    std::sort(out.begin(), out.end(), [](const Fixture& a, const Fixture& b) { return a.name < b.name; });
    return out;
  }();
  return all;
}

const Fixture& fixture(std::string_view name) {
  for (const auto& f : fixtures())
    if (f.name == name) return f;
  throw Error("no fixture named '" + std::string(name) + "'");
}

}  // namespace strata
