// Worked-example theories shipped with the engine, plus the ontology axioms
// every existence-related fixture relies on.

#ifndef STRATA_CORPUS_HPP
#define STRATA_CORPUS_HPP

#include <string>
#include <string_view>
#include <vector>

#include "strata/logic.hpp"

namespace strata {

namespace detail {
struct RawFixture {
  const char* name;
  const char* source;
  const char* golden;
};
const std::vector<RawFixture>& raw_fixtures();
}  // namespace detail

struct Fixture {
  std::string name;
  std::string theory_source;  // .slt text
  std::string expected;       // golden machine-format report; empty if none
};

// defref(x) -> E!^d(x) (language use) and the three exclusions
// UE!/F!/EOW! -> not E!^u (core).
std::vector<Axiom> ontology_axioms();
// The same axioms as .slt text.
std::string_view ontology_source();

// Sorted by name.
const std::vector<Fixture>& fixtures();
// Throws Error for an unknown name.
const Fixture& fixture(std::string_view name);

}  // namespace strata

#endif  // STRATA_CORPUS_HPP
