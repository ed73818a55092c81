// Semantic tableaux for stratified first-order logic.
//
// The expansion rules are the classical alpha/beta/gamma/delta rules over
// negation-normal formulas with strength-annotated literals treated as opaque.
// Stratification enters only through closure: a branch closes on p^u/~p^u or
// on p^d/~p^d for the same ground atom, never on a cross-strength pair, which
// is how a defeasible inference ends up cancelled rather than contradicted.
//
// Two refinements keep schemata down to the literals the theory forces:
//
//  * Metapredicate literals (defref) are syntactic facts. A disjunct ~defref(t)
//    is held until the branch is saturated and then counts as true unless
//    defref(t) was asserted.
//  * A universal instance that is a flat disjunction of two or more literals
//    over atoms the branch has never mentioned is held back (a single
//    remaining literal is forced and added at once); it is re-activated as soon as
//    one of its atoms shows up. Whatever stays held back at saturation is
//    satisfied by fresh literals recorded in Branch::completion.

#ifndef STRATA_TABLEAUX_HPP
#define STRATA_TABLEAUX_HPP

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "strata/logic.hpp"

namespace strata {

struct ExpansionBudget {
  std::size_t max_universe = 16;
  std::size_t max_steps = 100'000;
};

struct ExpansionStats {
  std::size_t steps = 0;
  std::size_t open_branches = 0;
  std::size_t closed_branches = 0;
  std::size_t universe_size = 0;  // largest universe seen
};

class ResourceExhausted : public Error {
 public:
  ResourceExhausted(const std::string& what, ExpansionStats stats) : Error(what), stats_(stats) {}
  const ExpansionStats& stats() const { return stats_; }

 private:
  ExpansionStats stats_;
};

// Hands out witness indices xi0, xi1, ... in encounter order for one run.
class SkolemCounter {
 public:
  Term fresh() { return Term::witness(next_++); }
  std::size_t issued() const { return next_; }

 private:
  std::size_t next_ = 0;
};

// A formula waiting on a branch, with the bookkeeping needed for provenance.
struct PendingFormula {
  Formula formula;
  int axiom = -1;             // index of the originating axiom
  bool negated_antecedent = false;  // stems from the negated antecedent of an implication
  bool from_gamma = false;    // produced by instantiating a universal
  bool forced = false;        // may not be held back again
};

struct Branch {
  std::set<Literal> literals;  // ground; ordinary and meta
  std::vector<Term> universe;  // insertion order
  std::vector<PendingFormula> universals;
  std::map<std::size_t, std::set<std::vector<Term>>> gamma_log;  // universal index -> tuples used

  // Ids of language-use axioms whose expansion introduced each defeasible literal.
  std::map<Literal, std::set<std::string>> language_use_sources;
  // Literals that were only ever introduced as a negated implication antecedent.
  std::set<Literal> negated_antecedents;

  std::vector<PendingFormula> held;  // held-back disjunctions
  std::vector<Literal> completion;   // fresh literals satisfying `held`

  bool has_term(const Term& t) const;
  // Adds t and all its subterms; returns the number of new elements.
  std::size_t add_term(const Term& t);
  // Atoms of asserted (positive) metapredicate literals.
  std::set<Atom> meta_facts() const;
};

// delta-rule: strips leading existentials, replacing each bound variable by a
// fresh witness that joins the branch universe.
Formula skolemize_existential(const Formula& f, Branch& branch, SkolemCounter& skolem);

// gamma-rule: instances of the universal at `index` for every universe tuple
// not yet in the gamma log. An empty universe first gets a default witness.
std::vector<Formula> instantiate_universal(std::size_t index, Branch& branch, SkolemCounter& skolem);

struct Expansion {
  std::vector<Branch> branches;  // open, saturated, deduplicated by literal set
  ExpansionStats stats;
};

// Throws ResourceExhausted when the budget is exceeded.
Expansion expand(const Theory& theory, const ExpansionBudget& budget = {});

}  // namespace strata

#endif  // STRATA_TABLEAUX_HPP
