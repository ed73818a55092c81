// Model schemata, the two satisfaction relations, and the ordering that picks
// the most optimistic schemata of a theory.

#ifndef STRATA_SCHEMATA_HPP
#define STRATA_SCHEMATA_HPP

#include <cstddef>
#include <set>
#include <span>
#include <vector>

#include "strata/logic.hpp"
#include "strata/tableaux.hpp"

namespace strata {

// Four atom layers over a universe. Ru/RuBar and Rd/RdBar are disjoint;
// overlap across strata (RuBar with Rd, say) is the cancellation configuration.
struct ModelSchema {
  std::set<Term> universe;
  std::set<Atom> ru, ru_bar, rd, rd_bar;

  // Every layer entry as a literal, ordered.
  std::vector<Literal> literals() const;
  std::size_t size() const { return ru.size() + ru_bar.size() + rd.size() + rd_bar.size(); }
  bool empty() const { return size() == 0; }

  // Throws Error if a stratum holds an atom with both polarities.
  void validate() const;

  friend bool operator==(const ModelSchema&, const ModelSchema&) = default;
};

ModelSchema schema_from_literals(std::span<const Literal> literals, std::set<Term> universe = {});

enum class SatLevel { USat, DSat };

// Throws Error for a non-ground or meta literal.
bool satisfies_literal(const ModelSchema& m, const Literal& lit, SatLevel level);

// Quantifiers range over m.universe. Not over a compound formula is strong
// negation. Meta literals are true unless meta_facts is given, in which case
// defref(t) holds exactly for the atoms listed. Builtins are syntactic.
bool satisfies_formula(const ModelSchema& m, const Formula& f, SatLevel level,
                       const std::set<Atom>* meta_facts = nullptr);

// Routes the ordinary literals of b into layers; meta literals are dropped.
// Completion literals are not included.
ModelSchema extract_schema(const Branch& b);

struct SignedAtom {
  Atom atom;
  Polarity polarity;

  friend auto operator<=>(const SignedAtom& a, const SignedAtom& b) {
    if (int c = compare(a.atom, b.atom); c != 0) return c <=> 0;
    return a.polarity <=> b.polarity;
  }
  friend bool operator==(const SignedAtom& a, const SignedAtom& b) = default;
};

// (a, Pos) for a in Rd ∩ RuBar, (a, Neg) for a in RdBar ∩ Ru.
std::set<SignedAtom> cancelled_atoms(const ModelSchema& m);

enum class Comparison { Less, Greater, Equal, Incomparable };

// Greater means m1 is more optimistic: it cancels strictly less, or cancels the
// same and carries strictly more literals.
Comparison compare(const ModelSchema& m1, const ModelSchema& m2);

// Indices of the maximal elements, in input order. Throws Error on empty input.
// compare_calls, if given, receives the number of compare invocations.
std::vector<std::size_t> optimistic_indices(std::span<const ModelSchema> models,
                                            std::size_t* compare_calls = nullptr);
std::vector<ModelSchema> optimistic(std::span<const ModelSchema> models, std::size_t* compare_calls = nullptr);

// Indices of schemata whose literal set strictly contains no other schema's.
std::vector<std::size_t> minimal_indices(std::span<const ModelSchema> models);

// Drops cancelled defeasible atoms, and defeasible atoms repeated by the
// undefeasible atom of the same polarity.
ModelSchema project_model(const ModelSchema& m);

}  // namespace strata

#endif  // STRATA_SCHEMATA_HPP
