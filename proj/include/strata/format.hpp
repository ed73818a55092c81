// Rendering of terms, literals and schemata.
//
// Table notation follows the printed union form, e.g.
//   {bird^u(T), ¬penguin^u(T)} ∪ {flies^d(T)}
// with witnesses as ξ₀, ξ₁ and an empty layer as ∅^u / ∅^d.
//
// Machine notation is ASCII: witnesses are xi0, xi1, negation is a leading
// '~', and function terms are functor(arg,...). It is what the JSON output
// uses and what parse_machine_* read back.

#ifndef STRATA_FORMAT_HPP
#define STRATA_FORMAT_HPP

#include <string>
#include <string_view>

#include "strata/logic.hpp"
#include "strata/schemata.hpp"

namespace strata {

enum class Notation { Table, Machine };

std::string format_term(const Term& t, Notation n);
std::string format_atom(const Atom& a, Notation n);
std::string format_literal(const Literal& l, Notation n);
std::string format_schema(const ModelSchema& m, Notation n = Notation::Table);

// Inverse of the machine notation. Throw Error on malformed input.
Term parse_machine_term(std::string_view s);
Atom parse_machine_atom(std::string_view s);
Literal parse_machine_literal(std::string_view s);

}  // namespace strata

#endif  // STRATA_FORMAT_HPP
