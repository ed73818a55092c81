// Shared helpers for the unit and acceptance tests.

#ifndef STRATA_TESTS_SUPPORT_HPP
#define STRATA_TESTS_SUPPORT_HPP

#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "strata/format.hpp"
#include "strata/logic.hpp"
#include "strata/parser.hpp"
#include "strata/schemata.hpp"

namespace strata::test {

// Throws with the first parse error.
inline Theory theory(std::string_view src) { return parse_theory(src).value(); }
inline Formula formula(std::string_view src, const Theory& ctx = {}) { return parse_formula(src, ctx).value(); }
inline Literal lit(std::string_view machine) { return parse_machine_literal(machine); }

// Schema from machine-notation literals; the universe is the terms they use.
inline ModelSchema schema(std::initializer_list<std::string_view> lits) {
  std::vector<Literal> v;
  for (auto s : lits) v.push_back(parse_machine_literal(s));
  return schema_from_literals(v);
}

inline std::vector<std::string> machine(const std::vector<Literal>& lits) {
  std::vector<std::string> out;
  for (const auto& l : lits) out.push_back(format_literal(l, Notation::Machine));
  return out;
}

}  // namespace strata::test

#endif  // STRATA_TESTS_SUPPORT_HPP
