#include "strata/schemata.hpp"

#include <algorithm>
#include <functional>
#include <iterator>

namespace strata {

namespace {

std::set<Atom>& layer(ModelSchema& m, Strength s, Polarity p) {
  if (s == Strength::U) return p == Polarity::Pos ? m.ru : m.ru_bar;
  return p == Polarity::Pos ? m.rd : m.rd_bar;
}

bool disjoint(const std::set<Atom>& a, const std::set<Atom>& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      return false;
    }
  }
  return true;
}

bool strict_superset(const std::vector<Literal>& a, const std::vector<Literal>& b) {
  return a.size() > b.size() && std::includes(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

std::vector<Literal> ModelSchema::literals() const {
  std::vector<Literal> out;
  out.reserve(size());
  auto add = [&](const std::set<Atom>& atoms, Strength s, Polarity p) {
    for (const auto& a : atoms) out.push_back(Literal::make(a.predicate, a.args, s, p));
  };
  add(ru, Strength::U, Polarity::Pos);
  add(ru_bar, Strength::U, Polarity::Neg);
  add(rd, Strength::D, Polarity::Pos);
  add(rd_bar, Strength::D, Polarity::Neg);
  std::sort(out.begin(), out.end());
  return out;
}

void ModelSchema::validate() const {
  if (!disjoint(ru, ru_bar)) throw Error("schema has an undefeasible atom with both polarities");
  if (!disjoint(rd, rd_bar)) throw Error("schema has a defeasible atom with both polarities");
}

ModelSchema schema_from_literals(std::span<const Literal> literals, std::set<Term> universe) {
  ModelSchema m;
  m.universe = std::move(universe);
  for (const auto& l : literals) {
    if (l.meta() || l.builtin()) continue;
    layer(m, l.strength, l.polarity).insert(l.atom);
    for (const auto& t : l.atom.args) {
      std::vector<Term> sub;
      t.collect_subterms(sub);
      m.universe.insert(sub.begin(), sub.end());
    }
  }
  m.validate();
  return m;
}

bool satisfies_literal(const ModelSchema& m, const Literal& lit, SatLevel level) {
  if (lit.meta()) throw Error("satisfies_literal: metapredicate literal has no truth value in a schema");
  if (lit.builtin()) throw Error("satisfies_literal: builtin literal");
  if (!lit.is_ground()) throw Error("satisfies_literal: literal is not ground");
  const Atom& a = lit.atom;
  const bool u = m.ru.contains(a), ubar = m.ru_bar.contains(a);
  const bool d = m.rd.contains(a), dbar = m.rd_bar.contains(a);
  const bool pos = lit.positive();
  if (level == SatLevel::DSat) return pos ? d : dbar;
  if (lit.strength == Strength::U) return pos ? u : ubar;
  return u || ubar || (pos ? d : dbar);
}

namespace {

class Evaluator {
 public:
  Evaluator(const ModelSchema& m, SatLevel level, const std::set<Atom>* meta)
      : m_(m), level_(level), meta_(meta), universe_(m.universe.begin(), m.universe.end()) {}

  bool eval(const Formula& f) const {
    using K = Formula::Kind;
    switch (f.kind()) {
      case K::Lit: return literal(f.literal());
      case K::Not: return eval(negate(f.body()));
      case K::And:
        return std::all_of(f.children().begin(), f.children().end(), [&](const Formula& c) { return eval(c); });
      case K::Or:
        return std::any_of(f.children().begin(), f.children().end(), [&](const Formula& c) { return eval(c); });
      case K::Implies: return eval(negate(f.antecedent())) || eval(f.consequent());
      case K::ForAll: return quantified(f, true);
      case K::Exists: return quantified(f, false);
    }
    return false;
  }

 private:
  bool literal(const Literal& l) const {
    if (l.builtin()) return l.builtin_holds();
    if (l.meta()) {
      if (meta_ == nullptr) return true;
      return meta_->contains(l.atom) == l.positive();
    }
    return satisfies_literal(m_, l, level_);
  }

  // Universal: every assignment satisfies the body; existential: some does.
  bool quantified(const Formula& f, bool universal) const {
    const auto& vars = f.vars();
    std::function<bool(std::size_t, const Formula&)> go = [&](std::size_t i, const Formula& body) {
      if (i == vars.size()) return eval(body);
      for (const auto& t : universe_) {
        if (go(i + 1, substitute(body, vars[i], t)) != universal) return !universal;
      }
      return universal;
    };
    return go(0, f.body());
  }

  const ModelSchema& m_;
  SatLevel level_;
  const std::set<Atom>* meta_;
  std::vector<Term> universe_;
};

}  // namespace

bool satisfies_formula(const ModelSchema& m, const Formula& f, SatLevel level, const std::set<Atom>* meta_facts) {
  return Evaluator(m, level, meta_facts).eval(f);
}

ModelSchema extract_schema(const Branch& b) {
  ModelSchema m;
  m.universe.insert(b.universe.begin(), b.universe.end());
  for (const auto& l : b.literals) {
    if (l.meta() || l.builtin()) continue;
    layer(m, l.strength, l.polarity).insert(l.atom);
  }
  m.validate();
  return m;
}

std::set<SignedAtom> cancelled_atoms(const ModelSchema& m) {
  std::set<SignedAtom> out;
  for (const auto& a : m.rd)
    if (m.ru_bar.contains(a)) out.insert({a, Polarity::Pos});
  for (const auto& a : m.rd_bar)
    if (m.ru.contains(a)) out.insert({a, Polarity::Neg});
  return out;
}

Comparison compare(const ModelSchema& m1, const ModelSchema& m2) {
  if (m1.ru == m2.ru && m1.ru_bar == m2.ru_bar && m1.rd == m2.rd && m1.rd_bar == m2.rd_bar)
    return Comparison::Equal;
  const auto c1 = cancelled_atoms(m1);
  const auto c2 = cancelled_atoms(m2);
  auto strict_subset = [](const std::set<SignedAtom>& a, const std::set<SignedAtom>& b) {
    return a.size() < b.size() && std::includes(b.begin(), b.end(), a.begin(), a.end());
  };
  if (strict_subset(c1, c2)) return Comparison::Greater;
  if (strict_subset(c2, c1)) return Comparison::Less;
  if (c1 != c2) return Comparison::Incomparable;
  const auto l1 = m1.literals();
  const auto l2 = m2.literals();
  if (strict_superset(l1, l2)) return Comparison::Greater;
  if (strict_superset(l2, l1)) return Comparison::Less;
  return Comparison::Incomparable;
}

std::vector<std::size_t> optimistic_indices(std::span<const ModelSchema> models, std::size_t* compare_calls) {
  if (models.empty()) throw Error("optimistic: no schemata (theory unsatisfiable)");
  std::size_t calls = 0;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < models.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < models.size() && !dominated; ++j) {
      if (i == j) continue;
      ++calls;
      dominated = compare(models[j], models[i]) == Comparison::Greater;
    }
    if (!dominated) out.push_back(i);
  }
  if (compare_calls != nullptr) *compare_calls = calls;
  return out;
}

std::vector<ModelSchema> optimistic(std::span<const ModelSchema> models, std::size_t* compare_calls) {
  std::vector<ModelSchema> out;
  for (auto i : optimistic_indices(models, compare_calls)) out.push_back(models[i]);
  return out;
}

std::vector<std::size_t> minimal_indices(std::span<const ModelSchema> models) {
  std::vector<std::vector<Literal>> lits;
  lits.reserve(models.size());
  for (const auto& m : models) lits.push_back(m.literals());
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < models.size(); ++i) {
    bool minimal = true;
    for (std::size_t j = 0; j < models.size() && minimal; ++j)
      minimal = i == j || !strict_superset(lits[i], lits[j]);
    if (minimal) out.push_back(i);
  }
  return out;
}

ModelSchema project_model(const ModelSchema& m) {
  ModelSchema out = m;
  auto settled = [&](const Atom& a) { return m.ru.contains(a) || m.ru_bar.contains(a); };
  std::erase_if(out.rd, settled);
  std::erase_if(out.rd_bar, settled);
  return out;
}

}  // namespace strata
