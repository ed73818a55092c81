#include "strata/presup.hpp"

#include <algorithm>
#include <map>

namespace strata {

Analysis solve(const Theory& t, const ExpansionBudget& budget) {
  Analysis a;
  auto expansion = expand(t, budget);
  a.branches = std::move(expansion.branches);
  a.stats = expansion.stats;
  for (const auto& b : a.branches) a.schemata.push_back(extract_schema(b));
  if (a.schemata.empty()) return a;

  // Branches are not subset-minimal, and "more literals" would otherwise
  // favour padded supersets; select among the minimal schemata only.
  a.minimal = minimal_indices(a.schemata);
  std::vector<ModelSchema> pool;
  for (auto i : a.minimal) pool.push_back(a.schemata[i]);
  for (auto j : optimistic_indices(pool)) a.optimistic.push_back(a.minimal[j]);
  return a;
}

std::string_view to_string(PresupStatus s) {
  switch (s) {
    case PresupStatus::Presupposed: return "Presupposed";
    case PresupStatus::Cancelled: return "Cancelled";
    case PresupStatus::Disputed: return "Disputed";
  }
  return "?";
}

std::optional<PresupStatus> PresuppositionReport::status_of(const Literal& l) const {
  for (const auto* list : {&presuppositions, &disputed})
    for (const auto& p : *list)
      if (p.literal == l) return p.status;
  return std::nullopt;
}

namespace {

enum class Fate { Survives, Cancelled, Reinforced, Absent };

Fate fate(const ModelSchema& m, const Literal& l) {
  const auto& same = l.positive() ? m.rd : m.rd_bar;
  if (!same.contains(l.atom)) return Fate::Absent;
  const auto& agree = l.positive() ? m.ru : m.ru_bar;
  const auto& oppose = l.positive() ? m.ru_bar : m.ru;
  if (oppose.contains(l.atom)) return Fate::Cancelled;
  if (agree.contains(l.atom)) return Fate::Reinforced;
  return Fate::Survives;
}

// A literal that only entered as the negation of an implication antecedent and
// whose atom plays no other part in the model carries no information.
ModelSchema trim_inert(ModelSchema m, const Branch& b) {
  auto mentions = [&](const Atom& a) {
    return m.ru.contains(a) + m.ru_bar.contains(a) + m.rd.contains(a) + m.rd_bar.contains(a);
  };
  for (const auto& l : b.negated_antecedents) {
    if (l.meta() || mentions(l.atom) != 1) continue;
    auto& layer = l.strength == Strength::U ? (l.positive() ? m.ru : m.ru_bar) : (l.positive() ? m.rd : m.rd_bar);
    layer.erase(l.atom);
  }
  return m;
}

}  // namespace

PresuppositionReport report_from(const Analysis& a) {
  PresuppositionReport r;
  if (a.unsatisfiable()) {
    r.unsatisfiable = true;
    return r;
  }

  for (auto i : a.optimistic) {
    ModelSchema m = trim_inert(project_model(a.schemata[i]), a.branches[i]);
    if (std::find(r.optimistic_schemata.begin(), r.optimistic_schemata.end(), m) == r.optimistic_schemata.end())
      r.optimistic_schemata.push_back(std::move(m));
  }

  std::map<Literal, std::set<std::string>> candidates;
  for (auto i : a.optimistic)
    for (const auto& [lit, ids] : a.branches[i].language_use_sources)
      if (lit.strength == Strength::D && !ids.empty() && a.branches[i].literals.contains(lit))
        candidates[lit].insert(ids.begin(), ids.end());

  std::vector<ProvenancedLiteral> cancelled;
  for (const auto& [lit, ids] : candidates) {
    std::set<Fate> fates;
    for (auto i : a.optimistic) fates.insert(fate(a.schemata[i], lit));
    ProvenancedLiteral p{lit, {ids.begin(), ids.end()}, PresupStatus::Disputed};
    if (fates == std::set<Fate>{Fate::Reinforced}) continue;  // asserted outright, nothing presupposed
    if (fates == std::set<Fate>{Fate::Survives}) {
      p.status = PresupStatus::Presupposed;
      r.presuppositions.push_back(std::move(p));
    } else if (fates == std::set<Fate>{Fate::Cancelled}) {
      p.status = PresupStatus::Cancelled;
      cancelled.push_back(std::move(p));
    } else {
      r.disputed.push_back(std::move(p));
    }
  }
  r.presuppositions.insert(r.presuppositions.end(), cancelled.begin(), cancelled.end());
  return r;
}

PresuppositionReport analyze(const Theory& t, const ExpansionBudget& budget) { return report_from(solve(t, budget)); }

DiscourseSession open_session(Theory base, const ExpansionBudget& budget) {
  auto report = analyze(base, budget);
  Theory theory = base;
  return DiscourseSession(std::make_shared<const DiscourseSession::State>(
      DiscourseSession::State{std::move(base), {}, std::move(theory), std::move(report), budget}));
}

DiscourseSession add_utterance(const DiscourseSession& s, Formula f) {
  std::size_t n = s.utterances().size() + 1;
  while (s.theory().contains("utt" + std::to_string(n))) ++n;
  Axiom axiom{"utt" + std::to_string(n), std::move(f), AxiomTag::Utterance};

  Theory theory = s.theory();
  theory.add(axiom);
  auto report = analyze(theory, s.budget());
  auto log = s.utterances();
  log.push_back(std::move(axiom));
  return DiscourseSession(std::make_shared<const DiscourseSession::State>(
      DiscourseSession::State{s.base(), std::move(log), std::move(theory), std::move(report), s.budget()}));
}

std::vector<StatusChange> status_changes(const PresuppositionReport& before, const PresuppositionReport& after) {
  std::set<Literal> all;
  for (const auto* r : {&before, &after})
    for (const auto* list : {&r->presuppositions, &r->disputed})
      for (const auto& p : *list) all.insert(p.literal);
  std::vector<StatusChange> out;
  for (const auto& l : all) {
    auto b = before.status_of(l);
    auto a = after.status_of(l);
    if (b != a) out.push_back({l, b, a});
  }
  return out;
}

}  // namespace strata
