#include "strata/tableaux.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <optional>
#include <utility>

namespace strata {

bool Branch::has_term(const Term& t) const {
  return std::find(universe.begin(), universe.end(), t) != universe.end();
}

std::size_t Branch::add_term(const Term& t) {
  std::vector<Term> subterms;
  t.collect_subterms(subterms);
  std::size_t added = 0;
  for (auto& s : subterms) {
    if (!s.is_ground() || has_term(s)) continue;
    universe.push_back(std::move(s));
    ++added;
  }
  return added;
}

std::set<Atom> Branch::meta_facts() const {
  std::set<Atom> out;
  for (const auto& l : literals)
    if (l.meta() && l.positive()) out.insert(l.atom);
  return out;
}

Formula skolemize_existential(const Formula& f, Branch& branch, SkolemCounter& skolem) {
  Formula cur = f;
  while (cur.kind() == Formula::Kind::Exists) {
    Formula body = cur.body();
    for (const auto& v : cur.vars()) {
      Term w = skolem.fresh();
      branch.universe.push_back(w);
      body = substitute(body, v, w);
    }
    cur = std::move(body);
  }
  return cur;
}

std::vector<Formula> instantiate_universal(std::size_t index, Branch& branch, SkolemCounter& skolem) {
  const Formula& u = branch.universals.at(index).formula;
  if (u.kind() != Formula::Kind::ForAll) throw Error("instantiate_universal: not a universal formula");
  if (branch.universe.empty()) branch.universe.push_back(skolem.fresh());

  auto& log = branch.gamma_log[index];
  const auto& vars = u.vars();
  const std::size_t n = branch.universe.size();
  std::vector<Formula> out;
  std::vector<std::size_t> digits(vars.size(), 0);
  while (true) {
    std::vector<Term> tuple;
    tuple.reserve(vars.size());
    for (auto d : digits) tuple.push_back(branch.universe[d]);
    if (!log.contains(tuple)) {
      Formula inst = u.body();
      for (std::size_t i = 0; i < vars.size(); ++i) inst = substitute(inst, vars[i], tuple[i]);
      out.push_back(std::move(inst));
      log.insert(std::move(tuple));
    }
    std::size_t k = vars.size();
    while (k > 0) {
      if (++digits[k - 1] < n) break;
      digits[k - 1] = 0;
      --k;
    }
    if (k == 0) break;
  }
  return out;
}

namespace {

struct Disjunct {
  Formula formula;
  bool negated_antecedent;
};

void flatten(const Formula& f, bool negated_antecedent, std::vector<Disjunct>& out) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::Or:
      for (const auto& c : f.children()) flatten(c, negated_antecedent, out);
      return;
    case K::Implies:
      flatten(negate(f.antecedent()), true, out);
      flatten(f.consequent(), negated_antecedent, out);
      return;
    case K::Not: flatten(negate(f.body()), negated_antecedent, out); return;
    default: out.push_back({f, negated_antecedent});
  }
}

// Per-branch working state. Copied wholesale when the beta rule splits.
struct Work {
  Branch branch;
  bool closed = false;
  std::deque<PendingFormula> alpha, delta, beta;
  std::set<Atom> mentioned;  // atoms of ordinary literals on the branch
  std::set<Atom> meta_true, meta_false;
  std::size_t version = 0;  // bumps whenever the literal set changes
  std::size_t held_checked = std::numeric_limits<std::size_t>::max();
  std::size_t gamma_universe = 0, gamma_universals = 0;
};

class Expander {
 public:
  Expander(const Theory& theory, const ExpansionBudget& budget) : theory_(theory), budget_(budget) {}

  Expansion run() {
    Work root;
    const auto axioms = theory_.axioms();
    for (std::size_t i = 0; i < axioms.size(); ++i)
      push(root, PendingFormula{axioms[i].formula, static_cast<int>(i)});
    stack_.push_back(std::move(root));

    std::vector<Branch> open;
    while (!stack_.empty()) {
      Work w = std::move(stack_.back());
      stack_.pop_back();
      if (saturate(w)) {
        open.push_back(std::move(w.branch));
      } else {
        ++stats_.closed_branches;
      }
    }
    stats_.open_branches = open.size();
    return Expansion{deduplicate(std::move(open)), stats_};
  }

 private:
  void step() {
    if (++stats_.steps > budget_.max_steps)
      throw ResourceExhausted("expansion exceeded " + std::to_string(budget_.max_steps) + " steps", stats_);
  }

  void check_universe(const Work& w) {
    stats_.universe_size = std::max(stats_.universe_size, w.branch.universe.size());
    if (w.branch.universe.size() > budget_.max_universe)
      throw ResourceExhausted("universe exceeded " + std::to_string(budget_.max_universe) + " elements", stats_);
  }

  static void push(Work& w, PendingFormula p) {
    using K = Formula::Kind;
    switch (p.formula.kind()) {
      case K::Exists: w.delta.push_back(std::move(p)); break;
      case K::Or:
      case K::Implies: w.beta.push_back(std::move(p)); break;
      default: w.alpha.push_back(std::move(p)); break;
    }
  }

  PendingFormula child(const PendingFormula& parent, Formula f, bool negated_antecedent) const {
    return PendingFormula{std::move(f), parent.axiom, negated_antecedent, false, false};
  }

  const Axiom& axiom(int index) const { return theory_.axioms()[static_cast<std::size_t>(index)]; }

  // Returns true when the branch saturates open.
  bool saturate(Work& w) {
    while (!w.closed) {
      if (!w.alpha.empty()) {
        step();
        auto p = std::move(w.alpha.front());
        w.alpha.pop_front();
        apply_alpha(w, p);
      } else if (!w.delta.empty()) {
        step();
        auto p = std::move(w.delta.front());
        w.delta.pop_front();
        Formula body = skolemize_existential(p.formula, w.branch, skolem_);
        ++w.version;
        check_universe(w);
        push(w, child(p, std::move(body), p.negated_antecedent));
      } else if (w.branch.universe.size() != w.gamma_universe ||
                 w.branch.universals.size() != w.gamma_universals) {
        apply_gamma(w);
      } else if (!w.beta.empty()) {
        step();
        auto p = std::move(w.beta.front());
        w.beta.pop_front();
        apply_beta(w, std::move(p));
      } else if (!w.branch.held.empty() && w.held_checked != w.version) {
        w.held_checked = w.version;
        for (auto& h : w.branch.held) w.beta.push_back(std::move(h));
        w.branch.held.clear();
      } else if (complete(w)) {
        return true;
      }
    }
    return false;
  }

  void apply_alpha(Work& w, const PendingFormula& p) {
    using K = Formula::Kind;
    const Formula& f = p.formula;
    switch (f.kind()) {
      case K::Lit: add_literal(w, p); break;
      case K::Not: push(w, child(p, negate(f.body()), p.negated_antecedent)); break;
      case K::And:
        for (const auto& c : f.children()) push(w, child(p, c, p.negated_antecedent));
        break;
      case K::ForAll: w.branch.universals.push_back(p); break;
      default: push(w, p); break;
    }
  }

  void add_literal(Work& w, const PendingFormula& p) {
    const Literal& l = p.formula.literal();
    Branch& b = w.branch;
    if (l.builtin()) {
      if (!l.builtin_holds()) w.closed = true;
      return;
    }
    for (const auto& a : l.atom.args) b.add_term(a);
    check_universe(w);
    if (l.meta()) {
      auto& same = l.positive() ? w.meta_true : w.meta_false;
      const auto& other = l.positive() ? w.meta_false : w.meta_true;
      if (other.contains(l.atom)) {
        w.closed = true;
        return;
      }
      if (same.insert(l.atom).second) ++w.version;
      b.literals.insert(l);
      return;
    }
    if (b.literals.contains(l.flipped())) {
      w.closed = true;
      return;
    }
    const bool inserted = b.literals.insert(l).second;
    if (inserted) {
      ++w.version;
      w.mentioned.insert(l.atom);
    }
    const Axiom& src = axiom(p.axiom);
    if (src.tag == AxiomTag::LanguageUse && l.strength == Strength::D && !p.negated_antecedent)
      b.language_use_sources[l].insert(src.id);
    if (!p.negated_antecedent) {
      b.negated_antecedents.erase(l);
    } else if (inserted) {
      b.negated_antecedents.insert(l);
    }
  }

  void apply_gamma(Work& w) {
    Branch& b = w.branch;
    for (std::size_t i = 0; i < b.universals.size(); ++i) {
      const auto proto = b.universals[i];
      for (auto& inst : instantiate_universal(i, b, skolem_)) {
        step();
        push(w, PendingFormula{std::move(inst), proto.axiom, proto.negated_antecedent, true, false});
      }
      check_universe(w);
    }
    w.gamma_universe = b.universe.size();
    w.gamma_universals = b.universals.size();
  }

  void apply_beta(Work& w, PendingFormula p) {
    const Branch& b = w.branch;
    std::vector<Disjunct> all;
    flatten(p.formula, p.negated_antecedent, all);

    std::vector<Disjunct> live;
    bool open_meta = false;
    bool all_fresh = p.from_gamma && !p.forced;
    for (auto& d : all) {
      if (d.formula.kind() != Formula::Kind::Lit) {
        all_fresh = false;
        live.push_back(std::move(d));
        continue;
      }
      const Literal& l = d.formula.literal();
      if (l.builtin()) {
        if (l.builtin_holds()) return;  // satisfied
        continue;
      }
      if (l.meta()) {
        const bool asserted = w.meta_true.contains(l.atom);
        const bool denied = w.meta_false.contains(l.atom);
        if (l.positive() ? asserted : denied) return;
        if (l.positive() ? denied : asserted) continue;
        if (!l.positive()) open_meta = true;
        live.push_back(std::move(d));
        continue;
      }
      if (w.mentioned.contains(l.atom)) all_fresh = false;
      if (b.literals.contains(l.flipped())) continue;
      live.push_back(std::move(d));
    }

    // A single remaining disjunct is forced; only genuine choices are deferred.
    if (open_meta || (all_fresh && live.size() > 1)) {
      w.branch.held.push_back(std::move(p));
      return;
    }
    if (live.empty()) {
      w.closed = true;
      return;
    }
    for (std::size_t i = live.size(); i-- > 1;) {
      Work sibling = w;
      push(sibling, child(p, live[i].formula, live[i].negated_antecedent));
      stack_.push_back(std::move(sibling));
    }
    push(w, child(p, live[0].formula, live[0].negated_antecedent));
  }

  // Picks fresh literals for the held disjunctions. If two of them cannot be
  // satisfied together, the offender is expanded for real and saturation goes on.
  bool complete(Work& w) {
    Branch& b = w.branch;
    std::set<Literal> chosen;
    for (std::size_t i = 0; i < b.held.size(); ++i) {
      std::vector<Disjunct> ds;
      flatten(b.held[i].formula, false, ds);
      bool satisfied = false;
      std::optional<Literal> pick;
      for (const auto& d : ds) {
        if (d.formula.kind() != Formula::Kind::Lit) continue;
        const Literal& l = d.formula.literal();
        if ((l.meta() && !l.positive() && !w.meta_true.contains(l.atom)) || (l.builtin() && l.builtin_holds()) ||
            chosen.contains(l)) {
          satisfied = true;
          break;
        }
        if (!pick && !l.meta() && !l.builtin() && !chosen.contains(l.flipped()) &&
            !b.literals.contains(l.flipped()))
          pick = l;
      }
      if (satisfied) continue;
      if (!pick) {
        PendingFormula h = std::move(b.held[i]);
        b.held.erase(b.held.begin() + static_cast<std::ptrdiff_t>(i));
        h.forced = true;
        w.beta.push_back(std::move(h));
        return false;
      }
      chosen.insert(*pick);
    }
    b.completion.assign(chosen.begin(), chosen.end());
    return true;
  }

  static std::vector<Branch> deduplicate(std::vector<Branch> open) {
    std::vector<Branch> out;
    for (auto& b : open) {
      auto it = std::find_if(out.begin(), out.end(), [&](const Branch& o) { return o.literals == b.literals; });
      if (it == out.end()) {
        out.push_back(std::move(b));
        continue;
      }
      for (auto& [lit, ids] : b.language_use_sources) it->language_use_sources[lit].insert(ids.begin(), ids.end());
      std::set<Literal> both;
      std::set_intersection(it->negated_antecedents.begin(), it->negated_antecedents.end(),
                            b.negated_antecedents.begin(), b.negated_antecedents.end(),
                            std::inserter(both, both.begin()));
      it->negated_antecedents = std::move(both);
    }
    return out;
  }

  const Theory& theory_;
  ExpansionBudget budget_;
  SkolemCounter skolem_;
  ExpansionStats stats_;
  std::vector<Work> stack_;
};

}  // namespace

Expansion expand(const Theory& theory, const ExpansionBudget& budget) {
  return Expander(theory, budget).run();
}

}  // namespace strata
