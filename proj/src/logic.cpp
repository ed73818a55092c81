#include "strata/logic.hpp"

#include <algorithm>
#include <utility>

namespace strata {

Term Term::constant(std::string name) {
  Term t;
  t.kind = Kind::Constant;
  t.name = std::move(name);
  return t;
}

Term Term::variable(std::string name) {
  Term t;
  t.kind = Kind::Variable;
  t.name = std::move(name);
  return t;
}

Term Term::witness(std::size_t index) {
  Term t;
  t.kind = Kind::Witness;
  t.index = index;
  return t;
}

Term Term::apply(std::string functor, std::vector<Term> args) {
  Term t;
  t.kind = Kind::Apply;
  t.name = std::move(functor);
  t.args = std::move(args);
  return t;
}

bool Term::is_ground() const {
  if (kind == Kind::Variable) return false;
  return std::all_of(args.begin(), args.end(), [](const Term& a) { return a.is_ground(); });
}

void Term::collect_subterms(std::vector<Term>& out) const {
  out.push_back(*this);
  for (const auto& a : args) a.collect_subterms(out);
}

namespace {

template <class T>
int cmp3(const T& a, const T& b) {
  return a < b ? -1 : (b < a ? 1 : 0);
}

template <class T>
int compare_seq(const std::vector<T>& a, const std::vector<T>& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i)
    if (int c = compare(a[i], b[i]); c != 0) return c;
  return cmp3(a.size(), b.size());
}

}  // namespace

// Constants sort before witnesses, witnesses before applications, so
// named individuals lead every rendered listing.
int compare(const Term& a, const Term& b) {
  if (a.kind != b.kind) return cmp3(static_cast<int>(a.kind), static_cast<int>(b.kind));
  if (int c = a.name.compare(b.name); c != 0) return c < 0 ? -1 : 1;
  if (int c = cmp3(a.index, b.index); c != 0) return c;
  return compare_seq(a.args, b.args);
}

bool is_metapredicate(std::string_view name) { return name == kDefRef; }
bool is_builtin(std::string_view name) { return name == kNeq; }

bool Atom::is_ground() const {
  return std::all_of(args.begin(), args.end(), [](const Term& a) { return a.is_ground(); });
}

int compare(const Atom& a, const Atom& b) {
  if (int c = a.predicate.compare(b.predicate); c != 0) return c < 0 ? -1 : 1;
  return compare_seq(a.args, b.args);
}

Literal Literal::make(std::string predicate, std::vector<Term> args, Strength s, Polarity p) {
  Literal l;
  l.kind = is_metapredicate(predicate) ? LiteralKind::Meta
           : is_builtin(predicate)     ? LiteralKind::Builtin
                                       : LiteralKind::Ordinary;
  if (l.kind != LiteralKind::Ordinary) s = Strength::U;
  l.atom = Atom{std::move(predicate), std::move(args)};
  l.strength = s;
  l.polarity = p;
  return l;
}

Literal Literal::defref(Term t) {
  return make(std::string(kDefRef), {std::move(t)}, Strength::U);
}

Literal Literal::neq(Term a, Term b) {
  return make(std::string(kNeq), {std::move(a), std::move(b)}, Strength::U);
}

Literal Literal::flipped() const {
  Literal l = *this;
  l.polarity = positive() ? Polarity::Neg : Polarity::Pos;
  return l;
}

bool Literal::builtin_holds() const {
  const bool distinct = atom.args.size() == 2 && !(atom.args[0] == atom.args[1]);
  return positive() ? distinct : !distinct;
}

int compare(const Literal& a, const Literal& b) {
  if (int c = compare(a.atom, b.atom); c != 0) return c;
  // U before D, Pos before Neg.
  if (a.strength != b.strength) return a.strength == Strength::U ? -1 : 1;
  if (a.polarity != b.polarity) return a.polarity == Polarity::Pos ? -1 : 1;
  return cmp3(static_cast<int>(a.kind), static_cast<int>(b.kind));
}

Formula Formula::make(Node n) { return Formula(std::make_shared<const Node>(std::move(n))); }

Formula Formula::lit(Literal l) { return make(Node{Kind::Lit, {std::move(l)}, {}, {}}); }

Formula Formula::negation(Formula f) {
  if (f.kind() == Kind::Lit) return lit(f.literal().flipped());
  return make(Node{Kind::Not, {}, {std::move(f)}, {}});
}

Formula Formula::conj(std::vector<Formula> fs) { return make(Node{Kind::And, {}, std::move(fs), {}}); }

Formula Formula::disj(std::vector<Formula> fs) { return make(Node{Kind::Or, {}, std::move(fs), {}}); }

Formula Formula::implies(Formula antecedent, Formula consequent) {
  return make(Node{Kind::Implies, {}, {std::move(antecedent), std::move(consequent)}, {}});
}

Formula Formula::forall(std::vector<std::string> vars, Formula body) {
  return make(Node{Kind::ForAll, {}, {std::move(body)}, std::move(vars)});
}

Formula Formula::exists(std::vector<std::string> vars, Formula body) {
  return make(Node{Kind::Exists, {}, {std::move(body)}, std::move(vars)});
}

const Literal& Formula::literal() const {
  if (kind() != Kind::Lit) throw Error("formula is not a literal");
  return node_->lit.front();
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  if (a.kind() == Formula::Kind::Lit) return a.literal() == b.literal();
  return a.vars() == b.vars() && a.children() == b.children();
}

namespace {

std::vector<Formula> map_children(const Formula& f, Formula (*fn)(const Formula&)) {
  std::vector<Formula> out;
  out.reserve(f.children().size());
  for (const auto& c : f.children()) out.push_back(fn(c));
  return out;
}

}  // namespace

Formula negate(const Formula& f) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::Lit: return Formula::lit(f.literal().flipped());
    case K::Not: return nnf(f.body());
    case K::And: return Formula::disj(map_children(f, negate));
    case K::Or: return Formula::conj(map_children(f, negate));
    case K::Implies: return Formula::conj({nnf(f.antecedent()), negate(f.consequent())});
    case K::ForAll: return Formula::exists(f.vars(), negate(f.body()));
    case K::Exists: return Formula::forall(f.vars(), negate(f.body()));
  }
  return f;
}

Formula nnf(const Formula& f) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::Lit: return f;
    case K::Not: return negate(f.body());
    case K::And: return Formula::conj(map_children(f, nnf));
    case K::Or: return Formula::disj(map_children(f, nnf));
    case K::Implies: return Formula::disj({negate(f.antecedent()), nnf(f.consequent())});
    case K::ForAll: return Formula::forall(f.vars(), nnf(f.body()));
    case K::Exists: return Formula::exists(f.vars(), nnf(f.body()));
  }
  return f;
}

Term substitute(const Term& term, std::string_view var, const Term& t) {
  if (term.kind == Term::Kind::Variable) return term.name == var ? t : term;
  if (term.kind != Term::Kind::Apply) return term;
  std::vector<Term> args;
  args.reserve(term.args.size());
  for (const auto& a : term.args) args.push_back(substitute(a, var, t));
  return Term::apply(term.name, std::move(args));
}

Literal substitute(const Literal& l, std::string_view var, const Term& t) {
  Literal out = l;
  for (auto& a : out.atom.args) a = substitute(a, var, t);
  return out;
}

namespace {

Formula substitute_unchecked(const Formula& f, std::string_view var, const Term& t) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::Lit: return Formula::lit(substitute(f.literal(), var, t));
    case K::ForAll:
    case K::Exists: {
      const auto& vs = f.vars();
      if (std::find(vs.begin(), vs.end(), var) != vs.end()) return f;  // shadowed
      auto body = substitute_unchecked(f.body(), var, t);
      return f.kind() == K::ForAll ? Formula::forall(vs, std::move(body))
                                   : Formula::exists(vs, std::move(body));
    }
    case K::Not: return Formula::negation(substitute_unchecked(f.body(), var, t));
    case K::Implies:
      return Formula::implies(substitute_unchecked(f.antecedent(), var, t),
                              substitute_unchecked(f.consequent(), var, t));
    case K::And:
    case K::Or: {
      std::vector<Formula> cs;
      cs.reserve(f.children().size());
      for (const auto& c : f.children()) cs.push_back(substitute_unchecked(c, var, t));
      return f.kind() == K::And ? Formula::conj(std::move(cs)) : Formula::disj(std::move(cs));
    }
  }
  return f;
}

void collect_free(const Term& term, const std::set<std::string>& bound, std::set<std::string>& out) {
  if (term.kind == Term::Kind::Variable) {
    if (!bound.contains(term.name)) out.insert(term.name);
    return;
  }
  for (const auto& a : term.args) collect_free(a, bound, out);
}

void collect_free(const Formula& f, std::set<std::string>& bound, std::set<std::string>& out) {
  if (f.kind() == Formula::Kind::Lit) {
    for (const auto& a : f.literal().atom.args) collect_free(a, bound, out);
    return;
  }
  if (f.is_quantifier()) {
    std::vector<std::string> added;
    for (const auto& v : f.vars())
      if (bound.insert(v).second) added.push_back(v);
    collect_free(f.body(), bound, out);
    for (const auto& v : added) bound.erase(v);
    return;
  }
  for (const auto& c : f.children()) collect_free(c, bound, out);
}

bool defeasible_in_consequent(const Formula& f, bool in_antecedent) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::Lit: return !in_antecedent && f.literal().strength == Strength::D;
    case K::Implies:
      return defeasible_in_consequent(f.antecedent(), true) ||
             defeasible_in_consequent(f.consequent(), in_antecedent);
    default:
      return std::any_of(f.children().begin(), f.children().end(),
                         [&](const Formula& c) { return defeasible_in_consequent(c, in_antecedent); });
  }
}

}  // namespace

Formula substitute(const Formula& f, std::string_view var, const Term& t) {
  if (!t.is_ground()) throw Error("substitute: replacement term must be ground");
  return substitute_unchecked(f, var, t);
}

std::set<std::string> free_variables(const Formula& f) {
  std::set<std::string> bound;
  std::set<std::string> out;
  collect_free(f, bound, out);
  return out;
}

bool has_defeasible_consequent(const Formula& f) { return defeasible_in_consequent(f, false); }

std::string_view to_string(AxiomTag tag) {
  switch (tag) {
    case AxiomTag::Core: return "core";
    case AxiomTag::LanguageUse: return "language-use";
    case AxiomTag::Utterance: return "utterance";
  }
  return "core";
}

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Syntax: return "syntax";
    case ErrorKind::Arity: return "arity";
    case ErrorKind::UnboundVariable: return "unbound-variable";
    case ErrorKind::DuplicateAxiomId: return "duplicate-axiom-id";
  }
  return "syntax";
}

namespace {

void check_term_arities(const Term& t, std::map<std::string, std::size_t>& functors) {
  if (t.kind != Term::Kind::Apply) return;
  auto [it, inserted] = functors.emplace(t.name, t.args.size());
  if (!inserted && it->second != t.args.size())
    throw TheoryError(ErrorKind::Arity, "functor '" + t.name + "' used with arity " +
                                            std::to_string(t.args.size()) + ", expected " +
                                            std::to_string(it->second));
  for (const auto& a : t.args) check_term_arities(a, functors);
}

}  // namespace

void Theory::add(Axiom axiom) {
  if (contains(axiom.id)) throw TheoryError(ErrorKind::DuplicateAxiomId, "duplicate axiom id '" + axiom.id + "'");
  if (auto fv = free_variables(axiom.formula); !fv.empty())
    throw TheoryError(ErrorKind::UnboundVariable, "axiom '" + axiom.id + "' has free variable '" + *fv.begin() + "'");
  if (axiom.tag == AxiomTag::LanguageUse && !has_defeasible_consequent(axiom.formula))
    throw TheoryError(ErrorKind::Syntax,
                      "language-use axiom '" + axiom.id + "' needs a defeasible literal in consequent position");

  auto preds = predicates_;
  auto funcs = functors_;
  for_each_literal(axiom.formula, [&](const Literal& l) {
    const auto& name = l.atom.predicate;
    const auto n = l.atom.args.size();
    if (ontology_predicates().contains(name) && n != 1)
      throw TheoryError(ErrorKind::Arity, "ontology predicate '" + name + "' is unary");
    if (l.meta() && !l.positive())
      throw TheoryError(ErrorKind::Syntax, "metapredicate '" + name + "' cannot be negated");
    auto [it, inserted] = preds.emplace(name, n);
    if (!inserted && it->second != n)
      throw TheoryError(ErrorKind::Arity, "predicate '" + name + "' used with arity " + std::to_string(n) +
                                              ", expected " + std::to_string(it->second));
    for (const auto& a : l.atom.args) check_term_arities(a, funcs);
  });

  predicates_ = std::move(preds);
  functors_ = std::move(funcs);
  axioms_.push_back(std::move(axiom));
}

bool Theory::contains(std::string_view id) const {
  return std::any_of(axioms_.begin(), axioms_.end(), [&](const Axiom& a) { return a.id == id; });
}

bool operator==(const Theory& a, const Theory& b) {
  if (a.axioms_.size() != b.axioms_.size()) return false;
  for (std::size_t i = 0; i < a.axioms_.size(); ++i) {
    const auto& x = a.axioms_[i];
    const auto& y = b.axioms_[i];
    if (x.id != y.id || x.tag != y.tag || !(x.formula == y.formula)) return false;
  }
  return true;
}

}  // namespace strata
