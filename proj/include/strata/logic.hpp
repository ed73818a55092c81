// Terms, stratified literals, formulas and theories.
//
// A literal carries its strength (undefeasible / defeasible) and its polarity
// directly, so negation of an atom never appears as a formula node. All values
// here are immutable after construction and cheap to copy: formula nodes are
// shared.

#ifndef STRATA_LOGIC_HPP
#define STRATA_LOGIC_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace strata {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Term {
  enum class Kind : std::uint8_t { Constant, Variable, Witness, Apply };

  Kind kind = Kind::Constant;
  std::string name;        // constant, variable or functor name
  std::size_t index = 0;   // witness index (rendered xi0, xi1, ...)
  std::vector<Term> args;  // Apply only

  static Term constant(std::string name);
  static Term variable(std::string name);
  static Term witness(std::size_t index);
  static Term apply(std::string functor, std::vector<Term> args);

  bool is_ground() const;
  bool is_variable() const { return kind == Kind::Variable; }

  // Appends this term and all nested subterms, outermost first.
  void collect_subterms(std::vector<Term>& out) const;
};

int compare(const Term& a, const Term& b);
inline bool operator==(const Term& a, const Term& b) { return compare(a, b) == 0; }
inline bool operator<(const Term& a, const Term& b) { return compare(a, b) < 0; }

// D < U in inferential strength.
enum class Strength : std::uint8_t { D, U };
enum class Polarity : std::uint8_t { Pos, Neg };

// Meta literals are syntactic triggers (definite reference); builtins are
// interpreted syntactically over ground terms (neq, unique names).
enum class LiteralKind : std::uint8_t { Ordinary, Meta, Builtin };

inline constexpr std::string_view kDefRef = "defref";
inline constexpr std::string_view kNeq = "neq";

bool is_metapredicate(std::string_view name);
bool is_builtin(std::string_view name);

struct Atom {
  std::string predicate;
  std::vector<Term> args;

  bool is_ground() const;
};

int compare(const Atom& a, const Atom& b);
inline bool operator==(const Atom& a, const Atom& b) { return compare(a, b) == 0; }
inline bool operator<(const Atom& a, const Atom& b) { return compare(a, b) < 0; }

struct Literal {
  Atom atom;
  Strength strength = Strength::U;
  Polarity polarity = Polarity::Pos;
  LiteralKind kind = LiteralKind::Ordinary;

  static Literal make(std::string predicate, std::vector<Term> args, Strength s,
                      Polarity p = Polarity::Pos);
  static Literal defref(Term t);
  static Literal neq(Term a, Term b);

  bool meta() const { return kind == LiteralKind::Meta; }
  bool builtin() const { return kind == LiteralKind::Builtin; }
  bool positive() const { return polarity == Polarity::Pos; }
  bool is_ground() const { return atom.is_ground(); }
  Literal flipped() const;

  // Only meaningful for ground builtins.
  bool builtin_holds() const;
};

int compare(const Literal& a, const Literal& b);
inline bool operator==(const Literal& a, const Literal& b) { return compare(a, b) == 0; }
inline bool operator<(const Literal& a, const Literal& b) { return compare(a, b) < 0; }

class Formula {
 public:
  enum class Kind : std::uint8_t { Lit, Not, And, Or, Implies, ForAll, Exists };

  static Formula lit(Literal l);
  // Not of a literal flips its polarity instead of adding a node.
  static Formula negation(Formula f);
  static Formula conj(std::vector<Formula> fs);
  static Formula disj(std::vector<Formula> fs);
  static Formula implies(Formula antecedent, Formula consequent);
  static Formula forall(std::vector<std::string> vars, Formula body);
  static Formula exists(std::vector<std::string> vars, Formula body);

  Kind kind() const { return node_->kind; }
  const Literal& literal() const;
  // And/Or operands; Not has one child; Implies has (antecedent, consequent).
  const std::vector<Formula>& children() const { return node_->children; }
  const std::vector<std::string>& vars() const { return node_->vars; }
  const Formula& body() const { return node_->children.front(); }
  const Formula& antecedent() const { return node_->children[0]; }
  const Formula& consequent() const { return node_->children[1]; }

  bool is_quantifier() const { return kind() == Kind::ForAll || kind() == Kind::Exists; }

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node {
    Kind kind;
    std::vector<Literal> lit;  // exactly one element for Lit
    std::vector<Formula> children;
    std::vector<std::string> vars;
  };
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static Formula make(Node n);

  std::shared_ptr<const Node> node_;
};

// Negation-normal form of (not f): polarity flips, strength is preserved,
// quantifiers dualize, implications expand.
Formula negate(const Formula& f);
// Negation-normal form of f (no Not, no Implies nodes).
Formula nnf(const Formula& f);

// Replaces free occurrences of var by t. t must be ground.
Formula substitute(const Formula& f, std::string_view var, const Term& t);
Term substitute(const Term& term, std::string_view var, const Term& t);
Literal substitute(const Literal& l, std::string_view var, const Term& t);

std::set<std::string> free_variables(const Formula& f);
inline bool is_closed(const Formula& f) { return free_variables(f).empty(); }

// Visits every literal in f, including those under quantifiers.
template <class Fn>
void for_each_literal(const Formula& f, Fn&& fn) {
  if (f.kind() == Formula::Kind::Lit) {
    fn(f.literal());
    return;
  }
  for (const auto& c : f.children()) for_each_literal(c, fn);
}

enum class AxiomTag : std::uint8_t { Core, LanguageUse, Utterance };

std::string_view to_string(AxiomTag tag);

struct Axiom {
  std::string id;
  Formula formula;
  AxiomTag tag = AxiomTag::Core;
};

enum class ErrorKind : std::uint8_t { Syntax, Arity, UnboundVariable, DuplicateAxiomId };

std::string_view to_string(ErrorKind kind);

class TheoryError : public Error {
 public:
  TheoryError(ErrorKind kind, const std::string& msg) : Error(msg), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

// True if some defeasible literal occurs in consequent position, i.e. on the
// right of an implication or anywhere outside an antecedent.
bool has_defeasible_consequent(const Formula& f);

inline const std::set<std::string>& ontology_predicates() {
  static const std::set<std::string> preds{"E!", "UE!", "EOW!", "F!"};
  return preds;
}

class Theory {
 public:
  Theory() = default;

  // Validates and appends; throws TheoryError and leaves the theory unchanged
  // on failure.
  void add(Axiom axiom);

  std::span<const Axiom> axioms() const { return axioms_; }
  const std::map<std::string, std::size_t>& predicate_arities() const { return predicates_; }
  const std::map<std::string, std::size_t>& functor_arities() const { return functors_; }
  bool contains(std::string_view id) const;
  bool empty() const { return axioms_.empty(); }
  std::size_t size() const { return axioms_.size(); }

  friend bool operator==(const Theory& a, const Theory& b);

 private:
  std::vector<Axiom> axioms_;
  std::map<std::string, std::size_t> predicates_;
  std::map<std::string, std::size_t> functors_;
};

}  // namespace strata

#endif  // STRATA_LOGIC_HPP
