#include "strata/format.hpp"

#include <cctype>
#include <optional>

namespace strata {

namespace {

std::string subscript(std::size_t n) {
  static const char* const digits[] = {"₀", "₁", "₂", "₃", "₄", "₅", "₆", "₇", "₈", "₉"};
  const std::string dec = std::to_string(n);
  std::string out;
  for (char c : dec) out += digits[c - '0'];
  return out;
}

std::string args_of(const std::vector<Term>& args, Notation n) {
  if (args.empty()) return "";
  std::string out = "(";
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i > 0) out += ',';
    out += format_term(args[i], n);
  }
  return out + ")";
}

std::string join_layer(const std::vector<Literal>& lits, Notation n) {
  std::string out = "{";
  for (std::size_t i = 0; i < lits.size(); ++i) {
    if (i > 0) out += ", ";
    out += format_literal(lits[i], n);
  }
  return out + "}";
}

// Recursive-descent reader for machine notation.
class Reader {
 public:
  explicit Reader(std::string_view s) : s_(s) {}

  Term term() {
    std::string name = symbol();
    if (peek() != '(') return leaf(std::move(name));
    return Term::apply(std::move(name), arguments());
  }

  std::vector<Term> arguments() {
    expect('(');
    std::vector<Term> args;
    if (peek() == ')') fail("empty argument list");
    while (true) {
      args.push_back(term());
      if (peek() == ',') {
        ++pos_;
        continue;
      }
      expect(')');
      return args;
    }
  }

  std::string symbol(bool stop_at_caret = false) {
    const std::size_t start = pos_;
    while (pos_ < s_.size()) {
      const char c = s_[pos_];
      if (c == '(' || c == ')' || c == ',' || c == '~' || std::isspace(static_cast<unsigned char>(c)) ||
          (stop_at_caret && c == '^'))
        break;
      ++pos_;
    }
    if (pos_ == start) fail("expected a symbol");
    return std::string(s_.substr(start, pos_ - start));
  }

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  void finish() const {
    if (pos_ != s_.size()) fail("trailing characters");
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw Error("malformed machine notation '" + std::string(s_) + "': " + why + " at offset " +
                std::to_string(pos_));
  }
  std::size_t pos_ = 0;

 private:
  static Term leaf(std::string name) {
    if (name.size() > 2 && name.compare(0, 2, "xi") == 0 &&
        name.find_first_not_of("0123456789", 2) == std::string::npos)
      return Term::witness(std::stoul(name.substr(2)));
    return Term::constant(std::move(name));
  }

  std::string_view s_;
};

}  // namespace

std::string format_term(const Term& t, Notation n) {
  switch (t.kind) {
    case Term::Kind::Witness: return n == Notation::Table ? "ξ" + subscript(t.index) : "xi" + std::to_string(t.index);
    case Term::Kind::Apply: return t.name + args_of(t.args, n);
    default: return t.name;
  }
}

std::string format_atom(const Atom& a, Notation n) { return a.predicate + args_of(a.args, n); }

std::string format_literal(const Literal& l, Notation n) {
  std::string out;
  if (!l.positive()) out = n == Notation::Table ? "¬" : "~";
  out += l.atom.predicate;
  if (l.kind == LiteralKind::Ordinary) out += l.strength == Strength::U ? "^u" : "^d";
  return out + args_of(l.atom.args, n);
}

std::string format_schema(const ModelSchema& m, Notation n) {
  std::vector<Literal> u, d;
  for (auto& l : m.literals()) (l.strength == Strength::U ? u : d).push_back(l);
  const char* empty_u = n == Notation::Table ? "∅^u" : "{}";
  const char* empty_d = n == Notation::Table ? "∅^d" : "{}";
  const char* cup = n == Notation::Table ? " ∪ " : " U ";
  return (u.empty() ? std::string(empty_u) : join_layer(u, n)) + cup + (d.empty() ? std::string(empty_d) : join_layer(d, n));
}

Term parse_machine_term(std::string_view s) {
  Reader r(s);
  Term t = r.term();
  r.finish();
  return t;
}

Atom parse_machine_atom(std::string_view s) {
  Reader r(s);
  Atom a;
  a.predicate = r.symbol();
  if (r.peek() == '(') a.args = r.arguments();
  r.finish();
  return a;
}

Literal parse_machine_literal(std::string_view s) {
  Polarity pol = Polarity::Pos;
  if (!s.empty() && s.front() == '~') {
    pol = Polarity::Neg;
    s.remove_prefix(1);
  }
  Reader r(s);
  std::string pred = r.symbol(true);
  std::optional<Strength> strength;
  if (r.peek() == '^') {
    ++r.pos_;
    const char c = r.peek();
    if (c != 'u' && c != 'd') r.fail("strength must be ^u or ^d");
    strength = c == 'u' ? Strength::U : Strength::D;
    ++r.pos_;
  }
  std::vector<Term> args;
  if (r.peek() == '(') args = r.arguments();
  r.finish();

  if (is_metapredicate(pred) || is_builtin(pred)) {
    if (strength) r.fail("'" + pred + "' takes no strength");
    const std::size_t arity = is_builtin(pred) ? 2 : 1;
    if (args.size() != arity) r.fail("'" + pred + "' takes " + std::to_string(arity) + " argument(s)");
    Literal l = arity == 2 ? Literal::neq(args[0], args[1]) : Literal::defref(args[0]);
    l.polarity = pol;
    return l;
  }
  if (!strength) r.fail("missing strength");
  return Literal::make(std::move(pred), std::move(args), *strength, pol);
}

}  // namespace strata
