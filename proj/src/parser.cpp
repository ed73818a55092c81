#include "strata/parser.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace strata {

std::string format_error(const ParseError& e) {
  std::ostringstream os;
  os << e.span.line << ':' << e.span.column << ": " << to_string(e.kind) << ": " << e.message;
  return os.str();
}

namespace {

struct SExpr {
  bool is_list = false;
  std::string symbol;
  std::vector<SExpr> items;
  SourceSpan span;
};

struct Failure {
  ParseError error;
};

[[noreturn]] void fail(const SourceSpan& span, ErrorKind kind, std::string msg) {
  throw Failure{ParseError{span, std::move(msg), kind}};
}

// Columns and lengths count code points, not bytes.
class Reader {
 public:
  explicit Reader(std::string_view src) : src_(src) {}

  // Reads all top-level expressions. Stops at the first structural error.
  std::vector<SExpr> read_all(std::vector<ParseError>& errors) {
    std::vector<SExpr> out;
    try {
      while (true) {
        skip_space();
        if (pos_ >= src_.size()) break;
        out.push_back(read());
      }
    } catch (const Failure& f) {
      errors.push_back(f.error);
    }
    return out;
  }

 private:
  static bool continuation(char c) { return (static_cast<unsigned char>(c) & 0xC0) == 0x80; }
  static bool delimiter(char c) {
    return c == '(' || c == ')' || c == ';' || std::isspace(static_cast<unsigned char>(c));
  }

  void advance() {
    const char c = src_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else if (!continuation(c)) {
      ++col_;
    }
  }

  void skip_space() {
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (c == ';') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  SourceSpan here(std::size_t length = 1) const { return SourceSpan{line_, col_, length}; }

  SExpr read() {
    skip_space();
    if (pos_ >= src_.size()) fail(here(0), ErrorKind::Syntax, "unexpected end of input");
    const char c = src_[pos_];
    if (c == ')') fail(here(), ErrorKind::Syntax, "unexpected ')'");
    if (c == '(') {
      SExpr list;
      list.is_list = true;
      list.span = here();
      const auto open = list.span;
      const std::size_t start_col = col_;
      const std::size_t start_line = line_;
      advance();
      while (true) {
        skip_space();
        if (pos_ >= src_.size()) fail(open, ErrorKind::Syntax, "unclosed '('");
        if (src_[pos_] == ')') {
          advance();
          break;
        }
        list.items.push_back(read());
      }
      list.span.length = line_ == start_line ? col_ - start_col : 1;
      return list;
    }
    SExpr atom;
    atom.span = here(0);
    const std::size_t start = pos_;
    std::size_t cps = 0;
    while (pos_ < src_.size() && !delimiter(src_[pos_])) {
      if (!continuation(src_[pos_])) ++cps;
      advance();
    }
    atom.symbol = std::string(src_.substr(start, pos_ - start));
    atom.span.length = cps;
    return atom;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

const std::set<std::string, std::less<>> kKeywords{"forall", "exists", "and", "or", "not", "->", "axiom",
                                                   std::string(kNeq), std::string(kDefRef)};

bool reserved_witness_name(std::string_view s) {
  return s.size() > 2 && s.substr(0, 2) == "xi" &&
         std::all_of(s.begin() + 2, s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

// Collects every variable declared by some binder inside e.
void collect_binders(const SExpr& e, std::set<std::string>& out) {
  if (!e.is_list) return;
  if (e.items.size() >= 2 && !e.items[0].is_list &&
      (e.items[0].symbol == "forall" || e.items[0].symbol == "exists") && e.items[1].is_list) {
    for (const auto& v : e.items[1].items)
      if (!v.is_list) out.insert(v.symbol);
  }
  for (const auto& i : e.items) collect_binders(i, out);
}

class Builder {
 public:
  explicit Builder(const Theory* context) {
    if (context == nullptr) return;
    for (const auto& [p, n] : context->predicate_arities()) predicates_[p] = {n, {}};
    for (const auto& [f, n] : context->functor_arities()) functors_[f] = {n, {}};
  }

  Formula formula(const SExpr& e, std::set<std::string> const& axiom_binders) {
    binders_ = &axiom_binders;
    scope_.clear();
    return build(e);
  }

  void commit() {
    for (auto& [k, v] : pending_preds_) predicates_.insert({k, v});
    for (auto& [k, v] : pending_funcs_) functors_.insert({k, v});
    pending_preds_.clear();
    pending_funcs_.clear();
  }
  void rollback() {
    pending_preds_.clear();
    pending_funcs_.clear();
  }

 private:
  using Arity = std::pair<std::size_t, SourceSpan>;

  void check_arity(std::map<std::string, Arity>& table, std::map<std::string, Arity>& pending,
                   const std::string& name, std::size_t n, const SourceSpan& span, const char* what) {
    auto check = [&](const Arity& known) {
      if (known.first != n)
        fail(span, ErrorKind::Arity,
             std::string(what) + " '" + name + "' used with arity " + std::to_string(n) + ", expected " +
                 std::to_string(known.first));
    };
    if (auto it = table.find(name); it != table.end()) return check(it->second);
    if (auto it = pending.find(name); it != pending.end()) return check(it->second);
    pending.emplace(name, Arity{n, span});
  }

  static const SExpr& head(const SExpr& e) { return e.items.front(); }

  Formula build(const SExpr& e) {
    if (!e.is_list) fail(e.span, ErrorKind::Syntax, "expected a formula, found symbol '" + e.symbol + "'");
    if (e.items.empty()) fail(e.span, ErrorKind::Syntax, "empty list is not a formula");
    const SExpr& h = head(e);
    if (h.is_list) fail(h.span, ErrorKind::Syntax, "formula head must be a symbol");
    const std::string& op = h.symbol;

    if (op == "and" || op == "or") {
      std::vector<Formula> cs;
      for (std::size_t i = 1; i < e.items.size(); ++i) cs.push_back(build(e.items[i]));
      return op == "and" ? Formula::conj(std::move(cs)) : Formula::disj(std::move(cs));
    }
    if (op == "not") {
      expect_args(e, 1);
      auto inner = build(e.items[1]);
      if (inner.kind() == Formula::Kind::Lit && inner.literal().meta())
        fail(e.span, ErrorKind::Syntax, "metapredicate cannot be negated");
      return Formula::negation(std::move(inner));
    }
    if (op == "->") {
      expect_args(e, 2);
      return Formula::implies(build(e.items[1]), build(e.items[2]));
    }
    if (op == "forall" || op == "exists") {
      expect_args(e, 2);
      const SExpr& vs = e.items[1];
      if (!vs.is_list) fail(vs.span, ErrorKind::Syntax, "binder list must be a parenthesized list of variables");
      std::vector<std::string> vars;
      for (const auto& v : vs.items) {
        if (v.is_list || kKeywords.contains(v.symbol) || v.symbol.find('^') != std::string::npos)
          fail(v.span, ErrorKind::Syntax, "invalid variable name");
        vars.push_back(v.symbol);
      }
      if (vars.empty()) fail(vs.span, ErrorKind::Syntax, "binder list is empty");
      const auto saved = scope_.size();
      scope_.insert(scope_.end(), vars.begin(), vars.end());
      auto body = build(e.items[2]);
      scope_.resize(saved);
      return op == "forall" ? Formula::forall(std::move(vars), std::move(body))
                            : Formula::exists(std::move(vars), std::move(body));
    }
    if (op == "axiom") fail(h.span, ErrorKind::Syntax, "axiom statement nested inside a formula");
    return Formula::lit(literal(e));
  }

  void expect_args(const SExpr& e, std::size_t n) {
    if (e.items.size() != n + 1)
      fail(e.span, ErrorKind::Syntax,
           "'" + head(e).symbol + "' takes " + std::to_string(n) + " operand" + (n == 1 ? "" : "s"));
  }

  Literal literal(const SExpr& e) {
    const SExpr& h = head(e);
    std::string name = h.symbol;
    std::vector<Term> args;
    for (std::size_t i = 1; i < e.items.size(); ++i) args.push_back(term(e.items[i]));

    if (name == kDefRef) {
      if (args.size() != 1) fail(e.span, ErrorKind::Arity, "defref takes exactly one argument");
      return Literal::defref(std::move(args.front()));
    }
    if (name == kNeq) {
      if (args.size() != 2) fail(e.span, ErrorKind::Arity, "neq takes exactly two arguments");
      return Literal::neq(std::move(args[0]), std::move(args[1]));
    }
    const auto caret = name.rfind('^');
    if (caret == std::string::npos || caret == 0 || caret + 2 != name.size() ||
        (name[caret + 1] != 'u' && name[caret + 1] != 'd'))
      fail(h.span, ErrorKind::Syntax, "predicate '" + name + "' needs a strength suffix ^u or ^d");
    const Strength s = name[caret + 1] == 'u' ? Strength::U : Strength::D;
    name.resize(caret);
    if (is_metapredicate(name) || is_builtin(name))
      fail(h.span, ErrorKind::Syntax, "'" + name + "' takes no strength suffix");
    if (ontology_predicates().contains(name) && args.size() != 1)
      fail(e.span, ErrorKind::Arity, "ontology predicate '" + name + "' is unary");
    check_arity(predicates_, pending_preds_, name, args.size(), h.span, "predicate");
    return Literal::make(std::move(name), std::move(args), s);
  }

  Term term(const SExpr& e) {
    if (e.is_list) {
      if (e.items.empty() || head(e).is_list) fail(e.span, ErrorKind::Syntax, "malformed function term");
      const auto& f = head(e).symbol;
      if (kKeywords.contains(f) || f.find('^') != std::string::npos)
        fail(head(e).span, ErrorKind::Syntax, "'" + f + "' cannot be used as a function symbol");
      std::vector<Term> args;
      for (std::size_t i = 1; i < e.items.size(); ++i) args.push_back(term(e.items[i]));
      check_arity(functors_, pending_funcs_, f, args.size(), head(e).span, "functor");
      return Term::apply(f, std::move(args));
    }
    const auto& s = e.symbol;
    if (kKeywords.contains(s) || s.find('^') != std::string::npos || s.front() == ':')
      fail(e.span, ErrorKind::Syntax, "'" + s + "' is not a valid term");
    if (std::find(scope_.begin(), scope_.end(), s) != scope_.end()) return Term::variable(s);
    if (binders_ != nullptr && binders_->contains(s))
      fail(e.span, ErrorKind::UnboundVariable, "variable '" + s + "' used outside the scope of its binder");
    if (reserved_witness_name(s)) fail(e.span, ErrorKind::Syntax, "'" + s + "' is reserved for Skolem witnesses");
    return Term::constant(s);
  }

  std::map<std::string, Arity> predicates_, functors_;
  std::map<std::string, Arity> pending_preds_, pending_funcs_;
  std::vector<std::string> scope_;
  const std::set<std::string>* binders_ = nullptr;
};

std::optional<AxiomTag> parse_tag(std::string_view s) {
  if (s == ":core") return AxiomTag::Core;
  if (s == ":language-use") return AxiomTag::LanguageUse;
  if (s == ":utterance") return AxiomTag::Utterance;
  return std::nullopt;
}

}  // namespace

ParseResult<Theory> parse_theory(std::string_view source) {
  std::vector<ParseError> errors;
  Reader reader(source);
  const auto exprs = reader.read_all(errors);

  Theory theory;
  Builder builder(nullptr);
  std::map<std::string, SourceSpan> ids;
  for (const auto& stmt : exprs) {
    try {
      if (!stmt.is_list || stmt.items.empty() || stmt.items[0].is_list || stmt.items[0].symbol != "axiom")
        fail(stmt.span, ErrorKind::Syntax, "expected (axiom <id> <tag> <formula>)");
      if (stmt.items.size() != 4)
        fail(stmt.span, ErrorKind::Syntax, "axiom statement needs an id, a tag and one formula");
      const SExpr& id = stmt.items[1];
      const SExpr& tag = stmt.items[2];
      if (id.is_list) fail(id.span, ErrorKind::Syntax, "axiom id must be a symbol");
      if (tag.is_list || !parse_tag(tag.symbol))
        fail(tag.span, ErrorKind::Syntax, "axiom tag must be :core, :language-use or :utterance");

      std::set<std::string> binders;
      collect_binders(stmt.items[3], binders);
      Formula f = builder.formula(stmt.items[3], binders);

      if (!ids.emplace(id.symbol, id.span).second)
        fail(id.span, ErrorKind::DuplicateAxiomId, "duplicate axiom id '" + id.symbol + "'");
      try {
        theory.add(Axiom{id.symbol, std::move(f), *parse_tag(tag.symbol)});
      } catch (const TheoryError& e) {
        fail(stmt.span, e.kind(), e.what());
      }
      builder.commit();
    } catch (const Failure& f) {
      builder.rollback();
      errors.push_back(f.error);
    }
  }
  if (!errors.empty()) return errors;
  return theory;
}

ParseResult<Formula> parse_formula(std::string_view source, const Theory& context) {
  std::vector<ParseError> errors;
  Reader reader(source);
  const auto exprs = reader.read_all(errors);
  if (!errors.empty()) return errors;
  if (exprs.size() != 1) {
    SourceSpan span = exprs.empty() ? SourceSpan{1, 1, 0} : exprs[1].span;
    return std::vector<ParseError>{{span, "expected exactly one formula", ErrorKind::Syntax}};
  }
  try {
    std::set<std::string> binders;
    collect_binders(exprs.front(), binders);
    Builder builder(&context);
    return builder.formula(exprs.front(), binders);
  } catch (const Failure& f) {
    return std::vector<ParseError>{f.error};
  }
}

std::string render_term(const Term& t) {
  switch (t.kind) {
    case Term::Kind::Constant:
    case Term::Kind::Variable: return t.name;
    case Term::Kind::Witness: return "xi" + std::to_string(t.index);
    case Term::Kind::Apply: {
      std::string s = "(" + t.name;
      for (const auto& a : t.args) s += " " + render_term(a);
      return s + ")";
    }
  }
  return t.name;
}

namespace {

std::string render_literal(const Literal& l) {
  std::string s = "(" + l.atom.predicate;
  if (l.kind == LiteralKind::Ordinary) s += l.strength == Strength::U ? "^u" : "^d";
  for (const auto& a : l.atom.args) s += " " + render_term(a);
  s += ")";
  return l.positive() ? s : "(not " + s + ")";
}

std::string render_vars(const std::vector<std::string>& vs) {
  std::string s = "(";
  for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? " " : "") + vs[i];
  return s + ")";
}

}  // namespace

std::string render_formula(const Formula& f) {
  using K = Formula::Kind;
  auto nary = [&](const char* op) {
    std::string s = std::string("(") + op;
    for (const auto& c : f.children()) s += " " + render_formula(c);
    return s + ")";
  };
  switch (f.kind()) {
    case K::Lit: return render_literal(f.literal());
    case K::Not: return "(not " + render_formula(f.body()) + ")";
    case K::And: return nary("and");
    case K::Or: return nary("or");
    case K::Implies: return "(-> " + render_formula(f.antecedent()) + " " + render_formula(f.consequent()) + ")";
    case K::ForAll: return "(forall " + render_vars(f.vars()) + " " + render_formula(f.body()) + ")";
    case K::Exists: return "(exists " + render_vars(f.vars()) + " " + render_formula(f.body()) + ")";
  }
  return {};
}

std::string render_theory(const Theory& t) {
  std::string out;
  for (const auto& a : t.axioms())
    out += "(axiom " + a.id + " :" + std::string(to_string(a.tag)) + " " + render_formula(a.formula) + ")\n";
  return out;
}

}  // namespace strata
