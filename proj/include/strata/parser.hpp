// Reader and writer for the .slt theory format.
//
//   ; comment
//   (axiom a1 :core (forall (x) (-> (penguin^u x) (bird^u x))))
//   (axiom l1 :language-use (forall (x) (-> (defref x) (E!^d x))))
//   (axiom u1 :utterance (exists (x) (and (king_of_france^u x) (defref x))))
//
// Literals are (pred^u args...) or (pred^d args...); (not f), (and ...),
// (or ...), (-> f g), (forall (vars...) f), (exists (vars...) f); (defref t)
// is the definite-reference metapredicate and (neq s t) the builtin
// inequality. A symbol is a variable exactly when an enclosing binder
// declares it; every other symbol is a constant. (f t...) in argument
// position is a function term.

#ifndef STRATA_PARSER_HPP
#define STRATA_PARSER_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "strata/logic.hpp"

namespace strata {

struct SourceSpan {
  std::size_t line = 1;
  std::size_t column = 1;
  std::size_t length = 0;
};

struct ParseError {
  SourceSpan span;
  std::string message;
  ErrorKind kind = ErrorKind::Syntax;
};

// "3:14: arity: predicate 'bird' ..."
std::string format_error(const ParseError& e);

template <class T>
class ParseResult {
 public:
  ParseResult(T value) : value_(std::move(value)) {}
  ParseResult(std::vector<ParseError> errors) : errors_(std::move(errors)) {}

  bool ok() const { return errors_.empty(); }
  const T& value() const& {
    if (!ok()) throw Error("parse failed: " + format_error(errors_.front()));
    return *value_;
  }
  T&& value() && {
    if (!ok()) throw Error("parse failed: " + format_error(errors_.front()));
    return std::move(*value_);
  }
  const std::vector<ParseError>& errors() const { return errors_; }

 private:
  std::optional<T> value_;
  std::vector<ParseError> errors_;
};

// Parses a whole theory file. Reports every error it can find, each with the
// span of the offending token.
ParseResult<Theory> parse_theory(std::string_view source);

// Parses a single closed formula, checking predicate arities against the
// given theory's signature.
ParseResult<Formula> parse_formula(std::string_view source, const Theory& context = {});

std::string render_term(const Term& t);
std::string render_formula(const Formula& f);
std::string render_theory(const Theory& t);

}  // namespace strata

#endif  // STRATA_PARSER_HPP
