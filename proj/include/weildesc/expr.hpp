#pragma once

// Expression front end: a small recursive-descent parser for
//   expr   := term (("+"|"-") term)*
//   term   := factor (("*"|"/") factor)*
//   factor := atom ("^" INT)? | "-" factor
//   atom   := NUMBER | IDENT "'"* | DERIV "(" expr ")" | "(" expr ")"
// and lowering of the resulting AST into the algebraic types.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "weildesc/diffpoly.hpp"

namespace weildesc {

struct ExprAst {
  enum class Kind { Number, Var, Neg, Add, Sub, Mul, Div, Pow, DApp };

  Kind kind = Kind::Number;
  Rational value;         // Number; always >= 0 from the parser
  std::string name;       // Var identifier, or the derivation of a DApp
  long exponent = 0;      // Pow
  std::vector<ExprAst> args;

  static ExprAst number(const Rational& q);
  static ExprAst var(std::string name);
  static ExprAst neg(ExprAst a);
  static ExprAst binary(Kind k, ExprAst a, ExprAst b);
  static ExprAst pow(ExprAst a, long n);
  static ExprAst dapp(std::string deriv, ExprAst a);

  friend bool operator==(const ExprAst&, const ExprAst&) = default;
};

struct Alphabet {
  std::vector<std::string> identifiers;
  /// In declaration order; a prime is sugar for the first.
  std::vector<std::string> derivations;

  bool has_identifier(std::string_view s) const;
  bool has_derivation(std::string_view s) const;
};

bool is_identifier(std::string_view s);

/// Throws SyntaxError, UnknownIdentifier or NonIntegerExponent, each with a
/// 1-based line:column in the message.
ExprAst parse_expr(std::string_view src, const Alphabet& alphabet);

/// Re-parseable text with minimal parentheses.
std::string render_expr(const ExprAst& ast);

/// Does the AST mention any of the given identifiers?
bool mentions(const ExprAst& ast, const std::vector<std::string>& names);

Alphabet base_alphabet(const BaseField& base);
/// Base variables plus the generator (monogenic) or the basis names (table).
Alphabet ext_alphabet(const Extension& e);
Alphabet system_alphabet(const Extension& e, const std::vector<std::string>& vars);

BaseElem lower_base(const ExprAst& ast, const BaseField& base);
/// Polynomial in gen over A, ascending coefficients, trailing zeros trimmed.
/// Throws DivisionByVariable when dividing by an expression in gen.
BaseUPoly lower_minpoly(const ExprAst& ast, const BaseField& base, const std::string& gen);
ExtElem lower_ext(const ExprAst& ast, const Extension& e);
/// Derivations applied to system variables raise their DerivIndex; applied to
/// constants they act through ext_delta. Throws DivisionByVariable.
DPolyB lower_dpoly(const ExprAst& ast, const Extension& e, const std::vector<std::string>& vars);
/// Same over A; used to read geometric-form output back in.
APoly lower_apoly(const ExprAst& ast, const BaseField& base, const std::vector<std::string>& vars);

}  // namespace weildesc
