#include "weildesc/expr.hpp"

#include <algorithm>
#include <cctype>

#include "weildesc/error.hpp"

namespace weildesc {

ExprAst ExprAst::number(const Rational& q) {
  ExprAst a;
  a.kind = Kind::Number;
  a.value = q;
  a.value.canonicalize();
  return a;
}

ExprAst ExprAst::var(std::string name) {
  ExprAst a;
  a.kind = Kind::Var;
  a.name = std::move(name);
  return a;
}

ExprAst ExprAst::neg(ExprAst x) {
  ExprAst a;
  a.kind = Kind::Neg;
  a.args.push_back(std::move(x));
  return a;
}

ExprAst ExprAst::binary(Kind k, ExprAst x, ExprAst y) {
  ExprAst a;
  a.kind = k;
  a.args.push_back(std::move(x));
  a.args.push_back(std::move(y));
  return a;
}

ExprAst ExprAst::pow(ExprAst x, long n) {
  ExprAst a;
  a.kind = Kind::Pow;
  a.exponent = n;
  a.args.push_back(std::move(x));
  return a;
}

ExprAst ExprAst::dapp(std::string deriv, ExprAst x) {
  ExprAst a;
  a.kind = Kind::DApp;
  a.name = std::move(deriv);
  a.args.push_back(std::move(x));
  return a;
}

bool Alphabet::has_identifier(std::string_view s) const {
  return std::find(identifiers.begin(), identifiers.end(), s) != identifiers.end();
}

bool Alphabet::has_derivation(std::string_view s) const {
  return std::find(derivations.begin(), derivations.end(), s) != derivations.end();
}

bool is_identifier(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(),
                     [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

// ---------------------------------------------------------------- lexer

namespace {

enum class Tok { Number, Ident, Prime, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line, column;
  bool integral = true;  // Number without a decimal point
};

std::string describe(const Token& t) {
  if (t.kind == Tok::End) return "end of input";
  return "'" + t.text + "'";
}

[[noreturn]] void fail(ErrorKind kind, const Token& at, const std::string& msg) {
  throw Error(kind, std::to_string(at.line) + ":" + std::to_string(at.column) + ": " + msg);
}

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1, i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < src.size()) {
    const char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    Token t{Tok::End, std::string(1, c), line, col};
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      if (j + 1 < src.size() && src[j] == '.' && std::isdigit(static_cast<unsigned char>(src[j + 1]))) {
        ++j;
        while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
        t.integral = false;
      }
      t.kind = Tok::Number;
      t.text = std::string(src.substr(i, j - i));
      out.push_back(t);
      advance(j - i);
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
      t.kind = Tok::Ident;
      t.text = std::string(src.substr(i, j - i));
      out.push_back(t);
      advance(j - i);
      continue;
    }
    switch (c) {
      case '\'': t.kind = Tok::Prime; break;
      case '+': t.kind = Tok::Plus; break;
      case '-': t.kind = Tok::Minus; break;
      case '*': t.kind = Tok::Star; break;
      case '/': t.kind = Tok::Slash; break;
      case '^': t.kind = Tok::Caret; break;
      case '(': t.kind = Tok::LParen; break;
      case ')': t.kind = Tok::RParen; break;
      default: fail(ErrorKind::SyntaxError, t, "unexpected character '" + t.text + "'");
    }
    out.push_back(t);
    advance(1);
  }
  out.push_back(Token{Tok::End, "", line, col});
  return out;
}

Rational parse_number(const std::string& text) {
  const auto dot = text.find('.');
  if (dot == std::string::npos) return Rational(Integer(text));
  const std::string digits = text.substr(0, dot) + text.substr(dot + 1);
  Integer den = 1;
  for (std::size_t k = dot + 1; k < text.size(); ++k) den *= 10;
  Rational q(Integer(digits), den);
  q.canonicalize();
  return q;
}

// ---------------------------------------------------------------- parser

class Parser {
 public:
  Parser(std::string_view src, const Alphabet& alphabet) : toks_(lex(src)), alpha_(alphabet) {}

  ExprAst run() {
    ExprAst e = expr();
    if (peek().kind != Tok::End) fail(ErrorKind::SyntaxError, peek(), "unexpected " + describe(peek()));
    return e;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const { return toks_[std::min(pos_ + ahead, toks_.size() - 1)]; }
  const Token& take() { return toks_[pos_++]; }

  void expect(Tok kind, const char* what) {
    if (peek().kind != kind) fail(ErrorKind::SyntaxError, peek(), std::string("expected ") + what + ", found " + describe(peek()));
    ++pos_;
  }

  ExprAst expr() {
    ExprAst lhs = term();
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      const auto k = take().kind == Tok::Plus ? ExprAst::Kind::Add : ExprAst::Kind::Sub;
      lhs = ExprAst::binary(k, std::move(lhs), term());
    }
    return lhs;
  }

  ExprAst term() {
    ExprAst lhs = factor();
    while (peek().kind == Tok::Star || peek().kind == Tok::Slash) {
      const auto k = take().kind == Tok::Star ? ExprAst::Kind::Mul : ExprAst::Kind::Div;
      lhs = ExprAst::binary(k, std::move(lhs), factor());
    }
    return lhs;
  }

  ExprAst factor() {
    if (peek().kind == Tok::Minus) {
      ++pos_;
      return ExprAst::neg(factor());
    }
    ExprAst base = atom();
    if (peek().kind != Tok::Caret) return base;
    ++pos_;
    bool negative = false;
    if (peek().kind == Tok::Minus) {
      negative = true;
      ++pos_;
    }
    const Token& t = peek();
    if (t.kind == Tok::Number && t.integral) {
      ++pos_;
      if (t.text.size() > 9) fail(ErrorKind::SyntaxError, t, "exponent " + t.text + " out of range");
      const long n = std::stol(t.text);
      return ExprAst::pow(std::move(base), negative ? -n : n);
    }
    if (t.kind == Tok::Number || t.kind == Tok::Ident || t.kind == Tok::LParen || t.kind == Tok::Minus)
      fail(ErrorKind::NonIntegerExponent, t, "exponent must be an integer literal, found " + describe(t));
    fail(ErrorKind::SyntaxError, t, "expected exponent, found " + describe(t));
  }

  ExprAst atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Number:
        ++pos_;
        return ExprAst::number(parse_number(t.text));
      case Tok::LParen: {
        ++pos_;
        ExprAst inner = expr();
        expect(Tok::RParen, "')'");
        return inner;
      }
      case Tok::Ident: {
        ++pos_;
        if (alpha_.has_derivation(t.text)) {
          if (peek().kind != Tok::LParen)
            fail(ErrorKind::SyntaxError, peek(), "expected '(' after derivation " + t.text);
          ++pos_;
          ExprAst inner = expr();
          expect(Tok::RParen, "')'");
          return ExprAst::dapp(t.text, std::move(inner));
        }
        if (!alpha_.has_identifier(t.text)) fail(ErrorKind::UnknownIdentifier, t, "unknown identifier '" + t.text + "'");
        ExprAst v = ExprAst::var(t.text);
        while (peek().kind == Tok::Prime) {
          if (alpha_.derivations.empty()) fail(ErrorKind::SyntaxError, peek(), "prime used but no derivation is declared");
          ++pos_;
          v = ExprAst::dapp(alpha_.derivations.front(), std::move(v));
        }
        return v;
      }
      default:
        fail(ErrorKind::SyntaxError, t, "unexpected " + describe(t));
    }
  }

  std::vector<Token> toks_;
  const Alphabet& alpha_;
  std::size_t pos_ = 0;
};

// ---------------------------------------------------------------- rendering

int precedence(const ExprAst& a) {
  switch (a.kind) {
    case ExprAst::Kind::Add:
    case ExprAst::Kind::Sub: return 1;
    case ExprAst::Kind::Mul:
    case ExprAst::Kind::Div: return 2;
    case ExprAst::Kind::Neg: return 3;
    case ExprAst::Kind::Pow: return 4;
    default: return 5;
  }
}

std::string render_number(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  Integer den = q.get_den();
  std::size_t twos = 0, fives = 0;
  while (den % 2 == 0) den /= 2, ++twos;
  while (den % 5 == 0) den /= 5, ++fives;
  if (den != 1) throw Error(ErrorKind::InvalidInput, "number " + q.get_str() + " has no finite decimal form");
  const std::size_t digits = std::max(twos, fives);
  Integer scale = 1;
  for (std::size_t k = 0; k < digits; ++k) scale *= 10;
  const Integer n = q.get_num() * scale / q.get_den();
  std::string s = Integer(abs(n)).get_str();
  if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
  s.insert(s.size() - digits, ".");
  return (n < 0 ? "-" : "") + s;
}

std::string render_at(const ExprAst& a, int min_prec) {
  std::string s;
  switch (a.kind) {
    case ExprAst::Kind::Number: s = render_number(a.value); break;
    case ExprAst::Kind::Var: s = a.name; break;
    case ExprAst::Kind::Neg: s = "-" + render_at(a.args[0], 3); break;
    case ExprAst::Kind::Add: s = render_at(a.args[0], 1) + " + " + render_at(a.args[1], 2); break;
    case ExprAst::Kind::Sub: s = render_at(a.args[0], 1) + " - " + render_at(a.args[1], 2); break;
    case ExprAst::Kind::Mul: s = render_at(a.args[0], 2) + "*" + render_at(a.args[1], 3); break;
    case ExprAst::Kind::Div: s = render_at(a.args[0], 2) + "/" + render_at(a.args[1], 3); break;
    case ExprAst::Kind::Pow: s = render_at(a.args[0], 5) + "^" + std::to_string(a.exponent); break;
    case ExprAst::Kind::DApp: s = a.name + "(" + render_at(a.args[0], 0) + ")"; break;
  }
  return precedence(a) < min_prec ? "(" + s + ")" : s;
}

[[noreturn]] void unknown(const std::string& name) {
  throw Error(ErrorKind::UnknownIdentifier, "unknown identifier '" + name + "'");
}

// ---------------------------------------------------------------- univariate helpers

void trim(BaseUPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

BaseUPoly up_add(BaseUPoly a, const BaseUPoly& b, bool subtract) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = subtract ? a[i] - b[i] : a[i] + b[i];
  trim(a);
  return a;
}

BaseUPoly up_mul(const BaseUPoly& a, const BaseUPoly& b) {
  if (a.empty() || b.empty()) return {};
  BaseUPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  trim(out);
  return out;
}

}  // namespace

ExprAst parse_expr(std::string_view src, const Alphabet& alphabet) { return Parser(src, alphabet).run(); }

std::string render_expr(const ExprAst& ast) { return render_at(ast, 0); }

bool mentions(const ExprAst& ast, const std::vector<std::string>& names) {
  if (ast.kind == ExprAst::Kind::Var) return std::find(names.begin(), names.end(), ast.name) != names.end();
  return std::any_of(ast.args.begin(), ast.args.end(), [&](const ExprAst& a) { return mentions(a, names); });
}

Alphabet base_alphabet(const BaseField& base) {
  Alphabet a;
  a.identifiers = base.var_names();
  for (const auto& d : base.derivations()) a.derivations.push_back(d.name);
  return a;
}

Alphabet ext_alphabet(const Extension& e) {
  Alphabet a = base_alphabet(e.base());
  if (e.generator()) {
    a.identifiers.push_back(*e.generator());
  } else {
    for (const auto& n : e.basis_names())
      if (is_identifier(n)) a.identifiers.push_back(n);
  }
  return a;
}

Alphabet system_alphabet(const Extension& e, const std::vector<std::string>& vars) {
  Alphabet a = ext_alphabet(e);
  a.identifiers.insert(a.identifiers.end(), vars.begin(), vars.end());
  return a;
}

BaseElem lower_base(const ExprAst& ast, const BaseField& base) {
  using K = ExprAst::Kind;
  auto sub = [&](std::size_t i) { return lower_base(ast.args[i], base); };
  switch (ast.kind) {
    case K::Number: return BaseElem(ast.value);
    case K::Var: {
      const auto& names = base.var_names();
      const auto it = std::find(names.begin(), names.end(), ast.name);
      if (it == names.end()) unknown(ast.name);
      return BaseElem::variable(static_cast<std::size_t>(it - names.begin()));
    }
    case K::Neg: return -sub(0);
    case K::Add: return sub(0) + sub(1);
    case K::Sub: return sub(0) - sub(1);
    case K::Mul: return sub(0) * sub(1);
    case K::Div: return sub(0) / sub(1);
    case K::Pow: return sub(0).pow(static_cast<int>(ast.exponent));
    case K::DApp: return base.derive(sub(0), ast.name);
  }
  return {};
}

BaseUPoly lower_minpoly(const ExprAst& ast, const BaseField& base, const std::string& gen) {
  using K = ExprAst::Kind;
  if (!mentions(ast, {gen})) {
    BaseUPoly p{lower_base(ast, base)};
    trim(p);
    return p;
  }
  auto sub = [&](std::size_t i) { return lower_minpoly(ast.args[i], base, gen); };
  switch (ast.kind) {
    case K::Var: return {BaseElem(0), BaseElem(1)};
    case K::Neg: return up_add({}, sub(0), true);
    case K::Add: return up_add(sub(0), sub(1), false);
    case K::Sub: return up_add(sub(0), sub(1), true);
    case K::Mul: return up_mul(sub(0), sub(1));
    case K::Div: {
      if (mentions(ast.args[1], {gen}))
        throw Error(ErrorKind::DivisionByVariable, "division by an expression in " + gen + ": " + render_expr(ast.args[1]));
      const BaseElem inv = lower_base(ast.args[1], base).inverse();
      BaseUPoly p = sub(0);
      for (auto& c : p) c = c * inv;
      return p;
    }
    case K::Pow: {
      if (ast.exponent < 0)
        throw Error(ErrorKind::DivisionByVariable, "negative power of an expression in " + gen);
      BaseUPoly out{BaseElem(1)};
      const BaseUPoly b = sub(0);
      for (long n = 0; n < ast.exponent; ++n) out = up_mul(out, b);
      return out;
    }
    case K::DApp:
      throw Error(ErrorKind::InvalidInput, "derivation applied to the generator inside a minimal polynomial");
    case K::Number: break;
  }
  return {};
}

ExtElem lower_ext(const ExprAst& ast, const Extension& e) {
  using K = ExprAst::Kind;
  auto sub = [&](std::size_t i) { return lower_ext(ast.args[i], e); };
  switch (ast.kind) {
    case K::Number: return e.from_base(BaseElem(ast.value));
    case K::Var: {
      const auto& bv = e.base().var_names();
      if (std::find(bv.begin(), bv.end(), ast.name) != bv.end()) return e.from_base(lower_base(ast, e.base()));
      if (e.generator()) {
        if (ast.name == *e.generator()) return *e.generator_element();
        unknown(ast.name);
      }
      const auto& names = e.basis_names();
      const auto it = std::find(names.begin(), names.end(), ast.name);
      if (it == names.end()) unknown(ast.name);
      return e.basis(static_cast<std::size_t>(it - names.begin()));
    }
    case K::Neg: return -sub(0);
    case K::Add: return sub(0) + sub(1);
    case K::Sub: return sub(0) - sub(1);
    case K::Mul: return e.mul(sub(0), sub(1));
    case K::Div: {
      const ExtElem d = sub(1);
      if (d.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero in " + render_expr(ast));
      return e.mul(sub(0), e.inverse(d));
    }
    case K::Pow: {
      const ExtElem b = sub(0);
      if (ast.exponent >= 0) return e.pow(b, static_cast<unsigned>(ast.exponent));
      return e.pow(e.inverse(b), static_cast<unsigned>(-ast.exponent));
    }
    case K::DApp: return e.delta(sub(0), ast.name);
  }
  return {};
}

DPolyB lower_dpoly(const ExprAst& ast, const Extension& e, const std::vector<std::string>& vars) {
  using K = ExprAst::Kind;
  if (!mentions(ast, vars)) return dpoly_constant(lower_ext(ast, e));
  auto sub = [&](std::size_t i) { return lower_dpoly(ast.args[i], e, vars); };
  switch (ast.kind) {
    case K::Var: return dpoly_var(e, VarRefB{ast.name, DerivIndex::zero(e.base().num_derivations())});
    case K::Neg: return -sub(0);
    case K::Add: return sub(0) + sub(1);
    case K::Sub: return sub(0) - sub(1);
    case K::Mul: return mul(sub(0), sub(1), e);
    case K::Div: {
      if (mentions(ast.args[1], vars))
        throw Error(ErrorKind::DivisionByVariable, "division by " + render_expr(ast.args[1]));
      const ExtElem d = lower_ext(ast.args[1], e);
      if (d.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero in " + render_expr(ast));
      return scale(sub(0), e.inverse(d), e);
    }
    case K::Pow:
      if (ast.exponent < 0) throw Error(ErrorKind::DivisionByVariable, "negative power of " + render_expr(ast.args[0]));
      return pow(sub(0), static_cast<unsigned>(ast.exponent), e);
    case K::DApp: return natural_derive_B(sub(0), e, ast.name);
    case K::Number: break;
  }
  return {};
}

APoly lower_apoly(const ExprAst& ast, const BaseField& base, const std::vector<std::string>& vars) {
  using K = ExprAst::Kind;
  if (!mentions(ast, vars)) {
    const BaseElem c = lower_base(ast, base);
    return c.is_zero() ? APoly() : APoly::constant(c);
  }
  auto sub = [&](std::size_t i) { return lower_apoly(ast.args[i], base, vars); };
  switch (ast.kind) {
    case K::Var:
      return APoly::term(Monomial<VarRefB>(VarRefB{ast.name, DerivIndex::zero(base.num_derivations())}), BaseElem(1));
    case K::Neg: return -sub(0);
    case K::Add: return sub(0) + sub(1);
    case K::Sub: return sub(0) - sub(1);
    case K::Mul: return sub(0) * sub(1);
    case K::Div: {
      if (mentions(ast.args[1], vars))
        throw Error(ErrorKind::DivisionByVariable, "division by " + render_expr(ast.args[1]));
      return scale(sub(0), lower_base(ast.args[1], base).inverse());
    }
    case K::Pow: {
      if (ast.exponent < 0) throw Error(ErrorKind::DivisionByVariable, "negative power of " + render_expr(ast.args[0]));
      const APoly b = sub(0);
      APoly out = APoly::constant(BaseElem(1));
      for (long n = 0; n < ast.exponent; ++n) out = out * b;
      return out;
    }
    case K::DApp: return natural_derive(sub(0), base, base.derivation_index(ast.name));
    case K::Number: break;
  }
  return {};
}

}  // namespace weildesc
