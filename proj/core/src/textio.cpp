#include "schinzel/textio.hpp"

#include <cctype>

#include "schinzel/errors.hpp"

namespace schinzel {

RingPtr parse_ring(const std::string& text) {
  if (text == "Z") return Ring::integers();
  if (text == "Q") return Ring::rationals();
  if (text == "Q[u]") return Ring::poly_ring(Ring::rationals(), "u");
  if (text == "Z[u]") return Ring::poly_ring(Ring::integers(), "u");
  if (text == "Z[t]") return Ring::poly_ring(Ring::integers(), "t");
  if (text.rfind("Fp[u]:", 0) == 0) {
    auto p = Integer::parse(text.substr(6));
    if (!p) throw ParseError("bad prime in ring selector '" + text + "'", 6);
    return Ring::poly_ring(Ring::prime_field(*p), "u");
  }
  throw ParseError("unknown ring selector '" + text + "'", 0);
}

namespace {

enum class Tok { Int, Var, Plus, Minus, Star, Caret, LParen, RParen, End };

struct Token {
  Tok kind;
  std::size_t pos;
  Integer number;
  char var = 0;
};

std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      out.push_back({Tok::Int, start, *Integer::parse(text.substr(start, i - start)), 0});
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      if (c != 'y' && c != 't' && c != 'u') {
        throw ParseError(std::string("unknown variable '") + c + "'", i);
      }
      out.push_back({Tok::Var, i, Integer(0), c});
      ++i;
      continue;
    }
    Tok kind;
    switch (c) {
      case '+': kind = Tok::Plus; break;
      case '-': kind = Tok::Minus; break;
      case '*': kind = Tok::Star; break;
      case '^': kind = Tok::Caret; break;
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      default: throw ParseError(std::string("unexpected character '") + c + "'", i);
    }
    out.push_back({kind, i, Integer(0), 0});
    ++i;
  }
  out.push_back({Tok::End, text.size(), Integer(0), 0});
  return out;
}

constexpr unsigned kMaxExponent = 4096;

class Parser {
public:
  Parser(std::vector<Token> tokens, const PolyShape& shape)
      : toks_(std::move(tokens)), shape_(shape), ring_(shape.coefficient_ring()) {}

  Poly parse() {
    Poly e = expr();
    if (cur().kind != Tok::End) throw ParseError("trailing input", cur().pos);
    return e;
  }

private:
  const Token& cur() const { return toks_[pos_]; }
  void advance() { ++pos_; }

  bool at_atom_start() const {
    return cur().kind == Tok::Int || cur().kind == Tok::Var || cur().kind == Tok::LParen;
  }

  Poly expr() {
    Poly acc = term();
    while (cur().kind == Tok::Plus || cur().kind == Tok::Minus) {
      bool minus = cur().kind == Tok::Minus;
      advance();
      Poly rhs = term();
      acc = minus ? acc - rhs : acc + rhs;
    }
    return acc;
  }

  Poly term() {
    Poly acc = factor();
    while (true) {
      if (cur().kind == Tok::Star) {
        advance();
        acc = acc * factor();
      } else if (at_atom_start()) {
        acc = acc * factor();  // implicit multiplication
      } else {
        return acc;
      }
    }
  }

  Poly factor() {
    if (cur().kind == Tok::Minus) {
      advance();
      return -factor();
    }
    return power();
  }

  Poly power() {
    Poly base = atom();
    if (cur().kind != Tok::Caret) return base;
    advance();
    if (cur().kind != Tok::Int) throw ParseError("exponent must be an integer", cur().pos);
    const Integer& e = cur().number;
    if (e.sign() < 0 || e > Integer(static_cast<long>(kMaxExponent))) {
      throw ParseError("exponent out of range", cur().pos);
    }
    advance();
    return base.pow(static_cast<unsigned>(e.to_long()));
  }

  Poly atom() {
    switch (cur().kind) {
      case Tok::Int: {
        Poly c = Poly::constant(ring_, shape_.main_var, Value::of_integer(ring_, cur().number));
        advance();
        return c;
      }
      case Tok::Var: {
        Poly v = variable_poly(cur().var, cur().pos);
        advance();
        return v;
      }
      case Tok::LParen: {
        advance();
        Poly e = expr();
        if (cur().kind != Tok::RParen) throw ParseError("expected ')'", cur().pos);
        advance();
        return e;
      }
      default:
        throw ParseError("expected a number, variable or '('", cur().pos);
    }
  }

  Poly variable_poly(char v, std::size_t pos) {
    const std::string name(1, v);
    if (name == shape_.main_var) return Poly::variable(ring_, shape_.main_var);
    if (v == 't') {
      if (!shape_.with_t) {
        throw RingMismatchError("variable 't' not admitted by ring " + shape_.base->describe());
      }
      Value t = Value::of_poly(ring_, Poly::variable(shape_.base, "t"));
      return Poly::constant(ring_, shape_.main_var, t);
    }
    if (v == 'u') {
      // u must be the innermost polynomial layer of the base ring
      const RingPtr* layer = &shape_.base;
      while ((*layer)->kind() == RingKind::PolyRing && (*layer)->var() != "u") {
        layer = &(*layer)->base();
      }
      if ((*layer)->kind() != RingKind::PolyRing) {
        throw RingMismatchError("variable 'u' not admitted by ring " + shape_.base->describe());
      }
      Value u = Value::of_poly(*layer, Poly::variable((*layer)->base(), "u"));
      return Poly::constant(ring_, shape_.main_var, Value::convert(u, ring_));
    }
    throw ParseError(std::string("unknown variable '") + v + "'", pos);
  }

  std::vector<Token> toks_;
  PolyShape shape_;
  RingPtr ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(const std::string& text, const PolyShape& shape) {
  return Parser(tokenize(text), shape).parse();
}

}  // namespace schinzel
