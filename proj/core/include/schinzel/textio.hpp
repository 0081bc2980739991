#pragma once

#include <string>

#include "schinzel/poly.hpp"

namespace schinzel {

/// Ring selector: "Z", "Q", "Q[u]", "Z[u]", "Z[t]", or "Fp[u]:<prime>"
/// (e.g. "Fp[u]:2"). Returns the theorem ring Z the values live in.
RingPtr parse_ring(const std::string& text);

/// Where a parsed polynomial lives: main variable over base, with an
/// optional t layer in between (P(t, y) shapes).
struct PolyShape {
  RingPtr base;
  bool with_t = false;
  std::string main_var = "y";

  RingPtr coefficient_ring() const {
    return with_t ? Ring::poly_ring(base, "t") : base;
  }
};

/// Expression grammar: integer literals, variables y/t/u, + - * ^ with
/// nonnegative integer exponents, parentheses, implicit multiplication.
/// Precedence: ^ over unary minus over * over binary +/-. Errors:
/// ParseError with the offending offset (syntax, unknown variable) and
/// RingMismatchError when a variable is not admitted by the shape.
Poly parse_poly(const std::string& text, const PolyShape& shape);

}  // namespace schinzel
