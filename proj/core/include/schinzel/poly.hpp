#pragma once

#include <string>
#include <vector>

#include "schinzel/value.hpp"

namespace schinzel {

/// Dense univariate polynomial over a coefficient ring from the menu.
/// Coefficients are stored in ascending degree order with no trailing
/// zeros; the zero polynomial is the empty sequence. The variable name is
/// display metadata and does not participate in equality.
class Poly {
public:
  Poly() : ring_(Ring::integers()), var_("y") {}
  explicit Poly(RingPtr coeff_ring, std::string var = "y")
      : ring_(std::move(coeff_ring)), var_(std::move(var)) {}

  static Poly from_coeffs(RingPtr coeff_ring, std::string var, std::vector<Value> coeffs);
  static Poly constant(const RingPtr& coeff_ring, const std::string& var, const Value& c);
  static Poly variable(const RingPtr& coeff_ring, const std::string& var);
  static Poly monomial(const RingPtr& coeff_ring, const std::string& var, const Value& c,
                       unsigned degree);

  const RingPtr& coeff_ring() const { return ring_; }
  const std::string& var() const { return var_; }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  /// coeff(i) for any i >= 0; zero beyond the degree.
  Value coeff(std::size_t i) const;
  const Value& lead() const;
  Value constant_value() const { return coeff(0); }
  const std::vector<Value>& coeffs() const { return c_; }

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly operator-() const;
  friend bool operator==(const Poly& a, const Poly& b);
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly scaled(const Value& s) const;
  /// Multiplication by x^k.
  Poly shifted(unsigned k) const;
  Poly pow(unsigned e) const;
  Poly derivative() const;

  /// Horner evaluation at m in the coefficient ring.
  Value eval(const Value& m) const;
  /// Evaluation after mapping every coefficient into `target` (e.g. a
  /// residue scan in F_p or F_p[u]/(f)). m must live in `target`.
  Value eval_in(const RingPtr& target, const Value& m) const;

  /// Coefficient-wise Value::convert into a new coefficient ring.
  Poly convert_coeffs(const RingPtr& target) const;

  /// Renders with descending degree by default.
  std::string str(bool descending = true) const;

  /// Total order within one coefficient ring (degree, then coefficients
  /// from the top). Used for canonical sorting of factor lists.
  static int compare(const Poly& a, const Poly& b);

private:
  friend class Value;

  void trim();

  RingPtr ring_;
  std::string var_;
  std::vector<Value> c_;
};

struct PolyDivMod {
  Poly quotient;
  Poly remainder;
};

/// Long division; requires the divisor's leading coefficient to be
/// invertible (field coefficients) or the divisor to be monic.
PolyDivMod poly_divmod(const Poly& a, const Poly& b);

/// Pseudo-division: lead(b)^(deg a - deg b + 1) * a = q*b + r with
/// deg r < deg b. Valid over any menu ring.
struct PolyPseudoDiv {
  Poly quotient;
  Poly remainder;
  Value scale;  // lead(b)^(deg a - deg b + 1)
};
PolyPseudoDiv poly_pseudo_divmod(const Poly& a, const Poly& b);

/// Exact divisibility test / division over an integral domain.
bool poly_divides(const Poly& d, const Poly& a);
Poly poly_divexact(const Poly& a, const Poly& d);

}  // namespace schinzel
