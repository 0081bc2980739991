#pragma once

#include <string>
#include <vector>

#include "schinzel/rational.hpp"
#include "schinzel/ring.hpp"

namespace schinzel {

/// Element of one of the menu rings. The payload is interpreted through the
/// ring descriptor: an Integer for Z and F_p (reduced into [0, p)), a
/// Rational for Q, and an ascending coefficient vector over the base ring
/// for polynomial and quotient rings (trimmed; quotients reduced).
/// Values are immutable once constructed and safe to share across threads.
class Value {
public:
  Value() : ring_(Ring::integers()) {}

  static Value zero(const RingPtr& r);
  static Value one(const RingPtr& r);
  /// Canonical image of an integer in r.
  static Value of_integer(const RingPtr& r, const Integer& n);
  static Value of_rational(const Rational& q);
  /// Wraps a polynomial over base B as an element of B[x] (or reduces it
  /// into a quotient of B[x]).
  static Value of_poly(const RingPtr& r, const Poly& p);

  const RingPtr& ring() const { return ring_; }
  bool is_zero() const;
  bool is_one() const;
  bool is_unit() const;

  const Integer& as_integer() const;   // Z and F_p payloads
  const Rational& as_rational() const; // Q payload
  Poly as_poly() const;                // PolyRing / Quotient payload
  /// Degree-0 view of a polynomial payload (or the scalar itself).
  bool is_constant_poly() const;

  friend Value operator+(const Value& a, const Value& b);
  friend Value operator-(const Value& a, const Value& b);
  friend Value operator*(const Value& a, const Value& b);
  Value operator-() const;
  friend bool operator==(const Value& a, const Value& b);
  friend bool operator!=(const Value& a, const Value& b) { return !(a == b); }

  Value pow(unsigned long e) const;

  static bool divides(const Value& d, const Value& a);
  static Value divexact(const Value& a, const Value& d);
  /// UFD gcd, unit-normalized (positive over Z, monic over F_p[x], ...).
  static Value gcd(const Value& a, const Value& b);
  /// Multiplicative inverse in a field.
  static Value inverse(const Value& a);

  /// The unit u such that *this / u is the normalized associate (1 for zero).
  Value canonical_unit() const;
  Value normalized() const;

  /// Total order inside one ring, for canonical sorting of sets.
  static int compare(const Value& a, const Value& b);

  /// Canonical rendering, descending degree, exactly re-parseable by the
  /// expression parser for integer-coefficient rings.
  std::string str() const;

  /// Image under the canonical homomorphism into `target` (embedding,
  /// reduction mod p, constant lift, quotient reduction). Throws
  /// RingMismatchError when no such map exists in the menu.
  static Value convert(const Value& v, const RingPtr& target);

private:
  friend class Poly;

  RingPtr ring_;
  Integer z_;
  Rational q_;
  std::vector<Value> c_;
};

}  // namespace schinzel
