#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

#include "schinzel/integer.hpp"

namespace schinzel {

/// Exact rational number; denominator > 0 and gcd(|num|, den) = 1,
/// maintained by GMP's canonicalization.
class Rational {
public:
  Rational() : q_(0) {}
  Rational(int v) : q_(v) {}
  Rational(long v) : q_(static_cast<signed long>(v)) {}
  explicit Rational(const Integer& z) : q_(z.raw()) {}
  Rational(const Integer& num, const Integer& den);
  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  Integer numerator() const { return Integer(mpz_class(q_.get_num())); }
  Integer denominator() const { return Integer(mpz_class(q_.get_den())); }

  bool is_zero() const { return mpq_sgn(q_.get_mpq_t()) == 0; }
  bool is_one() const { return mpq_cmp_ui(q_.get_mpq_t(), 1, 1) == 0; }
  bool is_integer() const { return mpz_cmp_ui(q_.get_den().get_mpz_t(), 1) == 0; }
  int sign() const { return mpq_sgn(q_.get_mpq_t()); }

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational inverse() const;

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ + b.q_)); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ - b.q_)); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ * b.q_)); }
  friend Rational operator/(const Rational& a, const Rational& b);

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }

  /// "n" when integral, otherwise "n/d".
  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const Rational& a);

  const mpq_class& raw() const { return q_; }

private:
  mpq_class q_;
};

}  // namespace schinzel
