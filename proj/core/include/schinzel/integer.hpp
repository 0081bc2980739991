#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace schinzel {

/// Arbitrary-precision signed integer, a value wrapper over GMP's mpz.
/// GMP keeps the canonical form (no leading zero limbs, zero is non-negative).
class Integer {
public:
  Integer() : z_(0) {}
  Integer(int v) : z_(v) {}
  Integer(long v) : z_(static_cast<signed long>(v)) {}
  Integer(unsigned long v) : z_(v) {}
  explicit Integer(mpz_class z) : z_(std::move(z)) {}

  /// Base-10 with optional leading sign; rejects anything else.
  static std::optional<Integer> parse(std::string_view text);
  std::string str() const { return z_.get_str(10); }

  const mpz_class& raw() const { return z_; }
  mpz_class& raw() { return z_; }

  int sign() const { return mpz_sgn(z_.get_mpz_t()); }
  bool is_zero() const { return sign() == 0; }
  bool is_one() const { return mpz_cmp_ui(z_.get_mpz_t(), 1) == 0; }
  bool is_unit() const { return mpz_cmpabs_ui(z_.get_mpz_t(), 1) == 0; }
  bool is_even() const { return mpz_even_p(z_.get_mpz_t()) != 0; }

  Integer abs() const { return Integer(mpz_class(::abs(z_))); }
  Integer operator-() const { return Integer(mpz_class(-z_)); }

  bool fits_long() const { return mpz_fits_slong_p(z_.get_mpz_t()) != 0; }
  long to_long() const { return mpz_get_si(z_.get_mpz_t()); }
  double to_double() const { return z_.get_d(); }
  std::size_t bit_length() const { return mpz_sizeinbase(z_.get_mpz_t(), 2); }

  friend Integer operator+(const Integer& a, const Integer& b) { return Integer(mpz_class(a.z_ + b.z_)); }
  friend Integer operator-(const Integer& a, const Integer& b) { return Integer(mpz_class(a.z_ - b.z_)); }
  friend Integer operator*(const Integer& a, const Integer& b) { return Integer(mpz_class(a.z_ * b.z_)); }

  Integer& operator+=(const Integer& b) { z_ += b.z_; return *this; }
  Integer& operator-=(const Integer& b) { z_ -= b.z_; return *this; }
  Integer& operator*=(const Integer& b) { z_ *= b.z_; return *this; }

  friend bool operator==(const Integer& a, const Integer& b) { return a.z_ == b.z_; }
  friend bool operator!=(const Integer& a, const Integer& b) { return a.z_ != b.z_; }
  friend bool operator<(const Integer& a, const Integer& b) { return a.z_ < b.z_; }
  friend bool operator<=(const Integer& a, const Integer& b) { return a.z_ <= b.z_; }
  friend bool operator>(const Integer& a, const Integer& b) { return a.z_ > b.z_; }
  friend bool operator>=(const Integer& a, const Integer& b) { return a.z_ >= b.z_; }

  friend std::ostream& operator<<(std::ostream& os, const Integer& a);

  /// Truncated division (C semantics), as a (quotient, remainder) pair.
  static void tdiv_qr(const Integer& a, const Integer& b, Integer& q, Integer& r);
  /// Floor division remainder in [0, |b|).
  static Integer mod_floor(const Integer& a, const Integer& b);

  /// Exact division; the caller guarantees divisibility.
  static Integer divexact(const Integer& a, const Integer& b);
  static bool divides(const Integer& d, const Integer& a);

  static Integer gcd(const Integer& a, const Integer& b);
  static Integer lcm(const Integer& a, const Integer& b);
  static Integer pow(const Integer& base, unsigned long e);
  /// base^e mod m, m > 0.
  static Integer powm(const Integer& base, const Integer& e, const Integer& m);
  static Integer isqrt(const Integer& a);
  bool is_perfect_square() const { return sign() >= 0 && mpz_perfect_square_p(z_.get_mpz_t()) != 0; }

private:
  mpz_class z_;
};

struct ExtGcdResult {
  Integer g;  // gcd, >= 0
  Integer x;  // a*x + b*y = g
  Integer y;
};

/// Extended Euclid with gcd(0,0) = 0 and cofactors (0,0) in that case.
ExtGcdResult ext_gcd(const Integer& a, const Integer& b);

}  // namespace schinzel
