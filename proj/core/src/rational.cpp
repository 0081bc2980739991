#include "schinzel/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace schinzel {

Rational::Rational(const Integer& num, const Integer& den) : q_(num.raw(), den.raw()) {
  if (den.is_zero()) throw std::invalid_argument("Rational: zero denominator");
  q_.canonicalize();
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::invalid_argument("Rational: inverse of zero");
  mpq_class r;
  mpq_inv(r.get_mpq_t(), q_.get_mpq_t());
  return Rational(std::move(r));
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw std::invalid_argument("Rational: division by zero");
  return Rational(mpq_class(a.q_ / b.q_));
}

std::string Rational::str() const { return q_.get_str(10); }

std::ostream& operator<<(std::ostream& os, const Rational& a) { return os << a.q_; }

}  // namespace schinzel
