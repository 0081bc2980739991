#include "schinzel/integer.hpp"

#include <cctype>
#include <ostream>

namespace schinzel {

std::optional<Integer> Integer::parse(std::string_view text) {
  if (text.empty()) return std::nullopt;
  std::size_t i = 0;
  if (text[0] == '+' || text[0] == '-') i = 1;
  if (i == text.size()) return std::nullopt;
  for (std::size_t j = i; j < text.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(text[j]))) return std::nullopt;
  }
  mpz_class z;
  if (mpz_set_str(z.get_mpz_t(), std::string(text).c_str(), 10) != 0) return std::nullopt;
  return Integer(std::move(z));
}

std::ostream& operator<<(std::ostream& os, const Integer& a) { return os << a.z_; }

void Integer::tdiv_qr(const Integer& a, const Integer& b, Integer& q, Integer& r) {
  mpz_tdiv_qr(q.z_.get_mpz_t(), r.z_.get_mpz_t(), a.z_.get_mpz_t(), b.z_.get_mpz_t());
}

Integer Integer::mod_floor(const Integer& a, const Integer& b) {
  Integer r;
  mpz_mod(r.z_.get_mpz_t(), a.z_.get_mpz_t(), b.z_.get_mpz_t());
  return r;
}

Integer Integer::divexact(const Integer& a, const Integer& b) {
  Integer q;
  mpz_divexact(q.z_.get_mpz_t(), a.z_.get_mpz_t(), b.z_.get_mpz_t());
  return q;
}

bool Integer::divides(const Integer& d, const Integer& a) {
  if (d.is_zero()) return a.is_zero();
  return mpz_divisible_p(a.z_.get_mpz_t(), d.z_.get_mpz_t()) != 0;
}

Integer Integer::gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.z_.get_mpz_t(), a.z_.get_mpz_t(), b.z_.get_mpz_t());
  return g;
}

Integer Integer::lcm(const Integer& a, const Integer& b) {
  Integer l;
  mpz_lcm(l.z_.get_mpz_t(), a.z_.get_mpz_t(), b.z_.get_mpz_t());
  return l;
}

Integer Integer::pow(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.z_.get_mpz_t(), base.z_.get_mpz_t(), e);
  return r;
}

Integer Integer::powm(const Integer& base, const Integer& e, const Integer& m) {
  Integer r;
  mpz_powm(r.z_.get_mpz_t(), base.z_.get_mpz_t(), e.z_.get_mpz_t(), m.z_.get_mpz_t());
  return r;
}

Integer Integer::isqrt(const Integer& a) {
  Integer r;
  mpz_sqrt(r.z_.get_mpz_t(), a.z_.get_mpz_t());
  return r;
}

ExtGcdResult ext_gcd(const Integer& a, const Integer& b) {
  if (a.is_zero() && b.is_zero()) return {Integer(0), Integer(0), Integer(0)};
  ExtGcdResult out;
  mpz_gcdext(out.g.raw().get_mpz_t(), out.x.raw().get_mpz_t(), out.y.raw().get_mpz_t(),
             a.raw().get_mpz_t(), b.raw().get_mpz_t());
  return out;
}

}  // namespace schinzel
