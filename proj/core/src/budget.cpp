#include "schinzel/budget.hpp"

#include <stdexcept>

namespace schinzel {

namespace {

long scale_long(long v, const Rational& f) {
  Rational scaled = Rational(Integer(v)) * f;
  Integer floor_part = Integer::divexact(scaled.numerator() - Integer::mod_floor(scaled.numerator(), scaled.denominator()),
                                         scaled.denominator());
  if (!floor_part.fits_long()) return v;  // absurd scale, keep the default
  long out = floor_part.to_long();
  return out < 1 ? 1 : out;
}

int scale_int(int v, const Rational& f) {
  long s = scale_long(v, f);
  return s > 1'000'000 ? 1'000'000 : static_cast<int>(s);
}

}  // namespace

Budget Budget::scaled_by(const Rational& factor) const {
  if (factor.sign() <= 0) throw std::invalid_argument("budget scale must be positive");
  Budget b = *this;
  b.trial_division_limit = scale_long(trial_division_limit, factor);
  b.rho_iterations = scale_long(rho_iterations, factor);
  b.prime_scan_limit = scale_long(prime_scan_limit, factor);
  b.kronecker_degree_cap = scale_int(kronecker_degree_cap, factor);
  b.kronecker_combination_cap = scale_long(kronecker_combination_cap, factor);
  b.fp_trial_cap = scale_long(fp_trial_cap, factor);
  b.residue_cap = scale_long(residue_cap, factor);
  {
    Rational scaled = Rational(profile_cap) * factor;
    Integer num = scaled.numerator();
    Integer den = scaled.denominator();
    b.profile_cap = Integer::divexact(num - Integer::mod_floor(num, den), den);
    if (b.profile_cap < Integer(1)) b.profile_cap = Integer(1);
  }
  b.lambda_bound = scale_int(lambda_bound, factor);
  b.fallback_degree_cap = scale_int(fallback_degree_cap, factor);
  b.fallback_height_cap = scale_int(fallback_height_cap, factor);
  b.scan_cap = scale_long(scan_cap, factor);
  b.matrix_dim_cap = scale_long(matrix_dim_cap, factor);
  return b;
}

}  // namespace schinzel
