#include "schinzel/profile.hpp"

#include <algorithm>

#include "schinzel/av.hpp"
#include "schinzel/bezout.hpp"
#include "schinzel/coprime.hpp"
#include "schinzel/errors.hpp"
#include "schinzel/poly_gcd.hpp"
#include "schinzel/residues.hpp"

namespace schinzel {

namespace {

Value normalized_value_gcd(const RingPtr& ring, const std::vector<Value>& values) {
  Value g = Value::zero(ring);
  for (const Value& v : values) g = Value::gcd(g, v);
  return g.normalized();
}

std::vector<Value> values_at(const std::vector<Poly>& ps, const Value& m) {
  std::vector<Value> out;
  out.reserve(ps.size());
  for (const Poly& p : ps) out.push_back(p.eval(m));
  return out;
}

}  // namespace

GcdProfile gcd_profile(const std::vector<Poly>& ps, const Budget& budget) {
  if (ps.size() < 2) throw PreconditionError("gcd_profile: needs s >= 2 polynomials");
  const RingPtr& ring = ps.front().coeff_ring();
  BezoutCertificate cert = bezout_delta(ps);
  GcdProfile out;
  out.delta = cert.delta;

  std::vector<Value> residues;
  Value delta_val = cert.delta;
  if (ring->kind() == RingKind::Integers) {
    Integer d = delta_val.as_integer().abs();
    if (d > budget.profile_cap) {
      throw CapExceeded("gcd_profile: |delta| = " + d.str() + " above the profile cap");
    }
    for (Integer m(0); m < d; m += Integer(1)) residues.push_back(Value::of_integer(ring, m));
    if (residues.empty()) residues.push_back(Value::zero(ring));  // unit delta: period 1
  } else if (ring->kind() == RingKind::PolyRing &&
             ring->base()->kind() == RingKind::PrimeField) {
    Poly dp = delta_val.as_poly();
    if (dp.degree() < 1) {
      residues.push_back(Value::zero(ring));
    } else {
      for (const Value& r : enumerate_fp_polys(ring, dp.degree() - 1, budget)) {
        residues.push_back(r);
      }
    }
  } else {
    throw RingMismatchError("gcd_profile: supported over Z and F_p[u], got " + ring->describe());
  }

  for (const Value& m : residues) {
    Value d_m = normalized_value_gcd(ring, values_at(ps, m));
    // all values zero would contradict coprimality over the fraction field
    if (d_m.is_zero() || !Value::divides(d_m, delta_val)) {
      throw Error("gcd_profile: d_m does not divide delta");
    }
    out.table.emplace_back(m, d_m);
  }

  // periodicity spot checks: d_m == d_{m + l*delta}
  std::vector<std::size_t> samples{0};
  if (out.table.size() > 2) samples.push_back(out.table.size() / 2);
  if (out.table.size() > 1) samples.push_back(out.table.size() - 1);
  for (std::size_t idx : samples) {
    const Value& m = out.table[idx].first;
    for (long l = -2; l <= 2; ++l) {
      if (l == 0) continue;
      Value shifted = m + Value::of_integer(ring, Integer(l)) * delta_val;
      Value d_shifted = normalized_value_gcd(ring, values_at(ps, shifted));
      if (d_shifted != out.table[idx].second) {
        throw Error("gcd_profile: periodicity violated at offset " + std::to_string(l));
      }
    }
  }
  return out;
}

DStar dstar(const std::vector<Poly>& ps, const Budget& budget) {
  GcdProfile profile = gcd_profile(ps, budget);
  const RingPtr& ring = ps.front().coeff_ring();
  DStar out;
  out.divisors.reserve(profile.table.size());
  for (const auto& [m, d] : profile.table) out.divisors.push_back(d);
  std::sort(out.divisors.begin(), out.divisors.end(),
            [](const Value& a, const Value& b) { return Value::compare(a, b) < 0; });
  out.divisors.erase(std::unique(out.divisors.begin(), out.divisors.end()), out.divisors.end());

  Value d_star = Value::zero(ring);
  for (const Value& d : out.divisors) d_star = Value::gcd(d_star, d);
  out.d_star = d_star.normalized();

  auto member = [&](const Value& v) {
    return std::find(out.divisors.begin(), out.divisors.end(), v) != out.divisors.end();
  };
  for (std::size_t i = 0; i < out.divisors.size(); ++i) {
    for (std::size_t j = i + 1; j < out.divisors.size(); ++j) {
      Value g = Value::gcd(out.divisors[i], out.divisors[j]).normalized();
      if (!member(g)) throw Error("dstar: set not stable under gcd");
    }
  }
  if (!member(out.d_star)) throw Error("dstar: d* not in D*");

  out.av2_holds = check_av2(ps, budget).holds;
  if (out.av2_holds != out.d_star.is_unit()) {
    throw Error("dstar: AV2 verdict inconsistent with d*");
  }
  return out;
}

Rational density_good_m(const std::vector<Poly>& ps, const Integer& lo, const Integer& hi,
                        const Budget& budget) {
  if (ps.size() < 2) throw PreconditionError("density_good_m: needs s >= 2 polynomials");
  const RingPtr& ring = ps.front().coeff_ring();
  if (ring->kind() != RingKind::Integers) {
    throw RingMismatchError("density_good_m: defined over Z, got " + ring->describe());
  }
  Integer length = hi - lo;
  if (length.sign() <= 0) throw PreconditionError("density_good_m: empty window");
  BezoutCertificate cert = bezout_delta(ps);
  Integer d = cert.delta.as_integer().abs();
  if (!Integer::divides(d, length)) {
    throw PreconditionError("density_good_m: window length " + length.str() +
                            " is not a multiple of |delta| = " + d.str());
  }
  if (length > budget.profile_cap) throw CapExceeded("density_good_m: window above cap");
  Integer good(0);
  for (Integer m = lo; m < hi; m += Integer(1)) {
    if (verify_coprime_values(ring, values_at(ps, Value::of_integer(ring, m))).coprime) {
      good += Integer(1);
    }
  }
  return Rational(good, length);
}

}  // namespace schinzel
