#include "oracles.hpp"

#include "schinzel/errors.hpp"
#include "schinzel/numtheory.hpp"
#include "schinzel/rational.hpp"

namespace schinzel::oracle {

std::vector<bool> prime_sieve(long n) {
  std::vector<bool> sieve(static_cast<std::size_t>(n) + 1, true);
  sieve[0] = false;
  if (n >= 1) sieve[1] = false;
  for (long p = 2; p * p <= n; ++p) {
    if (!sieve[static_cast<std::size_t>(p)]) continue;
    for (long q = p * p; q <= n; q += p) sieve[static_cast<std::size_t>(q)] = false;
  }
  return sieve;
}

Value sylvester_resultant(const Poly& a, const Poly& b) {
  const RingPtr& ring = a.coeff_ring();
  const int m = a.degree();
  const int n = b.degree();
  if (m < 0 || n < 0) throw PreconditionError("sylvester_resultant: zero input");
  const int size = m + n;
  if (size == 0) return Value::one(ring);

  std::vector<std::vector<Value>> s(static_cast<std::size_t>(size),
                                    std::vector<Value>(static_cast<std::size_t>(size),
                                                       Value::zero(ring)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j <= m; ++j) {
      s[i][i + j] = a.coeff(static_cast<std::size_t>(m - j));
    }
  }
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j <= n; ++j) {
      s[n + i][i + j] = b.coeff(static_cast<std::size_t>(n - j));
    }
  }

  // Bareiss fraction-free elimination
  bool negate = false;
  Value prev = Value::one(ring);
  for (int k = 0; k + 1 < size; ++k) {
    if (s[k][k].is_zero()) {
      int swap_row = k + 1;
      while (swap_row < size && s[swap_row][k].is_zero()) ++swap_row;
      if (swap_row == size) return Value::zero(ring);
      std::swap(s[k], s[swap_row]);
      negate = !negate;
    }
    for (int i = k + 1; i < size; ++i) {
      for (int j = k + 1; j < size; ++j) {
        s[i][j] = Value::divexact(s[k][k] * s[i][j] - s[i][k] * s[k][j], prev);
      }
      s[i][k] = Value::zero(ring);
    }
    prev = s[k][k];
  }
  Value det = s[static_cast<std::size_t>(size - 1)][static_cast<std::size_t>(size - 1)];
  return negate ? -det : det;
}

namespace {

Poly lagrange_q(const std::vector<long>& xs, const std::vector<Integer>& ws,
                const std::string& var) {
  const RingPtr& q = Ring::rationals();
  Poly acc(q, var);
  for (std::size_t j = 0; j < xs.size(); ++j) {
    Poly basis = Poly::constant(q, var, Value::one(q));
    Rational denom(1);
    for (std::size_t k = 0; k < xs.size(); ++k) {
      if (k == j) continue;
      basis = basis * Poly::from_coeffs(
                          q, var, {Value::of_rational(Rational(-xs[k])), Value::one(q)});
      denom = denom * Rational(xs[j] - xs[k]);
    }
    acc = acc + basis.scaled(Value::of_rational(Rational(ws[j]) / denom));
  }
  return acc;
}

}  // namespace

bool has_factor_of_degree(const Poly& primitive, int d) {
  const RingPtr& z = Ring::integers();
  std::vector<long> xs;
  std::vector<std::vector<Integer>> div_lists;
  long x = 0;
  while (static_cast<int>(xs.size()) <= d) {
    Value v = primitive.eval(Value::of_integer(z, Integer(x)));
    if (v.is_zero()) return true;  // integer root: linear factor
    std::vector<Integer> ds = divisors(factorize(v.as_integer(), Budget::defaults()));
    if (!xs.empty()) {
      std::vector<Integer> signed_ds;
      for (const Integer& dd : ds) {
        signed_ds.push_back(dd);
        signed_ds.push_back(-dd);
      }
      ds = std::move(signed_ds);
    }
    xs.push_back(x);
    div_lists.push_back(std::move(ds));
    x = x >= 0 ? -(x + 1) : -x;  // 0, -1, 1, -2, 2, ...
  }

  std::vector<std::size_t> idx(div_lists.size(), 0);
  while (true) {
    std::vector<Integer> ws;
    for (std::size_t j = 0; j < idx.size(); ++j) ws.push_back(div_lists[j][idx[j]]);
    Poly cand_q = lagrange_q(xs, ws, primitive.var());
    if (cand_q.degree() == d) {
      bool integral = true;
      std::vector<Value> zc;
      for (const Value& c : cand_q.coeffs()) {
        if (!c.as_rational().is_integer()) {
          integral = false;
          break;
        }
        zc.push_back(Value::of_integer(z, c.as_rational().numerator()));
      }
      if (integral) {
        Poly cand = Poly::from_coeffs(z, primitive.var(), std::move(zc));
        if (poly_divides(cand, primitive)) return true;
      }
    }
    std::size_t j = 0;
    for (; j < idx.size(); ++j) {
      if (++idx[j] < div_lists[j].size()) break;
      idx[j] = 0;
    }
    if (j == idx.size()) break;
  }
  return false;
}

bool irreducible_primitive_z(const Poly& primitive) {
  if (primitive.degree() <= 0) return false;
  for (int d = 1; 2 * d <= primitive.degree(); ++d) {
    if (has_factor_of_degree(primitive, d)) return false;
  }
  return true;
}

}  // namespace schinzel::oracle
