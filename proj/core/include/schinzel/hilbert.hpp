#pragma once

#include <optional>
#include <vector>

#include "schinzel/budget.hpp"
#include "schinzel/coprime.hpp"
#include "schinzel/poly.hpp"

namespace schinzel {

/// Bivariate inputs P_i(t, y) are Poly in y whose coefficients live in
/// Z[t] (or in Z[u][t] / F_p[u][t] for the polynomial-ring variant).

struct PrimeResidueChoice {
  Integer prime;
  Integer residue;       // m_p with p not dividing P(m_p, y)
  std::size_t coeff_index;  // a coefficient of the product surviving mod p
};

/// Arithmetic progression a0*m + b0 of primitivity: every specialization
/// t* = b0 (mod a0) keeps each P_i(t*, y) primitive w.r.t. Z.
struct ProgressionWitness {
  Integer a0;
  Integer b0;
  std::vector<Integer> deltas;  // delta_i of each coefficient family
  std::vector<PrimeResidueChoice> records;
};

ProgressionWitness primitivity_progression(const std::vector<Poly>& ps,
                                           const Budget& budget = Budget::defaults());

/// Specialization of P(t, y) at t = m, staying over the same base ring.
Poly specialize_at(const Poly& p, const Value& m);

struct SpecializationEntry {
  Integer m;
  std::vector<bool> irreducible;  // per P_i, irreducibility over the ring Z
  bool all_irreducible = false;
};

struct SpecializationReport {
  std::vector<SpecializationEntry> entries;
  std::vector<Integer> hits;  // m with every P_i(m, y) irreducible in Z[y]
  long scanned = 0;
  long want = 0;
  long scan_cap = 0;
  bool exhausted = false;    // cap reached before `want` hits (reported, not fatal)
  bool interrupted = false;  // partial report flushed on an interrupt request
};

/// Scans m = b0 + a0*k for k = 0, 1, -1, 2, -2, ... against the Kronecker
/// irreducibility decision over Z[y], until `want` simultaneous hits or the
/// cap.
SpecializationReport irreducible_specializations(const std::vector<Poly>& ps,
                                                 const ProgressionWitness& progression,
                                                 long want, long scan_cap,
                                                 const Budget& budget = Budget::defaults());

struct PolyringScanEntry {
  Value m;
  bool primitive = false;
  bool no_factor_found = false;  // within the bounded search
};

struct PolyringScanReport {
  std::vector<PolyringScanEntry> entries;
  std::vector<Value> hits;
  long scanned = 0;
  long want = 0;
  bool exhausted = false;
  bool interrupted = false;
  int factor_degree_bound = 0;  // factors searched up to floor(deg_y / 2)
};

/// Scan-based irreducible specialization over Z in {Z[u], F_p[u]}: each
/// P(m, y) is tested for unit content and absence of factors of y-degree
/// 1..deg_y/2 by a Kronecker-substitution factor search (u mapped to a
/// fresh power block / large evaluation point to prune, candidates verified
/// by exact bivariate division). F_p[u] results are scan evidence only.
PolyringScanReport specialize_polyring_irreducible(const Poly& p, const SearchBox& box,
                                                   long want,
                                                   const Budget& budget = Budget::defaults());

/// Bounded factor search behind the polyring scan, exposed for testing:
/// a nontrivial factor of Q in Z[u][y] / F_p[u][y] with y-degree in
/// 1..deg_y/2, or nullopt when none exists within the bound.
std::optional<Poly> bivariate_factor_search(const Poly& q,
                                            const Budget& budget = Budget::defaults());

struct ModNEntry {
  Integer value;  // P_i(m)
  Integer prime;  // p_i = value (mod N), p_i not dividing N
};

struct ModNWitness {
  Integer m;
  Integer modulus;
  std::vector<ModNEntry> entries;
};

/// Corollary machinery: pairs the product of the P_i with the constant N,
/// walks the good-m progression, and completes values to primes by
/// Dirichlet search. Requires AV1.
std::vector<ModNWitness> mod_n_schinzel(const std::vector<Poly>& ps, const Integer& n,
                                        long want, const Budget& budget = Budget::defaults());

struct GoldbachWitness {
  Integer p;
  Integer q;
  Integer m;
};

/// 2n = p + q (mod N) with certified primes, via (P_1, P_2) = (y, 2n - y).
std::vector<GoldbachWitness> goldbach_mod_n(const Integer& two_n, const Integer& n, long want,
                                            const Budget& budget = Budget::defaults());

}  // namespace schinzel
