#include <doctest.h>

#include <random>

#include "schinzel/int_matrix.hpp"

using namespace schinzel;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, long height) {
  std::uniform_int_distribution<long> dist(-height, height);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = Integer(dist(rng));
  }
  return m;
}

// product of random elementary matrices: unimodular by construction
IntMatrix random_unimodular(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<long> coef(-3, 3);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  IntMatrix m = IntMatrix::identity(n);
  for (int step = 0; step < 30; ++step) {
    std::size_t i = pick(rng), j = pick(rng);
    if (i == j) continue;
    m.subtract_multiple(i, j, Integer(coef(rng)));
  }
  return m;
}

}  // namespace

TEST_CASE("hnf of the identity") {
  IntMatrix id = IntMatrix::identity(2);
  HnfResult r = hermite_normal_form(id);
  CHECK(r.h == id);
  CHECK(r.u == id);
}

TEST_CASE("hnf column gcd") {
  IntMatrix m(2, 1);
  m.at(0, 0) = Integer(4);
  m.at(1, 0) = Integer(6);
  HnfResult r = hermite_normal_form(m);
  CHECK(r.h.at(0, 0) == Integer(2));
  CHECK(r.h.at(1, 0) == Integer(0));
  CHECK(r.u * m == r.h);
  CHECK(r.u.determinant().abs() == Integer(1));
}

TEST_CASE("hnf of a unimodular matrix is the identity") {
  std::mt19937_64 rng(4242);
  for (int trial = 0; trial < 25; ++trial) {
    IntMatrix m = random_unimodular(rng, 4);
    REQUIRE(m.determinant().abs() == Integer(1));
    HnfResult r = hermite_normal_form(m);
    CHECK(r.h == IntMatrix::identity(4));
    CHECK(r.u * m == r.h);
    CHECK(r.u.determinant().abs() == Integer(1));
  }
}

TEST_CASE("hnf properties on random matrices") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<std::size_t> dim(1, 6);
  for (int trial = 0; trial < 150; ++trial) {
    IntMatrix m = random_matrix(rng, dim(rng), dim(rng), 9);
    HnfResult r = hermite_normal_form(m);
    CHECK(r.u * m == r.h);
    CHECK(r.u.determinant().abs() == Integer(1));
    CHECK(is_row_hnf(r.h));
  }
}

TEST_CASE("hnf handles rank-deficient input") {
  IntMatrix m(3, 3);
  // rows 2*r0, r0, 0
  for (std::size_t j = 0; j < 3; ++j) {
    m.at(0, j) = Integer(static_cast<long>(2 * (j + 1)));
    m.at(1, j) = Integer(static_cast<long>(j + 1));
  }
  HnfResult r = hermite_normal_form(m);
  CHECK(r.u * m == r.h);
  CHECK(is_row_hnf(r.h));
  // rank 1: single nonzero row (1, 2, 3)
  CHECK(r.h.at(0, 0) == Integer(1));
  CHECK(r.h.at(1, 0) == Integer(0));
  CHECK(r.h.at(2, 2) == Integer(0));
}

TEST_CASE("bareiss determinant sanity") {
  IntMatrix m(3, 3);
  long vals[3][3] = {{2, 0, 1}, {1, 3, 2}, {0, 1, 4}};
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) m.at(i, j) = Integer(vals[i][j]);
  }
  // det = 2*(12-2) - 0 + 1*(1-0) = 21
  CHECK(m.determinant() == Integer(21));
}
