#include <doctest.h>

#include <cstdlib>
#include <numeric>
#include <random>
#include <vector>

#include "corkcalc/errors.hpp"
#include "corkcalc/signature.hpp"

using namespace corkcalc;

namespace {

using Matrix = std::vector<std::vector<long>>;

Matrix multiply(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.size();
  Matrix c(n, std::vector<long>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

Matrix transpose(const Matrix& a) {
  Matrix t(a.size(), std::vector<long>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) t[j][i] = a[i][j];
  return t;
}

// Product of a few elementary row additions and swaps: determinant +-1.
Matrix random_unimodular(std::mt19937_64& rng, std::size_t n) {
  Matrix a(n, std::vector<long>(n, 0));
  for (std::size_t i = 0; i < n; ++i) a[i][i] = 1;
  std::uniform_int_distribution<std::size_t> index(0, n - 1);
  std::uniform_int_distribution<long> factor(-2, 2);
  for (int step = 0; step < 6; ++step) {
    const std::size_t i = index(rng), j = index(rng);
    if (i == j) continue;
    if (step % 3 == 2) {
      std::swap(a[i], a[j]);
    } else {
      const long f = factor(rng);
      for (std::size_t c = 0; c < n; ++c) a[i][c] += f * a[j][c];
    }
  }
  return a;
}

// Symmetrized Seifert form of T(2, q): tridiagonal, -2 on the diagonal, 1 beside it.
Matrix two_strand_form(int q) {
  const std::size_t n = static_cast<std::size_t>(q - 1);
  Matrix m(n, std::vector<long>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    m[i][i] = -2;
    if (i + 1 < n) m[i][i + 1] = m[i + 1][i] = 1;
  }
  return m;
}

}  // namespace

TEST_CASE("sym_signature examples") {
  CHECK(sym_signature(SymIntMatrix(Matrix{{2}})) == 1);
  CHECK(sym_signature(SymIntMatrix({{0, 1}, {1, 0}})) == 0);
  CHECK(sym_signature(SymIntMatrix({{-2, 1}, {1, -2}})) == -2);
  CHECK(sym_signature(SymIntMatrix({{0, 0}, {0, 0}})) == 0);
  // Eigenvalues 2, -1, -1; every diagonal entry is zero.
  CHECK(sym_signature(SymIntMatrix({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}})) == -1);
  // Hyperbolic pair plus a positive direction, zero pivots first.
  CHECK(sym_signature(SymIntMatrix({{0, 3, 0}, {3, 0, 0}, {0, 0, 5}})) == 1);
}

TEST_CASE("SymIntMatrix rejects bad shapes") {
  CHECK_THROWS_AS(SymIntMatrix({{1, 2}, {3, 4}}), DomainError);
  CHECK_THROWS_AS(SymIntMatrix({{1, 2}, {2}}), DomainError);
  CHECK_THROWS_AS(SymIntMatrix(Matrix{}), DomainError);
}

TEST_CASE("congruence by unimodular matrices preserves the signature") {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<std::size_t> size(1, 6);
  std::uniform_int_distribution<long> diag(-3, 3);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = size(rng);
    Matrix d(n, std::vector<long>(n, 0));
    int expected = 0;
    for (std::size_t i = 0; i < n; ++i) {
      d[i][i] = diag(rng);
      expected += (d[i][i] > 0) - (d[i][i] < 0);
    }
    const Matrix a = random_unimodular(rng, n);
    const Matrix conjugate = multiply(transpose(a), multiply(d, a));
    CAPTURE(trial);
    REQUIRE(sym_signature(SymIntMatrix(conjugate)) == expected);

    const Matrix b = random_unimodular(rng, n);
    const Matrix twice = multiply(transpose(b), multiply(conjugate, b));
    REQUIRE(sym_signature(SymIntMatrix(twice)) == expected);
  }
}

TEST_CASE("torus_signature anchors") {
  CHECK(torus_signature({6, 5}) == 16);
  CHECK(torus_signature({10, 9}) == 48);
  CHECK(torus_signature({2, 3}) == 2);
  CHECK(torus_signature({2, 3}) == -sym_signature(SymIntMatrix({{-2, 1}, {1, -2}})));
  CHECK(torus_signature_standard({6, 5}) == -16);
}

TEST_CASE("two-strand torus knots match their Seifert forms") {
  for (int q = 3; q <= 21; q += 2) {
    CAPTURE(q);
    CHECK(torus_signature_standard({2, q}) == sym_signature(SymIntMatrix(two_strand_form(q))));
  }
}

TEST_CASE("torus_signature is symmetric and bounded") {
  for (int p = 2; p <= 15; ++p) {
    for (int q = 2; q <= 15; ++q) {
      if (std::gcd(p, q) != 1) continue;
      CAPTURE(p);
      CAPTURE(q);
      CHECK(torus_signature({p, q}) == torus_signature({q, p}));
      CHECK(std::abs(torus_signature({p, q})) <= (p - 1) * (q - 1));
      CHECK(torus_signature({p, q}) % 2 == 0);
    }
  }
}

TEST_CASE("torus_signature domain") {
  CHECK_THROWS_AS(torus_signature({4, 6}), DomainError);
  CHECK_THROWS_AS(torus_signature({1, 5}), DomainError);
  CHECK_THROWS_AS(torus_signature({5, 5}), DomainError);
}

TEST_CASE("k_n data") {
  CHECK(torus_knot_for_kn(1) == TorusKnotSpec{6, 5});
  CHECK(torus_knot_for_kn(2) == TorusKnotSpec{6, 5});
  CHECK(torus_knot_for_kn(3) == TorusKnotSpec{10, 9});
  CHECK(torus_knot_for_kn(4) == TorusKnotSpec{10, 9});
  CHECK(torus_knot_for_kn(5) == TorusKnotSpec{14, 13});

  CHECK(kn_signature_lower_bound(1) == 0);
  CHECK(kn_signature_lower_bound(2) == -14);
  CHECK(kn_signature_lower_bound(4) == -22);
  CHECK(kn_signature_lower_bound(7) == 0);

  CHECK(kn_signature_exact(1) == 16);
  CHECK(kn_signature_exact(2) == 16);
  CHECK(kn_signature_exact(3) == 48);
  CHECK(kn_signature_exact(4) == 48);
  CHECK_THROWS_AS(kn_signature_exact(5), DomainError);
  CHECK_THROWS_AS(kn_signature_exact(0), DomainError);
  CHECK_THROWS_AS(kn_signature_lower_bound(0), DomainError);
  CHECK_THROWS_AS(torus_knot_for_kn(0), DomainError);
}

TEST_CASE("known signatures of k_n are consistent") {
  for (int n = 1; n <= kKnownExactSignatureMax; ++n) {
    CAPTURE(n);
    CHECK(kn_signature_exact(n) % 8 == 0);
    CHECK(kn_signature_exact(n) >= kn_signature_lower_bound(n));
    CHECK(std::abs(torus_signature(torus_knot_for_kn(n)) - kn_signature_exact(n)) <= 6);
  }
}
