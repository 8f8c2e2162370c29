#pragma once

#include <cstddef>
#include <vector>

#include "corkcalc/rational.hpp"

namespace corkcalc {

// Square symmetric integer matrix, row-major.
class SymIntMatrix {
 public:
  // Throws DomainError if rows are ragged, empty, or not symmetric.
  explicit SymIntMatrix(std::vector<std::vector<long>> rows);

  std::size_t size() const { return size_; }
  long operator()(std::size_t i, std::size_t j) const { return entries_[i * size_ + j]; }

 private:
  std::size_t size_ = 0;
  std::vector<long> entries_;
};

struct TorusKnotSpec {
  int p = 2;
  int q = 3;
  friend bool operator==(const TorusKnotSpec&, const TorusKnotSpec&) = default;
};

// Number of positive minus number of negative eigenvalues, by exact congruence
// diagonalization over the rationals.
int sym_signature(const SymIntMatrix& m);

// Signature of T(p,q) in the usual convention (the right-handed trefoil has -2),
// from the lattice-point count over 1 <= i < p, 1 <= j < q.
// Throws DomainError unless p, q >= 2 and gcd(p, q) = 1.
int torus_signature_standard(const TorusKnotSpec& spec);

// Signature in the reporting convention used throughout this library, where
// positive torus knots have positive signature: -torus_signature_standard.
int torus_signature(const TorusKnotSpec& spec);

// Torus knot that k_n reduces to after a bounded number of crossing changes:
// T(2n+4, 2n+3) for odd n, T(2n+2, 2n+1) for even n.
TorusKnotSpec torus_knot_for_kn(int n);

// Lower bound on sigma(k_n): 0 for odd n; -(4n+6) for even n, where 2n+3
// right-handed crossings must be changed to unknot.
int kn_signature_lower_bound(int n);

// Known exact values of sigma(k_n), available for 1 <= n <= 4 only.
// Throws DomainError outside that range.
int kn_signature_exact(int n);

inline constexpr int kKnownExactSignatureMax = 4;

}  // namespace corkcalc
