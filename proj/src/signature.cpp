#include "corkcalc/signature.hpp"

#include <numeric>
#include <string>
#include <utility>

#include "corkcalc/errors.hpp"

namespace corkcalc {

SymIntMatrix::SymIntMatrix(std::vector<std::vector<long>> rows) : size_(rows.size()) {
  if (size_ == 0) throw DomainError("SymIntMatrix: empty matrix");
  entries_.reserve(size_ * size_);
  for (const auto& row : rows) {
    if (row.size() != size_) throw DomainError("SymIntMatrix: matrix is not square");
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
  for (std::size_t i = 0; i < size_; ++i) {
    for (std::size_t j = i + 1; j < size_; ++j) {
      if ((*this)(i, j) != (*this)(j, i)) {
        throw DomainError("SymIntMatrix: entries (" + std::to_string(i) + "," + std::to_string(j) +
                          ") and (" + std::to_string(j) + "," + std::to_string(i) + ") differ");
      }
    }
  }
}

namespace {

using RationalMatrix = std::vector<std::vector<Rational>>;

void swap_index(RationalMatrix& a, std::size_t i, std::size_t j) {
  if (i == j) return;
  std::swap(a[i], a[j]);
  for (auto& row : a) std::swap(row[i], row[j]);
}

// Row/column operation e_i += e_j, a congruence.
void add_index(RationalMatrix& a, std::size_t target, std::size_t source) {
  for (std::size_t c = 0; c < a.size(); ++c) a[target][c] += a[source][c];
  for (auto& row : a) row[target] += row[source];
}

}  // namespace

int sym_signature(const SymIntMatrix& m) {
  const std::size_t n = m.size();
  RationalMatrix a(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j);
  }

  int signature = 0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && a[pivot][pivot] == 0) ++pivot;

    if (pivot == n) {
      // Zero diagonal on the remaining block: a nonzero a[i][j] spans a
      // hyperbolic pair, and e_i += e_j puts 2 a[i][j] on the diagonal.
      bool found = false;
      for (std::size_t i = k; i < n && !found; ++i) {
        for (std::size_t j = i + 1; j < n && !found; ++j) {
          if (a[i][j] != 0) {
            add_index(a, i, j);
            pivot = i;
            found = true;
          }
        }
      }
      if (!found) break;  // remaining block is zero
    }
    swap_index(a, k, pivot);

    const Rational d = a[k][k];
    signature += sgn(d);
    for (std::size_t r = k + 1; r < n; ++r) {
      if (a[r][k] == 0) continue;
      const Rational factor = a[r][k] / d;
      for (std::size_t c = k + 1; c < n; ++c) a[r][c] -= factor * a[k][c];
    }
    for (std::size_t r = k + 1; r < n; ++r) a[r][k] = a[k][r] = 0;
  }
  return signature;
}

int torus_signature_standard(const TorusKnotSpec& spec) {
  const auto [p, q] = spec;
  if (p < 2 || q < 2) throw DomainError("torus knot parameters must be >= 2");
  if (std::gcd(p, q) != 1) {
    throw DomainError("T(" + std::to_string(p) + "," + std::to_string(q) + ") is not a knot");
  }
  // i/p + j/q = s/N with N = pq. The sign is -1 when (s/N mod 2) lies in
  // (1/2, 3/2), i.e. N < 2r < 3N for r = s mod 2N.
  const long big_n = static_cast<long>(p) * q;
  int sigma = 0;
  for (long i = 1; i < p; ++i) {
    for (long j = 1; j < q; ++j) {
      const long twice_r = 2 * ((i * q + j * p) % (2 * big_n));
      if (twice_r == big_n || twice_r == 3 * big_n) {
        throw ConsistencyError("torus signature count hit a boundary point");
      }
      sigma += (twice_r > big_n && twice_r < 3 * big_n) ? -1 : 1;
    }
  }
  return sigma;
}

int torus_signature(const TorusKnotSpec& spec) { return -torus_signature_standard(spec); }

TorusKnotSpec torus_knot_for_kn(int n) {
  if (n < 1) throw DomainError("torus_knot_for_kn: index must be >= 1");
  return n % 2 == 1 ? TorusKnotSpec{2 * n + 4, 2 * n + 3} : TorusKnotSpec{2 * n + 2, 2 * n + 1};
}

int kn_signature_lower_bound(int n) {
  if (n < 1) throw DomainError("kn_signature_lower_bound: index must be >= 1");
  return n % 2 == 1 ? 0 : -(4 * n + 6);
}

int kn_signature_exact(int n) {
  if (n < 1 || n > kKnownExactSignatureMax) {
    throw DomainError("unknown exact value: sigma(k_" + std::to_string(n) +
                      ") is only determined for 1 <= n <= 4");
  }
  return n <= 2 ? 16 : 48;
}

}  // namespace corkcalc
