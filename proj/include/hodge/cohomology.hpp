// Target-space data entering the Virasoro operators: a homogeneous basis of
// even cohomology, its pairing, and multiplication by c_1(X).
#pragma once

#include <string>
#include <vector>

#include "hodge/numbers.hpp"

namespace hodge {

using Matrix = std::vector<std::vector<Rational>>;

inline Matrix zero_matrix(std::size_t n) { return Matrix(n, std::vector<Rational>(n, Rational(0))); }

inline Matrix identity_matrix(std::size_t n) {
  Matrix m = zero_matrix(n);
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

inline Matrix operator*(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.size();
  Matrix out = zero_matrix(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  return out;
}

inline Matrix transpose(const Matrix& a) {
  Matrix out = zero_matrix(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) out[j][i] = a[i][j];
  return out;
}

inline Matrix matrix_power(const Matrix& a, int e) {
  Matrix out = identity_matrix(a.size());
  for (int i = 0; i < e; ++i) out = out * a;
  return out;
}

/// Gauss-Jordan over the rationals; throws on a singular matrix.
inline Matrix inverse(Matrix a) {
  const std::size_t n = a.size();
  Matrix inv = identity_matrix(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) throw DomainError("singular matrix");
    std::swap(a[pivot], a[col]);
    std::swap(inv[pivot], inv[col]);
    const Rational scale = 1 / a[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] *= scale;
      inv[col][j] *= scale;
    }
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || a[row][col] == 0) continue;
      const Rational f = a[row][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[row][j] -= f * a[col][j];
        inv[row][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

/// H^*(X) with a basis gamma_a in H^{p_a,q_a}.
///   pairing[a][b] = int_X gamma_a gamma_b
///   c1[b][a]      = coefficient of gamma_b in c_1(X) gamma_a
struct CohomologyData {
  std::string name;
  int dimension = 0;
  std::vector<std::string> class_names;  // also the phase-space field names
  std::vector<int> p;
  std::vector<int> q;
  Matrix pairing;
  Matrix c1;
  std::size_t unit = 0;    // index of 1 in H^0
  Rational top_chern;      // int_X c_r(X)
  Rational c1_c_rminus1;   // int_X c_1(X) c_{r-1}(X)

  std::size_t size() const { return class_names.size(); }

  /// b_a = p_a + (1-r)/2
  Rational shifted_weight(std::size_t a) const { return Rational(p[a]) + make_rational(1 - dimension, 2); }

  /// Throws DomainError unless the data is usable by the general builder.
  void validate() const {
    const std::size_t n = size();
    if (p.size() != n || q.size() != n || pairing.size() != n || c1.size() != n)
      throw DomainError("cohomology data: inconsistent sizes");
    for (std::size_t a = 0; a < n; ++a) {
      if (p[a] != q[a]) throw DomainError("cohomology data: odd or off-diagonal class " + class_names[a]);
      if (pairing[a].size() != n || c1[a].size() != n) throw DomainError("cohomology data: ragged matrix");
    }
    if (pairing != transpose(pairing)) throw DomainError("cohomology data: pairing not symmetric");
    (void)inverse(pairing);
    // c_1 is self-adjoint: C^t eta = eta C
    if (transpose(c1) * pairing != transpose(transpose(c1) * pairing))
      throw DomainError("cohomology data: c_1 is not self-adjoint for the pairing");
  }

  /// (C^i)_{ab} = int_X c_1^i gamma_a gamma_b
  Matrix lowered_power(int i) const { return transpose(matrix_power(c1, i)) * pairing; }

  /// (C^i)^{ab}: both indices raised with the inverse pairing.
  Matrix raised_power(int i) const {
    const Matrix inv = inverse(pairing);
    return inv * lowered_power(i) * inv;
  }

  /// (1/48) int_X ((3-r) c_r - 2 c_1 c_{r-1})
  Rational grading_constant() const {
    return (Rational(3 - dimension) * top_chern - 2 * c1_c_rminus1) / 48;
  }
};

inline CohomologyData point_data() {
  CohomologyData x;
  x.name = "point";
  x.dimension = 0;
  x.class_names = {"t"};
  x.p = {0};
  x.q = {0};
  x.pairing = identity_matrix(1);
  x.c1 = zero_matrix(1);
  x.unit = 0;
  x.top_chern = 1;
  x.c1_c_rminus1 = 0;
  return x;
}

/// P^n with basis 1, H, ..., H^n. Field names follow the curve/surface
/// conventions for n = 1, 2 (t, s, r) and read t, h1, ..., hn otherwise.
inline CohomologyData projective_space(int n) {
  if (n < 1) throw DomainError("projective_space requires n >= 1");
  CohomologyData x;
  x.name = "P" + std::to_string(n);
  x.dimension = n;
  const std::size_t size = static_cast<std::size_t>(n) + 1;
  if (n == 1) {
    x.class_names = {"t", "s"};
  } else if (n == 2) {
    x.class_names = {"t", "s", "r"};
  } else {
    x.class_names.push_back("t");
    for (int j = 1; j <= n; ++j) x.class_names.push_back("h" + std::to_string(j));
  }
  for (int j = 0; j <= n; ++j) {
    x.p.push_back(j);
    x.q.push_back(j);
  }
  x.pairing = zero_matrix(size);
  for (std::size_t i = 0; i < size; ++i) x.pairing[i][size - 1 - i] = 1;
  x.c1 = zero_matrix(size);
  for (std::size_t a = 0; a + 1 < size; ++a) x.c1[a + 1][a] = n + 1;  // c_1 = (n+1)H
  x.unit = 0;
  x.top_chern = n + 1;
  x.c1_c_rminus1 = Rational(Integer(n + 1) * binomial(n + 1, n - 1));
  return x;
}

}  // namespace hodge
