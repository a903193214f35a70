// Truncated univariate power series over the rationals.
#pragma once

#include <algorithm>
#include <vector>

#include "hodge/numbers.hpp"

namespace hodge {

/// sum_{i=0}^{cap} c_i t^i. Every operation works modulo t^{cap+1}.
class Series1D {
 public:
  explicit Series1D(int cap) : coeffs_(static_cast<std::size_t>(checked(cap)) + 1, Rational(0)) {}

  Series1D(int cap, std::vector<Rational> coeffs) : Series1D(cap) {
    for (std::size_t i = 0; i < coeffs.size() && i < coeffs_.size(); ++i) coeffs_[i] = coeffs[i];
  }

  static Series1D monomial(int cap, int power, const Rational& c = 1) {
    Series1D s(cap);
    if (power >= 0 && power <= cap) s.coeffs_[static_cast<std::size_t>(power)] = c;
    return s;
  }

  int cap() const { return static_cast<int>(coeffs_.size()) - 1; }

  const Rational& operator[](int i) const { return coeffs_.at(static_cast<std::size_t>(i)); }
  Rational& operator[](int i) { return coeffs_.at(static_cast<std::size_t>(i)); }

  const std::vector<Rational>& coefficients() const { return coeffs_; }

  friend Series1D operator+(const Series1D& a, const Series1D& b) {
    Series1D out(std::min(a.cap(), b.cap()));
    for (int i = 0; i <= out.cap(); ++i) out[i] = a[i] + b[i];
    return out;
  }

  friend Series1D operator-(const Series1D& a, const Series1D& b) {
    Series1D out(std::min(a.cap(), b.cap()));
    for (int i = 0; i <= out.cap(); ++i) out[i] = a[i] - b[i];
    return out;
  }

  friend Series1D operator*(const Series1D& a, const Series1D& b) {
    Series1D out(std::min(a.cap(), b.cap()));
    for (int i = 0; i <= out.cap(); ++i) {
      if (a[i] == 0) continue;
      for (int j = 0; i + j <= out.cap(); ++j) out[i + j] += a[i] * b[j];
    }
    return out;
  }

  friend Series1D operator*(const Rational& c, Series1D s) {
    for (auto& x : s.coeffs_) x *= c;
    return s;
  }

  /// Multiplicative inverse; the constant term must be nonzero.
  Series1D inverse() const {
    if (coeffs_[0] == 0) throw DomainError("series inverse: constant term is zero");
    Series1D out(cap());
    out[0] = 1 / coeffs_[0];
    for (int n = 1; n <= cap(); ++n) {
      Rational acc = 0;
      for (int i = 1; i <= n; ++i) acc += coeffs_[static_cast<std::size_t>(i)] * out[n - i];
      out[n] = -acc * out[0];
    }
    return out;
  }

  friend Series1D operator/(const Series1D& a, const Series1D& b) { return a * b.inverse(); }

  /// this(inner(t)); inner must have zero constant term.
  Series1D compose(const Series1D& inner) const {
    if (inner[0] != 0) throw DomainError("series compose: inner constant term is nonzero");
    const int c = std::min(cap(), inner.cap());
    Series1D out(c);
    Series1D power = Series1D::monomial(c, 0);
    for (int n = 0; n <= c; ++n) {
      if (coeffs_[static_cast<std::size_t>(n)] != 0) out = out + coeffs_[static_cast<std::size_t>(n)] * power;
      power = power * inner;
    }
    return out;
  }

  friend bool operator==(const Series1D& a, const Series1D& b) = default;

 private:
  static int checked(int cap) {
    if (cap < 0) throw DomainError("series cap must be nonnegative");
    return cap;
  }

  std::vector<Rational> coeffs_;
};

/// [b_0, ..., b_gmax] read off from (t/2)/sin(t/2) = sum_g b_g t^{2g}.
inline std::vector<Rational> b_sequence(int gmax) {
  if (gmax < 0) throw DomainError("b_sequence requires gmax >= 0");
  const int cap = 2 * gmax + 2;
  // sin(t/2)/(t/2) = sum_j (-1)^j (t/2)^{2j} / (2j+1)!
  Series1D sinc(cap);
  for (int j = 0; 2 * j <= cap; ++j) {
    Rational c = make_rational(Integer(1), factorial(2 * j + 1) * (Integer(1) << (2 * j)));
    sinc[2 * j] = (j % 2 == 0) ? c : Rational(-c);
  }
  const Series1D expansion = sinc.inverse();
  std::vector<Rational> b;
  b.reserve(static_cast<std::size_t>(gmax) + 1);
  for (int g = 0; g <= gmax; ++g) b.push_back(expansion[2 * g]);
  return b;
}

}  // namespace hodge
