// Classical number sequences used by the closed forms and the operator
// coefficients: factorials, Bernoulli numbers, rising-product brackets.
#pragma once

#include <mutex>
#include <numeric>
#include <span>
#include <vector>

#include "hodge/rational.hpp"

namespace hodge {

inline Integer factorial(long n) {
  if (n < 0) throw DomainError("factorial of a negative integer");
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

/// Binomial coefficient; 0 whenever k < 0 or k > n (so C(a,-1) = 0).
inline Integer binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

/// n!! with (-1)!! = 0!! = 1.
inline Integer double_factorial(long n) {
  if (n < -1) throw DomainError("double factorial below -1");
  if (n <= 0) return 1;
  Integer out;
  mpz_2fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

/// n! / prod(parts_i!); parts must sum to n.
inline Integer multinomial(long n, std::span<const int> parts) {
  long total = 0;
  for (int p : parts) {
    if (p < 0) throw DomainError("multinomial: negative part");
    total += p;
  }
  if (total != n) throw DomainError("multinomial: parts do not sum to n");
  Integer out = factorial(n);
  for (int p : parts) out /= factorial(p);
  return out;
}

inline Rational harmonic(long n) {
  Rational h = 0;
  for (long k = 1; k <= n; ++k) h += make_rational(1, k);
  return h;
}

/// B_n with B_1 = -1/2, from sum_{k=0}^{n} C(n+1,k) B_k = 0.
inline Rational bernoulli(long n) {
  if (n < 0) throw DomainError("bernoulli index must be nonnegative");
  static std::mutex mutex;
  static std::vector<Rational> table{Rational(1)};
  std::lock_guard lock(mutex);
  for (long m = static_cast<long>(table.size()); m <= n; ++m) {
    Rational acc = 0;
    for (long k = 0; k < m; ++k) acc += Rational(binomial(m + 1, k)) * table[k];
    table.push_back(-acc / Rational(m + 1));
  }
  return table[static_cast<std::size_t>(n)];
}

/// Coefficients (constant term first) of prod_{j=0}^{k} (t + x + j).
inline std::vector<Rational> rising_polynomial(const Rational& x, int k) {
  std::vector<Rational> poly{Rational(1)};
  for (int j = 0; j <= k; ++j) {
    const Rational root = x + j;
    std::vector<Rational> next(poly.size() + 1, Rational(0));
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i] += root * poly[i];
      next[i + 1] += poly[i];
    }
    poly = std::move(next);
  }
  return poly;
}

/// [x]^k_i = e_{k+1-i}(x, x+1, ..., x+k): the coefficient of t^i in
/// prod_{j=0}^{k}(t+x+j). Out-of-range i gives 0; k = -1 is the empty product.
inline Rational bracket(const Rational& x, int k, int i) {
  if (k < -1) throw DomainError("bracket requires k >= -1");
  if (i < 0 || i > k + 1) return 0;
  return rising_polynomial(x, k)[static_cast<std::size_t>(i)];
}

inline Rational half_integer(long twice) { return make_rational(twice, 2); }

/// |s(n,2)| = (n-1)! H_{n-1}, the unsigned Stirling number of the first kind.
inline Integer stirling_s2(long n) {
  if (n < 2) throw DomainError("stirling_s2 requires n >= 2");
  const Rational value = Rational(factorial(n - 1)) * harmonic(n - 1);
  return value.get_num();
}

}  // namespace hodge
