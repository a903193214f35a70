// Pure psi intersection numbers <tau_{k_1} ... tau_{k_n}>_g on M_{g,n}-bar,
// determined by the point Virasoro constraints L_k Z = 0, k >= -1.
#pragma once

#include <algorithm>
#include <vector>

#include "hodge/memo.hpp"
#include "hodge/numbers.hpp"
#include "hodge/series.hpp"

namespace hodge {

namespace detail {

/// Coefficient of (t_m - delta_{m1}) d_{m+k} in the point operator L_k:
/// Gamma(k+m+3/2)/Gamma(m+1/2) = prod_{j=0}^{k} (m+1/2+j).
inline Rational point_linear_coefficient(int k, int m) { return bracket(half_integer(2 * m + 1), k, 0); }

/// Coefficient of (hbar/2) d_m d_{k-m-1} in L_k:
/// (-1)^{m+1} Gamma(k-m+1/2)/Gamma(-m-1/2) = (-1)^{m+1} prod_{j=0}^{k} (-m-1/2+j).
inline Rational point_quadratic_coefficient(int k, int m) {
  const Rational p = bracket(half_integer(-2 * m - 1), k, 0);
  return (m % 2 == 0) ? Rational(-p) : p;
}

inline std::vector<int> without(const std::vector<int>& ks, std::size_t pos) {
  std::vector<int> out;
  out.reserve(ks.size() - 1);
  for (std::size_t i = 0; i < ks.size(); ++i)
    if (i != pos) out.push_back(ks[i]);
  return out;
}

/// Calls f(first, second) for every split of ks into two sub-multisets by
/// position (2^n ordered splits).
template <class F>
void for_each_split(const std::vector<int>& ks, F&& f) {
  const std::size_t n = ks.size();
  for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
    std::vector<int> a, b;
    for (std::size_t i = 0; i < n; ++i) ((mask >> i) & 1UL ? a : b).push_back(ks[i]);
    f(a, b);
  }
}

Rational psi_value(int g, std::vector<int> ks);

/// Unstable or dimension-violating integrals are zero; everything else is
/// memoised in the shared cache.
inline Rational psi_or_zero(int g, std::vector<int> ks) {
  if (g < 0 || !is_stable(g, ks.size())) return 0;
  for (int k : ks)
    if (k < 0) return 0;
  return psi_value(g, std::move(ks));
}

inline Rational psi_compute(const IntegralKey& key) {
  const int g = key.genus;
  const auto& ks = key.exponents;  // descending
  const std::size_t n = ks.size();

  if (g == 0 && n == 3 && ks[0] == 0) return 1;
  if (g == 1 && n == 1 && ks[0] == 1) return make_rational(1, 24);

  // L_{-1}: string equation removes a tau_0.
  if (ks.back() == 0) {
    const auto rest = without(ks, n - 1);
    Rational acc = 0;
    for (std::size_t i = 0; i < rest.size(); ++i) {
      if (rest[i] == 0) continue;
      auto lowered = rest;
      --lowered[i];
      acc += psi_or_zero(g, lowered);
    }
    return acc;
  }

  // L_0: dilaton equation removes a tau_1.
  if (ks.back() == 1) {
    const auto rest = without(ks, n - 1);
    return Rational(2 * g - 2 + static_cast<long>(rest.size())) * psi_or_zero(g, rest);
  }

  // L_k with k = top - 1 >= 1 isolates tau_{top} through its -delta_{m1} term.
  const int k = ks[0] - 1;
  const auto rest = without(ks, 0);
  Rational acc = 0;
  for (std::size_t i = 0; i < rest.size(); ++i) {
    auto raised = rest;
    raised[i] += k;
    acc += point_linear_coefficient(k, rest[i]) * psi_or_zero(g, raised);
  }
  for (int m = 0; m <= k - 1; ++m) {
    const Rational q = point_quadratic_coefficient(k, m) / 2;
    auto joined = rest;
    joined.push_back(m);
    joined.push_back(k - m - 1);
    Rational inner = psi_or_zero(g - 1, joined);
    for_each_split(rest, [&](const std::vector<int>& a, const std::vector<int>& b) {
      for (int g1 = 0; g1 <= g; ++g1) {
        auto left = a;
        left.push_back(m);
        auto right = b;
        right.push_back(k - m - 1);
        const Rational l = psi_or_zero(g1, left);
        if (l == 0) continue;
        inner += l * psi_or_zero(g - g1, right);
      }
    });
    acc += q * inner;
  }
  return acc / point_linear_coefficient(k, 1);
}

inline Rational psi_value(int g, std::vector<int> ks) {
  IntegralKey key(ClassTag::None, g, std::move(ks));
  if (!key.dimension_matches()) return 0;
  return integral_cache().get_or_compute(key, [&] { return psi_compute(key); });
}

}  // namespace detail

/// <tau_{k_1} ... tau_{k_n}>_g. Exponents may be given in any order.
/// Throws DomainError for unstable (g,n) or negative exponents.
inline Rational psi_integral(int g, std::vector<int> ks) {
  if (g < 0) throw DomainError("negative genus");
  if (ks.empty() || !is_stable(g, ks.size()))
    throw DomainError("unstable moduli space M_{" + std::to_string(g) + "," + std::to_string(ks.size()) + "}");
  for (int k : ks)
    if (k < 0) throw DomainError("negative psi exponent");
  return detail::psi_value(g, std::move(ks));
}

/// Calls f(multiset) for every multiset of descendent levels with total
/// weight sum(k+1) <= max_weight; levels are listed descending.
template <class F>
void for_each_multiset(int max_weight, F&& f) {
  std::vector<int> current;
  auto rec = [&](auto&& self, int remaining, int max_level) -> void {
    f(static_cast<const std::vector<int>&>(current));
    for (int k = std::min(max_level, remaining - 1); k >= 0; --k) {
      current.push_back(k);
      self(self, remaining - (k + 1), k);
      current.pop_back();
    }
  };
  rec(rec, max_weight, max_weight - 1);
}

/// Z = exp(sum_g hbar^{g-1} F_g) for a point, truncated at descendent weight
/// weight_cap and hbar power hbar_cap. Field 0 is the t coordinate family.
inline TruncatedSeries point_partition(int weight_cap, int hbar_cap) {
  constexpr int kUnbounded = 1 << 20;
  TruncatedSeries free_energy(weight_cap, kUnbounded);
  for_each_multiset(weight_cap, [&](const std::vector<int>& ks) {
    const long n = static_cast<long>(ks.size());
    long sum = 0;
    for (int k : ks) sum += k;
    if ((sum - n + 3) % 3 != 0) return;
    const long g = (sum - n + 3) / 3;
    if (g < 0 || !is_stable(static_cast<int>(g), ks.size())) return;
    Monomial m;
    m.hbar = static_cast<int>(g) - 1;
    for (int k : ks) m.powers[Coordinate{0, k}] += 1;
    Integer symmetry = 1;
    for (const auto& [c, e] : m.powers) symmetry *= factorial(e);
    free_energy.add(m, psi_integral(static_cast<int>(g), ks) / Rational(symmetry));
  });
  return free_energy.exp().restricted(weight_cap, hbar_cap);
}

}  // namespace hodge
