// Lambda-class integrals on M_{g,n}-bar: the constants b_g, c_g, closed
// forms for lambda_g and lambda_g lambda_{g-1}, independent recursion solvers
// for both, best-effort solvers for lambda_{g-1} and lambda_g lambda_{g-2},
// lambda_{g-1}^3 and kappa conversion.
#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "hodge/memo.hpp"
#include "hodge/numbers.hpp"
#include "hodge/psi.hpp"
#include "hodge/relations.hpp"

namespace hodge {

// ---------------------------------------------------------------- constants

/// b_g = int psi^{2g-2} lambda_g over M_{g,1}-bar (b_0 = 1).
inline Rational b_constant(int g) {
  if (g < 0) throw DomainError("b_constant requires g >= 0");
  if (g == 0) return 1;
  const Integer p = Integer(1) << (2 * g - 1);
  return Rational(p - 1) / Rational(p) * abs(bernoulli(2 * g)) / Rational(factorial(2 * g));
}

/// c_g = int psi^{2g-1} lambda_{g-1} over M_{g,1}-bar.
inline Rational c_constant(int g) {
  if (g < 1) throw DomainError("c_constant requires g >= 1");
  Rational quad = 0;
  for (int g1 = 1; g1 <= g - 1; ++g1) {
    const int g2 = g - g1;
    quad += Rational(factorial(2 * g1 - 1) * factorial(2 * g2 - 1)) * b_constant(g1) * b_constant(g2);
  }
  return harmonic(2 * g - 1) * b_constant(g) - quad / 2 / Rational(factorial(2 * g - 1));
}

/// <tau_{g-1} | lambda_g lambda_{g-1}>_g = |B_2g| / (2^{2g-1} (2g-1)!! 2g).
inline Rational gg_constant(int g) {
  if (g < 1) throw DomainError("gg_constant requires g >= 1");
  const Integer p = Integer(1) << (2 * g - 1);
  return abs(bernoulli(2 * g)) / Rational(p * double_factorial(2 * g - 1) * (2 * g));
}

/// int over M_g-bar of lambda_{g-1}^3.
inline Rational lambda_cube(int g) {
  if (g < 2) throw DomainError("lambda_cube requires g >= 2");
  return abs(bernoulli(2 * g - 2)) / (2 * g - 2) * abs(bernoulli(2 * g)) / (2 * g) /
         Rational(factorial(2 * g - 2));
}

struct ConstantRow {
  int genus;
  Rational b;
  Rational c;
};

inline std::vector<ConstantRow> constant_table(int gmin, int gmax) {
  std::vector<ConstantRow> rows;
  for (int g = std::max(gmin, 1); g <= gmax; ++g) rows.push_back({g, b_constant(g), c_constant(g)});
  return rows;
}

// ---------------------------------------------------------------- internals

/// Values produced only by the recursion solvers live here, so they never mix
/// with (or get persisted as) closed-form results.
inline IntegralTable& solver_cache() {
  static IntegralTable table;
  return table;
}

namespace detail {

/// Common guard: true when the integral is trivially zero.
inline bool vanishes(ClassTag tag, int g, const std::vector<int>& ks) {
  if (g < 0 || !is_stable(g, ks.size())) return true;
  for (int k : ks)
    if (k < 0) return true;
  if (tag == ClassTag::LambdaGGm1 && g < 1) return true;
  if (tag == ClassTag::LambdaGm1 && g < 1) return true;
  if (tag == ClassTag::LambdaGGm2 && g < 2) return true;
  return !IntegralKey(tag, g, ks).dimension_matches();
}

inline void check_public(int g, const std::vector<int>& ks, int min_genus) {
  if (g < min_genus) throw DomainError("genus must be >= " + std::to_string(min_genus));
  if (ks.empty() || !is_stable(g, ks.size()))
    throw DomainError("unstable moduli space M_{" + std::to_string(g) + "," + std::to_string(ks.size()) + "}");
  for (int k : ks)
    if (k < 0) throw DomainError("negative psi exponent");
}

/// String equation: remove one tau_0 and lower each remaining exponent once.
template <class Value>
Rational string_reduce(const std::vector<int>& ks, std::size_t zero_pos, Value&& value) {
  const auto rest = without(ks, zero_pos);
  Rational acc = 0;
  for (std::size_t i = 0; i < rest.size(); ++i) {
    if (rest[i] == 0) continue;
    auto lowered = rest;
    --lowered[i];
    acc += value(lowered);
  }
  return acc;
}

inline std::size_t position_of(const std::vector<int>& ks, int value) {
  return static_cast<std::size_t>(std::find(ks.begin(), ks.end(), value) - ks.begin());
}

/// Solves relation == 0 for the single-factor term equal to key.
inline Rational solve_relation(const Relation& relation, const IntegralKey& key, const IntegralProvider& provider) {
  auto [coef, rest] = isolate(relation, key);
  if (coef == 0) throw Underdetermined("no relation isolates " + to_string(key));
  return -evaluate(rest, provider) / coef;
}

// lambda_g closed form
inline Rational lambda_g_value(int g, const std::vector<int>& ks) {
  if (vanishes(ClassTag::LambdaG, g, ks)) return 0;
  const IntegralKey key(ClassTag::LambdaG, g, ks);
  return integral_cache().get_or_compute(key, [&]() -> Rational {
    const int n = static_cast<int>(ks.size());
    if (g == 0) return Rational(multinomial(n - 3, ks));
    return Rational(multinomial(2 * g - 3 + n, ks)) * b_constant(g);
  });
}

// lambda_g lambda_{g-1} closed form, zeros removed by the string equation first
inline Rational lambda_g_gm1_value(int g, const std::vector<int>& ks) {
  if (vanishes(ClassTag::LambdaGGm1, g, ks)) return 0;
  const IntegralKey key(ClassTag::LambdaGGm1, g, ks);
  return integral_cache().get_or_compute(key, [&]() -> Rational {
    const auto& e = key.exponents;
    const int n = static_cast<int>(e.size());
    if (n >= 2 && e.back() == 0)
      return string_reduce(e, e.size() - 1, [&](const std::vector<int>& r) { return lambda_g_gm1_value(g, r); });
    Integer den = factorial(2 * g - 1);
    for (int k : e) den *= double_factorial(2 * k - 1);
    return Rational(factorial(2 * g + n - 3) * double_factorial(2 * g - 1)) / Rational(den) * gg_constant(g);
  });
}

Rational lambda_gm1_value(int g, const std::vector<int>& ks);
Rational lambda_g_gm2_value(int g, const std::vector<int>& ks);

/// Provider backed by the closed forms and the best-effort solvers.
inline Rational provide(ClassTag tag, int g, const std::vector<int>& ks) {
  switch (tag) {
    case ClassTag::None: return psi_or_zero(g, ks);
    case ClassTag::LambdaG: return lambda_g_value(g, ks);
    case ClassTag::LambdaGGm1: return lambda_g_gm1_value(g, ks);
    case ClassTag::LambdaGm1: return lambda_gm1_value(g, ks);
    case ClassTag::LambdaGGm2: return lambda_g_gm2_value(g, ks);
  }
  return 0;
}

inline Rational lambda_gm1_value(int g, const std::vector<int>& ks) {
  if (vanishes(ClassTag::LambdaGm1, g, ks)) return 0;
  const IntegralKey key(ClassTag::LambdaGm1, g, ks);
  return integral_cache().get_or_compute(key, [&]() -> Rational {
    const auto& e = key.exponents;
    const std::size_t n = e.size();
    if (n == 1) return c_constant(g);
    if (e.back() == 0)
      return string_reduce(e, n - 1, [&](const std::vector<int>& r) { return lambda_gm1_value(g, r); });
    if (e.back() == 1) return Rational(2 * g - 3 + static_cast<long>(n)) * lambda_gm1_value(g, without(e, n - 1));
    const int k = e.front() - 1;
    return solve_relation(x_curve_relation(k, g, without(e, 0)), key, provide);
  });
}

inline Rational lambda_g_gm2_value(int g, const std::vector<int>& ks) {
  if (vanishes(ClassTag::LambdaGGm2, g, ks)) return 0;
  const IntegralKey key(ClassTag::LambdaGGm2, g, ks);
  return integral_cache().get_or_compute(key, [&]() -> Rational {
    const auto& e = key.exponents;
    const std::size_t n = e.size();
    if (n >= 2 && e.back() == 0)
      return string_reduce(e, n - 1, [&](const std::vector<int>& r) { return lambda_g_gm2_value(g, r); });
    if (n >= 2 && e.back() == 1)
      return Rational(2 * g - 3 + static_cast<long>(n)) * lambda_g_gm2_value(g, without(e, n - 1));
    const int k = e.front() - 1;
    return solve_relation(x_surface_relation(k, g, without(e, 0)), key, provide);
  });
}

// recursion-only solvers

inline Rational lambda_g_recursive(int g, const std::vector<int>& ks) {
  if (vanishes(ClassTag::LambdaG, g, ks)) return 0;
  const IntegralKey key(ClassTag::LambdaG, g, ks);
  return solver_cache().get_or_compute(key, [&]() -> Rational {
    const auto& e = key.exponents;
    if (g > 0 && e.size() == 1) return b_constant(g);
    if (g == 0 && e.size() == 3) return 1;
    // The largest exponent plays tau_{k+1}: k = -1, 0 are string and dilaton.
    const int k = e.front() - 1;
    const std::vector<int> rest(e.begin() + 2, e.end());
    return solve_relation(y_curve_relation(k, g, e[1], rest), key,
                          [](ClassTag, int gg, const std::vector<int>& r) { return lambda_g_recursive(gg, r); });
  });
}

inline Rational lambda_g_gm1_recursive(int g, const std::vector<int>& ks) {
  if (vanishes(ClassTag::LambdaGGm1, g, ks)) return 0;
  const IntegralKey key(ClassTag::LambdaGGm1, g, ks);
  return solver_cache().get_or_compute(key, [&]() -> Rational {
    const auto& e = key.exponents;
    if (e.size() == 1) return gg_constant(g);
    // A zero exponent is removed first (k = -1 is the string equation);
    // otherwise the largest exponent plays tau_{k+1}.
    const std::size_t target = e.back() == 0 ? e.size() - 1 : 0;
    const int k = e[target] - 1;
    const auto others = without(e, target);
    const std::vector<int> rest(others.begin() + 1, others.end());
    const IntegralProvider provider = [](ClassTag tag, int gg, const std::vector<int>& r) {
      return tag == ClassTag::None ? psi_or_zero(gg, r) : lambda_g_gm1_recursive(gg, r);
    };
    return solve_relation(y_surface_relation(k, g, others.front(), rest), key, provider);
  });
}

}  // namespace detail

// ---------------------------------------------------------------- public API

/// <tau_{k_1} ... tau_{k_n} | lambda_g>_g from the multinomial closed form.
inline Rational lambda_g(int g, std::vector<int> ks) {
  detail::check_public(g, ks, 0);
  return detail::lambda_g_value(g, ks);
}

/// Same values from the y-relation recursion alone.
inline Rational lambda_g_solver(int g, std::vector<int> ks) {
  detail::check_public(g, ks, 0);
  return detail::lambda_g_recursive(g, ks);
}

/// <tau_{k_1} ... tau_{k_n} | lambda_g lambda_{g-1}>_g from the closed form.
inline Rational lambda_g_gm1(int g, std::vector<int> ks) {
  detail::check_public(g, ks, 1);
  return detail::lambda_g_gm1_value(g, ks);
}

/// Same values from the surface y-relation recursion alone.
inline Rational lambda_g_gm1_solver(int g, std::vector<int> ks) {
  detail::check_public(g, ks, 1);
  return detail::lambda_g_gm1_recursive(g, ks);
}

/// <tau_{k_1} ... tau_{k_n} | lambda_{g-1}>_g from the curve x-relations.
/// Throws Underdetermined if no relation isolates the requested number.
inline Rational lambda_gm1(int g, std::vector<int> ks) {
  detail::check_public(g, ks, 1);
  return detail::lambda_gm1_value(g, ks);
}

/// <tau_{k_1} ... tau_{k_n} | lambda_g lambda_{g-2}>_g from the surface
/// x-relations; zero for g = 1 since lambda_{-1} = 0.
inline Rational lambda_g_gm2(int g, std::vector<int> ks) {
  detail::check_public(g, ks, 1);
  return detail::lambda_g_gm2_value(g, ks);
}

/// Any supported integral by tag; zero for unstable or mis-dimensioned input.
inline Rational hodge_integral(ClassTag tag, int g, const std::vector<int>& ks) { return detail::provide(tag, g, ks); }

namespace detail {

/// Every set partition of {0..n-1}, as lists of blocks.
template <class F>
void for_each_set_partition(std::size_t n, F&& f) {
  std::vector<std::vector<std::size_t>> blocks;
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == n) {
      f(static_cast<const std::vector<std::vector<std::size_t>>&>(blocks));
      return;
    }
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      blocks[b].push_back(i);
      self(self, i + 1);
      blocks[b].pop_back();
    }
    blocks.push_back({i});
    self(self, i + 1);
    blocks.pop_back();
  };
  rec(rec, 0);
}

}  // namespace detail

/// int over M_g-bar of kappa_{i_1} ... kappa_{i_m} lambda_g lambda_{g-1}.
/// Inverts  sum_{sigma in S_n} kappa_sigma = <tau_{i_1+1} ... tau_{i_n+1}>
/// by Moebius inversion over set partitions.
inline Rational kappa_lambda_integral(int g, const std::vector<int>& indices) {
  if (g < 2) throw DomainError("kappa_lambda_integral requires g >= 2");
  for (int i : indices)
    if (i < 0) throw DomainError("negative kappa index");
  const long sum = std::accumulate(indices.begin(), indices.end(), 0L);
  if (sum != g - 2) return 0;
  if (indices.empty()) return detail::lambda_g_gm1_value(g, {1}) / (2 * g - 2);
  const std::size_t n = indices.size();
  Rational total = 0;
  detail::for_each_set_partition(n, [&](const std::vector<std::vector<std::size_t>>& blocks) {
    std::vector<int> ks;
    for (const auto& b : blocks) {
      int s = 0;
      for (std::size_t i : b) s += indices[i];
      ks.push_back(s + 1);
    }
    const Rational v = detail::lambda_g_gm1_value(g, ks);
    total += ((n - blocks.size()) % 2 == 0) ? v : Rational(-v);
  });
  return total;
}

}  // namespace hodge
