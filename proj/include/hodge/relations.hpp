// Coefficient relations read off from L_k Z_0 / Z_0 for curves and surfaces.
//
// Each builder returns the value of a derivative d_{t_{k_1}} ... d_{t_{k_n}}
// of one coefficient function at t = 0 as a symbolic sum of products of
// intersection numbers. Evaluating the sum needs a provider for the
// individual integrals; a solver can instead isolate one unknown integral.
//
//   curve,   coefficient of (2gamma-2)(-1)^g hbar^{g-1}:  x^k_g
//   curve,   coefficient of s_l (-1)^g hbar^{g-1}:         y^k_{g,l}
//   surface, coefficient of |c|^2 hbar^{g-1}:              x^k_g
//   surface, coefficient of -c.s_l hbar^{g-1}:             y^k_{g,l}
#pragma once

#include <functional>
#include <string>
#include <vector>

#include "hodge/memo.hpp"
#include "hodge/numbers.hpp"

namespace hodge {

/// Reference to <tau_{exponents} | class>_genus, exponents in any order.
struct IntegralRef {
  ClassTag tag = ClassTag::None;
  int genus = 0;
  std::vector<int> exponents;
};

struct RelationTerm {
  Rational coefficient;
  std::vector<IntegralRef> factors;  // product; empty means the constant 1
};

using Relation = std::vector<RelationTerm>;

/// Returns the integral or 0 when it is unstable, has a negative exponent, or
/// fails the dimension constraint.
using IntegralProvider = std::function<Rational(ClassTag, int, const std::vector<int>&)>;

inline Rational evaluate(const Relation& relation, const IntegralProvider& provider) {
  Rational total = 0;
  for (const auto& term : relation) {
    if (term.coefficient == 0) continue;
    Rational product = term.coefficient;
    for (const auto& f : term.factors) {
      product *= provider(f.tag, f.genus, f.exponents);
      if (product == 0) break;
    }
    total += product;
  }
  return total;
}

namespace detail {

inline std::vector<int> with_front(std::initializer_list<int> front, const std::vector<int>& rest) {
  std::vector<int> out(front);
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

inline std::vector<int> drop(const std::vector<int>& ks, std::size_t pos) {
  std::vector<int> out;
  for (std::size_t i = 0; i < ks.size(); ++i)
    if (i != pos) out.push_back(ks[i]);
  return out;
}

inline bool any_negative(const std::vector<int>& ks) {
  for (int k : ks)
    if (k < 0) return true;
  return false;
}

/// Splits of a list of marked exponents by position.
template <class F>
void for_each_position_split(const std::vector<int>& ks, F&& f) {
  const std::size_t n = ks.size();
  for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
    std::vector<int> a, b;
    for (std::size_t i = 0; i < n; ++i) ((mask >> i) & 1UL ? a : b).push_back(ks[i]);
    f(a, b);
  }
}

class RelationBuilder {
 public:
  void single(const Rational& c, ClassTag tag, int g, std::vector<int> ks) {
    if (c == 0 || g < 0 || any_negative(ks)) return;
    rel_.push_back({c, {IntegralRef{tag, g, std::move(ks)}}});
  }

  void product(const Rational& c, IntegralRef a, IntegralRef b) {
    if (c == 0 || a.genus < 0 || b.genus < 0 || any_negative(a.exponents) || any_negative(b.exponents)) return;
    rel_.push_back({c, {std::move(a), std::move(b)}});
  }

  Relation take() { return std::move(rel_); }

 private:
  Relation rel_;
};

inline Rational sign_m1(int m) { return (m % 2 == 0) ? Rational(-1) : Rational(1); }

inline void require_k(int k, int min_k) {
  if (k < min_k) throw DomainError("relation requires k >= " + std::to_string(min_k));
}

}  // namespace detail

/// d^K y^k_{g,l}(0) for curves. Involves only lambda_g integrals. Also valid
/// for k = -1, 0, where it reduces to the string and dilaton equations.
inline Relation y_curve_relation(int k, int g, int l, const std::vector<int>& derivs) {
  detail::require_k(k, -1);
  detail::RelationBuilder b;
  const auto tag = ClassTag::LambdaG;
  b.single(-bracket(1, k, 0), tag, g, detail::with_front({k + 1, l}, derivs));
  for (std::size_t i = 0; i < derivs.size(); ++i)
    b.single(bracket(derivs[i], k, 0), tag, g, detail::with_front({k + derivs[i], l}, detail::drop(derivs, i)));
  b.single(bracket(l + 1, k, 0), tag, g, detail::with_front({k + l}, derivs));
  return b.take();
}

/// d^K x^k_g(0) for curves. Linear in lambda_{g-1} integrals; the remaining
/// terms are lambda_g integrals, including the genus-splitting quadratic sum
/// over g_1 + g_2 = g with g_i >= 0. Also valid for k = 0, where the curve
/// operator's constant term vanishes.
inline Relation x_curve_relation(int k, int g, const std::vector<int>& derivs) {
  detail::require_k(k, 0);
  detail::RelationBuilder b;
  const auto gm1 = ClassTag::LambdaGm1;
  const auto lg = ClassTag::LambdaG;
  b.single(-bracket(1, k, 0), gm1, g, detail::with_front({k + 1}, derivs));
  for (std::size_t i = 0; i < derivs.size(); ++i)
    b.single(bracket(derivs[i], k, 0), gm1, g, detail::with_front({k + derivs[i]}, detail::drop(derivs, i)));
  b.single(bracket(1, k, 1), lg, g, detail::with_front({k}, derivs));
  for (std::size_t i = 0; i < derivs.size(); ++i)
    b.single(-bracket(derivs[i], k, 1), lg, g, detail::with_front({k + derivs[i] - 1}, detail::drop(derivs, i)));
  for (int m = 0; m <= k - 2; ++m) {
    const Rational c = -detail::sign_m1(m) * bracket(-m - 1, k, 1) / 2;
    detail::for_each_position_split(derivs, [&](const std::vector<int>& a, const std::vector<int>& rest) {
      for (int g1 = 0; g1 <= g; ++g1)
        b.product(c, IntegralRef{lg, g1, detail::with_front({m}, a)},
                  IntegralRef{lg, g - g1, detail::with_front({k - m - 2}, rest)});
    });
  }
  return b.take();
}

/// d^K y^k_{g,l}(0) for surfaces (g >= 1). Involves lambda_g lambda_{g-1}
/// integrals and genus-0 psi integrals. Valid for k >= -1 like the curve case.
inline Relation y_surface_relation(int k, int g, int l, const std::vector<int>& derivs) {
  detail::require_k(k, -1);
  detail::RelationBuilder b;
  const auto gg = ClassTag::LambdaGGm1;
  const Rational half = make_rational(1, 2);
  b.single(-bracket(half, k, 0), gg, g, detail::with_front({k + 1, l}, derivs));
  for (std::size_t i = 0; i < derivs.size(); ++i)
    b.single(bracket(derivs[i] - half, k, 0), gg, g, detail::with_front({k + derivs[i], l}, detail::drop(derivs, i)));
  b.single(bracket(l + half, k, 0), gg, g, detail::with_front({k + l}, derivs));
  for (int m = 0; m <= k - 1; ++m) {
    const Rational sg = detail::sign_m1(m);
    const Rational c1 = sg * bracket(-m - 3 * half, k, 0);
    const Rational c2 = sg * bracket(-m - half, k, 0);
    detail::for_each_position_split(derivs, [&](const std::vector<int>& a, const std::vector<int>& rest) {
      b.product(c1, IntegralRef{ClassTag::None, 0, detail::with_front({m}, a)},
                IntegralRef{gg, g, detail::with_front({k - m - 1, l}, rest)});
      b.product(c2, IntegralRef{ClassTag::None, 0, detail::with_front({m, l}, a)},
                IntegralRef{gg, g, detail::with_front({k - m - 1}, rest)});
    });
  }
  return b.take();
}

/// d^K x^k_g(0) for surfaces. Linear in lambda_g lambda_{g-2} integrals; the
/// rest are lambda_g lambda_{g-1} and genus-0 psi integrals. At g = 1 the
/// lambda_g lambda_{g-2} terms vanish identically.
inline Relation x_surface_relation(int k, int g, const std::vector<int>& derivs) {
  detail::require_k(k, 1);
  detail::RelationBuilder b;
  const auto gg = ClassTag::LambdaGGm1;
  const auto gg2 = ClassTag::LambdaGGm2;
  const Rational half = make_rational(1, 2);
  b.single(-bracket(half, k, 0), gg2, g, detail::with_front({k + 1}, derivs));
  for (std::size_t i = 0; i < derivs.size(); ++i)
    b.single(bracket(derivs[i] - half, k, 0), gg2, g, detail::with_front({k + derivs[i]}, detail::drop(derivs, i)));
  for (int m = 0; m <= k - 1; ++m) {
    const Rational sg = detail::sign_m1(m);
    const Rational c1 = sg * bracket(-m - 3 * half, k, 0);
    const Rational c2 = sg * bracket(-m - half, k, 0) / 2;
    detail::for_each_position_split(derivs, [&](const std::vector<int>& a, const std::vector<int>& rest) {
      b.product(c1, IntegralRef{ClassTag::None, 0, detail::with_front({m}, a)},
                IntegralRef{gg2, g, detail::with_front({k - m - 1}, rest)});
      for (int g1 = 1; g1 <= g - 1; ++g1)
        b.product(c2, IntegralRef{gg, g1, detail::with_front({m}, a)},
                  IntegralRef{gg, g - g1, detail::with_front({k - m - 1}, rest)});
    });
  }
  b.single(bracket(half, k, 1), gg, g, detail::with_front({k}, derivs));
  for (std::size_t i = 0; i < derivs.size(); ++i)
    b.single(-bracket(derivs[i] - half, k, 1), gg, g, detail::with_front({k + derivs[i] - 1}, detail::drop(derivs, i)));
  for (int m = 0; m <= k - 2; ++m) {
    const Rational c = -detail::sign_m1(m) * bracket(-m - 3 * half, k, 1);
    detail::for_each_position_split(derivs, [&](const std::vector<int>& a, const std::vector<int>& rest) {
      b.product(c, IntegralRef{ClassTag::None, 0, detail::with_front({m}, a)},
                IntegralRef{gg, g, detail::with_front({k - m - 2}, rest)});
    });
  }
  return b.take();
}

/// Splits a relation into (sum of coefficients of the bare target term, the
/// remaining terms). The target is matched as a single-factor term.
inline std::pair<Rational, Relation> isolate(const Relation& relation, const IntegralKey& target) {
  Rational coef = 0;
  Relation rest;
  for (const auto& term : relation) {
    if (term.factors.size() == 1) {
      const auto& f = term.factors.front();
      if (IntegralKey(f.tag, f.genus, f.exponents) == target) {
        coef += term.coefficient;
        continue;
      }
    }
    rest.push_back(term);
  }
  return {coef, std::move(rest)};
}

}  // namespace hodge
