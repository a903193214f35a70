// Virasoro operators L_k, k >= -1: the point operators, the general
// construction from cohomology data, and the explicit curve and surface forms.
#pragma once

#include <string>
#include <vector>

#include "hodge/cohomology.hpp"
#include "hodge/operator.hpp"
#include "hodge/psi.hpp"

namespace hodge {

namespace detail {

inline Rational sign_m_plus_1(int m) { return (m % 2 == 0) ? Rational(-1) : Rational(1); }

inline bool in_range(int level, int cap) { return level >= 0 && level < cap; }

/// Adds c * (t^field_m - delta) * d^target_level, where delta = 1 when the
/// coordinate is the dilaton shift t^unit_1.
inline void add_shifted_linear(DifferentialOperator& op, const Rational& c, Coordinate mult, Coordinate deriv,
                               bool shifted, int cap) {
  if (c == 0 || !in_range(mult.level, cap) || !in_range(deriv.level, cap)) return;
  op.add(c, 0, {mult}, {deriv});
  if (shifted) op.add(-c, 0, {}, {deriv});
}

}  // namespace detail

/// The point operators written with half-integer rising products in place of
/// Gamma-function ratios. Only coordinates t_0 .. t_{level_cap-1} appear.
inline DifferentialOperator point_operator(int k, int level_cap) {
  if (k < -1) throw DomainError("L_k requires k >= -1");
  DifferentialOperator op({"t"});
  auto t = [](int level) { return Coordinate{0, level}; };
  if (k == -1) {
    for (int m = 1; m < level_cap; ++m) detail::add_shifted_linear(op, 1, t(m), t(m - 1), m == 1, level_cap);
    op.add(make_rational(1, 2), -1, {t(0), t(0)}, {});
    return op;
  }
  if (k == 0) {
    for (int m = 0; m < level_cap; ++m)
      detail::add_shifted_linear(op, half_integer(2 * m + 1), t(m), t(m), m == 1, level_cap);
    op.add(make_rational(1, 16), 0, {}, {});
    return op;
  }
  for (int m = 0; m + k < level_cap; ++m)
    detail::add_shifted_linear(op, detail::point_linear_coefficient(k, m), t(m), t(m + k), m == 1, level_cap);
  for (int m = 0; m <= k - 1; ++m)
    op.add(detail::point_quadratic_coefficient(k, m) / 2, 1, {}, {t(m), t(k - m - 1)});
  return op.restricted(level_cap);
}

/// L_k from cohomology data (even classes only):
///   sum_{m,i} [b_a+m]^k_i (C^i)^b_a ~t^a_m d_{b,m+k-i}
///   + (hbar/2) (-1)^{m+1} [-b_a-m]^k_i (C^i)^{ab} d_{a,m} d_{b,k-m-i-1}
///   + (1/2hbar) (C^{k+1})_{ab} t^a_0 t^b_0 + delta_{k0} (grading constant)
/// The quadratic bracket uses the weight 1-b_a of the class dual to gamma_a,
/// which is the convention that reproduces the explicit point, curve and
/// surface operators.
inline DifferentialOperator general_operator(int k, const CohomologyData& x, int level_cap) {
  if (k < -1) throw DomainError("L_k requires k >= -1");
  x.validate();
  const std::size_t n = x.size();
  DifferentialOperator op(x.class_names);
  std::vector<Matrix> powers;
  std::vector<Matrix> raised;
  for (int i = 0; i <= k + 1; ++i) {
    powers.push_back(matrix_power(x.c1, i));
    raised.push_back(x.raised_power(i));
  }
  for (int i = 0; i <= k + 1; ++i) {
    for (std::size_t a = 0; a < n; ++a) {
      const Rational ba = x.shifted_weight(a);
      for (std::size_t b = 0; b < n; ++b) {
        const Rational cab = powers[static_cast<std::size_t>(i)][b][a];
        if (cab != 0) {
          for (int m = 0; m < level_cap; ++m) {
            const Rational c = bracket(ba + m, k, i) * cab;
            detail::add_shifted_linear(op, c, Coordinate{static_cast<int>(a), m},
                                       Coordinate{static_cast<int>(b), m + k - i}, a == x.unit && m == 1, level_cap);
          }
        }
        const Rational rab = raised[static_cast<std::size_t>(i)][a][b];
        if (rab == 0) continue;
        for (int m = 0; k - m - i - 1 >= 0; ++m) {
          const int other = k - m - i - 1;
          if (!detail::in_range(m, level_cap) || !detail::in_range(other, level_cap)) continue;
          const Rational c = detail::sign_m_plus_1(m) * bracket(-ba - m, k, i) * rab / 2;
          op.add(c, 1, {}, {Coordinate{static_cast<int>(a), m}, Coordinate{static_cast<int>(b), other}});
        }
      }
    }
  }
  const Matrix top = x.lowered_power(k + 1);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (top[a][b] != 0)
        op.add(top[a][b] / 2, -1, {Coordinate{static_cast<int>(a), 0}, Coordinate{static_cast<int>(b), 0}}, {});
  if (k == 0) op.add(x.grading_constant(), 0, {}, {});
  return op;
}

/// Field indices of the curve phase space: t, s, alpha^1..alpha^gamma, beta^1..beta^gamma.
struct CurveFields {
  int genus;
  static constexpr int t = 0;
  static constexpr int s = 1;
  int alpha(int i) const { return 2 + i; }
  int beta(int i) const { return 2 + genus + i; }
  std::vector<std::string> names() const {
    std::vector<std::string> out{"t", "s"};
    for (int i = 1; i <= genus; ++i) out.push_back("alpha" + std::to_string(i));
    for (int i = 1; i <= genus; ++i) out.push_back("beta" + std::to_string(i));
    return out;
  }
};

/// L_k (k >= 1) for a curve of genus gamma in the coordinates t, s, alpha, beta.
/// The odd coordinates are treated as commuting, as in the displayed formula.
inline DifferentialOperator curve_operator(int k, int curve_genus, int level_cap) {
  if (k < 1) throw DomainError("curve_operator requires k >= 1");
  if (curve_genus < 0) throw DomainError("negative curve genus");
  const CurveFields f{curve_genus};
  DifferentialOperator op(f.names());
  auto at = [](int field, int level) { return Coordinate{field, level}; };
  auto linear = [&](const Rational& c, Coordinate m, Coordinate d) {
    if (c != 0 && detail::in_range(m.level, level_cap) && detail::in_range(d.level, level_cap)) op.add(c, 0, {m}, {d});
  };
  if (detail::in_range(k + 1, level_cap)) op.add(-bracket(1, k, 0), 0, {}, {at(f.t, k + 1)});
  for (int m = 0; m < level_cap; ++m) {
    linear(bracket(m, k, 0), at(f.t, m), at(f.t, k + m));
    linear(bracket(m + 1, k, 0), at(f.s, m), at(f.s, k + m));
    for (int i = 0; i < curve_genus; ++i) {
      linear(bracket(m, k, 0), at(f.alpha(i), m), at(f.alpha(i), k + m));
      linear(bracket(m + 1, k, 0), at(f.beta(i), m), at(f.beta(i), k + m));
    }
  }
  const Rational euler = 2 - 2 * curve_genus;
  if (euler != 0) {
    if (detail::in_range(k, level_cap)) op.add(-euler * bracket(1, k, 1), 0, {}, {at(f.s, k)});
    for (int m = 0; m < level_cap; ++m) linear(euler * bracket(m, k, 1), at(f.t, m), at(f.s, k + m - 1));
    for (int m = 0; m <= k - 2; ++m) {
      if (!detail::in_range(m, level_cap) || !detail::in_range(k - m - 2, level_cap)) continue;
      op.add(euler * detail::sign_m_plus_1(m) * bracket(-m - 1, k, 1) / 2, 1, {}, {at(f.s, m), at(f.s, k - m - 2)});
    }
  }
  return op;
}

/// Simply-connected surface: h^{1,1} classes omega_1..omega_d (taken
/// orthonormal, so dot products below are Euclidean), p = h^{2,0}, and
/// c_1(X) = chern . omega.
struct SurfaceData {
  int d = 1;
  int p = 0;
  std::vector<Rational> chern{3};

  Rational chern_square() const {
    Rational s = 0;
    for (const auto& c : chern) s += c * c;
    return s;
  }

  int t() const { return 0; }
  int s(int i) const { return 1 + i; }
  int r() const { return 1 + d; }
  int a(int i) const { return 2 + d + i; }
  int b(int i) const { return 2 + d + p + i; }

  std::vector<std::string> names() const {
    std::vector<std::string> out{"t"};
    for (int i = 1; i <= d; ++i) out.push_back(d == 1 ? "s" : "s" + std::to_string(i));
    out.push_back("r");
    for (int i = 1; i <= p; ++i) out.push_back("a" + std::to_string(i));
    for (int i = 1; i <= p; ++i) out.push_back("b" + std::to_string(i));
    return out;
  }
};

inline SurfaceData projective_plane_surface() { return SurfaceData{}; }

/// L_k (k >= 1) for a simply-connected surface in the coordinates t, s, r, a, b.
inline DifferentialOperator surface_operator(int k, const SurfaceData& x, int level_cap) {
  if (k < 1) throw DomainError("surface_operator requires k >= 1");
  if (static_cast<int>(x.chern.size()) != x.d) throw DomainError("surface_operator: chern vector has wrong length");
  DifferentialOperator op(x.names());
  auto at = [](int field, int level) { return Coordinate{field, level}; };
  auto ok = [&](int level) { return detail::in_range(level, level_cap); };
  auto linear = [&](const Rational& c, Coordinate m, Coordinate d) {
    if (c != 0 && ok(m.level) && ok(d.level)) op.add(c, 0, {m}, {d});
  };
  auto quadratic = [&](const Rational& c, Coordinate u, Coordinate v) {
    if (c != 0 && ok(u.level) && ok(v.level)) op.add(c, 1, {}, {u, v});
  };
  const Rational half = make_rational(1, 2);

  if (ok(k + 1)) op.add(-bracket(half, k, 0), 0, {}, {at(x.t(), k + 1)});
  for (int m = 0; m < level_cap; ++m) {
    linear(bracket(m - half, k, 0), at(x.t(), m), at(x.t(), k + m));
    for (int i = 0; i < x.p; ++i) linear(bracket(m - half, k, 0), at(x.b(i), m), at(x.b(i), k + m));
    for (int i = 0; i < x.d; ++i) linear(bracket(m + half, k, 0), at(x.s(i), m), at(x.s(i), k + m));
    linear(bracket(m + 3 * half, k, 0), at(x.r(), m), at(x.r(), k + m));
    for (int i = 0; i < x.p; ++i) linear(bracket(m + 3 * half, k, 0), at(x.a(i), m), at(x.a(i), k + m));
  }
  for (int m = 0; m <= k - 1; ++m) {
    const Rational sg = detail::sign_m_plus_1(m);
    quadratic(sg * bracket(-m - 3 * half, k, 0), at(x.r(), m), at(x.t(), k - m - 1));
    for (int i = 0; i < x.d; ++i)
      quadratic(sg * bracket(-m - half, k, 0) / 2, at(x.s(i), m), at(x.s(i), k - m - 1));
  }

  for (int i = 0; i < x.d; ++i) {
    const Rational ci = x.chern[static_cast<std::size_t>(i)];
    if (ci == 0) continue;
    if (ok(k)) op.add(-ci * bracket(half, k, 1), 0, {}, {at(x.s(i), k)});
    for (int m = 0; m < level_cap; ++m) {
      linear(ci * bracket(m - half, k, 1), at(x.t(), m), at(x.s(i), k + m - 1));
      linear(ci * bracket(m + half, k, 1), at(x.s(i), m), at(x.r(), k + m - 1));
    }
    for (int m = 0; m <= k - 2; ++m)
      quadratic(ci * detail::sign_m_plus_1(m) * bracket(-m - 3 * half, k, 1), at(x.r(), m), at(x.s(i), k - m - 2));
  }

  const Rational c2 = x.chern_square();
  if (c2 != 0) {
    if (ok(k - 1)) op.add(-c2 * bracket(half, k, 2), 0, {}, {at(x.r(), k - 1)});
    for (int m = 0; m < level_cap; ++m) linear(c2 * bracket(m - half, k, 2), at(x.t(), m), at(x.r(), k + m - 2));
    for (int m = 0; m <= k - 3; ++m)
      quadratic(c2 * detail::sign_m_plus_1(m) * bracket(-m - 3 * half, k, 2) / 2, at(x.r(), m), at(x.r(), k - m - 3));
    if (k == 1) op.add(c2 / 2, -1, {at(x.t(), 0), at(x.t(), 0)}, {});
  }
  return op;
}

}  // namespace hodge
