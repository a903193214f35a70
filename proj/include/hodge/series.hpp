// Multivariate truncated series on the large phase space.
#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "hodge/rational.hpp"

namespace hodge {

/// Phase-space coordinate t^field_level. `field` indexes a cohomology class
/// (or a named coordinate family such as t, s, r); `level` is the
/// descendent index.
struct Coordinate {
  int field = 0;
  int level = 0;
  auto operator<=>(const Coordinate&) const = default;
  bool operator==(const Coordinate&) const = default;
};

/// Descendent weight: level + 1, so each insertion costs at least 1.
inline int weight(const Coordinate& c) { return c.level + 1; }

/// Exponents of coordinates; never stores a zero exponent.
using PowerMap = std::map<Coordinate, int>;

inline int weight(const PowerMap& powers) {
  int w = 0;
  for (const auto& [c, e] : powers) w += weight(c) * e;
  return w;
}

inline void multiply_into(PowerMap& target, const PowerMap& factor) {
  for (const auto& [c, e] : factor) target[c] += e;
}

/// hbar^power * prod t^powers
struct Monomial {
  int hbar = 0;
  PowerMap powers;
  auto operator<=>(const Monomial&) const = default;
  bool operator==(const Monomial&) const = default;
};

inline Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out = a;
  out.hbar += b.hbar;
  multiply_into(out.powers, b.powers);
  return out;
}

/// Sum of terms with descendent weight <= weight_cap and hbar power <= hbar_cap.
/// Monomials outside the caps are unknown, not zero.
class TruncatedSeries {
 public:
  TruncatedSeries(int weight_cap, int hbar_cap) : weight_cap_(weight_cap), hbar_cap_(hbar_cap) {}

  static TruncatedSeries constant(int weight_cap, int hbar_cap, const Rational& c) {
    TruncatedSeries s(weight_cap, hbar_cap);
    s.add(Monomial{}, c);
    return s;
  }

  int weight_cap() const { return weight_cap_; }
  int hbar_cap() const { return hbar_cap_; }

  bool within_caps(const Monomial& m) const { return m.hbar <= hbar_cap_ && weight(m.powers) <= weight_cap_; }

  /// Adds c to the coefficient of m; silently drops monomials beyond the caps.
  void add(const Monomial& m, const Rational& c) {
    if (c == 0 || !within_caps(m)) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Rational coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries out(std::min(a.weight_cap_, b.weight_cap_), std::min(a.hbar_cap_, b.hbar_cap_));
    for (const auto& [m, c] : a.terms_) out.add(m, c);
    for (const auto& [m, c] : b.terms_) out.add(m, c);
    return out;
  }

  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries out(std::min(a.weight_cap_, b.weight_cap_), std::min(a.hbar_cap_, b.hbar_cap_));
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) out.add(ma * mb, ca * cb);
    return out;
  }

  TruncatedSeries scaled(const Rational& c) const {
    TruncatedSeries out(weight_cap_, hbar_cap_);
    for (const auto& [m, v] : terms_) out.add(m, v * c);
    return out;
  }

  TruncatedSeries restricted(int weight_cap, int hbar_cap) const {
    TruncatedSeries out(std::min(weight_cap, weight_cap_), std::min(hbar_cap, hbar_cap_));
    for (const auto& [m, c] : terms_) out.add(m, c);
    return out;
  }

  /// exp(this) for a series without constant term. Only the weight cap is
  /// applied while multiplying: negative hbar powers make the hbar cap
  /// unsafe to apply to partial products.
  TruncatedSeries exp() const {
    if (coefficient(Monomial{}) != 0) throw DomainError("exp: series has a constant term");
    constexpr int kUnbounded = 1 << 20;
    TruncatedSeries self(weight_cap_, kUnbounded);
    for (const auto& [m, c] : terms_) self.add(m, c);
    TruncatedSeries total = constant(weight_cap_, kUnbounded, 1);
    TruncatedSeries power = total;
    // every term has weight >= 1, so powers beyond weight_cap vanish
    for (int n = 1; n <= weight_cap_; ++n) {
      power = (power * self).scaled(make_rational(1, n));
      if (power.is_zero()) break;
      total = total + power;
    }
    TruncatedSeries out(weight_cap_, hbar_cap_);
    for (const auto& [m, c] : total.terms_) out.add(m, c);
    return out;
  }

 private:
  int weight_cap_;
  int hbar_cap_;
  std::map<Monomial, Rational> terms_;
};

}  // namespace hodge
