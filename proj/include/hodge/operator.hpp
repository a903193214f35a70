// Differential operators on the large phase space, kept in normal order
// (multiplications to the left of derivatives).
#pragma once

#include <algorithm>
#include <compare>
#include <limits>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "hodge/numbers.hpp"
#include "hodge/series.hpp"

namespace hodge {

/// hbar^hbar * prod t^multiply * prod d^differentiate
struct OperatorTerm {
  int hbar = 0;
  PowerMap multiply;
  PowerMap differentiate;
  auto operator<=>(const OperatorTerm&) const = default;
  bool operator==(const OperatorTerm&) const = default;

  int max_level() const {
    int lvl = -1;
    for (const auto& [c, e] : multiply) lvl = std::max(lvl, c.level);
    for (const auto& [c, e] : differentiate) lvl = std::max(lvl, c.level);
    return lvl;
  }
};

class DifferentialOperator {
 public:
  DifferentialOperator() = default;
  explicit DifferentialOperator(std::vector<std::string> field_names) : fields_(std::move(field_names)) {}

  const std::vector<std::string>& fields() const { return fields_; }
  const std::map<OperatorTerm, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const OperatorTerm& term, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(term, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  /// Convenience: coefficient * hbar^h * prod mult * prod deriv.
  void add(const Rational& c, int hbar, std::initializer_list<Coordinate> mult,
           std::initializer_list<Coordinate> deriv) {
    OperatorTerm t;
    t.hbar = hbar;
    for (const auto& x : mult) t.multiply[x] += 1;
    for (const auto& x : deriv) t.differentiate[x] += 1;
    add(t, c);
  }

  Rational coefficient(const OperatorTerm& t) const {
    auto it = terms_.find(t);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  Rational coefficient(int hbar, std::initializer_list<Coordinate> mult,
                       std::initializer_list<Coordinate> deriv) const {
    OperatorTerm t;
    t.hbar = hbar;
    for (const auto& x : mult) t.multiply[x] += 1;
    for (const auto& x : deriv) t.differentiate[x] += 1;
    return coefficient(t);
  }

  /// Keeps only terms whose coordinates all have level < level_cap.
  DifferentialOperator restricted(int level_cap) const {
    DifferentialOperator out(fields_);
    for (const auto& [t, c] : terms_)
      if (t.max_level() < level_cap) out.terms_.emplace(t, c);
    return out;
  }

  DifferentialOperator scaled(const Rational& c) const {
    DifferentialOperator out(fields_);
    for (const auto& [t, v] : terms_) out.add(t, v * c);
    return out;
  }

  friend DifferentialOperator operator+(const DifferentialOperator& a, const DifferentialOperator& b) {
    DifferentialOperator out(a.fields_.empty() ? b.fields_ : a.fields_);
    for (const auto& [t, c] : a.terms_) out.add(t, c);
    for (const auto& [t, c] : b.terms_) out.add(t, c);
    return out;
  }

  friend DifferentialOperator operator-(const DifferentialOperator& a, const DifferentialOperator& b) {
    return a + b.scaled(-1);
  }

  friend DifferentialOperator operator*(const DifferentialOperator& a, const DifferentialOperator& b);

  friend bool operator==(const DifferentialOperator& a, const DifferentialOperator& b) {
    return a.terms_ == b.terms_;
  }

  /// One term per line, in canonical key order: "c * hbar^h * t_0^2 * d[s_1]".
  std::string str() const {
    std::ostringstream os;
    for (const auto& [t, c] : terms_) os << format_term(t, c) << '\n';
    return os.str();
  }

  std::string coordinate_name(const Coordinate& x) const {
    const std::string base = (x.field >= 0 && static_cast<std::size_t>(x.field) < fields_.size())
                                 ? fields_[static_cast<std::size_t>(x.field)]
                                 : "x" + std::to_string(x.field);
    return base + "_" + std::to_string(x.level);
  }

 private:
  std::string format_term(const OperatorTerm& t, const Rational& c) const {
    std::string out = to_string(c);
    if (t.hbar != 0) out += " * hbar^" + std::to_string(t.hbar);
    for (const auto& [x, e] : t.multiply) {
      out += " * " + coordinate_name(x);
      if (e > 1) out += "^" + std::to_string(e);
    }
    for (const auto& [x, e] : t.differentiate) {
      out += " * d[" + coordinate_name(x) + "]";
      if (e > 1) out += "^" + std::to_string(e);
    }
    return out;
  }

  std::vector<std::string> fields_;
  std::map<OperatorTerm, Rational> terms_;
};

namespace detail {

inline Integer falling_factorial(long n, long k) {
  Integer out = 1;
  for (long i = 0; i < k; ++i) out *= (n - i);
  return out;
}

/// d^alpha x^beta = sum_nu C(alpha,nu) C(beta,nu) nu! x^{beta-nu} d^{alpha-nu},
/// expanded coordinate by coordinate.
inline void reorder(const PowerMap& deriv, const PowerMap& mult,
                    std::vector<std::pair<Integer, std::pair<PowerMap, PowerMap>>>& out) {
  out.clear();
  out.push_back({Integer(1), {mult, deriv}});
  for (const auto& [x, a] : deriv) {
    auto it = mult.find(x);
    if (it == mult.end()) continue;
    const int b = it->second;
    std::vector<std::pair<Integer, std::pair<PowerMap, PowerMap>>> next;
    for (const auto& [coef, pm] : out) {
      for (int nu = 0; nu <= std::min(a, b); ++nu) {
        Integer w = coef * binomial(a, nu) * binomial(b, nu) * factorial(nu);
        PowerMap m = pm.first, d = pm.second;
        if (b - nu == 0) m.erase(x); else m[x] = b - nu;
        if (a - nu == 0) d.erase(x); else d[x] = a - nu;
        next.push_back({w, {std::move(m), std::move(d)}});
      }
    }
    out = std::move(next);
  }
}

}  // namespace detail

inline DifferentialOperator operator*(const DifferentialOperator& a, const DifferentialOperator& b) {
  DifferentialOperator out(a.fields_.empty() ? b.fields_ : a.fields_);
  std::vector<std::pair<Integer, std::pair<PowerMap, PowerMap>>> pieces;
  for (const auto& [ta, ca] : a.terms_) {
    for (const auto& [tb, cb] : b.terms_) {
      detail::reorder(ta.differentiate, tb.multiply, pieces);
      for (const auto& [w, pm] : pieces) {
        OperatorTerm t;
        t.hbar = ta.hbar + tb.hbar;
        t.multiply = ta.multiply;
        multiply_into(t.multiply, pm.first);
        t.differentiate = pm.second;
        multiply_into(t.differentiate, tb.differentiate);
        out.add(t, ca * cb * Rational(w));
      }
    }
  }
  return out;
}

/// AB - BA in normal order.
inline DifferentialOperator commutator(const DifferentialOperator& a, const DifferentialOperator& b) {
  return a * b - b * a;
}

/// Result of applying an operator to a truncated series. Monomials inside
/// `determined` caps are exact; anything outside them is indeterminate.
struct AppliedSeries {
  TruncatedSeries values;
  int determined_weight;
  int determined_hbar;
};

/// Exact action of op on s. An output coefficient at weight w and hbar
/// power h is determined when, for every operator term, the input monomial it
/// reads (weight w - mult + deriv, hbar h - term.hbar) lies inside s's caps.
inline AppliedSeries apply(const DifferentialOperator& op, const TruncatedSeries& s) {
  int max_shift = std::numeric_limits<int>::min();
  int min_hbar = std::numeric_limits<int>::max();
  for (const auto& [t, c] : op.terms()) {
    max_shift = std::max(max_shift, weight(t.differentiate) - weight(t.multiply));
    min_hbar = std::min(min_hbar, t.hbar);
  }
  if (op.terms().empty()) {
    max_shift = 0;
    min_hbar = 0;
  }
  const int wcap = std::min(s.weight_cap(), s.weight_cap() - max_shift);
  const int hcap = std::min(s.hbar_cap(), s.hbar_cap() + min_hbar);
  TruncatedSeries out(wcap, hcap);
  for (const auto& [t, c] : op.terms()) {
    for (const auto& [m, v] : s.terms()) {
      Integer w = 1;
      Monomial r = m;
      bool vanishes = false;
      for (const auto& [x, e] : t.differentiate) {
        auto it = r.powers.find(x);
        if (it == r.powers.end() || it->second < e) {
          vanishes = true;
          break;
        }
        w *= detail::falling_factorial(it->second, e);
        it->second -= e;
        if (it->second == 0) r.powers.erase(it);
      }
      if (vanishes) continue;
      multiply_into(r.powers, t.multiply);
      r.hbar += t.hbar;
      out.add(r, c * v * Rational(w));
    }
  }
  return AppliedSeries{std::move(out), wcap, hcap};
}

}  // namespace hodge
