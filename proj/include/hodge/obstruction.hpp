// Chern classes of the Hodge bundle modulo Mumford's relation
// c_t(E) c_{-t}(E) = 1, the Euler class of the obstruction bundle T_X x E^v,
// and degree-0 descendent invariants built from it.
#pragma once

#include <algorithm>
#include <bit>
#include <limits>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "hodge/hodge.hpp"

namespace hodge {

/// sum of coefficient * prod c_j^{chern[j-1]} * prod lambda_i^{lambda[i-1]},
/// with c_1..c_r free and lambda_1..lambda_g subject to Mumford's relations.
class LambdaRingElem {
 public:
  using Key = std::pair<std::vector<int>, std::vector<int>>;  // (chern exps, lambda exps)

  LambdaRingElem(int genus, int dimension) : g_(genus), r_(dimension) {
    if (genus < 0 || dimension < 0) throw DomainError("LambdaRingElem: negative genus or dimension");
  }

  static LambdaRingElem one(int genus, int dimension) {
    LambdaRingElem e(genus, dimension);
    e.add(e.empty_key(), 1);
    return e;
  }

  /// c_j (j = 0 gives 1, j > r gives 0).
  static LambdaRingElem chern(int genus, int dimension, int j) {
    LambdaRingElem e(genus, dimension);
    if (j < 0 || j > dimension) return e;
    Key k = e.empty_key();
    if (j > 0) k.first[j - 1] = 1;
    e.add(k, 1);
    return e;
  }

  /// lambda_i (i = 0 gives 1, i > g gives 0).
  static LambdaRingElem lambda(int genus, int dimension, int i) {
    LambdaRingElem e(genus, dimension);
    if (i < 0 || i > genus) return e;
    Key k = e.empty_key();
    if (i > 0) k.second[i - 1] = 1;
    e.add(k, 1);
    return e;
  }

  int genus() const { return g_; }
  int dimension() const { return r_; }
  const std::map<Key, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const Key& k, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Rational coefficient(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  Key empty_key() const { return {std::vector<int>(static_cast<std::size_t>(r_), 0), std::vector<int>(static_cast<std::size_t>(g_), 0)}; }

  static int chern_degree(const std::vector<int>& e) {
    int d = 0;
    for (std::size_t j = 0; j < e.size(); ++j) d += static_cast<int>(j + 1) * e[j];
    return d;
  }
  static int lambda_degree(const std::vector<int>& e) { return chern_degree(e); }

  /// Largest lambda degree kept: dim M_g-bar = 3g-3 for g >= 2, unbounded
  /// below that (the classes then live on M_{g,n}-bar with n > 0).
  int lambda_degree_cap() const { return g_ >= 2 ? 3 * g_ - 3 : std::numeric_limits<int>::max(); }

  LambdaRingElem scaled(const Rational& c) const {
    LambdaRingElem out(g_, r_);
    for (const auto& [k, v] : terms_) out.add(k, v * c);
    return out;
  }

  friend LambdaRingElem operator+(const LambdaRingElem& a, const LambdaRingElem& b) {
    a.require_compatible(b);
    LambdaRingElem out = a;
    for (const auto& [k, v] : b.terms_) out.add(k, v);
    return out;
  }
  friend LambdaRingElem operator-(const LambdaRingElem& a, const LambdaRingElem& b) { return a + b.scaled(-1); }

  /// Product with Chern degree truncated above r; not reduced.
  friend LambdaRingElem operator*(const LambdaRingElem& a, const LambdaRingElem& b) {
    a.require_compatible(b);
    LambdaRingElem out(a.g_, a.r_);
    for (const auto& [ka, va] : a.terms_)
      for (const auto& [kb, vb] : b.terms_) {
        Key k = ka;
        for (std::size_t j = 0; j < k.first.size(); ++j) k.first[j] += kb.first[j];
        if (chern_degree(k.first) > a.r_) continue;
        for (std::size_t i = 0; i < k.second.size(); ++i) k.second[i] += kb.second[i];
        if (lambda_degree(k.second) > a.lambda_degree_cap()) continue;
        out.add(k, va * vb);
      }
    return out;
  }

  friend bool operator==(const LambdaRingElem& a, const LambdaRingElem& b) {
    return a.g_ == b.g_ && a.r_ == b.r_ && a.terms_ == b.terms_;
  }

 private:
  void require_compatible(const LambdaRingElem& b) const {
    if (g_ != b.g_ || r_ != b.r_) throw DomainError("LambdaRingElem: genus/dimension mismatch");
  }

  int g_;
  int r_;
  std::map<Key, Rational> terms_;
};

/// Normal form: every lambda monomial square-free, obtained by rewriting
/// lambda_i^2 = 2 sum_{k>=1} (-1)^{k+1} lambda_{i-k} lambda_{i+k}
/// (lambda_0 = 1, lambda_j = 0 for j > g) until no square remains.
inline LambdaRingElem mumford_reduce(const LambdaRingElem& x) {
  const int g = x.genus();
  const int cap = x.lambda_degree_cap();
  LambdaRingElem out(g, x.dimension());
  std::map<LambdaRingElem::Key, Rational> work(x.terms().begin(), x.terms().end());
  while (!work.empty()) {
    auto node = work.extract(work.begin());
    const auto& [chern, lam] = node.key();
    const Rational c = node.mapped();
    if (c == 0 || LambdaRingElem::lambda_degree(lam) > cap) continue;
    int square = -1;
    for (int i = g; i >= 1; --i)
      if (lam[static_cast<std::size_t>(i - 1)] >= 2) {
        square = i;
        break;
      }
    if (square < 0) {
      out.add(node.key(), c);
      continue;
    }
    std::vector<int> base = lam;
    base[static_cast<std::size_t>(square - 1)] -= 2;
    for (int k = 1; k <= square; ++k) {
      if (square + k > g) break;
      std::vector<int> next = base;
      if (square - k > 0) next[static_cast<std::size_t>(square - k - 1)] += 1;
      next[static_cast<std::size_t>(square + k - 1)] += 1;
      const Rational w = (k % 2 == 1) ? Rational(2) : Rational(-2);
      work[{chern, next}] += c * w;
    }
  }
  return out;
}

/// Total Chern class c_t(E) = sum_i lambda_i t^i as coefficients of t^i.
inline LambdaRingElem total_hodge_coefficient(int g, int i, int sign) {
  LambdaRingElem e = LambdaRingElem::lambda(g, 0, i);
  return (sign < 0 && i % 2 == 1) ? e.scaled(-1) : e;
}

/// Coefficients of t^d in c_t(E) c_{-t}(E), d = 0..2g, each reduced.
inline std::vector<LambdaRingElem> mumford_product(int g) {
  std::vector<LambdaRingElem> out;
  for (int d = 0; d <= 2 * g; ++d) {
    LambdaRingElem acc(g, 0);
    for (int i = 0; i <= d; ++i) acc = acc + total_hodge_coefficient(g, i, 1) * total_hodge_coefficient(g, d - i, -1);
    out.push_back(mumford_reduce(acc));
  }
  return out;
}

namespace detail {

/// Polynomial in Chern roots x_1..x_r with LambdaRingElem coefficients.
using RootPoly = std::map<std::vector<int>, LambdaRingElem>;

inline void root_add(RootPoly& p, const std::vector<int>& exps, const LambdaRingElem& c) {
  auto it = p.find(exps);
  if (it == p.end()) {
    if (!c.is_zero()) p.emplace(exps, c);
    return;
  }
  it->second = it->second + c;
  if (it->second.is_zero()) p.erase(it);
}

/// Elementary symmetric polynomial e_j in r roots.
inline std::map<std::vector<int>, int> elementary(int r, int j) {
  std::map<std::vector<int>, int> out;
  for (unsigned mask = 0; mask < (1U << r); ++mask) {
    if (std::popcount(mask) != j) continue;
    std::vector<int> e(static_cast<std::size_t>(r), 0);
    for (int i = 0; i < r; ++i)
      if ((mask >> i) & 1U) e[static_cast<std::size_t>(i)] = 1;
    out[e] += 1;
  }
  return out;
}

/// Rewrites a symmetric polynomial in the roots through c_j = e_j by
/// repeatedly removing the lexicographically leading term.
inline LambdaRingElem symmetrize(RootPoly p, int g, int r) {
  LambdaRingElem out(g, r);
  while (!p.empty()) {
    auto lead = std::prev(p.end());
    const std::vector<int> alpha = lead->first;
    const LambdaRingElem coef = lead->second;
    for (std::size_t j = 0; j + 1 < alpha.size(); ++j)
      if (alpha[j] < alpha[j + 1]) throw DomainError("symmetrize: input is not symmetric");
    std::vector<int> chern(static_cast<std::size_t>(r), 0);
    for (int j = 0; j < r; ++j)
      chern[static_cast<std::size_t>(j)] =
          alpha[static_cast<std::size_t>(j)] - (j + 1 < r ? alpha[static_cast<std::size_t>(j + 1)] : 0);
    LambdaRingElem cm = LambdaRingElem::one(g, r);
    for (int j = 0; j < r; ++j)
      for (int e = 0; e < chern[static_cast<std::size_t>(j)]; ++e) cm = cm * LambdaRingElem::chern(g, r, j + 1);
    out = out + cm * coef;
    // subtract coef * prod e_j^{chern_j} expanded in the roots
    std::map<std::vector<int>, int> prod{{std::vector<int>(static_cast<std::size_t>(r), 0), 1}};
    for (int j = 0; j < r; ++j)
      for (int e = 0; e < chern[static_cast<std::size_t>(j)]; ++e) {
        std::map<std::vector<int>, int> next;
        for (const auto& [a, ca] : prod)
          for (const auto& [b, cb] : elementary(r, j + 1)) {
            std::vector<int> s = a;
            for (std::size_t i = 0; i < s.size(); ++i) s[i] += b[i];
            next[s] += ca * cb;
          }
        prod = std::move(next);
      }
    for (const auto& [m, cnt] : prod) root_add(p, m, coef.scaled(-cnt));
  }
  return out;
}

}  // namespace detail

/// Euler class of T_X x E^v for dim X = r in {1,2,3} and g >= 2:
/// prod over Chern roots x of sum_i (-1)^{g-i} x^i lambda_{g-i}, reduced.
inline LambdaRingElem euler_class(int r, int g) {
  if (r < 1 || r > 3) throw DomainError("euler_class requires r in {1,2,3}");
  if (g < 2) throw DomainError("euler_class requires g >= 2; use euler_class_genus1");
  // coefficients carry no Chern classes while the roots are explicit
  detail::RootPoly prod;
  prod.emplace(std::vector<int>(static_cast<std::size_t>(r), 0), LambdaRingElem::one(g, r));
  for (int root = 0; root < r; ++root) {
    detail::RootPoly next;
    for (const auto& [exps, coef] : prod)
      for (int i = 0; i <= g; ++i) {
        std::vector<int> e = exps;
        e[static_cast<std::size_t>(root)] += i;
        if (std::accumulate(e.begin(), e.end(), 0) > r) break;
        LambdaRingElem term = LambdaRingElem::lambda(g, r, g - i);
        if ((g - i) % 2 == 1) term = term.scaled(-1);
        detail::root_add(next, e, mumford_reduce(coef * term));
      }
    prod = std::move(next);
  }
  return mumford_reduce(detail::symmetrize(std::move(prod), g, r));
}

/// Genus 1: c_r(X) - c_{r-1}(X) lambda_1.
inline LambdaRingElem euler_class_genus1(int r) {
  if (r < 1) throw DomainError("euler_class_genus1 requires r >= 1");
  return LambdaRingElem::chern(1, r, r) - LambdaRingElem::chern(1, r, r - 1) * LambdaRingElem::lambda(1, r, 1);
}

/// Prints in the lambda/c notation, e.g. "-c_1 lambda_g lambda_{g-1} +
/// c_1^2 lambda_g lambda_{g-2}". Lambda indices are written relative to g
/// unless relative is false.
inline std::string format_expression(const LambdaRingElem& x, bool relative = true) {
  if (x.is_zero()) return "0";
  const int g = x.genus();
  std::ostringstream os;
  bool first = true;
  // lower Chern degree first, then higher lambda indices, then higher Chern indices
  std::vector<std::pair<LambdaRingElem::Key, Rational>> items(x.terms().begin(), x.terms().end());
  auto reversed = [](std::vector<int> v) {
    std::reverse(v.begin(), v.end());
    return v;
  };
  std::stable_sort(items.begin(), items.end(), [&](const auto& a, const auto& b) {
    const int da = LambdaRingElem::chern_degree(a.first.first), db = LambdaRingElem::chern_degree(b.first.first);
    if (da != db) return da < db;
    if (a.first.second != b.first.second) return reversed(a.first.second) > reversed(b.first.second);
    return reversed(a.first.first) > reversed(b.first.first);
  });
  for (const auto& [key, c] : items) {
    std::vector<std::string> factors;
    const auto& chern = key.first;
    for (std::size_t j = chern.size(); j-- > 0;) {
      if (chern[j] == 0) continue;
      std::string f = "c_" + std::to_string(j + 1);
      if (chern[j] > 1) f += "^" + std::to_string(chern[j]);
      factors.push_back(f);
    }
    const auto& lam = key.second;
    for (std::size_t i = lam.size(); i-- > 0;) {
      if (lam[i] == 0) continue;
      const int idx = static_cast<int>(i) + 1;
      std::string f;
      if (!relative) f = "lambda_" + std::to_string(idx);
      else if (idx == g) f = "lambda_g";
      else f = "lambda_{g-" + std::to_string(g - idx) + "}";
      if (lam[i] > 1) f += "^" + std::to_string(lam[i]);
      factors.push_back(f);
    }
    const Rational mag = abs(c);
    std::string body;
    if (mag != 1 || factors.empty()) body = to_string(mag);
    for (const auto& f : factors) body += (body.empty() ? "" : " ") + f;
    if (first) os << (c < 0 ? "-" : "") << body;
    else os << (c < 0 ? " - " : " + ") << body;
    first = false;
  }
  return os.str();
}

/// Target variety for degree-0 invariants: a point or P^n, described by
/// c(T_X) = sum_j chern[j] H^j with int_X H^r = 1. Class index a inserts H^a.
struct Target {
  std::string name;
  int dimension = 0;
  std::vector<Integer> chern;  // chern[j] = coefficient of H^j in c_j(T_X)

  static Target point() { return Target{"point", 0, {Integer(1)}}; }

  static Target projective(int n) {
    if (n < 1) throw DomainError("projective space needs n >= 1");
    Target t{"P" + std::to_string(n), n, {}};
    for (int j = 0; j <= n; ++j) t.chern.push_back(binomial(n + 1, j));
    return t;
  }

  static Target parse(const std::string& spec) {
    if (spec == "point" || spec == "pt") return point();
    if (spec.size() >= 2 && (spec[0] == 'P' || spec[0] == 'p')) {
      std::size_t used = 0;
      int n = 0;
      try {
        n = std::stoi(spec.substr(1), &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == spec.size() - 1 && n >= 1) return projective(n);
    }
    throw DomainError("unknown target '" + spec + "' (expected point or Pn)");
  }

  /// int_X H^{classes} prod c_j^{exps_j}
  Rational integrate(int class_degree, const std::vector<int>& chern_exps) const {
    Integer value = 1;
    int degree = class_degree;
    for (std::size_t j = 0; j < chern_exps.size(); ++j) {
      for (int e = 0; e < chern_exps[j]; ++e) value *= chern[j + 1];
      degree += static_cast<int>(j + 1) * chern_exps[j];
    }
    return degree == dimension ? Rational(value) : Rational(0);
  }
};

struct Insertion {
  int class_index;  // power of H
  int level;        // descendent level k in tau_k
};

namespace detail {

/// <prod tau_k | alpha>_g for alpha of top degree on M_g-bar, by string and
/// dilaton reduction down to n = 0, where the value is `top`.
inline Rational pulled_back_top(int g, std::vector<int> ks, const Rational& top) {
  std::sort(ks.begin(), ks.end(), std::greater<>());
  if (ks.empty()) return top;
  const std::size_t n = ks.size();
  if (ks.back() == 0)
    return string_reduce(ks, n - 1, [&](const std::vector<int>& r) { return pulled_back_top(g, r, top); });
  if (ks.back() == 1) return Rational(2 * g - 3 + static_cast<long>(n)) * pulled_back_top(g, without(ks, n - 1), top);
  return 0;
}

/// <prod tau_k | lambda-monomial>_g for the monomials produced by the Euler
/// classes, identified by lambda indices relative to g.
inline Rational lambda_monomial_integral(int g, const std::vector<int>& lambda_exps, const std::vector<int>& ks) {
  std::vector<int> offsets;
  for (std::size_t i = lambda_exps.size(); i-- > 0;) {
    if (lambda_exps[i] == 0) continue;
    if (lambda_exps[i] > 1) throw DomainError("lambda monomial is not reduced");
    offsets.push_back(g - static_cast<int>(i) - 1);
  }
  auto with_n0 = [&](ClassTag tag) -> Rational {
    if (!ks.empty()) return hodge_integral(tag, g, ks);
    if (g < 2) return 0;
    return hodge_integral(tag, g, {1}) / (2 * g - 2);  // dilaton
  };
  if (offsets.empty()) return with_n0(ClassTag::None);
  if (offsets == std::vector<int>{0}) return with_n0(ClassTag::LambdaG);
  if (offsets == std::vector<int>{1}) return with_n0(ClassTag::LambdaGm1);
  if (offsets == std::vector<int>{0, 1}) return with_n0(ClassTag::LambdaGGm1);
  if (offsets == std::vector<int>{0, 2}) return with_n0(ClassTag::LambdaGGm2);
  if (offsets == std::vector<int>{0, 1, 2}) {
    long sum = 0;
    for (int k : ks) sum += k;
    if (sum != static_cast<long>(ks.size())) return 0;
    return pulled_back_top(g, ks, lambda_cube(g) / 2);
  }
  std::string desc;
  for (int o : offsets) desc += " lambda_{g-" + std::to_string(o) + "}";
  throw Underdetermined("no evaluator for" + desc);
}

}  // namespace detail

/// Degree-0 descendent invariant <tau_{k_1}(H^{a_1}) ... >_{g,0} of the target:
/// int over X x M_{g,n}-bar of the inserted classes times e(T_X x E^v).
inline Rational degree0_gw(const Target& x, int g, const std::vector<Insertion>& insertions) {
  if (g < 0) throw DomainError("negative genus");
  if (!is_stable(g, insertions.size())) throw DomainError("unstable moduli space");
  int class_degree = 0;
  std::vector<int> ks;
  for (const auto& ins : insertions) {
    if (ins.class_index < 0 || ins.class_index > x.dimension) throw DomainError("insertion class out of range");
    if (ins.level < 0) throw DomainError("negative descendent level");
    class_degree += ins.class_index;
    ks.push_back(ins.level);
  }
  const int r = x.dimension;
  if (g >= 2 && r > 3) return 0;
  LambdaRingElem e = LambdaRingElem::one(g, r);
  if (g == 1 && r >= 1) e = euler_class_genus1(r);
  else if (g >= 2 && r >= 1) e = euler_class(r, g);
  Rational total = 0;
  for (const auto& [key, coef] : e.terms()) {
    const Rational over_x = x.integrate(class_degree, key.first);
    if (over_x == 0) continue;
    total += coef * over_x * detail::lambda_monomial_integral(g, key.second, ks);
  }
  return total;
}

}  // namespace hodge
