// Verification suites shared by the command-line tool and the test binaries.
// Each check reports pass/fail plus a one-line summary.
#pragma once

#include <chrono>
#include <functional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "hodge/cohomology.hpp"
#include "hodge/hodge.hpp"
#include "hodge/obstruction.hpp"
#include "hodge/operator.hpp"
#include "hodge/psi.hpp"
#include "hodge/relations.hpp"
#include "hodge/series1d.hpp"
#include "hodge/virasoro.hpp"

namespace hodge {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

struct SuiteOptions {
  int max_genus = -1;   // -1: suite default
  int max_points = -1;  // -1: suite default
  unsigned seed = 20240521;
};

namespace checks {

/// Published b_g, c_g for g = 1..5.
struct TableRow {
  int genus;
  const char* b;
  const char* c;
};
inline constexpr TableRow kPublishedTable[] = {
    {1, "1/24", "1/24"},
    {2, "7/5760", "1/480"},
    {3, "31/967680", "41/580608"},
    {4, "127/154828800", "13/6220800"},
    {5, "73/3503554560", "21481/367873228800"},
};

template <class F>
CheckResult timed(std::string name, F&& body) {
  const auto start = std::chrono::steady_clock::now();
  CheckResult r{std::move(name), false, "", 0};
  try {
    body(r);
  } catch (const std::exception& e) {
    r.passed = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

/// Every descending list of n nonnegative integers with the given sum.
template <class F>
void for_each_exponent_list(int n, long sum, F&& f) {
  std::vector<int> cur;
  auto rec = [&](auto&& self, int left, long remaining, int max_part) -> void {
    if (left == 0) {
      if (remaining == 0) f(static_cast<const std::vector<int>&>(cur));
      return;
    }
    for (int k = static_cast<int>(std::min<long>(max_part, remaining)); k >= 0; --k) {
      if (static_cast<long>(k) * left < remaining) break;
      cur.push_back(k);
      self(self, left - 1, remaining - k, k);
      cur.pop_back();
    }
  };
  if (sum >= 0) rec(rec, n, sum, static_cast<int>(sum));
}

// ------------------------------------------------------------------ table

inline CheckResult table_check(int max_genus) {
  return timed("table: b_g and c_g, g <= " + std::to_string(max_genus), [&](CheckResult& r) {
    int mismatches = 0, compared = 0;
    const auto series = b_sequence(max_genus);
    for (int g = 1; g <= max_genus; ++g) {
      const Rational b = b_constant(g), c = c_constant(g);
      if (b != series[static_cast<std::size_t>(g)]) ++mismatches;
      for (const auto& row : kPublishedTable)
        if (row.genus == g) {
          compared += 2;
          if (b != parse_rational(row.b)) ++mismatches;
          if (c != parse_rational(row.c)) ++mismatches;
        }
    }
    r.passed = mismatches == 0;
    r.detail = std::to_string(compared) + " published values compared, " + std::to_string(mismatches) + " mismatches";
  });
}

inline CheckResult b_dual_route_check(int max_genus) {
  return timed("b_g: series expansion vs Bernoulli closed form, g <= " + std::to_string(max_genus),
               [&](CheckResult& r) {
                 const auto series = b_sequence(max_genus);
                 int bad = 0;
                 for (int g = 0; g <= max_genus; ++g)
                   if (series[static_cast<std::size_t>(g)] != b_constant(g)) ++bad;
                 r.passed = bad == 0 && static_cast<int>(series.size()) == max_genus + 1;
                 r.detail = std::to_string(max_genus + 1) + " coefficients, " + std::to_string(bad) + " mismatches";
               });
}

/// x^{2g-2}_g(0) with c_g and b_g taken from the published table, plus the
/// Stirling form (2g-1)! c_g = s(2g,2) b_g - 1/2 sum (2g1-1)!(2g2-1)! b b.
inline CheckResult cg_relation_check(int max_genus) {
  return timed("c_g relation x^{2g-2}_g(0) = 0, g <= " + std::to_string(max_genus), [&](CheckResult& r) {
    int bad = 0;
    auto published = [](int g, bool want_b) -> Rational {
      for (const auto& row : kPublishedTable)
        if (row.genus == g) return parse_rational(want_b ? row.b : row.c);
      return want_b ? b_constant(g) : c_constant(g);
    };
    for (int g = 1; g <= max_genus; ++g) {
      const IntegralProvider provider = [&](ClassTag tag, int h, const std::vector<int>& ks) -> Rational {
        if (tag == ClassTag::LambdaGm1 && h == g && ks.size() == 1) return ks[0] == 2 * g - 1 ? published(g, false) : 0;
        if (tag == ClassTag::LambdaG && ks.size() == 1 && h > 0) return ks[0] == 2 * h - 2 ? published(h, true) : 0;
        return hodge_integral(tag, h, ks);
      };
      if (evaluate(x_curve_relation(2 * g - 2, g, {}), provider) != 0) ++bad;
      Rational quad = 0;
      for (int g1 = 1; g1 < g; ++g1)
        quad += Rational(factorial(2 * g1 - 1) * factorial(2 * (g - g1) - 1)) * published(g1, true) *
                published(g - g1, true);
      const Rational lhs = Rational(factorial(2 * g - 1)) * published(g, false);
      if (lhs != Rational(stirling_s2(2 * g)) * published(g, true) - quad / 2) ++bad;
      if (Rational(stirling_s2(2 * g)) != bracket(1, 2 * g - 2, 1)) ++bad;
    }
    r.passed = bad == 0;
    r.detail = std::to_string(3 * max_genus) + " identities, " + std::to_string(bad) + " failures";
  });
}

// ---------------------------------------------------- closed vs recursion

inline CheckResult closed_vs_recursion_check(int max_genus, int max_points) {
  return timed("closed forms vs recursion, g <= " + std::to_string(max_genus) + ", n <= " + std::to_string(max_points),
               [&](CheckResult& r) {
                 long compared = 0, bad = 0;
                 for (int g = 0; g <= max_genus; ++g)
                   for (int n = 1; n <= max_points; ++n) {
                     if (!is_stable(g, static_cast<std::size_t>(n))) continue;
                     for (ClassTag tag : {ClassTag::LambdaG, ClassTag::LambdaGGm1}) {
                       if (tag == ClassTag::LambdaGGm1 && g < 1) continue;
                       const long sum = IntegralKey(tag, g, std::vector<int>(static_cast<std::size_t>(n), 0)).required_sum();
                       for_each_exponent_list(n, sum, [&](const std::vector<int>& ks) {
                         ++compared;
                         const bool same = tag == ClassTag::LambdaG ? lambda_g(g, ks) == lambda_g_solver(g, ks)
                                                                    : lambda_g_gm1(g, ks) == lambda_g_gm1_solver(g, ks);
                         if (!same) ++bad;
                       });
                     }
                   }
                 r.passed = bad == 0 && compared > 0;
                 r.detail = std::to_string(compared) + " integrals compared, " + std::to_string(bad) + " mismatches";
               });
}

/// The identity behind the induction step for lambda_g:
/// (2g+n-1; k_0..k_n, k+1) = C(k_0+k+1, k_0)(2g+n-2; k_0+k, k_1..k_n)
///                         + sum_i C(k_i+k, k_i-1)(2g+n-2; .., k_i+k, ..)
/// whenever 2g+n-1 = k_0 + k + 1 + sum k_i.
inline CheckResult multinomial_identity_check(int instances, unsigned seed) {
  return timed("lambda_g induction identity, " + std::to_string(instances) + " random instances",
               [&](CheckResult& r) {
                 std::mt19937 rng(seed);
                 std::uniform_int_distribution<int> genus(0, 8), points(0, 6);
                 int bad = 0, done = 0;
                 while (done < instances) {
                   const int g = genus(rng), n = points(rng);
                   const long total = 2L * g + n - 1;
                   if (total < 1) continue;
                   // random composition of total into k_0, ..., k_n and k+1 >= 1
                   std::vector<int> parts(static_cast<std::size_t>(n) + 2, 0);
                   parts.back() = 1;
                   for (long u = 1; u < total; ++u)
                     ++parts[std::uniform_int_distribution<std::size_t>(0, parts.size() - 1)(rng)];
                   const int k = parts.back() - 1;
                   const std::vector<int> ks(parts.begin(), parts.end() - 1);  // k_0..k_n
                   const Rational lhs(multinomial(total, parts));
                   auto raised = ks;
                   raised[0] += k;
                   Rational rhs = Rational(binomial(ks[0] + k + 1, ks[0]) * multinomial(total - 1, raised));
                   for (std::size_t i = 1; i < ks.size(); ++i) {
                     auto v = ks;
                     v[i] += k;
                     rhs += Rational(binomial(ks[i] + k, ks[i] - 1) * multinomial(total - 1, v));
                   }
                   if (lhs != rhs) ++bad;
                   ++done;
                 }
                 r.passed = bad == 0;
                 r.detail = std::to_string(done) + " instances, " + std::to_string(bad) + " failures";
               });
}

// ------------------------------------------------------------ operators

struct OperatorFamily {
  std::string name;
  std::function<DifferentialOperator(int)> build;
};

inline std::vector<OperatorFamily> commutator_families(int level_cap) {
  return {
      {"point", [=](int k) { return point_operator(k, level_cap); }},
      {"P1", [=](int k) { return general_operator(k, projective_space(1), level_cap); }},
      {"P2", [=](int k) { return general_operator(k, projective_space(2), level_cap); }},
  };
}

/// [L_k, L_l] - (k-l) L_{k+l} restricted to coordinates of level < compare.
/// Operators are built with a larger cap so that truncation cannot reach the
/// compared range.
inline CheckResult commutator_check(int kmin = -1, int kmax = 3, int compare = 6) {
  const int build = compare + 2 * (kmax + 2);
  return timed("Virasoro commutators, k,l in [" + std::to_string(kmin) + "," + std::to_string(kmax) + "]",
               [&](CheckResult& r) {
                 int checked = 0, bad = 0;
                 std::string first_failure;
                 for (const auto& fam : commutator_families(build))
                   for (int k = kmin; k <= kmax; ++k)
                     for (int l = kmin; l <= kmax; ++l) {
                       DifferentialOperator d = commutator(fam.build(k), fam.build(l));
                       if (k + l >= -1) d = d - fam.build(k + l).scaled(k - l);
                       ++checked;
                       if (!d.restricted(compare).is_zero()) {
                         ++bad;
                         if (first_failure.empty())
                           first_failure = "; first failure " + fam.name + " k=" + std::to_string(k) + " l=" + std::to_string(l);
                       }
                     }
                 r.passed = bad == 0;
                 r.detail = std::to_string(checked) + " commutators (point, P1, P2), " + std::to_string(bad) +
                            " nonzero" + first_failure;
               });
}

/// Every determined coefficient of L_k Z vanishes for the point.
inline CheckResult annihilation_check(int kmin = -1, int kmax = 2, int weight_cap = 8, int genus_cap = 3) {
  return timed("point annihilation L_k Z = 0, k in [" + std::to_string(kmin) + "," + std::to_string(kmax) +
                   "], weight <= " + std::to_string(weight_cap) + ", genus <= " + std::to_string(genus_cap),
               [&](CheckResult& r) {
                 const TruncatedSeries z = point_partition(weight_cap, genus_cap - 1);
                 int bad = 0;
                 std::string shape;
                 for (int k = kmin; k <= kmax; ++k) {
                   const AppliedSeries out = apply(point_operator(k, weight_cap + 1), z);
                   if (!out.values.is_zero()) ++bad;
                   shape += (shape.empty() ? "" : ",") + std::to_string(out.determined_weight);
                 }
                 r.passed = bad == 0 && z.terms().size() > 1;
                 r.detail = std::to_string(z.terms().size()) + " terms in Z, determined weight caps " + shape + ", " +
                            std::to_string(bad) + " operators with nonzero residue";
               });
}

// ----------------------------------------------------------- obstruction

inline CheckResult mumford_check(int max_genus) {
  return timed("Mumford: c_t(E) c_{-t}(E) = 1, g <= " + std::to_string(max_genus), [&](CheckResult& r) {
    int bad = 0;
    for (int g = 1; g <= max_genus; ++g) {
      const auto coeffs = mumford_product(g);
      if (!(coeffs[0] == LambdaRingElem::one(g, 0))) ++bad;
      for (std::size_t d = 1; d < coeffs.size(); ++d)
        if (!coeffs[d].is_zero()) ++bad;
    }
    r.passed = bad == 0;
    r.detail = std::to_string(bad) + " nonvanishing coefficients";
  });
}

/// The Euler classes against their closed forms, both as ring elements and
/// as printed golden strings.
inline CheckResult euler_check(int max_genus) {
  return timed("Euler classes r = 1, 2, 3 and genus 1, g <= " + std::to_string(max_genus), [&](CheckResult& r) {
    int bad = 0, checked = 0;
    for (int g = 2; g <= max_genus; ++g) {
      const Rational sign = g % 2 == 0 ? Rational(1) : Rational(-1);
      for (int dim = 1; dim <= 3; ++dim) {
        auto c = [&](int j) { return LambdaRingElem::chern(g, dim, j); };
        auto l = [&](int i) { return LambdaRingElem::lambda(g, dim, i); };
        LambdaRingElem expected(g, dim);
        if (dim == 1) expected = (l(g) - c(1) * l(g - 1)).scaled(sign);
        if (dim == 2) expected = (c(1) * l(g) * l(g - 1)).scaled(-1) + c(1) * c(1) * l(g) * l(g - 2);
        if (dim == 3) expected = ((c(3) - c(2) * c(1)) * l(g - 1) * l(g - 1) * l(g - 1)).scaled(sign / 2);
        const LambdaRingElem got = euler_class(dim, g);
        ++checked;
        if (!(got == mumford_reduce(expected))) ++bad;
        if (dim == 2) {
          for (const auto& [key, v] : got.terms())
            if (key.first[1] != 0) ++bad;  // no c_2 survives
        }
      }
    }
    const std::string goldens[][2] = {
        {format_expression(euler_class(1, 4)), "lambda_g - c_1 lambda_{g-1}"},
        {format_expression(euler_class(1, 3)), "-lambda_g + c_1 lambda_{g-1}"},
        {format_expression(euler_class(2, 4)), "-c_1 lambda_g lambda_{g-1} + c_1^2 lambda_g lambda_{g-2}"},
        {format_expression(euler_class(3, 4)), "c_3 lambda_g lambda_{g-1} lambda_{g-2} - c_2 c_1 lambda_g lambda_{g-1} lambda_{g-2}"},
        {format_expression(euler_class_genus1(1)), "-lambda_g + c_1"},
        {format_expression(euler_class_genus1(3)), "-c_2 lambda_g + c_3"},
    };
    for (const auto& gold : goldens) {
      ++checked;
      if (gold[0] != gold[1]) ++bad;
    }
    for (int dim = 1; dim <= 4; ++dim) {
      auto c = [&](int j) { return LambdaRingElem::chern(1, dim, j); };
      ++checked;
      if (!(euler_class_genus1(dim) == c(dim) - c(dim - 1) * LambdaRingElem::lambda(1, dim, 1))) ++bad;
    }
    r.passed = bad == 0;
    r.detail = std::to_string(checked) + " expressions, " + std::to_string(bad) + " mismatches";
  });
}

inline CheckResult gw0_spot_check() {
  return timed("degree-0 GW spot values on P1", [&](CheckResult& r) {
    const Target p1 = Target::projective(1);
    const Rational a = degree0_gw(p1, 2, {{1, 2}});
    const Rational b = degree0_gw(p1, 2, {{0, 3}});
    r.passed = a == make_rational(7, 5760) && b == make_rational(-1, 240);
    r.detail = "<tau_2(w)>_2 = " + to_string(a) + ", <tau_3(1)>_2 = " + to_string(b);
  });
}

// ------------------------------------------------------ string / dilaton

/// Fills both memo tables with every integral of every tag for g <= max_genus,
/// n <= max_points; lambda_g and lambda_g lambda_{g-1} also go through the
/// recursion solvers.
inline std::size_t populate(int max_genus, int max_points) {
  std::size_t count = 0;
  for (ClassTag tag : kAllTags)
    for (int g = 0; g <= max_genus; ++g)
      for (int n = 1; n <= max_points; ++n) {
        if (!is_stable(g, static_cast<std::size_t>(n))) continue;
        const long sum = IntegralKey(tag, g, std::vector<int>(static_cast<std::size_t>(n), 0)).required_sum();
        for_each_exponent_list(n, sum, [&](const std::vector<int>& ks) {
          (void)hodge_integral(tag, g, ks);
          if (tag == ClassTag::LambdaG) (void)lambda_g_solver(g, ks);
          if (tag == ClassTag::LambdaGGm1 && g >= 1) (void)lambda_g_gm1_solver(g, ks);
          ++count;
        });
      }
  return count;
}

/// String and dilaton equations on every entry of the table whose reduced
/// moduli space is stable.
inline CheckResult string_dilaton_check(const IntegralTable& table, const std::string& label) {
  return timed("string/dilaton over " + label, [&](CheckResult& r) {
    long string_checks = 0, dilaton_checks = 0, bad = 0;
    std::string first_failure;
    for (const auto& [key, value] : table.entries()) {
      const auto& ks = key.exponents;
      const std::size_t n = ks.size();
      if (n < 2 || !is_stable(key.genus, n - 1)) continue;
      const auto rest = detail::without(ks, n - 1);
      if (ks.back() == 0) {
        Rational expect = 0;
        for (std::size_t i = 0; i < rest.size(); ++i) {
          auto lowered = rest;
          --lowered[i];
          expect += hodge_integral(key.tag, key.genus, lowered);
        }
        ++string_checks;
        if (expect != value) {
          ++bad;
          if (first_failure.empty()) first_failure = "; first failure " + to_string(key);
        }
      }
      if (std::find(ks.begin(), ks.end(), 1) != ks.end()) {
        const auto without_one = detail::without(ks, detail::position_of(ks, 1));
        const Rational expect = Rational(2 * key.genus - 2 + static_cast<long>(n) - 1) *
                                hodge_integral(key.tag, key.genus, without_one);
        ++dilaton_checks;
        if (expect != value) {
          ++bad;
          if (first_failure.empty()) first_failure = "; first failure " + to_string(key);
        }
      }
    }
    r.passed = bad == 0 && string_checks > 0 && dilaton_checks > 0;
    r.detail = std::to_string(table.size()) + " entries, " + std::to_string(string_checks) + " string and " +
               std::to_string(dilaton_checks) + " dilaton checks, " + std::to_string(bad) + " failures" + first_failure;
  });
}

/// Relations that are not used by any solver must still vanish: every
/// y-relation and every x-relation for k >= 1.
inline CheckResult relation_vanishing_check(int max_genus, int max_weight) {
  return timed("x/y relations vanish, g <= " + std::to_string(max_genus), [&](CheckResult& r) {
    long checked = 0, bad = 0;
    for (int g = 0; g <= max_genus; ++g)
      for (int k = 1; k <= max_weight; ++k)
        for_each_multiset(max_weight, [&](const std::vector<int>& derivs) {
          if (derivs.size() > 3) return;
          for (int l = 0; l <= max_weight; ++l) {
            ++checked;
            if (evaluate(y_curve_relation(k, g, l, derivs), hodge_integral) != 0) ++bad;
            if (g >= 1) {
              ++checked;
              if (evaluate(y_surface_relation(k, g, l, derivs), hodge_integral) != 0) ++bad;
            }
          }
          if (g >= 1) {
            ++checked;
            if (evaluate(x_curve_relation(k, g, derivs), hodge_integral) != 0) ++bad;
          }
          if (g >= 2) {
            ++checked;
            if (evaluate(x_surface_relation(k, g, derivs), hodge_integral) != 0) ++bad;
          }
        });
    r.passed = bad == 0;
    r.detail = std::to_string(checked) + " relation instances, " + std::to_string(bad) + " nonzero";
  });
}

}  // namespace checks

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"table",    "closed-vs-recursion", "commutators", "annihilation",
                                                 "mumford", "euler",               "string-dilaton"};
  return names;
}

/// Runs one named suite. Throws DomainError for an unknown name.
inline std::vector<CheckResult> run_suite(std::string_view name, const SuiteOptions& opt = {}) {
  auto genus = [&](int dflt) { return opt.max_genus >= 0 ? opt.max_genus : dflt; };
  auto points = [&](int dflt) { return opt.max_points >= 0 ? opt.max_points : dflt; };
  if (name == "table")
    return {checks::table_check(genus(5)), checks::b_dual_route_check(std::max(genus(5), 10)),
            checks::cg_relation_check(genus(5))};
  if (name == "closed-vs-recursion")
    return {checks::closed_vs_recursion_check(genus(3), points(4)), checks::multinomial_identity_check(200, opt.seed),
            checks::relation_vanishing_check(std::min(genus(3), 3), 5)};
  if (name == "commutators") return {checks::commutator_check()};
  if (name == "annihilation") return {checks::annihilation_check(-1, 2, 8, genus(3))};
  if (name == "mumford") return {checks::mumford_check(genus(6))};
  if (name == "euler") return {checks::euler_check(genus(6)), checks::gw0_spot_check()};
  if (name == "string-dilaton") {
    checks::populate(genus(3), points(4));
    return {checks::string_dilaton_check(integral_cache(), "memoized integrals"),
            checks::string_dilaton_check(solver_cache(), "recursion-solver integrals")};
  }
  throw DomainError("unknown suite '" + std::string(name) + "'");
}

}  // namespace hodge
