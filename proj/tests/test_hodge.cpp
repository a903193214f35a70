#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <numeric>

#include "hodge/hodge.hpp"
#include "hodge/relations.hpp"

using namespace hodge;

TEST(Constants, PublishedTable) {
  EXPECT_EQ(b_constant(0), 1);
  EXPECT_EQ(b_constant(1), make_rational(1, 24));
  EXPECT_EQ(b_constant(4), make_rational(127, 154828800));
  EXPECT_EQ(c_constant(1), make_rational(1, 24));
  EXPECT_EQ(c_constant(2), make_rational(1, 480));
  EXPECT_EQ(c_constant(3), make_rational(41, 580608));
  EXPECT_EQ(c_constant(4), make_rational(13, 6220800));
  EXPECT_EQ(c_constant(5), parse_rational("21481/367873228800"));
  EXPECT_EQ(gg_constant(1), make_rational(1, 24));
  EXPECT_EQ(gg_constant(2), make_rational(1, 2880));
  const auto rows = constant_table(0, 3);
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows.front().genus, 1);
  EXPECT_EQ(rows.back().c, make_rational(41, 580608));
}

TEST(Constants, LambdaCube) {
  EXPECT_EQ(lambda_cube(2), make_rational(1, 2880));
  EXPECT_EQ(lambda_cube(3), make_rational(1, 725760));
  // lambda_1^3 = 2 lambda_2 lambda_1 on M_2, and <tau_1|lambda_2 lambda_1> = 2 int lambda_2 lambda_1
  EXPECT_EQ(lambda_cube(2), 2 * lambda_g_gm1(2, {1}) / 2);
  EXPECT_THROW(lambda_cube(1), DomainError);
}

TEST(LambdaG, Examples) {
  EXPECT_EQ(lambda_g(1, {0}), make_rational(1, 24));
  EXPECT_EQ(lambda_g(2, {1, 2}), make_rational(7, 1920));
  EXPECT_EQ(lambda_g(0, {0, 0, 0}), 1);
  EXPECT_EQ(lambda_g(0, {1, 1, 0, 0, 0}), 2);
  // four points in genus 0 cannot carry total degree 2
  EXPECT_EQ(lambda_g(0, {1, 1, 0, 0}), 0);
}

TEST(LambdaG, SolverExamples) {
  EXPECT_EQ(lambda_g_solver(2, {1, 2}), make_rational(7, 1920));
  EXPECT_EQ(lambda_g_solver(1, {0}), make_rational(1, 24));
  EXPECT_EQ(lambda_g_solver(0, {1, 1, 0, 0, 0}), 2);
}

TEST(LambdaGGm1, Examples) {
  EXPECT_EQ(lambda_g_gm1(1, {0}), make_rational(1, 24));
  EXPECT_EQ(lambda_g_gm1(2, {1}), make_rational(1, 2880));
  EXPECT_EQ(lambda_g_gm1(2, {1, 1}), make_rational(1, 960));
  EXPECT_EQ(lambda_g_gm1(2, {1, 1}), 3 * lambda_g_gm1(2, {1}));
  EXPECT_EQ(lambda_g_gm1_solver(2, {1, 1}), make_rational(1, 960));
  EXPECT_EQ(lambda_g_gm1_solver(1, {0}), make_rational(1, 24));
  EXPECT_EQ(lambda_g_gm1_solver(3, {2, 1}), lambda_g_gm1(3, {2, 1}));
  EXPECT_EQ(lambda_g_gm1(3, {2, 1}), make_rational(1, 24192));
}

TEST(LambdaGm1, Examples) {
  EXPECT_EQ(lambda_gm1(1, {1}), make_rational(1, 24));
  EXPECT_EQ(lambda_gm1(2, {3}), make_rational(1, 480));
  EXPECT_EQ(lambda_gm1(2, {2, 2}), make_rational(5, 576));
  EXPECT_EQ(lambda_gm1(2, {2}), 0);
}

TEST(LambdaGm1, GenusOneIsPsi) {
  // lambda_0 = 1
  for (int n = 1; n <= 4; ++n) {
    std::vector<int> ks(static_cast<std::size_t>(n), 0);
    ks[0] = n;
    EXPECT_EQ(lambda_gm1(1, ks), psi_integral(1, ks)) << n;
    std::vector<int> ones(static_cast<std::size_t>(n), 1);
    EXPECT_EQ(lambda_gm1(1, ones), psi_integral(1, ones)) << n;
  }
}

TEST(LambdaGGm2, Examples) {
  EXPECT_EQ(lambda_g_gm2(3, {3}), make_rational(41, 1451520));
  EXPECT_EQ(lambda_g_gm2(3, {3, 1}), make_rational(41, 290304));
  EXPECT_EQ(lambda_g_gm2(1, {1}), 0);
  // lambda_0 = 1 in genus 2
  EXPECT_EQ(lambda_g_gm2(2, {2}), lambda_g(2, {2}));
  EXPECT_EQ(lambda_g_gm2(2, {2, 1}), lambda_g(2, {2, 1}));
}

TEST(Hodge, ClosedFormsMatchSolvers) {
  for (int g = 0; g <= 3; ++g)
    for (int n = 1; n <= 4; ++n) {
      if (!is_stable(g, static_cast<std::size_t>(n))) continue;
      // every exponent list with the right total
      std::vector<int> ks(static_cast<std::size_t>(n), 0);
      const int total_g = 2 * g - 3 + n;
      const int total_gg = g - 2 + n;
      auto enumerate = [&](int total, auto&& visit) {
        std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
          if (i + 1 == ks.size()) {
            ks[i] = left;
            visit();
            return;
          }
          for (int k = 0; k <= left; ++k) {
            ks[i] = k;
            rec(i + 1, left - k);
          }
        };
        if (total >= 0) rec(0, total);
      };
      enumerate(total_g, [&] { EXPECT_EQ(lambda_g(g, ks), lambda_g_solver(g, ks)); });
      if (g >= 1) enumerate(total_gg, [&] { EXPECT_EQ(lambda_g_gm1(g, ks), lambda_g_gm1_solver(g, ks)); });
    }
}

TEST(Hodge, InvalidInput) {
  EXPECT_THROW(lambda_g(0, {0, 0}), DomainError);
  EXPECT_THROW(lambda_g(-1, {1}), DomainError);
  EXPECT_THROW(lambda_g_gm1(0, {0, 0, 0}), DomainError);
  EXPECT_THROW(lambda_gm1(2, {-1, 4}), DomainError);
  EXPECT_EQ(hodge_integral(ClassTag::LambdaG, 0, {0, 0}), 0);
  EXPECT_EQ(hodge_integral(ClassTag::LambdaGGm1, 2, {5}), 0);
}

TEST(Hodge, StringReducedZeroExponents) {
  // <tau_0 prod tau_ki | a> = sum_j <... tau_{kj-1} ...|a>
  EXPECT_EQ(lambda_g_gm1(2, {2, 0}), lambda_g_gm1(2, {1}));
  EXPECT_EQ(lambda_gm1(2, {4, 0}), lambda_gm1(2, {3}));
  EXPECT_EQ(lambda_g_gm2(3, {4, 0}), lambda_g_gm2(3, {3}));
}

namespace {

// Forward S_n sum: sum over permutations of prod over cycles of kappa_{sum over cycle}.
Rational kappa_forward(int g, const std::vector<int>& indices) {
  std::vector<int> perm(indices.size());
  std::iota(perm.begin(), perm.end(), 0);
  Rational total = 0;
  do {
    std::vector<bool> seen(perm.size(), false);
    std::vector<int> cycle_sums;
    for (std::size_t i = 0; i < perm.size(); ++i) {
      if (seen[i]) continue;
      int s = 0;
      for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) {
        seen[j] = true;
        s += indices[j];
      }
      cycle_sums.push_back(s);
    }
    total += kappa_lambda_integral(g, cycle_sums);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

}  // namespace

TEST(Kappa, Examples) {
  EXPECT_EQ(kappa_lambda_integral(2, {0}), make_rational(1, 2880));
  EXPECT_EQ(kappa_lambda_integral(3, {1}), lambda_g_gm1(3, {2}));
  EXPECT_EQ(kappa_lambda_integral(4, {1, 1}), lambda_g_gm1(4, {2, 2}) - lambda_g_gm1(4, {3}));
  EXPECT_EQ(kappa_lambda_integral(4, {1}), 0);
  EXPECT_THROW(kappa_lambda_integral(1, {}), DomainError);
}

TEST(Kappa, ForwardPermutationSum) {
  const std::vector<std::pair<int, std::vector<int>>> cases{
      {4, {1, 1}}, {5, {1, 1, 1}}, {5, {2, 1}}, {6, {1, 1, 1, 1}}, {6, {2, 1, 1}}, {5, {0, 1, 2}}, {4, {0, 0, 2}}};
  for (const auto& [g, idx] : cases) {
    std::vector<int> ks;
    for (int i : idx) ks.push_back(i + 1);
    EXPECT_EQ(kappa_forward(g, idx), lambda_g_gm1(g, ks)) << "g=" << g;
  }
}

TEST(Relations, VanishExamples) {
  const IntegralProvider provider = [](ClassTag t, int g, const std::vector<int>& ks) { return hodge_integral(t, g, ks); };
  EXPECT_EQ(evaluate(y_curve_relation(1, 2, 2, {}), provider), 0);
  EXPECT_EQ(evaluate(y_surface_relation(1, 2, 1, {1}), provider), 0);
  for (int g = 1; g <= 5; ++g) EXPECT_EQ(evaluate(x_curve_relation(2 * g - 2, g, {}), provider), 0) << g;
  EXPECT_EQ(evaluate(x_surface_relation(2, 3, {1}), provider), 0);
}

TEST(Relations, NonTrivialBeforeEvaluation) {
  const auto rel = y_curve_relation(1, 2, 2, {});
  EXPECT_FALSE(rel.empty());
  auto [coef, rest] = isolate(rel, IntegralKey(ClassTag::LambdaG, 2, {2, 2}));
  EXPECT_NE(coef, 0);
  EXPECT_FALSE(rest.empty());
}

TEST(Relations, UnderdeterminedWhenTargetAbsent) {
  const IntegralProvider provider = [](ClassTag t, int g, const std::vector<int>& ks) { return hodge_integral(t, g, ks); };
  const auto rel = y_curve_relation(1, 2, 2, {});
  EXPECT_THROW(detail::solve_relation(rel, IntegralKey(ClassTag::LambdaGm1, 5, {9}), provider), Underdetermined);
  EXPECT_THROW(y_curve_relation(-2, 2, 2, {}), DomainError);
}
