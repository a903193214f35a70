#include <gtest/gtest.h>

#include <algorithm>

#include "hodge/psi.hpp"

using namespace hodge;

TEST(Psi, KnownValues) {
  EXPECT_EQ(psi_integral(0, {0, 0, 0}), 1);
  EXPECT_EQ(psi_integral(1, {1}), make_rational(1, 24));
  EXPECT_EQ(psi_integral(1, {1, 1}), make_rational(1, 24));
  EXPECT_EQ(psi_integral(2, {4}), make_rational(1, 1152));
  EXPECT_EQ(psi_integral(2, {2, 3}), make_rational(29, 5760));
  EXPECT_EQ(psi_integral(2, {2, 2, 2}), make_rational(7, 240));
  EXPECT_EQ(psi_integral(3, {7}), make_rational(1, 82944));
}

TEST(Psi, GenusZeroMultinomial) {
  // <tau_k1 ... tau_kn>_0 = (n-3)! / prod k_i!
  const std::vector<std::vector<int>> cases{{1, 0, 0, 0}, {2, 0, 0, 0, 0}, {1, 1, 0, 0, 0}, {3, 1, 0, 0, 0, 0, 0},
                                            {2, 2, 0, 0, 0, 0, 0}};
  for (const auto& ks : cases) {
    Integer den = 1;
    for (int k : ks) den *= factorial(k);
    EXPECT_EQ(psi_integral(0, ks), make_rational(factorial(static_cast<long>(ks.size()) - 3), den));
  }
}

TEST(Psi, OnePointSeries) {
  // <tau_{3g-2}>_g = 1 / (24^g g!)
  for (int g = 1; g <= 6; ++g) {
    Integer den = factorial(g);
    for (int i = 0; i < g; ++i) den *= 24;
    EXPECT_EQ(psi_integral(g, {3 * g - 2}), make_rational(Integer(1), den)) << g;
  }
}

TEST(Psi, DomainErrors) {
  EXPECT_THROW(psi_integral(0, {0, 0}), DomainError);
  EXPECT_THROW(psi_integral(1, {}), DomainError);
  EXPECT_THROW(psi_integral(-1, {1, 1, 1}), DomainError);
  EXPECT_THROW(psi_integral(1, {-1, 2}), DomainError);
}

TEST(Psi, DimensionMismatchIsZero) {
  EXPECT_EQ(psi_integral(1, {2}), 0);
  EXPECT_EQ(psi_integral(0, {1, 0, 0}), 0);
  EXPECT_EQ(psi_integral(2, {1, 1, 1}), 0);
}

TEST(Psi, PermutationSymmetry) {
  std::vector<int> ks{3, 2, 1, 0};
  const Rational base = psi_integral(2, ks);
  std::sort(ks.begin(), ks.end());
  do {
    EXPECT_EQ(psi_integral(2, ks), base);
  } while (std::next_permutation(ks.begin(), ks.end()));
}

TEST(Psi, StringAndDilaton) {
  const std::vector<std::vector<int>> cases{{4}, {2, 3}, {1, 1, 3}, {2, 2, 1}};
  for (const auto& ks : cases) {
    const int g = 2;
    // string: <tau_0 prod tau_ki> = sum_j <... tau_{kj-1} ...>
    auto with0 = ks;
    with0.push_back(0);
    std::vector<int> shifted_up = ks;
    shifted_up[0] += 1;
    auto s = shifted_up;
    s.push_back(0);
    Rational rhs = 0;
    for (std::size_t j = 0; j < s.size() - 1; ++j) {
      if (s[j] == 0) continue;
      auto t = s;
      t.pop_back();
      t[j] -= 1;
      rhs += psi_integral(g, t);
    }
    EXPECT_EQ(psi_integral(g, s), rhs);
    // dilaton: <tau_1 prod tau_ki>_g = (2g-2+n) <prod tau_ki>_g
    auto d = ks;
    d.push_back(1);
    EXPECT_EQ(psi_integral(g, d), Rational(2 * g - 2 + static_cast<long>(ks.size())) * psi_integral(g, ks));
  }
}

TEST(PointPartition, LowOrderCoefficients) {
  const TruncatedSeries z = point_partition(6, 1);
  Monomial t03;
  t03.hbar = -1;
  t03.powers[Coordinate{0, 0}] = 3;
  EXPECT_EQ(z.coefficient(t03), make_rational(1, 6));
  Monomial t1;
  t1.powers[Coordinate{0, 1}] = 1;
  EXPECT_EQ(z.coefficient(t1), make_rational(1, 24));
  EXPECT_EQ(z.coefficient(Monomial{}), 1);
}
