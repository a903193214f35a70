#include <gtest/gtest.h>

#include "hodge/obstruction.hpp"

using namespace hodge;

namespace {

LambdaRingElem lam(int g, int i) { return LambdaRingElem::lambda(g, 0, i); }

}  // namespace

TEST(Mumford, BasicRelations) {
  for (int g = 2; g <= 6; ++g) {
    EXPECT_TRUE(mumford_reduce(lam(g, g) * lam(g, g)).is_zero()) << g;
    EXPECT_EQ(mumford_reduce(lam(g, g - 1) * lam(g, g - 1)), (lam(g, g) * lam(g, g - 2)).scaled(2)) << g;
    EXPECT_EQ(mumford_reduce(lam(g, g - 1) * lam(g, g - 1) * lam(g, g - 1)),
              (lam(g, g) * lam(g, g - 1) * lam(g, g - 2)).scaled(2))
        << g;
  }
  // lambda_1^2 = 2 lambda_2 in genus 2
  EXPECT_EQ(mumford_reduce(lam(2, 1) * lam(2, 1)), lam(2, 2).scaled(2));
}

TEST(Mumford, ProductIsOne) {
  for (int g = 1; g <= 6; ++g) {
    const auto coeffs = mumford_product(g);
    ASSERT_EQ(coeffs.size(), static_cast<std::size_t>(2 * g + 1));
    EXPECT_EQ(coeffs[0], LambdaRingElem::one(g, 0));
    for (std::size_t d = 1; d < coeffs.size(); ++d) EXPECT_TRUE(coeffs[d].is_zero()) << "g=" << g << " d=" << d;
  }
}

TEST(Euler, Curve) {
  EXPECT_EQ(format_expression(euler_class(1, 4)), "lambda_g - c_1 lambda_{g-1}");
  EXPECT_EQ(format_expression(euler_class(1, 3)), "-lambda_g + c_1 lambda_{g-1}");
  for (int g = 2; g <= 6; ++g) {
    const LambdaRingElem expected =
        (LambdaRingElem::lambda(g, 1, g) - LambdaRingElem::chern(g, 1, 1) * LambdaRingElem::lambda(g, 1, g - 1))
            .scaled(g % 2 == 0 ? 1 : -1);
    EXPECT_EQ(euler_class(1, g), expected) << g;
  }
}

TEST(Euler, Surface) {
  EXPECT_EQ(format_expression(euler_class(2, 4)), "-c_1 lambda_g lambda_{g-1} + c_1^2 lambda_g lambda_{g-2}");
  // lambda_{g-2} = lambda_0 = 1 in genus 2
  EXPECT_EQ(format_expression(euler_class(2, 2)), "-c_1 lambda_g lambda_{g-1} + c_1^2 lambda_g");
  for (int g = 2; g <= 6; ++g) {
    // no c_2 term survives, and the sign does not depend on g
    const auto e = euler_class(2, g);
    if (g > 2) {
      EXPECT_EQ(format_expression(e), "-c_1 lambda_g lambda_{g-1} + c_1^2 lambda_g lambda_{g-2}") << g;
    }
    for (const auto& [key, c] : e.terms()) EXPECT_EQ(key.first[1], 0);
  }
}

TEST(Euler, Threefold) {
  EXPECT_EQ(format_expression(euler_class(3, 4)),
            "c_3 lambda_g lambda_{g-1} lambda_{g-2} - c_2 c_1 lambda_g lambda_{g-1} lambda_{g-2}");
  for (int g = 2; g <= 6; ++g) {
    // (-1)^g (1/2) (c_3 - c_2 c_1) lambda_{g-1}^3
    const auto c = [&](int j) { return LambdaRingElem::chern(g, 3, j); };
    const auto l = [&](int i) { return LambdaRingElem::lambda(g, 3, i); };
    const auto expected =
        mumford_reduce((c(3) - c(2) * c(1)) * l(g - 1) * l(g - 1) * l(g - 1)).scaled(make_rational(g % 2 ? -1 : 1, 2));
    EXPECT_EQ(euler_class(3, g), expected) << g;
  }
}

TEST(Euler, GenusOne) {
  EXPECT_EQ(format_expression(euler_class_genus1(1)), "-lambda_g + c_1");
  EXPECT_EQ(format_expression(euler_class_genus1(3)), "-c_2 lambda_g + c_3");
  EXPECT_EQ(format_expression(euler_class_genus1(3), false), "-c_2 lambda_1 + c_3");
  const auto e = euler_class_genus1(2);
  for (const auto& [key, c] : e.terms()) EXPECT_LE(key.second[0], 1);
  EXPECT_THROW(euler_class_genus1(0), DomainError);
}

TEST(Euler, DomainErrors) {
  EXPECT_THROW(euler_class(4, 3), DomainError);
  EXPECT_THROW(euler_class(0, 3), DomainError);
  EXPECT_THROW(euler_class(2, 1), DomainError);
}

TEST(DegreeZero, ProjectiveLineSpotValues) {
  const Target p1 = Target::projective(1);
  EXPECT_EQ(degree0_gw(p1, 2, {{1, 2}}), make_rational(7, 5760));
  EXPECT_EQ(degree0_gw(p1, 2, {{0, 3}}), make_rational(-1, 240));
  // same chains spelled out: b_2 and -c_1(P1) c_2
  EXPECT_EQ(degree0_gw(p1, 2, {{1, 2}}), b_constant(2));
  EXPECT_EQ(degree0_gw(p1, 2, {{0, 3}}), -2 * c_constant(2));
}

TEST(DegreeZero, ProjectiveThreeSpace) {
  // e = (-1)^g (c_3 - c_2 c_1) lambda_g lambda_{g-1} lambda_{g-2}, with c_3 - c_2 c_1 = 4 - 24
  const Target p3 = Target::projective(3);
  for (int g = 2; g <= 5; ++g) {
    const Rational sign = g % 2 == 0 ? 1 : -1;
    EXPECT_EQ(degree0_gw(p3, g, {}), sign * -20 * lambda_cube(g) / 2) << g;
    EXPECT_EQ(degree0_gw(p3, g, {{0, 1}}), sign * -20 * (2 * g - 2) * lambda_cube(g) / 2) << g;
  }
  EXPECT_EQ(degree0_gw(p3, 2, {}), make_rational(-1, 288));
  EXPECT_EQ(degree0_gw(p3, 3, {}), make_rational(1, 72576));
}

TEST(DegreeZero, PointAndHighDimension) {
  EXPECT_EQ(degree0_gw(Target::point(), 2, {{0, 4}}), psi_integral(2, {4}));
  EXPECT_EQ(degree0_gw(Target::projective(4), 2, {{0, 1}}), 0);
  EXPECT_THROW(degree0_gw(Target::projective(1), 0, {{0, 0}}), DomainError);
  EXPECT_THROW(degree0_gw(Target::projective(1), 2, {{2, 0}}), DomainError);
}

TEST(TargetParse, Names) {
  EXPECT_EQ(Target::parse("point").dimension, 0);
  EXPECT_EQ(Target::parse("pt").dimension, 0);
  const Target p2 = Target::parse("P2");
  EXPECT_EQ(p2.dimension, 2);
  EXPECT_EQ(p2.chern, (std::vector<Integer>{1, 3, 3}));
  EXPECT_THROW(Target::parse("P0"), DomainError);
  EXPECT_THROW(Target::parse("quintic"), DomainError);
  EXPECT_THROW(Target::parse("P2x"), DomainError);
}
