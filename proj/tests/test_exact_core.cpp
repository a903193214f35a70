#include <gtest/gtest.h>

#include <random>

#include "hodge/numbers.hpp"
#include "hodge/series1d.hpp"

using namespace hodge;

TEST(Bernoulli, KnownValues) {
  EXPECT_EQ(bernoulli(0), 1);
  EXPECT_EQ(bernoulli(1), make_rational(-1, 2));
  EXPECT_EQ(bernoulli(2), make_rational(1, 6));
  EXPECT_EQ(bernoulli(3), 0);
  EXPECT_EQ(bernoulli(10), make_rational(5, 66));
  EXPECT_EQ(bernoulli(12), make_rational(-691, 2730));
}

TEST(Bracket, SmallValues) {
  // (t+1)(t+2)(t+3) = t^3 + 6t^2 + 11t + 6
  EXPECT_EQ(bracket(1, 2, 0), 6);
  EXPECT_EQ(bracket(1, 2, 1), 11);
  EXPECT_EQ(bracket(1, 2, 2), 6);
  EXPECT_EQ(bracket(1, 2, 3), 1);
  EXPECT_EQ(bracket(1, 2, 4), 0);
  EXPECT_EQ(bracket(1, 2, -1), 0);
  EXPECT_EQ(bracket(5, -1, 0), 1);
  EXPECT_THROW(bracket(0, -2, 0), DomainError);
}

TEST(Bracket, MatchesProductExpansion) {
  // sum_i [x]^k_i t^i evaluated at t must equal prod_j (t+x+j)
  for (int k = -1; k <= 6; ++k)
    for (int xn = -5; xn <= 5; ++xn) {
      const Rational x = make_rational(xn, 2);
      for (int tn = -3; tn <= 3; ++tn) {
        const Rational t = tn;
        Rational direct = 1;
        for (int j = 0; j <= k; ++j) direct *= t + x + j;
        Rational viaBracket = 0, power = 1;
        for (int i = 0; i <= k + 1; ++i) {
          viaBracket += bracket(x, k, i) * power;
          power *= t;
        }
        EXPECT_EQ(direct, viaBracket) << "k=" << k << " x=" << to_string(x) << " t=" << tn;
      }
    }
}

TEST(Stirling, FirstKind) {
  EXPECT_EQ(stirling_s2(2), 1);
  EXPECT_EQ(stirling_s2(3), 3);
  EXPECT_EQ(stirling_s2(4), 11);
  EXPECT_EQ(stirling_s2(6), 274);
  EXPECT_THROW(stirling_s2(1), DomainError);
}

TEST(Stirling, EqualsBracketAtOne) {
  // s(2g,2) = e_{2g-2}(1,...,2g-1) = [1]^{2g-2}_1
  for (int g = 1; g <= 8; ++g) EXPECT_EQ(Rational(stirling_s2(2 * g)), bracket(1, 2 * g - 2, 1)) << g;
}

TEST(Combinatorics, FactorialsAndMultinomials) {
  EXPECT_EQ(factorial(0), 1);
  EXPECT_EQ(factorial(10), 3628800);
  EXPECT_EQ(binomial(10, 3), 120);
  EXPECT_EQ(binomial(3, 5), 0);
  EXPECT_EQ(double_factorial(-1), 1);
  EXPECT_EQ(double_factorial(7), 105);
  EXPECT_EQ(double_factorial(8), 384);
  const std::vector<int> parts{2, 1, 1};
  EXPECT_EQ(multinomial(4, parts), 12);
  const std::vector<int> bad{2, 2};
  EXPECT_THROW(multinomial(5, bad), DomainError);
  EXPECT_EQ(harmonic(3), make_rational(11, 6));
}

TEST(BSequence, LowGenus) {
  const auto b = b_sequence(5);
  ASSERT_EQ(b.size(), 6u);
  EXPECT_EQ(b[0], 1);
  EXPECT_EQ(b[1], make_rational(1, 24));
  EXPECT_EQ(b[2], make_rational(7, 5760));
  EXPECT_EQ(b[3], make_rational(31, 967680));
  EXPECT_EQ(b[5], parse_rational("73/3503554560"));
}

TEST(BSequence, MatchesBernoulliClosedForm) {
  // b_g = (2^{2g-1} - 1) |B_2g| / (2^{2g-1} (2g)!)
  const auto b = b_sequence(12);
  for (int g = 1; g <= 12; ++g) {
    const Integer p = Integer(1) << (2 * g - 1);
    const Rational expected = Rational(p - 1) * abs(bernoulli(2 * g)) / Rational(p * factorial(2 * g));
    EXPECT_EQ(b[static_cast<std::size_t>(g)], expected) << g;
  }
}

namespace {

Series1D random_series(std::mt19937& rng, int cap) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
  Series1D s(cap);
  for (int i = 0; i <= cap; ++i) s[i] = make_rational(num(rng), den(rng));
  return s;
}

}  // namespace

TEST(Series1D, RingAxiomsRandomized) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const int cap = 1 + trial % 8;
    const auto a = random_series(rng, cap), b = random_series(rng, cap), c = random_series(rng, cap);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a + b) - b, a);
  }
}

TEST(Series1D, InverseAndCompose) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    auto a = random_series(rng, 6);
    if (a[0] == 0) a[0] = 1;
    EXPECT_EQ(a * a.inverse(), Series1D::monomial(6, 0));
  }
  Series1D zero_const(4);
  EXPECT_THROW(zero_const.inverse(), DomainError);
  // 1/(1-u) composed with u = 2t gives sum 2^n t^n
  Series1D geo(5, {1, 1, 1, 1, 1, 1});
  const auto out = geo.compose(Series1D::monomial(5, 1, 2));
  for (int i = 0; i <= 5; ++i) EXPECT_EQ(out[i], Rational(Integer(1) << i));
  EXPECT_THROW(geo.compose(Series1D::monomial(5, 0)), DomainError);
}

TEST(RationalText, FormatAndParse) {
  EXPECT_EQ(to_string(make_rational(6, -4)), "-3/2");
  EXPECT_EQ(to_string(Rational(5)), "5");
  EXPECT_EQ(to_string(Rational(0)), "0");
  EXPECT_EQ(parse_rational("41/580608"), make_rational(41, 580608));
  EXPECT_EQ(parse_rational("-2/4"), make_rational(-1, 2));
  EXPECT_THROW(parse_rational("x/2"), DomainError);
  EXPECT_THROW(parse_rational("1/0"), DomainError);
}
