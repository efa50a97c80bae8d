#include <gtest/gtest.h>

#include "freeimm/linalg.hpp"
#include "freeimm/poly_det.hpp"
#include "oracles.hpp"
#include "properties.hpp"

using namespace freeimm;

TEST(Linalg, RankAndDeterminant) {
  Matrix<Rational> m{{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
  EXPECT_EQ(rank(m), 2);
  EXPECT_EQ(determinant(m), 0);
  Matrix<Rational> p{{0, 1}, {1, 0}};
  EXPECT_EQ(determinant(p), -1);
  EXPECT_EQ(rank(Matrix<Rational>{{0, 0}, {0, 0}}), 0);
  EXPECT_EQ(rank(Matrix<Rational>{{1, 2, 3}}), 1);
  EXPECT_EQ(determinant(Matrix<Rational>{}), 1);
}

TEST(Linalg, FloatingDeterminant) {
  Matrix<double> m{{2, 1, 0}, {1, 3, 1}, {0, 1, 4}};
  EXPECT_NEAR(determinant(m), 18.0, 1e-12);
  EXPECT_EQ(determinant(Matrix<double>{{1, 2}, {2, 4}}), 0.0);
}

TEST(Bareiss, PolynomialExamples) {
  // [[t, 1], [1, t]] -> t^2 - 1
  Matrix<RatPoly> m{{RatPoly{0, 1}, RatPoly{1}}, {RatPoly{1}, RatPoly{0, 1}}};
  EXPECT_EQ(bareiss_determinant(m), (RatPoly{-1, 0, 1}));
  // zero leading pivot forces a swap
  Matrix<RatPoly> s{{RatPoly(), RatPoly{2}}, {RatPoly{3}, RatPoly{0, 1}}};
  EXPECT_EQ(bareiss_determinant(s), (RatPoly{-6}));
  Matrix<RatPoly> z{{RatPoly{1, 1}, RatPoly{2, 2}}, {RatPoly{0, 1}, RatPoly{0, 2}}};
  EXPECT_TRUE(bareiss_determinant(z).is_zero());
}

TEST(Bareiss, RationalCoefficients) {
  Matrix<RatPoly> m{{RatPoly({Rational(1, 2), Rational(1, 3)}), RatPoly{1}},
                    {RatPoly{2}, RatPoly({Rational(0), Rational(3, 4)})}};
  // (1/2 + t/3)(3t/4) - 2
  EXPECT_EQ(bareiss_determinant(m), RatPoly({Rational(-2), Rational(3, 8), Rational(1, 4)}));
}

TEST(TrigDeterminant, Examples) {
  // rotation matrix has determinant 1
  Matrix<TrigPoly> r{{TrigPoly::cos(1), TrigPoly::sin(1, -1)}, {TrigPoly::sin(1), TrigPoly::cos(1)}};
  const TrigDeterminant d = trig_determinant(r);
  EXPECT_EQ(d.value, TrigPoly(1));
  EXPECT_EQ(d.form.denom_power, 0);
  EXPECT_EQ(d.cleared_power, 2);
  Matrix<TrigPoly> zero{{TrigPoly::cos(1), TrigPoly::cos(1)}, {TrigPoly::sin(2), TrigPoly::sin(2)}};
  EXPECT_TRUE(trig_determinant(zero).value.is_zero());
}

TEST(TrigDeterminant, ColumnSwapNegates) {
  oracle::Gen g(31);
  for (int i = 0; i < 20; ++i) {
    Matrix<TrigPoly> m(4, std::vector<TrigPoly>(4));
    for (auto& row : m) {
      for (auto& e : row) e = g.trig(2, 4, 2);
    }
    Matrix<TrigPoly> s = m;
    for (auto& row : s) std::swap(row[0], row[3]);
    EXPECT_EQ(trig_determinant(s).value, -trig_determinant(m).value);
  }
}

TEST(BareissProperty, MatchesCofactorExpansion) {
  const auto r = oracle::bareiss_vs_cofactor(32, 250);
  EXPECT_TRUE(r.ok()) << r.first_failure;
  EXPECT_GE(r.cases, 200);
}
