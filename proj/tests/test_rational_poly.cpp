#include "regbound/rational_poly.hpp"

#include <gtest/gtest.h>

#include "oracle.hpp"
#include "regbound/hilbert.hpp"

using namespace regbound;

TEST(RationalPoly, ZeroIsEmpty) {
  EXPECT_TRUE(RationalPoly().is_zero());
  EXPECT_EQ(RationalPoly().degree(), -1);
  EXPECT_TRUE(RationalPoly({0, 0, 0}).is_zero());
  EXPECT_EQ(RationalPoly({1, 2, 0, 0}).degree(), 1);
  EXPECT_EQ(RationalPoly({1, -1}) + RationalPoly({-1, 1}), RationalPoly());
}

TEST(RationalPoly, Arithmetic) {
  const RationalPoly a{1, 1};   // 1 + t
  const RationalPoly b{-1, 1};  // -1 + t
  EXPECT_EQ(a * b, RationalPoly({-1, 0, 1}));
  EXPECT_EQ(a - b, RationalPoly({2}));
  EXPECT_EQ(a * Rational(1, 2), RationalPoly({Rational(1, 2), Rational(1, 2)}));
  EXPECT_TRUE((a * RationalPoly()).is_zero());
}

TEST(RationalPoly, EvaluateAndShift) {
  const RationalPoly p{Rational(1), Rational(3, 2), Rational(1, 2)};  // (t+1)(t+2)/2
  EXPECT_EQ(p(Rational(2)), Rational(6));
  EXPECT_EQ(p.eval_integer(-1), 0);
  EXPECT_TRUE(p.integral_at(7));
  const RationalPoly half{Rational(0), Rational(1, 2)};
  EXPECT_FALSE(half.integral_at(1));
  EXPECT_THROW(half.eval_integer(1), std::runtime_error);

  const RationalPoly q = p.shifted(3);
  for (int t = -6; t <= 6; ++t) EXPECT_EQ(q(Rational(t)), p(Rational(t + 3))) << t;
}

TEST(RationalPoly, BinomialPolyMatchesPascal) {
  for (int shift = -6; shift <= 6; ++shift) {
    for (int j = 0; j <= 7; ++j) {
      const RationalPoly p = binomial_poly(shift, j);
      EXPECT_EQ(p.degree(), j);
      for (int t = -10; t <= 10; ++t) {
        EXPECT_EQ(p(Rational(t)), Rational(oracle::binom(t + shift, j))) << shift << " " << j << " " << t;
      }
    }
  }
  EXPECT_TRUE(binomial_poly(3, -1).is_zero());
}

TEST(RationalPoly, ToString) {
  EXPECT_EQ(RationalPoly().to_string(), "0");
  EXPECT_EQ(RationalPoly({2, Rational(7, 2), Rational(3, 2)}).to_string(), "3/2*t^2 + 7/2*t + 2");
  EXPECT_EQ(RationalPoly({-1, 0, -1}).to_string("s"), "-s^2 - 1");
}
