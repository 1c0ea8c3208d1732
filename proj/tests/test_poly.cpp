#include "schubert/poly.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace schubert;

namespace {

Polynomial lin(RootVector f) { return Polynomial::linear(f); }

Polynomial random_poly(std::mt19937 &rng, std::size_t n, int terms, int maxdeg) {
  std::uniform_int_distribution<int> e(0, maxdeg), c(-5, 5);
  Polynomial p(n);
  for (int t = 0; t < terms; ++t) {
    Monomial m(n);
    for (auto &x : m)
      x = e(rng);
    p.add_term(m, make_rational(c(rng), 1 + e(rng)));
  }
  return p;
}

} // namespace

TEST(FactoredPoly, Expand) {
  EXPECT_EQ(expand(FactoredPoly(2)), Polynomial::constant(2, 1));
  const FactoredPoly f(3, 1, {{1, 1, 0}, {1, 1, 1}});
  // (a1 + a2)(a1 + a2 + a3), distributed by hand.
  Polynomial want(3);
  want.add_term({2, 0, 0}, 1);
  want.add_term({1, 1, 0}, 2);
  want.add_term({0, 2, 0}, 1);
  want.add_term({1, 0, 1}, 1);
  want.add_term({0, 1, 1}, 1);
  EXPECT_EQ(expand(f), want);
  EXPECT_EQ(expand(FactoredPoly(2, make_rational(1, 2), {{1, 0}})), make_rational(1, 2) * lin({1, 0}));
}

TEST(FactoredPoly, Cancel) {
  FactoredPoly f(2, 1, {{1, 0}, {0, 1}, {1, 1}});
  f.cancel({1, 1});
  EXPECT_EQ(f, FactoredPoly(2, 1, {{1, 0}, {0, 1}}));

  FactoredPoly g(2, 1, {{1, 0}, {1, 1}, {1, 2}});
  g.cancel({2, 2});
  EXPECT_EQ(g, FactoredPoly(2, make_rational(1, 2), {{1, 0}, {1, 2}}));

  EXPECT_THROW(cancel_factor(FactoredPoly(2, 1, {{1, 0}}), {0, 1}), CancellationFailure);
  EXPECT_THROW(cancel_factor(FactoredPoly(2, 1, {{1, 0}}), {-1, 0}), CancellationFailure);
  EXPECT_THROW(cancel_factor(FactoredPoly(2, 1, {{1, 0}}), {0, 0}), InvalidArgument);
  EXPECT_THROW(FactoredPoly(2, 1, {{0, 0}}), InvalidArgument);
}

TEST(FactoredPoly, CancelAgreesWithDivision) {
  const FactoredPoly f(3, 3, {{1, 0, 0}, {1, 1, 0}, {0, 1, 1}, {1, 2, 2}});
  for (const auto &d : f.factors()) {
    const RootVector d2 = make_rational(5, 2) * d;
    const auto q = divide_linear(expand(f), d2);
    ASSERT_TRUE(q.has_value());
    EXPECT_EQ(expand(cancel_factor(f, d2)), *q);
  }
}

TEST(Polynomial, DivideLinear) {
  const auto p = lin({1, 0}) * lin({1, 0}) + lin({1, 0}) * lin({0, 1});
  EXPECT_EQ(divide_linear(p, {1, 0}), lin({1, 1}));
  EXPECT_FALSE(divide_linear(lin({1, 1}), {1, 0}).has_value());
  EXPECT_EQ(divide_linear(Polynomial(2), {1, 1}), Polynomial(2));
  EXPECT_THROW(divide_linear(p, {0, 0}), InvalidArgument);
  EXPECT_THROW(divide_linear(p, {1, 0, 0}), InvalidArgument);
}

TEST(Polynomial, DivideLinearRoundTrip) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> c(-3, 3);
  for (int trial = 0; trial < 200; ++trial) {
    const Polynomial q = random_poly(rng, 3, 6, 3);
    RootVector d{c(rng), c(rng), c(rng)};
    if (d.is_zero())
      continue;
    const auto back = divide_linear(q * lin(d), d);
    ASSERT_TRUE(back.has_value());
    EXPECT_EQ(*back, q);
    // Adding a constant breaks divisibility.
    if (!q.is_zero())
      EXPECT_FALSE(divide_linear(q * lin(d) + Polynomial::constant(3, 1), d).has_value());
  }
}

TEST(Polynomial, Evaluate) {
  EXPECT_EQ(Polynomial::constant(2, 1).evaluate({7, 9}), 1);
  EXPECT_EQ(lin({1, 1}).evaluate({2, 3}), 5);
  const FactoredPoly f(3, 1, {{1, 1, 0}, {1, 1, 1}});
  EXPECT_EQ(evaluate(expand(f), {1, 1, 1}), 6);
  EXPECT_EQ(evaluate(f, {1, 1, 1}), 6);
  EXPECT_THROW(lin({1, 1}).evaluate({1}), InvalidArgument);
}

TEST(Polynomial, RingAxioms) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const auto a = random_poly(rng, 2, 4, 2), b = random_poly(rng, 2, 4, 2), c = random_poly(rng, 2, 4, 2);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    EXPECT_TRUE((a - a).is_zero());
    const std::vector<Rational> x{make_rational(2, 3), -5};
    EXPECT_EQ((a * b).evaluate(x), a.evaluate(x) * b.evaluate(x));
  }
}

TEST(Polynomial, Predicates) {
  const auto p = lin({1, 2}) * lin({1, 0});
  EXPECT_EQ(p.degree(), 2);
  EXPECT_TRUE(p.is_homogeneous(2));
  EXPECT_FALSE((p + Polynomial::constant(2, 1)).is_homogeneous(2));
  EXPECT_TRUE(p.has_nonnegative_coefficients());
  EXPECT_FALSE(lin({1, -1}).has_nonnegative_coefficients());
  EXPECT_TRUE(p.has_integer_coefficients());
  EXPECT_FALSE((make_rational(1, 2) * p).has_integer_coefficients());
  EXPECT_EQ(Polynomial(2).degree(), -1);
  EXPECT_THROW(p + Polynomial(3), InvalidArgument);
}

TEST(Polynomial, Proportional) {
  Rational c;
  EXPECT_TRUE(proportional({2, 4}, {1, 2}, &c));
  EXPECT_EQ(c, 2);
  EXPECT_TRUE(proportional({-1, -2}, {1, 2}, &c));
  EXPECT_EQ(c, -1);
  EXPECT_FALSE(proportional({1, 1}, {1, 2}));
  EXPECT_FALSE(proportional({0, 0}, {1, 2}));
}
