#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "slp/errors.hpp"
#include "slp/numfield.hpp"

using namespace slp;

namespace {

RationalPolynomial poly(std::initializer_list<int> low_first) {
  std::vector<Rational> c;
  for (int x : low_first) c.emplace_back(x);
  return RationalPolynomial(c);
}

FieldElement random_element(const NumberField& f, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-20, 20), den(1, 7);
  std::vector<Rational> c;
  for (int i = 0; i < f.degree(); ++i) {
    Rational q(num(rng), den(rng));
    q.canonicalize();
    c.push_back(q);
  }
  return f.from_coeffs(c);
}

} // namespace

TEST(NumberField, GoldenRatioPositiveRoot) {
  const NumberField& f = NumberField::create(poly({-1, -1, 1}), 1, 2, "tau");
  EXPECT_EQ(f.degree(), 2);
  EXPECT_NEAR(f.generator().approx(), (1 + std::sqrt(5.0)) / 2, 1e-12);
}

TEST(NumberField, ConjugateRootIsolatedByInterval) {
  const NumberField& f = NumberField::create(poly({-1, -1, 1}), -1, 0, "sigma");
  EXPECT_NEAR(f.generator().approx(), (1 - std::sqrt(5.0)) / 2, 1e-12);
  EXPECT_EQ(f.generator().sign(), -1);
}

TEST(NumberField, LinearMinpolyIsRationalField) {
  const NumberField& f = NumberField::create(poly({-1, 1}), 0, 2, "one");
  EXPECT_EQ(f.degree(), 1);
  EXPECT_TRUE(f.generator().is_one());
  EXPECT_TRUE(f.generator().is_rational());
}

TEST(NumberField, RejectsReducibleMinpoly) {
  // (x^2 - 2)(x^2 - 3)
  EXPECT_THROW(NumberField::create(poly({6, 0, -5, 0, 1}), 1, 3, "r"), NotIrreducible);
  EXPECT_THROW(NumberField::create(poly({-2, 1, 1}), 0, 2, "r"), NotIrreducible);  // (x+2)(x-1)
}

TEST(NumberField, RejectsNonIsolatingInterval) {
  EXPECT_THROW(NumberField::create(poly({-1, -1, 1}), -2, 2, "tau"), NotIsolating);
  EXPECT_THROW(NumberField::create(poly({-1, -1, 1}), 2, 3, "tau"), NotIsolating);
}

TEST(NumberField, GoldenRatioArithmetic) {
  const NumberField& f = NumberField::golden();
  const FieldElement tau = f.generator();
  EXPECT_EQ(tau * tau, tau + f.one());
  EXPECT_EQ(tau + f.zero(), tau);
  EXPECT_EQ(tau.inverse(), tau - f.one());
  EXPECT_EQ(f.one() / tau, tau - f.one());
  EXPECT_EQ((tau - f.one()).sign(), 1);
  EXPECT_EQ((f.one() - tau).sign(), -1);
  EXPECT_EQ(f.zero().sign(), 0);
}

TEST(NumberField, DivisionByZeroThrows) {
  const NumberField& f = NumberField::golden();
  EXPECT_THROW(f.zero().inverse(), DivisionByZero);
}

TEST(NumberField, SignDecidesNearlyEqualValues) {
  // tau - 1.6180339887 is about 5e-11 > 0.
  const NumberField& f = NumberField::golden();
  const FieldElement d = f.generator() - f.from_rational(Rational(mpz_class("16180339887"), mpz_class("10000000000")));
  EXPECT_EQ(d.sign(), 1);
  EXPECT_EQ((-d).sign(), -1);
}

TEST(NumberField, TwoCosMinimalPolynomials) {
  EXPECT_EQ(two_cos_pi_minpoly(3), poly({-1, 1}));
  EXPECT_EQ(two_cos_pi_minpoly(4), poly({-2, 0, 1}));
  EXPECT_EQ(two_cos_pi_minpoly(5), poly({-1, -1, 1}));
  EXPECT_EQ(two_cos_pi_minpoly(6), poly({-3, 0, 1}));
  EXPECT_EQ(two_cos_pi_minpoly(7), poly({1, -2, -1, 1}));
  for (int m = 3; m <= 30; ++m) {
    const FieldElement c = two_cos_pi(m);
    EXPECT_NEAR(c.approx(), 2 * std::cos(std::numbers::pi / m), 1e-12) << "m = " << m;
    int phi = 0;
    for (int k = 1; k <= 2 * m; ++k) phi += std::gcd(k, 2 * m) == 1;
    EXPECT_EQ(NumberField::two_cos_pi_over(m).degree(), phi / 2) << "m = " << m;
  }
}

TEST(NumberField, ChebyshevRecurrence) {
  for (int m : {5, 7, 12}) {
    const NumberField& f = NumberField::two_cos_pi_over(m);
    for (int k = 0; k <= 2 * m; ++k) {
      const FieldElement v = f.from_polynomial(chebyshev_v(k));
      EXPECT_NEAR(v.approx(), 2 * std::cos(k * std::numbers::pi / m), 1e-9);
    }
  }
}

TEST(NumberField, ParseRational) {
  EXPECT_EQ(parse_rational("3/6"), Rational(1, 2));
  EXPECT_EQ(parse_rational("-2"), Rational(-2));
  EXPECT_EQ(parse_rational("0.25"), Rational(1, 4));
  EXPECT_THROW(parse_rational(""), std::invalid_argument);
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
}

TEST(NumberField, MixedFieldsRejected) {
  const FieldElement a = NumberField::golden().generator();
  const FieldElement b = two_cos_pi(7);
  EXPECT_THROW(a + b, FieldMismatch);
}

TEST(NumberField, UnboundZeroAdoptsField) {
  FieldElement z;
  z += two_cos_pi(7);
  EXPECT_EQ(z, two_cos_pi(7));
}

class NumberFieldProperties : public ::testing::TestWithParam<int> {};

TEST_P(NumberFieldProperties, AxiomsAndSignMultiplicativity) {
  const int m = GetParam();
  const NumberField& f = m == 0 ? NumberField::golden() : NumberField::two_cos_pi_over(m);
  std::mt19937_64 rng(1000 + static_cast<unsigned>(m));
  for (int trial = 0; trial < 1000; ++trial) {
    const FieldElement a = random_element(f, rng), b = random_element(f, rng), c = random_element(f, rng);
    ASSERT_EQ((a + b) + c, a + (b + c));
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ(a - a, f.zero());
    ASSERT_EQ(a.sign() * b.sign(), (a * b).sign());
    ASSERT_EQ(a.sign() == 0, a.is_zero());
    if (!a.is_zero()) ASSERT_EQ(a * a.inverse(), f.one());
    const double approx = a.approx();
    if (std::abs(approx) > 1e-9) ASSERT_EQ(a.sign(), approx > 0 ? 1 : -1);
  }
}

INSTANTIATE_TEST_SUITE_P(Fields, NumberFieldProperties, ::testing::Values(0, 3, 5, 7, 12, 30));

TEST(NumberField, UnreducedRationalInputsAreCanonical) {
  const NumberField& f = NumberField::golden();
  EXPECT_EQ(f.from_rational(Rational(4, 2)), f.from_rational(2));
  EXPECT_EQ(f.from_coeffs({Rational(2, 4), Rational(-6, 3)}), f.from_coeffs({Rational(1, 2), Rational(-2)}));
  EXPECT_TRUE((f.from_rational(Rational(3, 3)) * f.one()).is_one());
}
