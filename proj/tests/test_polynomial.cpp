#include <gtest/gtest.h>

#include <random>

#include "slp/errors.hpp"
#include "slp/polynomial.hpp"

using namespace slp;

namespace {

const NumberField& Q() { return NumberField::rationals(); }

Polynomial x(int i, int n = 3) { return Polynomial::variable(n, i, Q()); }
Polynomial k(int c, int n = 3) { return Polynomial::constant(n, Q().from_rational(c)); }

Monomial mono(std::initializer_list<int> e) {
  std::vector<int> v(e);
  return Monomial::from_exponents(v);
}

Polynomial random_poly(std::mt19937_64& rng, int nvars, int max_degree, int terms) {
  std::uniform_int_distribution<int> coef(-5, 5), deg(0, max_degree);
  PolynomialBuilder b(nvars);
  for (int t = 0; t < terms; ++t) {
    Monomial m;
    int left = deg(rng);
    for (int v = 0; v < nvars && left > 0; ++v) {
      std::uniform_int_distribution<int> e(0, left);
      const int ev = v + 1 == nvars ? left : e(rng);
      m.set(v, ev);
      left -= ev;
    }
    b.add(m, Q().from_rational(coef(rng)));
  }
  return b.build();
}

} // namespace

TEST(Monomial, GrevlexOrder) {
  // Same degree: the monomial with the smaller power of the last variable is larger.
  EXPECT_TRUE(grevlex_less(mono({0, 1, 1}), mono({1, 0, 1})));
  EXPECT_TRUE(grevlex_less(mono({1, 0, 1}), mono({0, 2, 0})));
  EXPECT_TRUE(grevlex_less(mono({0, 2, 0}), mono({1, 1, 0})));
  EXPECT_TRUE(grevlex_less(mono({1, 1, 0}), mono({2, 0, 0})));
  // Degree dominates.
  EXPECT_TRUE(grevlex_less(mono({5, 0, 0}), mono({0, 0, 6})));
  EXPECT_FALSE(grevlex_less(mono({1, 1, 1}), mono({1, 1, 1})));
}

TEST(Monomial, DivisibilityAndLcm) {
  EXPECT_TRUE(mono({1, 0, 2}).divides(mono({1, 3, 2})));
  EXPECT_FALSE(mono({1, 0, 2}).divides(mono({0, 3, 2})));
  EXPECT_EQ(mono({1, 0, 2}).lcm(mono({0, 3, 1})), mono({1, 3, 2}));
  EXPECT_EQ(mono({1, 3, 2}) / mono({1, 0, 2}), mono({0, 3, 0}));
  EXPECT_EQ((mono({1, 3, 2}) * mono({2, 0, 1})).degree(), 9);
}

TEST(Polynomial, CanonicalTermsAndZero) {
  const Polynomial p = x(0) + x(1) - x(0);
  EXPECT_EQ(p, x(1));
  EXPECT_TRUE((x(2) - x(2)).is_zero());
  EXPECT_EQ((x(0) * x(1)).degree(), 2);
  for (const auto& t : (x(0) + k(3)).terms()) EXPECT_FALSE(t.coeff.is_zero());
}

TEST(Polynomial, BinomialExpansion) {
  const Polynomial p = (x(0) + x(1)).pow(4);
  EXPECT_EQ(p.size(), 5u);
  EXPECT_EQ(p.coefficient(mono({2, 2, 0})), Q().from_rational(6));
  EXPECT_TRUE(p.is_homogeneous());
  EXPECT_FALSE((p + k(1)).is_homogeneous());
}

TEST(Polynomial, LeadingTermIsGrevlexLargest) {
  const Polynomial p = x(2) * x(2) + x(0) * x(1) + x(1) * x(1);
  EXPECT_EQ(p.leading().mono, mono({1, 1, 0}));
}

TEST(Polynomial, DerivativeAndEvaluation) {
  const Polynomial p = x(0).pow(3) * x(1) + k(2) * x(1) * x(2);
  EXPECT_EQ(p.derivative(0), k(3) * x(0).pow(2) * x(1));
  EXPECT_EQ(p.derivative(2), k(2) * x(1));
  const std::vector<FieldElement> pt{Q().from_rational(2), Q().from_rational(3), Q().from_rational(-1)};
  EXPECT_EQ(p.evaluate(pt), Q().from_rational(8 * 3 - 6));
}

TEST(Polynomial, SubstitutionComposes) {
  const Polynomial p = x(0) * x(0) - x(1);
  const std::vector<Polynomial> images{x(1), x(0)};
  std::vector<Polynomial> padded = images;
  padded.push_back(x(2));
  EXPECT_EQ(p.substitute(padded), x(1) * x(1) - x(0));
}

TEST(Polynomial, ExactDivision) {
  const Polynomial a = x(0) + x(1), b = x(0) - k(2) * x(2);
  EXPECT_EQ((a * b).divide_exact(a), b);
  EXPECT_THROW((a * b + k(1)).divide_exact(a), NotExact);
}

TEST(Polynomial, LinearFormRoundTrip) {
  const std::vector<FieldElement> c{Q().from_rational(1), Q().from_rational(0), Q().from_rational(-2)};
  const Polynomial l = Polynomial::linear_form(c);
  EXPECT_EQ(l, x(0) - k(2) * x(2));
  EXPECT_EQ(l.linear_coefficients(), c);
}

TEST(Polynomial, RingAxiomsOnRandomPolynomials) {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 100; ++trial) {
    const Polynomial a = random_poly(rng, 3, 4, 6), b = random_poly(rng, 3, 4, 6), c = random_poly(rng, 3, 3, 4);
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * b, b * a);
    ASSERT_TRUE((a - a).is_zero());
    if (!a.is_zero()) ASSERT_EQ((a * b).divide_exact(a), b);
    for (size_t i = 1; i < a.terms().size(); ++i)
      ASSERT_TRUE(grevlex_less(a.terms()[i].mono, a.terms()[i - 1].mono));
  }
}

TEST(Polynomial, ToString) {
  const auto names = default_variable_names(3);
  EXPECT_EQ((x(0) * x(0) - k(2) * x(2)).to_string(names), "x1^2 - 2*x3");
}
