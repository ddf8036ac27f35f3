#pragma once

// Exact arithmetic in real algebraic number fields Q[x]/(f) with a designated
// real embedding. Every coefficient in the library lives in one of these.

#include <gmpxx.h>

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace slp {

using Rational = mpq_class;
using Integer = mpz_class;

Rational parse_rational(const std::string& text);

/// Dense univariate polynomial over Q, coefficients stored low degree first.
/// The zero polynomial has no coefficients.
class RationalPolynomial {
public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<Rational> coeffs);

  static RationalPolynomial monomial(const Rational& c, int degree);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  const Rational& operator[](int i) const { return c_[static_cast<size_t>(i)]; }
  Rational coeff(int i) const;
  const Rational& leading() const { return c_.back(); }

  Rational evaluate(const Rational& x) const;
  double evaluate(double x) const;
  RationalPolynomial derivative() const;
  RationalPolynomial monic() const;

  friend RationalPolynomial operator+(const RationalPolynomial& a, const RationalPolynomial& b);
  friend RationalPolynomial operator-(const RationalPolynomial& a, const RationalPolynomial& b);
  friend RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b);
  friend RationalPolynomial operator*(const Rational& s, const RationalPolynomial& a);
  friend bool operator==(const RationalPolynomial& a, const RationalPolynomial& b) { return a.c_ == b.c_; }

  /// Euclidean division; throws DivisionByZero on a zero divisor.
  static void divmod(const RationalPolynomial& a, const RationalPolynomial& b,
                     RationalPolynomial& quotient, RationalPolynomial& remainder);
  static RationalPolynomial gcd(RationalPolynomial a, RationalPolynomial b);

  /// Number of distinct real roots in the half-open interval (lo, hi].
  int count_real_roots(const Rational& lo, const Rational& hi) const;

  std::string to_string(const std::string& var = "x") const;

private:
  void trim();
  std::vector<Rational> c_;
};

/// Returns a nontrivial monic factor of f over Q if one exists, else the zero
/// polynomial. Supports degrees up to 24.
RationalPolynomial find_rational_factor(const RationalPolynomial& f);

/// Minimal polynomial of 2cos(pi/m), obtained from the (2m)-th cyclotomic polynomial.
RationalPolynomial two_cos_pi_minpoly(int m);

class FieldElement;

/// The element 2cos(pi/m) of NumberField::two_cos_pi_over(m).
FieldElement two_cos_pi(int m);

/// 2cos(k*theta) as a polynomial in c = 2cos(theta):
/// V_0 = 2, V_1 = c, V_{k+1} = c V_k - V_{k-1}.
RationalPolynomial chebyshev_v(int k);

/// A number field Q[x]/(minpoly) together with an isolating interval picking
/// one real root. Fields are created once and live for the whole process, so
/// the raw handles stored inside elements never dangle.
class NumberField {
public:
  static const NumberField& create(const RationalPolynomial& minpoly, const Rational& lo,
                                   const Rational& hi, std::string generator_name = "t");
  static const NumberField& rationals();
  /// Q(2cos(pi/m)) with the generator embedded as 2cos(pi/m).
  static const NumberField& two_cos_pi_over(int m);
  /// Q(tau), tau = (1 + sqrt 5)/2.
  static const NumberField& golden();

  int degree() const { return minpoly_.degree(); }
  const RationalPolynomial& minpoly() const { return minpoly_; }
  const std::string& generator_name() const { return name_; }
  const Rational& lower() const { return lo_; }
  const Rational& upper() const { return hi_; }

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement generator() const;
  FieldElement from_rational(const Rational& q) const;
  FieldElement from_coeffs(std::vector<Rational> coeffs) const;
  FieldElement from_polynomial(const RationalPolynomial& p) const;

  /// Sign of a under the designated embedding. Zero is decided from the
  /// coefficients; otherwise the generator interval is bisected until the
  /// interval image of a excludes zero.
  int sign(const FieldElement& a) const;
  double approx(const FieldElement& a) const;

  NumberField(const NumberField&) = delete;
  NumberField& operator=(const NumberField&) = delete;

private:
  NumberField(RationalPolynomial minpoly, Rational lo, Rational hi, std::string name);
  friend class FieldRegistry;

  RationalPolynomial minpoly_;
  Rational lo_, hi_;
  std::string name_;
  double approx_generator_ = 0.0;
};

/// Element of a NumberField in reduced form (degree < deg minpoly).
/// A default-constructed element is an unbound zero that adopts the field of
/// whatever it is combined with.
class FieldElement {
public:
  FieldElement() = default;

  const NumberField* field() const { return field_; }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(int i) const;

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  int sign() const;
  double approx() const;

  FieldElement inverse() const;
  FieldElement pow(unsigned e) const;

  FieldElement& operator+=(const FieldElement& b);
  FieldElement& operator-=(const FieldElement& b);
  FieldElement& operator*=(const FieldElement& b);
  FieldElement& operator/=(const FieldElement& b);
  FieldElement& operator*=(const Rational& q);

  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }
  friend FieldElement operator*(FieldElement a, const Rational& q) { return a *= q; }
  friend FieldElement operator*(const Rational& q, FieldElement a) { return a *= q; }
  friend FieldElement operator-(FieldElement a);
  friend bool operator==(const FieldElement& a, const FieldElement& b);
  friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

  /// Total order on coefficient vectors; unrelated to the real embedding.
  friend bool structural_less(const FieldElement& a, const FieldElement& b);

  std::string to_string() const;
  friend std::ostream& operator<<(std::ostream& os, const FieldElement& a);

private:
  friend class NumberField;
  FieldElement(const NumberField* f, std::vector<Rational> c) : field_(f), c_(std::move(c)) {}
  const NumberField* adopt(const FieldElement& b);

  const NumberField* field_ = nullptr;
  std::vector<Rational> c_;
};

/// Total order on coefficient vectors, for use as a map key.
bool structural_less(const FieldElement& a, const FieldElement& b);

} // namespace slp
