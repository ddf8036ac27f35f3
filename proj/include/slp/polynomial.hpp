#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "slp/numfield.hpp"

namespace slp {

inline constexpr int kMaxVariables = 12;

/// Exponent vector. Variables past the ring's variable count stay zero.
class Monomial {
public:
  Monomial() { e_.fill(0); }
  static Monomial variable(int i, int power = 1);
  static Monomial from_exponents(std::span<const int> exps);

  int operator[](int i) const { return e_[static_cast<size_t>(i)]; }
  void set(int i, int value);
  int degree() const { return degree_; }

  bool divides(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// Requires b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }
  /// Graded reverse lexicographic comparison: true when a < b.
  friend bool grevlex_less(const Monomial& a, const Monomial& b);
  friend bool operator<(const Monomial& a, const Monomial& b) { return grevlex_less(a, b); }

  std::uint64_t hash() const;
  std::string to_string(std::span<const std::string> names) const;

private:
  std::array<std::uint8_t, kMaxVariables> e_;
  int degree_ = 0;
};

struct MonomialHash {
  size_t operator()(const Monomial& m) const { return static_cast<size_t>(m.hash()); }
};

class PolynomialBuilder;

struct Term {
  Monomial mono;
  FieldElement coeff;
};

/// Sparse polynomial over a number field. Terms are kept sorted by strictly
/// decreasing grevlex order with no zero coefficients.
class Polynomial {
public:
  Polynomial() = default;
  explicit Polynomial(int nvars) : nvars_(nvars) {}
  Polynomial(int nvars, std::vector<Term> terms);

  static Polynomial constant(int nvars, const FieldElement& c);
  static Polynomial variable(int nvars, int i, const NumberField& field);
  /// Linear form sum_i coeffs[i] * x_i.
  static Polynomial linear_form(std::span<const FieldElement> coeffs);
  static Polynomial monomial(int nvars, const Monomial& m, const FieldElement& c);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }
  const Term& leading() const { return terms_.front(); }
  int degree() const;
  bool is_homogeneous() const;
  FieldElement coefficient(const Monomial& m) const;

  Polynomial& operator+=(const Polynomial& b);
  Polynomial& operator-=(const Polynomial& b);
  Polynomial& operator*=(const FieldElement& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const FieldElement& c) { return a *= c; }
  friend Polynomial operator*(const FieldElement& c, Polynomial a) { return a *= c; }
  friend bool operator==(const Polynomial& a, const Polynomial& b);
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  Polynomial times_term(const Monomial& m, const FieldElement& c) const;
  /// this - c * m * other, fused.
  void subtract_multiple(const Polynomial& other, const Monomial& m, const FieldElement& c);
  Polynomial pow(unsigned e) const;
  Polynomial monic() const;
  /// Partial derivative with respect to x_var.
  Polynomial derivative(int var) const;

  /// Substitutes x_i -> images[i] for every variable.
  Polynomial substitute(std::span<const Polynomial> images) const;
  FieldElement evaluate(std::span<const FieldElement> point) const;

  /// Exact quotient; throws NotExact when divisor does not divide this.
  Polynomial divide_exact(const Polynomial& divisor) const;

  /// Coefficients of the linear part, one per variable.
  std::vector<FieldElement> linear_coefficients() const;

  std::string to_string(std::span<const std::string> names = {}) const;

private:
  friend class PolynomialBuilder;
  int nvars_ = 0;
  std::vector<Term> terms_;
};

std::vector<std::string> default_variable_names(int nvars, const std::string& stem = "x");

/// Collects unsorted terms and emits a canonical polynomial.
class PolynomialBuilder {
public:
  explicit PolynomialBuilder(int nvars) : nvars_(nvars) {}
  void add(const Monomial& m, const FieldElement& c);
  void add(const Polynomial& p);
  Polynomial build();

private:
  int nvars_;
  std::vector<Term> terms_;
};

} // namespace slp
