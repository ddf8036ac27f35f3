#include "slp/lefschetz.hpp"

#include "slp/errors.hpp"

namespace slp {

namespace {

using Clock = std::chrono::steady_clock;

DenseMatrix<Polynomial> multiply(const DenseMatrix<Polynomial>& a, const DenseMatrix<Polynomial>& b, int nvars,
                                 const std::function<void(int)>& checkpoint) {
  DenseMatrix<Polynomial> c(a.rows(), b.cols(), Polynomial(nvars));
  for (int i = 0; i < a.rows(); ++i) {
    if (checkpoint) checkpoint(i);
    for (int j = 0; j < b.cols(); ++j) {
      PolynomialBuilder acc(nvars);
      for (int k = 0; k < a.cols(); ++k)
        if (!a(i, k).is_zero() && !b(k, j).is_zero()) acc.add(a(i, k) * b(k, j));
      c(i, j) = acc.build();
    }
  }
  return c;
}

} // namespace

SleVerdict is_sle(const CoinvariantRing& ring, const Vector& form) {
  SleVerdict v;
  v.result = true;
  const int m = ring.socle_degree();
  for (int i = 0; i <= m / 2; ++i) {
    const auto map = ring.multiplication_matrix(form, i, m - 2 * i);
    const FieldElement det = determinant(map.matrix);
    LevelReport r{i, map.matrix.rows(), !det.is_zero(), det.sign()};
    v.result = v.result && r.nonzero;
    v.levels.push_back(r);
  }
  return v;
}

SleVerdict is_sle(const CoinvariantRing& ring, const Polynomial& ell) {
  if (!ell.is_zero() && (ell.degree() != 1 || !ell.is_homogeneous()))
    throw DegreeOutOfRange("a Lefschetz candidate must be homogeneous of degree 1");
  Vector form(static_cast<size_t>(ring.nvars()), ring.field().zero());
  if (!ell.is_zero()) {
    auto c = ell.linear_coefficients();
    for (size_t i = 0; i < c.size() && i < form.size(); ++i) form[i] += c[i];
  }
  return is_sle(ring, form);
}

bool top_power_nonzero(const CoinvariantRing& ring, const Vector& form) {
  const auto map = ring.multiplication_matrix(form, 0, ring.socle_degree());
  return !map.matrix(0, 0).is_zero();
}

bool narrow_sle(const CoinvariantRing& ring, const Vector& form) {
  const auto h = ring.hilbert_function();
  const int m = ring.socle_degree();
  bool dihedral_shape = m >= 2 && h.front() == 1 && h.back() == 1;
  for (int d = 1; d < m && dihedral_shape; ++d) dihedral_shape = h[static_cast<size_t>(d)] == 2;
  if (!dihedral_shape) throw ShapeUnsupported("narrow test needs Hilbert function (1,2,...,2,1)");
  if (!top_power_nonzero(ring, form)) return false;
  for (int k = 1; k <= m - 2; ++k)
    if (determinant(ring.linear_map(form, k)).is_zero()) return false;
  return true;
}

DenseMatrix<Polynomial> symbolic_multiplication_matrix(const CoinvariantRing& ring,
                                                       const std::vector<Vector>& template_forms, int i, int k,
                                                       const std::function<void(int)>& checkpoint) {
  const int r = static_cast<int>(template_forms.size());
  if (r == 0 || r > kMaxVariables) throw DimensionMismatch("need between 1 and 12 template forms");
  if (i < 0 || k < 0 || i + k > ring.socle_degree()) throw DegreeOutOfRange("symbolic map degree out of range");
  const NumberField& f = ring.field();
  DenseMatrix<Polynomial> acc(ring.hilbert(i), ring.hilbert(i), Polynomial(r));
  for (int d = 0; d < acc.rows(); ++d) acc(d, d) = Polynomial::constant(r, f.one());
  for (int d = i; d < i + k; ++d) {
    std::vector<Matrix> parts;
    for (const Vector& form : template_forms) parts.push_back(ring.linear_map(form, d));
    DenseMatrix<Polynomial> step(ring.hilbert(d + 1), ring.hilbert(d), Polynomial(r));
    for (int row = 0; row < step.rows(); ++row)
      for (int col = 0; col < step.cols(); ++col) {
        PolynomialBuilder b(r);
        for (int p = 0; p < r; ++p) b.add(Monomial::variable(p), parts[static_cast<size_t>(p)](row, col));
        step(row, col) = b.build();
      }
    acc = multiply(step, acc, r, checkpoint);
  }
  return acc;
}

std::vector<LevelDeterminant> symbolic_determinants(const CoinvariantRing& ring,
                                                    const std::vector<Vector>& template_forms,
                                                    const std::vector<int>& levels,
                                                    std::chrono::milliseconds budget) {
  const int m = ring.socle_degree();
  const int r = static_cast<int>(template_forms.size());
  std::vector<LevelDeterminant> out;
  for (int i : levels) {
    if (i < 0 || 2 * i > m) throw DegreeOutOfRange("level " + std::to_string(i) + " outside 0.." + std::to_string(m / 2));
    LevelDeterminant ld;
    ld.level = i;
    ld.size = ring.hilbert(i);
    const auto start = Clock::now();
    std::function<void(int)> checkpoint;
    if (budget.count() > 0)
      checkpoint = [start, budget, i](int) {
        if (Clock::now() - start > budget)
          throw BudgetExceeded("level " + std::to_string(i) + " exceeded its time budget");
      };
    try {
      auto mat = symbolic_multiplication_matrix(ring, template_forms, i, m - 2 * i, checkpoint);
      ld.f = polynomial_determinant(mat, r, ring.field(), checkpoint);
    } catch (const BudgetExceeded&) {
      ld.f.reset();
    }
    ld.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    out.push_back(std::move(ld));
  }
  return out;
}

std::vector<Vector> h3_table_weights(const RootSystem& rs) {
  if (rs.type().factors.size() != 1 || rs.type().factors[0].family != Family::H3)
    throw UnsupportedType("the H3 table weights need type H3");
  const NumberField& f = rs.field();
  const FieldElement tau = f.generator();
  return {Vector{f.one(), f.zero(), f.zero()}, Vector{tau, f.one(), f.zero()}, Vector{tau * tau, f.zero(), f.one()}};
}

const char* sign_class_label(SignClass c) {
  switch (c) {
    case SignClass::PosPos: return "a>0,b>0";
    case SignClass::ZeroPos: return "a=0,b>0";
    case SignClass::PosZero: return "a>0,b=0";
    case SignClass::NegNeg: return "a<0,b<0";
    case SignClass::ZeroNeg: return "a=0,b<0";
    case SignClass::NegZero: return "a<0,b=0";
    case SignClass::Mixed: return "mixed";
  }
  return "?";
}

SignClass classify(const FieldElement& c) {
  if (c.field() && c.field()->degree() > 2) throw UnsupportedType("sign classes need a field of degree at most 2");
  const int a = sgn(c.coeff(1));
  const int b = sgn(c.coeff(0));
  if (a > 0 && b > 0) return SignClass::PosPos;
  if (a == 0 && b > 0) return SignClass::ZeroPos;
  if (a > 0 && b == 0) return SignClass::PosZero;
  if (a < 0 && b < 0) return SignClass::NegNeg;
  if (a == 0 && b < 0) return SignClass::ZeroNeg;
  if (a < 0 && b == 0) return SignClass::NegZero;
  return SignClass::Mixed;
}

SignTable sign_table(const Polynomial& f) {
  SignTable t;
  for (const auto& term : f.terms()) {
    ++t.counts[static_cast<size_t>(classify(term.coeff))];
    ++t.total;
  }
  return t;
}

const Term& first_variable_leading_term(const Polynomial& f) {
  if (f.is_zero()) throw DivisionByZero("zero polynomial has no leading term");
  const Term* best = &f.terms().front();
  for (const auto& t : f.terms())
    if (t.mono[0] > best->mono[0]) best = &t;
  return *best;
}

Polynomial normalize_global_sign(const Polynomial& f, int expected_sign) {
  if (f.is_zero()) return f;
  const int s = first_variable_leading_term(f).coeff.sign();
  return s == expected_sign ? f : -f;
}

} // namespace slp
