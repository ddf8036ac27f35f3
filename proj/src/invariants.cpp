#include "slp/invariants.hpp"

#include "slp/errors.hpp"

namespace slp {

namespace {

Polynomial power_sum(int nvars, int begin, int end, int k, const NumberField& f) {
  PolynomialBuilder b(nvars);
  for (int i = begin; i < end; ++i) b.add(Monomial::variable(i, k), f.one());
  return b.build();
}

// Elementary symmetric polynomials e_1..e_n in the given polynomials.
std::vector<Polynomial> elementary_symmetric(const std::vector<Polynomial>& xs, int nvars, const NumberField& f) {
  std::vector<Polynomial> e(xs.size() + 1, Polynomial(nvars));
  e[0] = Polynomial::constant(nvars, f.one());
  for (const Polynomial& x : xs)
    for (size_t k = xs.size(); k >= 1; --k) e[k] += e[k - 1] * x;
  e.erase(e.begin());
  return e;
}

Rational binomial(int n, int k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(r);
}

} // namespace

Polynomial act_by_inverse(const Matrix& g_inverse, const Polynomial& p) {
  const int n = g_inverse.rows();
  if (g_inverse.cols() != n || p.nvars() != n)
    throw DimensionMismatch("group element is " + std::to_string(n) + "x" + std::to_string(g_inverse.cols()) +
                            " but the polynomial has " + std::to_string(p.nvars()) + " variables");
  std::vector<Polynomial> images;
  for (int i = 0; i < n; ++i) {
    std::vector<FieldElement> row;
    for (int j = 0; j < n; ++j) row.push_back(g_inverse(i, j));
    images.push_back(Polynomial::linear_form(row));
  }
  return p.substitute(images);
}

Polynomial act(const Matrix& g, const Polynomial& p) {
  const NumberField* field = nullptr;
  for (int i = 0; i < g.rows() && !field; ++i)
    for (int j = 0; j < g.cols() && !field; ++j) field = g(i, j).field();
  return act_by_inverse(inverse(g, field ? *field : NumberField::rationals()), p);
}

InvariantSystem fundamental_invariants(const RootSystem& rs) {
  const int n = rs.dimension();
  const NumberField& f = rs.field();
  auto var = [&](int i) { return Polynomial::variable(n, i, f); };
  InvariantSystem out;
  for (size_t b = 0; b < rs.blocks().size(); ++b) {
    const auto& block = rs.blocks()[b];
    const IrreducibleType& t = rs.type().factors[b];
    const int lo = block.coord_begin, hi = block.coord_end;
    switch (t.family) {
      case Family::A:
        for (int k = 1; k <= t.param + 1; ++k) {
          out.generators.push_back(power_sum(n, lo, hi, k, f));
          out.degrees.push_back(k);
        }
        break;
      case Family::B:
      case Family::D: {
        std::vector<Polynomial> squares;
        for (int i = lo; i < hi; ++i) squares.push_back(var(i) * var(i));
        auto e = elementary_symmetric(squares, n, f);
        const int count = t.family == Family::B ? t.param : t.param - 1;
        for (int k = 0; k < count; ++k) {
          out.generators.push_back(e[static_cast<size_t>(k)]);
          out.degrees.push_back(2 * (k + 1));
        }
        if (t.family == Family::D) {
          Monomial m;
          for (int i = lo; i < hi; ++i) m.set(i, 1);
          out.generators.push_back(Polynomial::monomial(n, m, f.one()));
          out.degrees.push_back(t.param);
        }
        break;
      }
      case Family::I2: {
        // With y = sin(theta) y': x^2 + y^2, and Re (x + i y)^m for even m or
        // Im (x + i y)^m / sin(theta) for odd m (the mirror x = 0 flips Re for odd m).
        const FieldElement c = two_cos_pi(t.param);
        const FieldElement s2 = f.one() - c * c * Rational(1, 4);
        const int m = t.param;
        const int odd = m % 2;
        Polynomial q = var(lo) * var(lo) + var(lo + 1) * var(lo + 1) * s2;
        PolynomialBuilder top(n);
        FieldElement s_pow = f.one();
        for (int j = 0; 2 * j + odd <= m; ++j) {
          Monomial mono;
          mono.set(lo, m - 2 * j - odd);
          mono.set(lo + 1, 2 * j + odd);
          FieldElement coeff = s_pow * binomial(m, 2 * j + odd);
          top.add(mono, j % 2 ? -coeff : coeff);
          s_pow *= s2;
        }
        out.generators.push_back(std::move(q));
        out.degrees.push_back(2);
        out.generators.push_back(top.build());
        out.degrees.push_back(m);
        break;
      }
      case Family::H3: {
        const FieldElement tau = f.generator();
        const std::pair<int, int> pairs[] = {{0, 1}, {1, 2}, {2, 0}};
        for (int k : {1, 3, 5}) {
          Polynomial sum(n);
          for (auto [i, j] : pairs) {
            Polynomial a = var(lo + i) * tau;
            sum += (a + var(lo + j)).pow(static_cast<unsigned>(2 * k));
            sum += (a - var(lo + j)).pow(static_cast<unsigned>(2 * k));
          }
          out.generators.push_back(std::move(sum));
          out.degrees.push_back(2 * k);
        }
        break;
      }
      case Family::H4: throw UnsupportedType("H4 invariants are not supported");
    }
  }
  return out;
}

Polynomial reynolds(const RootSystem& rs, const Polynomial& p, const GroupElementSet* subgroup) {
  std::optional<GroupElementSet> full;
  if (!subgroup) {
    full = enumerate_group(rs);
    subgroup = &*full;
  }
  // Summing p(g x) over g equals summing p(g^{-1} x) since the set is closed under inverses.
  PolynomialBuilder sum(p.nvars());
  for (const auto& g : subgroup->elements()) sum.add(act_by_inverse(g.matrix, p));
  Polynomial avg = sum.build();
  avg *= rs.field().from_rational(Rational(1, static_cast<long>(subgroup->size())));
  return avg;
}

Polynomial polynomial_determinant(const DenseMatrix<Polynomial>& m, int nvars, const NumberField& field,
                                  const std::function<void(int)>& checkpoint) {
  return bareiss_determinant(
      m, Polynomial::constant(nvars, field.one()), [](const Polynomial& p) { return p.is_zero(); },
      [](const Polynomial& a, const Polynomial& b) { return a.divide_exact(b); },
      [](const Polynomial& p) { return p.size(); }, checkpoint);
}

Polynomial jacobian_determinant(const InvariantSystem& inv) {
  const int n = static_cast<int>(inv.generators.size());
  if (n == 0) throw DimensionMismatch("empty invariant system");
  const int nvars = inv.generators.front().nvars();
  if (nvars != n) throw DimensionMismatch("Jacobian needs as many generators as variables");
  const NumberField* field = &NumberField::rationals();
  for (const auto& g : inv.generators)
    if (!g.is_zero()) field = g.leading().coeff.field();
  DenseMatrix<Polynomial> jac(n, n, Polynomial(nvars));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) jac(i, j) = inv.generators[static_cast<size_t>(i)].derivative(j);
  Polynomial det = polynomial_determinant(jac, nvars, *field);
  return det;
}

bool jacobian_nonzero(const InvariantSystem& inv, std::uint64_t seed) {
  const int n = static_cast<int>(inv.generators.size());
  if (n == 0) return false;
  const int nvars = inv.generators.front().nvars();
  if (nvars != n) throw DimensionMismatch("Jacobian needs as many generators as variables");
  const NumberField* field = &NumberField::rationals();
  for (const auto& g : inv.generators)
    if (!g.is_zero()) field = g.leading().coeff.field();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(-97, 97);
  std::vector<FieldElement> point;
  for (int i = 0; i < n; ++i) point.push_back(field->from_rational(dist(rng)));
  Matrix jac(n, n, field->zero());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) jac(i, j) = inv.generators[static_cast<size_t>(i)].derivative(j).evaluate(point);
  if (!determinant(jac).is_zero()) return true;
  return !jacobian_determinant(inv).is_zero();
}

} // namespace slp
