#pragma once

#include <optional>
#include <random>
#include <vector>

#include "slp/coxeter.hpp"
#include "slp/polynomial.hpp"

namespace slp {

/// Homogeneous generators of the invariant ring of W acting on all ambient
/// coordinates. Type A_n acts on n+1 coordinates, so its system starts with
/// the linear power sum p1.
struct InvariantSystem {
  std::vector<Polynomial> generators;
  std::vector<int> degrees;
};

/// p(g^{-1} x). Throws DimensionMismatch when sizes disagree.
Polynomial act(const Matrix& g, const Polynomial& p);
/// Same action, given g^{-1} directly.
Polynomial act_by_inverse(const Matrix& g_inverse, const Polynomial& p);

InvariantSystem fundamental_invariants(const RootSystem& rs);

/// Average of act(g, p) over the group, or over `subgroup` when given.
Polynomial reynolds(const RootSystem& rs, const Polynomial& p, const GroupElementSet* subgroup = nullptr);

/// Whether det(d f_i / d x_j) is a nonzero polynomial. Tries a random rational
/// point first and falls back to an exact symbolic determinant.
bool jacobian_nonzero(const InvariantSystem& inv, std::uint64_t seed = 1);

/// Symbolic Jacobian determinant.
Polynomial jacobian_determinant(const InvariantSystem& inv);

/// Determinant of a matrix with polynomial entries by fraction-free elimination.
Polynomial polynomial_determinant(const DenseMatrix<Polynomial>& m, int nvars, const NumberField& field,
                                  const std::function<void(int)>& checkpoint = {});

} // namespace slp
