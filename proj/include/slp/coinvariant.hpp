#pragma once

// The coinvariant ring R = K[V]/J of a finite Coxeter group, where J is
// generated by the invariants of positive degree.

#include <memory>
#include <unordered_map>
#include <vector>

#include "slp/coxeter.hpp"
#include "slp/invariants.hpp"
#include "slp/polynomial.hpp"

namespace slp {

struct GroebnerStats {
  size_t pairs_considered = 0;
  size_t pairs_reduced = 0;
  size_t basis_size = 0;
};

/// Reduced Groebner basis (degrevlex) of a homogeneous ideal, truncated at
/// degree `max_degree`: correct for every leading term of degree <= max_degree.
std::vector<Polynomial> groebner_basis(std::vector<Polynomial> generators, int max_degree,
                                       GroebnerStats* stats = nullptr);

/// Full remainder of p modulo a Groebner basis.
Polynomial reduce(const Polynomial& p, const std::vector<Polynomial>& basis);

struct MultiplicationMap {
  int source_degree = 0;
  int target_degree = 0;
  Matrix matrix;  ///< H(target) x H(source)
};

class CoinvariantRing {
public:
  const RootSystem& root_system() const { return *rs_; }
  RootSystemPtr root_system_ptr() const { return rs_; }
  const NumberField& field() const { return rs_->field(); }
  int nvars() const { return rs_->dimension(); }
  int socle_degree() const { return socle_; }
  const InvariantSystem& invariants() const { return invariants_; }
  const std::vector<Polynomial>& groebner() const { return groebner_; }
  const GroebnerStats& groebner_stats() const { return stats_; }

  /// Standard monomials of degree d in ascending degrevlex order.
  const std::vector<Monomial>& basis(int d) const;
  int hilbert(int d) const { return d < 0 || d > socle_ ? 0 : static_cast<int>(basis_[static_cast<size_t>(d)].size()); }
  std::vector<int> hilbert_function() const;
  size_t dimension() const;
  const Monomial& top_monomial() const { return basis_.back().front(); }

  /// Coordinates of a homogeneous polynomial of degree d in basis(d).
  Vector coordinates(const Polynomial& p, int d) const;
  /// Polynomial with the given coordinates in basis(d).
  Polynomial from_coordinates(const Vector& v, int d) const;
  /// Normal form of a monomial as coordinates in basis(degree).
  const Vector& monomial_coordinates(const Monomial& m) const;

  Polynomial normal_form(const Polynomial& p) const;

  /// Matrix of x_var: R_d -> R_{d+1}.
  const Matrix& variable_map(int var, int d) const;
  /// Matrix of multiplication by the linear form sum c_i x_i on R_d -> R_{d+1}.
  Matrix linear_map(const Vector& form, int d) const;
  /// Matrix of f -> g^k f on R_i -> R_{i+k}; g must be linear (or zero).
  MultiplicationMap multiplication_matrix(const Polynomial& g, int i, int k) const;
  MultiplicationMap multiplication_matrix(const Vector& form, int i, int k) const;

  /// Gram matrix of (f, g) -> coefficient of the top monomial in fg on R_d x R_{m-d}.
  Matrix poincare_pairing(int d) const;
  /// Matrix of the action of a group element on R_d.
  Matrix action_matrix(const Matrix& g, int d) const;
  bool is_antiinvariant_top() const;

  friend std::shared_ptr<const CoinvariantRing> build_ring(RootSystemPtr rs);

private:
  CoinvariantRing() = default;

  RootSystemPtr rs_;
  InvariantSystem invariants_;
  std::vector<Polynomial> groebner_;
  GroebnerStats stats_;
  int socle_ = 0;
  std::vector<std::vector<Monomial>> basis_;
  std::vector<std::unordered_map<Monomial, int, MonomialHash>> index_;
  std::vector<std::vector<Matrix>> var_maps_;  ///< [var][d]
  mutable std::unordered_map<Monomial, Vector, MonomialHash> memo_;
  Vector empty_;
};

using CoinvariantRingPtr = std::shared_ptr<const CoinvariantRing>;

/// Builds R and checks its Hilbert function against the Poincare polynomial.
/// Throws HilbertMismatch or BudgetExceeded.
CoinvariantRingPtr build_ring(RootSystemPtr rs);
inline CoinvariantRingPtr build_ring(const std::string& type) { return build_ring(build_root_system(type)); }

} // namespace slp
