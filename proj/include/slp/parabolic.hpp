#pragma once

#include <optional>
#include <random>
#include <vector>

#include "slp/coinvariant.hpp"
#include "slp/lefschetz.hpp"

namespace slp {

/// A standard parabolic subgroup W_S together with its reflections.
struct ParabolicData {
  std::vector<int> subset;        ///< sorted simple-reflection indices
  GroupElementSet subgroup;
  std::vector<int> reflections;   ///< positive-root indices of Delta_S
  int longest_length = 0;         ///< m_S
};

ParabolicData parabolic_data(const RootSystem& rs, std::vector<int> subset,
                             std::uint64_t budget = kDefaultGroupBudget);

/// True iff the positive root lies in the span of the simple roots in `subset`.
bool root_in_parabolic(const RootSystem& rs, const std::vector<int>& subset, int positive_root_index);

/// Bases of R^{W_S}_d for d = 0..top_degree, as columns of coordinates over
/// CoinvariantRing::basis(d).
struct ParabolicInvariantRing {
  int top_degree = 0;
  std::vector<Matrix> bases;
  int hilbert(int d) const { return d < 0 || d > top_degree ? 0 : bases[static_cast<size_t>(d)].cols(); }
  std::vector<int> hilbert_function() const;
};

/// Throws DimensionMismatch when the fixed subspaces disagree with coset_hilbert.
ParabolicInvariantRing invariant_basis(const CoinvariantRing& ring, const ParabolicData& pd);

/// Poincare polynomial of W divided by that of W_S.
std::vector<long long> coset_hilbert(const RootSystem& rs, const ParabolicData& pd);

/// Length census of {w : l(ws) > l(w) for all s in S}, counted directly in W.
std::vector<int> minimal_coset_census(const RootSystem& rs, const GroupElementSet& group, const ParabolicData& pd);

bool is_parabolic_invariant(const RootSystem& rs, const ParabolicData& pd, const Vector& form);

/// Strong Lefschetz test on R^{W_S}: x l^{top-2i} restricted to the invariant
/// bases. Throws NotInvariant unless l is fixed by W_S.
SleVerdict is_sle_parabolic(const CoinvariantRing& ring, const ParabolicData& pd, const ParabolicInvariantRing& inv,
                            const Vector& form);
SleVerdict is_sle_parabolic(const CoinvariantRing& ring, const ParabolicData& pd, const Vector& form);

/// l is fixed by no reflection outside W_S. Throws NotInvariant.
bool sle_criterion_parabolic(const RootSystem& rs, const ParabolicData& pd, const Vector& form);

/// Columns span the linear forms fixed by W_S.
Matrix fixed_forms(const RootSystem& rs, const ParabolicData& pd);

Vector random_parabolic_form(const RootSystem& rs, const ParabolicData& pd, std::mt19937_64& rng, int range = 6);

/// A random W_S-fixed form that also lies on the mirror of the given root.
Vector mirror_parabolic_form(const RootSystem& rs, const ParabolicData& pd, int positive_root_index,
                             std::mt19937_64& rng, int range = 6);

struct TransportedPair {
  std::vector<int> subset;  ///< S' with w W_S w^{-1} = W_{S'}
  Vector form;              ///< w . l
};

/// Conjugates (W_S, l) by w. Returns nullopt when w W_S w^{-1} is not a
/// standard parabolic subgroup.
std::optional<TransportedPair> transport(const RootSystem& rs, const ParabolicData& pd, const Matrix& w,
                                         const Matrix& w_inverse, const Vector& form);

} // namespace slp
