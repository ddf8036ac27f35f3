#pragma once

// Closed-form machinery for I2(m): Bruhat diagram, Pieri matrices on the
// Schubert basis, the level determinant and its discriminant.

#include <array>
#include <string>
#include <vector>

#include "slp/coinvariant.hpp"
#include "slp/numfield.hpp"

namespace slp::dihedral {

/// p_k = sin(k theta) / sin(theta), theta = pi/m, as an element of Q(2cos(pi/m)).
FieldElement p_value(int m, int k);

struct BruhatNode {
  std::string name;       ///< "e", "a3", "b2", "w0"
  std::vector<int> word;  ///< simple reflection indices, leftmost first
  int length = 0;
};

struct BruhatEdge {
  int from = 0, to = 0;  ///< node indices
  int root = 0;          ///< k such that the label is beta(k theta)
  bool simple = false;   ///< label is a simple root
};

struct BruhatDiagram {
  int m = 0;
  std::vector<BruhatNode> nodes;  ///< e, a_1..a_{m-1}, b_1..b_{m-1}, w0
  std::vector<BruhatEdge> edges;
  int node_a(int k) const;  ///< a_0 = e and a_m = w0
  int node_b(int k) const;
};

BruhatDiagram bruhat_diagram(int m);

/// Checks every edge against the group: s_beta w = w' and l(w') = l(w) + 1.
bool verify_bruhat_diagram(const BruhatDiagram& d, const RootSystem& rs, const GroupElementSet& group);

struct PieriMatrices {
  int m = 0, k = 0;
  FieldElement pk, pk1;
  Matrix x1;  ///< x X_{s1}: R_k -> R_{k+1} in the bases {X_{a^{-1}}, X_{b^{-1}}}
  Matrix x2;
};

/// Throws LevelOutOfRange unless 1 <= k <= m-2.
PieriMatrices pieri_matrices(int m, int k);

/// Matrix of x (a X_{s1} + b X_{s2}).
Matrix assembled_matrix(const PieriMatrices& p, const FieldElement& a, const FieldElement& b);

/// (a^2 + b^2) p_k p_{k+1} + ab (p_k^2 + p_{k+1}^2 - 1).
FieldElement mult_determinant(int m, int k, const FieldElement& a, const FieldElement& b);

struct DiscriminantReport {
  FieldElement value;                   ///< (p_k^2 + p_{k+1}^2 - 1)^2 - 4 p_k^2 p_{k+1}^2
  std::array<FieldElement, 4> factors;  ///< (p_k +- p_{k+1} +- 1) in the sine-product order
  std::array<int, 4> factor_signs{};
  bool factorization_holds = false;
  int sign = 0;
};

DiscriminantReport discriminant(int m, int k);

/// Verifies (-1)^m m! u_1...u_m = sum_I (-1)^{|I|} (sum_{i in I} u_i)^m by
/// expanding both sides. Throws BudgetExceeded for m > 12.
bool power_identity_check(int m);

/// Determinant of x l: R_k -> R_{k+1} in the coinvariant ring for l = a varpi_1 + b varpi_2.
FieldElement coinvariant_level_determinant(const CoinvariantRing& ring, int k, const FieldElement& a,
                                           const FieldElement& b);

} // namespace slp::dihedral
