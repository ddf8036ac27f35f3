#pragma once

#include <array>
#include <chrono>
#include <optional>
#include <vector>

#include "slp/coinvariant.hpp"

namespace slp {

struct LevelReport {
  int level = 0;       ///< i, for the map x l^{m-2i}: R_i -> R_{m-i}
  int size = 0;
  bool nonzero = false;
  int sign = 0;        ///< sign of the determinant in the chosen bases
};

struct SleVerdict {
  bool result = false;
  std::vector<LevelReport> levels;
};

/// Decides whether the linear form l is a strong Lefschetz element of R.
SleVerdict is_sle(const CoinvariantRing& ring, const Vector& form);
SleVerdict is_sle(const CoinvariantRing& ring, const Polynomial& ell);

bool top_power_nonzero(const CoinvariantRing& ring, const Vector& form);

/// l^m != 0 and x l: R_k -> R_{k+1} invertible for 1 <= k <= m-2. Only valid
/// for Hilbert functions (1,2,...,2,1); throws ShapeUnsupported otherwise.
bool narrow_sle(const CoinvariantRing& ring, const Vector& form);

struct LevelDeterminant {
  int level = 0;
  int size = 0;
  std::optional<Polynomial> f;  ///< empty when the budget ran out
  double seconds = 0;
};

/// Determinants f_i(a_1..a_r) of x l^{m-2i}: R_i -> R_{m-i} for
/// l = sum_p a_p template_forms[p]. `budget` is a per-level wall-clock limit
/// (zero means unlimited); a level that exceeds it is returned without f.
std::vector<LevelDeterminant> symbolic_determinants(const CoinvariantRing& ring,
                                                    const std::vector<Vector>& template_forms,
                                                    const std::vector<int>& levels,
                                                    std::chrono::milliseconds budget = std::chrono::milliseconds{0});

/// Matrix of x l^k: R_i -> R_{i+k} with entries in K[a_1..a_r].
DenseMatrix<Polynomial> symbolic_multiplication_matrix(const CoinvariantRing& ring,
                                                       const std::vector<Vector>& template_forms, int i, int k,
                                                       const std::function<void(int)>& checkpoint = {});

/// The weights x1, tau x1 + x2, tau^2 x1 + x3 of H3 as linear forms.
std::vector<Vector> h3_table_weights(const RootSystem& rs);

enum class SignClass { PosPos, ZeroPos, PosZero, NegNeg, ZeroNeg, NegZero, Mixed };
inline constexpr int kSignClassCount = 7;
const char* sign_class_label(SignClass c);

/// Classification of a coefficient alpha*tau + beta by (sign alpha, sign beta).
SignClass classify(const FieldElement& c);

struct SignTable {
  std::array<int, kSignClassCount> counts{};
  int total = 0;
  int count(SignClass c) const { return counts[static_cast<size_t>(c)]; }
  bool all_positive() const { return total > 0 && count(SignClass::NegNeg) + count(SignClass::ZeroNeg) + count(SignClass::NegZero) + count(SignClass::Mixed) == 0; }
  bool all_negative() const { return total > 0 && count(SignClass::PosPos) + count(SignClass::ZeroPos) + count(SignClass::PosZero) + count(SignClass::Mixed) == 0; }
};

/// Coefficients must lie in a field of degree at most 2.
SignTable sign_table(const Polynomial& f);

/// Term with the largest power of the first variable (ties by degrevlex).
const Term& first_variable_leading_term(const Polynomial& f);

/// Multiplies f by -1 if needed so that the sign of its first-variable-leading
/// coefficient equals `expected_sign`.
Polynomial normalize_global_sign(const Polynomial& f, int expected_sign);

} // namespace slp
