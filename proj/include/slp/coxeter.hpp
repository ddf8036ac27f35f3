#pragma once

// Finite Coxeter groups in explicit realizations: root systems, reflections,
// group enumeration with lengths, Poincare polynomials, and the reflection
// hyperplane predicates.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "slp/matrix.hpp"
#include "slp/numfield.hpp"

namespace slp {

inline constexpr std::uint64_t kDefaultGroupBudget = 10000;

enum class Family { A, B, D, I2, H3, H4 };

struct IrreducibleType {
  Family family = Family::A;
  int param = 1;  ///< rank for A/B/D, m for I2, 3 or 4 for H

  int rank() const;
  int ambient_dimension() const;  ///< A_n lives in n+1 coordinates
  std::uint64_t group_order() const;
  int reflection_count() const;
  std::vector<int> degrees() const;
  bool crystallographic() const;
  std::string to_string() const;
  friend bool operator==(const IrreducibleType&, const IrreducibleType&) = default;
};

/// Direct product of irreducible types.
struct CoxeterType {
  std::vector<IrreducibleType> factors;

  /// Parses "A2", "B3", "D4", "I2:5", "I2(5)", "G2", "H3", and products such as
  /// "A1xI2:5". Throws UnsupportedType for anything outside the supported set.
  static CoxeterType parse(const std::string& text);
  static CoxeterType single(Family f, int param) { return {{IrreducibleType{f, param}}}; }

  int rank() const;
  int ambient_dimension() const;
  std::uint64_t group_order() const;
  int reflection_count() const;
  std::vector<int> degrees() const;
  bool crystallographic() const;
  std::string to_string() const;
  friend bool operator==(const CoxeterType&, const CoxeterType&) = default;
};

inline constexpr int kMaxAmbientDimension = 5;

/// Throws UnsupportedType unless t is in the supported range.
void validate(const CoxeterType& t);

/// Root system in a fixed realization. Vectors are coordinates of V; linear
/// forms (elements of R_1) are coefficient vectors over the same coordinates.
/// A form c is fixed by s_beta exactly when c . beta = 0.
class RootSystem {
public:
  const CoxeterType& type() const { return type_; }
  const NumberField& field() const { return *field_; }
  int dimension() const { return dimension_; }
  int rank() const { return static_cast<int>(simple_.size()); }
  const Matrix& gram() const { return gram_; }

  const std::vector<Vector>& simple_roots() const { return simple_; }
  const std::vector<Vector>& positive_roots() const { return positive_; }
  const std::vector<Matrix>& reflections() const { return reflections_; }
  const Matrix& simple_reflection(int i) const;
  /// Index in positive_roots() of simple root i.
  int simple_root_position(int i) const { return simple_position_[static_cast<size_t>(i)]; }
  const std::vector<Vector>& fundamental_weights() const { return weights_; }
  /// Linear forms corresponding to the fundamental weights.
  const std::vector<Vector>& weight_forms() const { return weight_forms_; }
  /// Forms l_i with l_i(alpha_j) = delta_ij.
  const std::vector<Vector>& simple_dual_forms() const { return dual_forms_; }
  std::vector<int> degrees() const { return type_.degrees(); }
  int reflection_count() const { return static_cast<int>(positive_.size()); }
  /// Index ranges [first, last) of each irreducible factor's coordinates and
  /// simple roots.
  struct Block {
    int coord_begin, coord_end, simple_begin, simple_end;
  };
  const std::vector<Block>& blocks() const { return blocks_; }

  FieldElement inner(const Vector& u, const Vector& v) const;
  Vector form_of(const Vector& v) const;
  Vector vector_of(const Vector& form) const;
  /// Coroot pairing <v, alpha_j^vee> = 2 (v, alpha_j) / (alpha_j, alpha_j).
  FieldElement coroot_pairing(const Vector& v, int simple_index) const;
  /// Coefficients of a vector in the simple root basis (v must lie in their span).
  Vector simple_coordinates(const Vector& v) const;
  /// Weight coordinates a -> form sum_i a_i varpi_i.
  Vector form_from_weight_coordinates(const Vector& a) const;
  /// Returns the index of v among all roots (positives first, then negatives
  /// at offset N), or -1.
  int root_index(const Vector& v) const;

  Vector zero_vector() const;

  friend std::shared_ptr<const RootSystem> build_root_system(const CoxeterType& t);

private:
  RootSystem() = default;
  void finish();

  CoxeterType type_;
  const NumberField* field_ = nullptr;
  int dimension_ = 0;
  Matrix gram_, gram_inverse_;
  std::vector<Vector> simple_, positive_, weights_, weight_forms_, dual_forms_;
  std::vector<int> simple_position_;
  std::vector<Matrix> reflections_;
  std::vector<Block> blocks_;
  std::map<Vector, int, bool (*)(const Vector&, const Vector&)> root_lookup_{nullptr};
};

using RootSystemPtr = std::shared_ptr<const RootSystem>;

RootSystemPtr build_root_system(const CoxeterType& t);
inline RootSystemPtr build_root_system(const std::string& t) { return build_root_system(CoxeterType::parse(t)); }

bool vector_less(const Vector& a, const Vector& b);
FieldElement dot(const Vector& a, const Vector& b);

/// Reflection matrix s_beta(v) = v - 2 (v, beta)/(beta, beta) beta.
Matrix reflection_matrix(const RootSystem& rs, const Vector& beta);

struct GroupElement {
  Matrix matrix;
  int length = 0;
  std::vector<int> word;  ///< reduced word in simple reflection indices
};

/// Elements of a (sub)group generated by simple reflections, enumerated exactly.
/// Element 0 is the identity.
class GroupElementSet {
public:
  const std::vector<GroupElement>& elements() const { return elements_; }
  size_t size() const { return elements_.size(); }
  const GroupElement& operator[](size_t i) const { return elements_[i]; }
  int max_length() const;
  size_t longest_index() const;
  /// Number of elements of each length 0..max_length().
  std::vector<int> length_census() const;
  std::vector<int> generators() const { return generators_; }
  /// Index of the element g*h, or of g^{-1}.
  size_t multiply(size_t g, size_t h) const;
  size_t inverse(size_t g) const;
  /// Index of the element with the given root permutation signature.
  std::optional<size_t> find(const Matrix& m) const;

  friend GroupElementSet enumerate_group(const RootSystem& rs, std::uint64_t budget);
  friend GroupElementSet enumerate_subgroup(const RootSystem& rs, const std::vector<int>& simple_indices,
                                            std::uint64_t budget);

private:
  std::vector<GroupElement> elements_;
  std::vector<std::vector<int>> perms_;  ///< action on the 2N roots
  std::map<std::vector<int>, size_t> index_;
  std::vector<int> generators_;
  const RootSystem* rs_ = nullptr;
};

GroupElementSet enumerate_group(const RootSystem& rs, std::uint64_t budget = kDefaultGroupBudget);
GroupElementSet enumerate_subgroup(const RootSystem& rs, const std::vector<int>& simple_indices,
                                   std::uint64_t budget = kDefaultGroupBudget);

/// Coefficients of prod_i (1 + t + ... + t^{d_i - 1}).
std::vector<long long> poincare_polynomial(const std::vector<int>& degrees);
std::vector<long long> poincare_polynomial(const RootSystem& rs);

/// Sum-free pairing of a linear form with a root: c . beta.
FieldElement form_root_pairing(const Vector& form, const Vector& root);

bool is_fixed_by_reflection(const RootSystem& rs, const Vector& form, int positive_root_index);
/// True iff the form is fixed by no reflection of W. Throws UnsupportedType on H4 factors.
bool sle_criterion(const RootSystem& rs, const Vector& form);

/// Action on linear forms: (w . l)(v) = l(w^{-1} v), i.e. coefficients (w^{-1})^T c.
Vector act_on_form(const Matrix& w_inverse, const Vector& form);

struct ChamberRepresentative {
  Matrix w;              ///< w as a matrix on V
  Matrix w_inverse;
  std::vector<int> word; ///< w = s_{word[0]} s_{word[1]} ...
  Vector form;           ///< w . l, dominant
};

/// Finds w with w . l in the closed fundamental chamber.
ChamberRepresentative chamber_representative(const RootSystem& rs, const Vector& form);
bool is_dominant(const RootSystem& rs, const Vector& form);

/// Random linear form with integer coefficients in [-range, range].
Vector random_form(const RootSystem& rs, std::mt19937_64& rng, int range = 6);
/// Projects a form onto the mirror of a positive root (c . beta = 0).
Vector project_to_mirror(const RootSystem& rs, const Vector& form, int positive_root_index);

} // namespace slp
