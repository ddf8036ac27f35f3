#include "slp/parabolic.hpp"

#include <algorithm>
#include <set>

#include "slp/errors.hpp"

namespace slp {

namespace {

Matrix stack_rows(const std::vector<Vector>& rows, int cols, const NumberField& f) {
  Matrix m(static_cast<int>(rows.size()), cols, f.zero());
  for (size_t r = 0; r < rows.size(); ++r)
    for (int c = 0; c < cols; ++c) m(static_cast<int>(r), c) = rows[r][static_cast<size_t>(c)];
  return m;
}

Matrix kernel_of_rows(const std::vector<Vector>& rows, int cols, const NumberField& f) {
  if (rows.empty()) return identity_matrix(cols, f);
  return kernel_basis(stack_rows(rows, cols, f), f);
}

Vector random_combination(const Matrix& basis, const NumberField& f, std::mt19937_64& rng, int range) {
  std::uniform_int_distribution<int> dist(-range, range);
  Vector v(static_cast<size_t>(basis.rows()), f.zero());
  for (int c = 0; c < basis.cols(); ++c) {
    const FieldElement t = f.from_rational(dist(rng));
    for (int r = 0; r < basis.rows(); ++r) v[static_cast<size_t>(r)] += t * basis(r, c);
  }
  return v;
}

void require_invariant(const RootSystem& rs, const ParabolicData& pd, const Vector& form) {
  if (static_cast<int>(form.size()) != rs.dimension()) throw DimensionMismatch("form dimension mismatch");
  if (!is_parabolic_invariant(rs, pd, form)) throw NotInvariant("linear form is moved by a generator of W_S");
}

} // namespace

bool root_in_parabolic(const RootSystem& rs, const std::vector<int>& subset, int positive_root_index) {
  const Vector c = rs.simple_coordinates(rs.positive_roots().at(static_cast<size_t>(positive_root_index)));
  for (int i = 0; i < rs.rank(); ++i)
    if (!c[static_cast<size_t>(i)].is_zero() && !std::binary_search(subset.begin(), subset.end(), i)) return false;
  return true;
}

ParabolicData parabolic_data(const RootSystem& rs, std::vector<int> subset, std::uint64_t budget) {
  std::sort(subset.begin(), subset.end());
  subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
  for (int s : subset)
    if (s < 0 || s >= rs.rank()) throw DimensionMismatch("simple reflection index " + std::to_string(s) + " out of range");
  ParabolicData pd;
  pd.subset = subset;
  pd.subgroup = enumerate_subgroup(rs, subset, budget);
  pd.longest_length = pd.subgroup.max_length();
  for (int k = 0; k < rs.reflection_count(); ++k)
    if (root_in_parabolic(rs, subset, k)) pd.reflections.push_back(k);
  if (static_cast<int>(pd.reflections.size()) != pd.longest_length)
    throw DimensionMismatch("W_S has " + std::to_string(pd.reflections.size()) + " reflections but m_S = " +
                            std::to_string(pd.longest_length));
  return pd;
}

std::vector<int> ParabolicInvariantRing::hilbert_function() const {
  std::vector<int> h;
  for (const auto& b : bases) h.push_back(b.cols());
  return h;
}

std::vector<long long> coset_hilbert(const RootSystem& rs, const ParabolicData& pd) {
  std::vector<long long> num = poincare_polynomial(rs);
  const std::vector<int> census = pd.subgroup.length_census();
  const std::vector<long long> den(census.begin(), census.end());
  if (den.size() > num.size()) throw DimensionMismatch("W_S is larger than W");
  std::vector<long long> q(num.size() - den.size() + 1, 0);
  for (size_t i = 0; i < q.size(); ++i) {
    q[i] = num[i];
    for (size_t j = 0; j < den.size(); ++j) num[i + j] -= q[i] * den[j];
  }
  for (long long r : num)
    if (r != 0) throw DimensionMismatch("Poincare polynomial of W_S does not divide that of W");
  return q;
}

std::vector<int> minimal_coset_census(const RootSystem& rs, const GroupElementSet& group, const ParabolicData& pd) {
  const int n_pos = rs.reflection_count();
  std::vector<int> census;
  for (const auto& g : group.elements()) {
    bool minimal = true;
    for (int s : pd.subset) {
      const int idx = rs.root_index(g.matrix * rs.simple_roots()[static_cast<size_t>(s)]);
      if (idx < 0 || idx >= n_pos) {
        minimal = false;
        break;
      }
    }
    if (!minimal) continue;
    if (census.size() <= static_cast<size_t>(g.length)) census.resize(static_cast<size_t>(g.length) + 1, 0);
    ++census[static_cast<size_t>(g.length)];
  }
  return census;
}

ParabolicInvariantRing invariant_basis(const CoinvariantRing& ring, const ParabolicData& pd) {
  const RootSystem& rs = ring.root_system();
  const NumberField& f = ring.field();
  const std::vector<long long> expected = coset_hilbert(rs, pd);
  ParabolicInvariantRing inv;
  inv.top_degree = ring.socle_degree() - pd.longest_length;
  for (int d = 0; d <= inv.top_degree; ++d) {
    const int h = ring.hilbert(d);
    Matrix basis;
    if (pd.subset.empty()) {
      basis = identity_matrix(h, f);
    } else {
      Matrix stacked(h * static_cast<int>(pd.subset.size()), h, f.zero());
      int row = 0;
      for (int s : pd.subset) {
        const Matrix a = ring.action_matrix(rs.simple_reflection(s), d);
        for (int r = 0; r < h; ++r, ++row)
          for (int c = 0; c < h; ++c) stacked(row, c) = r == c ? a(r, c) - f.one() : a(r, c);
      }
      basis = kernel_basis(stacked, f);
    }
    if (basis.cols() != expected[static_cast<size_t>(d)])
      throw DimensionMismatch("dim R^{W_S}_" + std::to_string(d) + " = " + std::to_string(basis.cols()) +
                              " but the coset census gives " + std::to_string(expected[static_cast<size_t>(d)]));
    inv.bases.push_back(std::move(basis));
  }
  return inv;
}

bool is_parabolic_invariant(const RootSystem& rs, const ParabolicData& pd, const Vector& form) {
  for (int s : pd.subset)
    if (!is_fixed_by_reflection(rs, form, rs.simple_root_position(s))) return false;
  return true;
}

SleVerdict is_sle_parabolic(const CoinvariantRing& ring, const ParabolicData& pd, const ParabolicInvariantRing& inv,
                            const Vector& form) {
  require_invariant(ring.root_system(), pd, form);
  SleVerdict v;
  v.result = true;
  const int top = inv.top_degree;
  for (int i = 0; i <= top / 2; ++i) {
    const Matrix& src = inv.bases[static_cast<size_t>(i)];
    const Matrix& dst = inv.bases[static_cast<size_t>(top - i)];
    const Matrix image = ring.multiplication_matrix(form, i, top - 2 * i).matrix * src;
    Matrix restricted(dst.cols(), src.cols(), ring.field().zero());
    for (int c = 0; c < src.cols(); ++c) {
      const auto x = solve(dst, image.column(c));
      if (!x) throw NotInvariant("image of an invariant left the invariant subspace");
      restricted.set_column(c, *x);
    }
    const FieldElement det = determinant(restricted);
    LevelReport r{i, restricted.rows(), !det.is_zero(), det.sign()};
    v.result = v.result && r.nonzero;
    v.levels.push_back(r);
  }
  return v;
}

SleVerdict is_sle_parabolic(const CoinvariantRing& ring, const ParabolicData& pd, const Vector& form) {
  return is_sle_parabolic(ring, pd, invariant_basis(ring, pd), form);
}

bool sle_criterion_parabolic(const RootSystem& rs, const ParabolicData& pd, const Vector& form) {
  require_invariant(rs, pd, form);
  for (const auto& t : rs.type().factors)
    if (t.family == Family::H4) throw UnsupportedType("H4 is not supported");
  for (int k = 0; k < rs.reflection_count(); ++k) {
    if (std::binary_search(pd.reflections.begin(), pd.reflections.end(), k)) continue;
    if (is_fixed_by_reflection(rs, form, k)) return false;
  }
  return true;
}

Matrix fixed_forms(const RootSystem& rs, const ParabolicData& pd) {
  std::vector<Vector> rows;
  for (int s : pd.subset) rows.push_back(rs.simple_roots()[static_cast<size_t>(s)]);
  return kernel_of_rows(rows, rs.dimension(), rs.field());
}

Vector random_parabolic_form(const RootSystem& rs, const ParabolicData& pd, std::mt19937_64& rng, int range) {
  return random_combination(fixed_forms(rs, pd), rs.field(), rng, range);
}

Vector mirror_parabolic_form(const RootSystem& rs, const ParabolicData& pd, int positive_root_index,
                             std::mt19937_64& rng, int range) {
  std::vector<Vector> rows;
  for (int s : pd.subset) rows.push_back(rs.simple_roots()[static_cast<size_t>(s)]);
  rows.push_back(rs.positive_roots().at(static_cast<size_t>(positive_root_index)));
  return random_combination(kernel_of_rows(rows, rs.dimension(), rs.field()), rs.field(), rng, range);
}

std::optional<TransportedPair> transport(const RootSystem& rs, const ParabolicData& pd, const Matrix& w,
                                         const Matrix& w_inverse, const Vector& form) {
  const int n_pos = rs.reflection_count();
  std::set<int> moved;
  for (int k : pd.reflections) {
    int idx = rs.root_index(w * rs.positive_roots()[static_cast<size_t>(k)]);
    if (idx < 0) throw std::logic_error("w does not permute the roots");
    moved.insert(idx >= n_pos ? idx - n_pos : idx);
  }
  TransportedPair out;
  for (int j = 0; j < rs.rank(); ++j)
    if (moved.count(rs.simple_root_position(j))) out.subset.push_back(j);
  std::set<int> target;
  for (int k = 0; k < n_pos; ++k)
    if (root_in_parabolic(rs, out.subset, k)) target.insert(k);
  if (target != moved) return std::nullopt;
  out.form = act_on_form(w_inverse, form);
  return out;
}

} // namespace slp
