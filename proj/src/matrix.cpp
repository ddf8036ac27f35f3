#include "slp/matrix.hpp"

#include <sstream>

namespace slp {

Matrix identity_matrix(int n, const NumberField& field) {
  Matrix m(n, n, field.zero());
  for (int i = 0; i < n; ++i) m(i, i) = field.one();
  return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw DimensionMismatch("matrix product shape mismatch");
  Matrix c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const FieldElement& x = a(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < b.cols(); ++j)
        if (!b(k, j).is_zero()) c(i, j) += x * b(k, j);
    }
  return c;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionMismatch("matrix sum shape mismatch");
  Matrix c = a;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c(i, j) += b(i, j);
  return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionMismatch("matrix difference shape mismatch");
  Matrix c = a;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c(i, j) -= b(i, j);
  return c;
}

Matrix operator*(const FieldElement& s, const Matrix& a) {
  Matrix c = a;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c(i, j) = s * a(i, j);
  return c;
}

Vector operator*(const Matrix& a, const Vector& v) {
  if (static_cast<int>(v.size()) != a.cols()) throw DimensionMismatch("matrix-vector shape mismatch");
  Vector out(static_cast<size_t>(a.rows()));
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (!v[static_cast<size_t>(j)].is_zero() && !a(i, j).is_zero()) out[static_cast<size_t>(i)] += a(i, j) * v[static_cast<size_t>(j)];
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

bool is_zero(const Matrix& a) {
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (!a(i, j).is_zero()) return false;
  return true;
}

FieldElement determinant(const Matrix& m) {
  const NumberField* field = nullptr;
  for (int i = 0; i < m.rows() && !field; ++i)
    for (int j = 0; j < m.cols() && !field; ++j) field = m(i, j).field();
  FieldElement one = field ? field->one() : NumberField::rationals().one();
  FieldElement det = bareiss_determinant(
      m, one, [](const FieldElement& x) { return x.is_zero(); },
      [](const FieldElement& a, const FieldElement& b) { return a / b; },
      [](const FieldElement& x) { return x.is_rational() ? 0 : 1; });
  if (m.rows() == 0) return one;
  return det;
}

Echelon row_reduce(Matrix m) {
  Echelon out;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int pivot = -1;
    for (int r = row; r < m.rows(); ++r)
      if (!m(r, col).is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    m.swap_rows(pivot, row);
    const FieldElement inv = m(row, col).inverse();
    for (int c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (int r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      const FieldElement f = m(r, col);
      for (int c = col; c < m.cols(); ++c)
        if (!m(row, c).is_zero()) m(r, c) -= f * m(row, c);
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.reduced = std::move(m);
  return out;
}

int rank(const Matrix& m) { return static_cast<int>(row_reduce(m).pivots.size()); }

Matrix kernel_basis(const Matrix& m, const NumberField& field) {
  const Echelon e = row_reduce(m);
  std::vector<bool> is_pivot(static_cast<size_t>(m.cols()), false);
  for (int p : e.pivots) is_pivot[static_cast<size_t>(p)] = true;
  std::vector<int> free_cols;
  for (int c = 0; c < m.cols(); ++c)
    if (!is_pivot[static_cast<size_t>(c)]) free_cols.push_back(c);
  Matrix basis(m.cols(), static_cast<int>(free_cols.size()), field.zero());
  for (size_t k = 0; k < free_cols.size(); ++k) {
    const int f = free_cols[k];
    basis(f, static_cast<int>(k)) = field.one();
    for (size_t r = 0; r < e.pivots.size(); ++r)
      basis(e.pivots[r], static_cast<int>(k)) = -e.reduced(static_cast<int>(r), f);
  }
  return basis;
}

std::optional<Vector> solve(const Matrix& a, const Vector& b) {
  Matrix aug(a.rows(), a.cols() + 1);
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[static_cast<size_t>(i)];
  }
  const Echelon e = row_reduce(aug);
  if (!e.pivots.empty() && e.pivots.back() == a.cols()) return std::nullopt;
  if (static_cast<int>(e.pivots.size()) != a.cols()) throw DimensionMismatch("solve requires full column rank");
  Vector x(static_cast<size_t>(a.cols()));
  for (size_t r = 0; r < e.pivots.size(); ++r) x[static_cast<size_t>(e.pivots[r])] = e.reduced(static_cast<int>(r), a.cols());
  return x;
}

Matrix inverse(const Matrix& m, const NumberField& field) {
  if (!m.is_square()) throw DimensionMismatch("inverse of a non-square matrix");
  const int n = m.rows();
  Matrix aug(n, 2 * n, field.zero());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = field.one();
  }
  const Echelon e = row_reduce(aug);
  if (static_cast<int>(e.pivots.size()) < n || e.pivots[static_cast<size_t>(n - 1)] != n - 1)
    throw DivisionByZero("matrix is singular");
  Matrix inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

Matrix transpose(const Matrix& m) {
  Matrix t(m.cols(), m.rows());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) t(j, i) = m(i, j);
  return t;
}

std::string to_string(const Matrix& m) {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < m.rows(); ++i) {
    os << (i ? "; " : "");
    for (int j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m(i, j).to_string();
  }
  os << "]";
  return os.str();
}

} // namespace slp
