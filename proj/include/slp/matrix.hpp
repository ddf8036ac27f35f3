#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "slp/errors.hpp"
#include "slp/numfield.hpp"

namespace slp {

/// Row-major dense matrix over an exact ring.
template <typename T>
class DenseMatrix {
public:
  DenseMatrix() = default;
  DenseMatrix(int rows, int cols, const T& fill = T{})
      : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * static_cast<size_t>(cols), fill) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(int r, int c) { return data_[index(r, c)]; }
  const T& operator()(int r, int c) const { return data_[index(r, c)]; }

  void swap_rows(int a, int b) {
    for (int c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

  std::vector<T> column(int c) const {
    std::vector<T> out(static_cast<size_t>(rows_));
    for (int r = 0; r < rows_; ++r) out[static_cast<size_t>(r)] = (*this)(r, c);
    return out;
  }
  void set_column(int c, const std::vector<T>& values) {
    for (int r = 0; r < rows_; ++r) (*this)(r, c) = values[static_cast<size_t>(r)];
  }

private:
  size_t index(int r, int c) const {
    return static_cast<size_t>(r) * static_cast<size_t>(cols_) + static_cast<size_t>(c);
  }
  int rows_ = 0, cols_ = 0;
  std::vector<T> data_;
};

using Matrix = DenseMatrix<FieldElement>;
using Vector = std::vector<FieldElement>;

Matrix identity_matrix(int n, const NumberField& field);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(const FieldElement& s, const Matrix& a);
Vector operator*(const Matrix& a, const Vector& v);
bool operator==(const Matrix& a, const Matrix& b);
bool is_zero(const Matrix& a);

/// Fraction-free Gaussian elimination. `divide` must perform exact division in
/// the coefficient ring; `checkpoint` runs once per pivot step and may throw to
/// abandon the computation.
template <typename T, typename IsZero, typename Divide, typename Cost>
T bareiss_determinant(DenseMatrix<T> m, const T& one, IsZero is_zero, Divide divide, Cost cost,
                      const std::function<void(int)>& checkpoint = {}) {
  if (!m.is_square()) throw DimensionMismatch("determinant of a non-square matrix");
  const int n = m.rows();
  if (n == 0) return one;
  bool negate = false;
  T prev = one;
  for (int k = 0; k < n - 1; ++k) {
    if (checkpoint) checkpoint(k);
    int pivot = -1;
    for (int r = k; r < n; ++r) {
      if (is_zero(m(r, k))) continue;
      if (pivot < 0 || cost(m(r, k)) < cost(m(pivot, k))) pivot = r;
    }
    if (pivot < 0) return T{};
    if (pivot != k) {
      m.swap_rows(pivot, k);
      negate = !negate;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        T num = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        m(i, j) = k == 0 ? std::move(num) : divide(num, prev);
      }
      m(i, k) = T{};
    }
    prev = m(k, k);
  }
  T det = m(n - 1, n - 1);
  return negate ? -det : det;
}

FieldElement determinant(const Matrix& m);

struct Echelon {
  Matrix reduced;           ///< reduced row echelon form
  std::vector<int> pivots;  ///< pivot column of each nonzero row
};

Echelon row_reduce(Matrix m);
int rank(const Matrix& m);
/// Columns form a basis of {v : m v = 0}.
Matrix kernel_basis(const Matrix& m, const NumberField& field);
/// Solves a x = b for a with full column rank; nullopt when inconsistent.
std::optional<Vector> solve(const Matrix& a, const Vector& b);
Matrix inverse(const Matrix& m, const NumberField& field);
Matrix transpose(const Matrix& m);

std::string to_string(const Matrix& m);

} // namespace slp
