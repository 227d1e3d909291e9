#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "quivercover/rational.hpp"

namespace qc {

// Dense row-major matrix over Q.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<std::vector<Rational>>& rows);
  static Matrix from_columns(const std::vector<Vector>& columns, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Rational* row_ptr(std::size_t i) { return data_.data() + i * cols_; }
  const Rational* row_ptr(std::size_t i) const { return data_.data() + i * cols_; }

  bool is_zero() const;
  bool is_identity() const;
  Matrix transpose() const;
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& b);
  Vector column(std::size_t j) const;
  Vector row(std::size_t i) const;
  Matrix select_columns(const std::vector<std::size_t>& idx) const;
  Matrix select_rows(const std::vector<std::size_t>& idx) const;
  Vector apply(const Vector& x) const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Rational& s);

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

Matrix operator+(Matrix a, const Matrix& b);
Matrix operator-(Matrix a, const Matrix& b);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator*(const Rational& s, Matrix a);

Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);
Matrix block_diagonal(const Matrix& a, const Matrix& b);

struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

// Parallel kernels (OpenMP over rows of each elimination step).
std::size_t rank(const Matrix& m);
Echelon rref(Matrix m);

// Serial reference kernels; same results, kept for testing and benchmarks.
namespace serial {
std::size_t rank(const Matrix& m);
Echelon rref(Matrix m);
}  // namespace serial

// Free column f contributes the vector with x_f = 1, other free entries 0.
std::vector<Vector> nullspace_basis(const Matrix& m);
Matrix nullspace_matrix(const Matrix& m);
// Rows spanning {y : y m = 0}, as a matrix whose rows are that basis.
Matrix left_nullspace_matrix(const Matrix& m);
// Pivot-first normalization: free variables set to 0.
std::optional<Vector> solve(const Matrix& m, const Vector& b);
std::optional<Matrix> solve_matrix(const Matrix& a, const Matrix& b);
std::optional<Matrix> inverse(const Matrix& m);
// Columns of m forming a basis of its column space (earliest pivots).
Matrix column_basis(const Matrix& m);
// Matrix whose columns extend the independent columns of `sub` to a basis of Q^n, using unit vectors.
Matrix complement_columns(const Matrix& sub, std::size_t n);
// Left inverse of a matrix with independent columns.
Matrix left_inverse(const Matrix& m);
// Right inverse of a matrix with independent rows.
Matrix right_inverse(const Matrix& m);
// Coordinates of b in the column basis `basis` (independent columns); nullopt if b is outside the span.
std::optional<Vector> coordinates(const Matrix& basis, const Vector& b);

// Characteristic polynomial det(xI - m), coefficients from constant term upward.
std::vector<Rational> charpoly(const Matrix& m);
// Distinct rational roots of a polynomial (coefficients low to high).
std::vector<Rational> rational_roots(const std::vector<Rational>& poly);

// Controls parallel thresholds and thread count for the kernels.
void set_thread_count(int n);

}  // namespace qc
