#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "gcdim/field.hpp"

namespace gcdim {

using Vector = std::vector<Scalar>;

/// Dense row-major matrix over a Field. Entries are always normalized.
class Matrix {
 public:
  explicit Matrix(Field f = Field::rationals(), std::size_t rows = 0, std::size_t cols = 0)
      : field_(f), rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(Field f, std::size_t rows, std::size_t cols, std::vector<Scalar> entries);

  static Matrix identity(Field f, std::size_t n);
  static Matrix from_columns(Field f, std::size_t rows, const std::vector<Vector>& cols);
  static Matrix column(Field f, const Vector& v);
  /// Block-diagonal sum of the given blocks.
  static Matrix block_diagonal(Field f, std::span<const Matrix> blocks);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  /// Assigns a normalized copy of v.
  void set(std::size_t r, std::size_t c, const Scalar& v);

  std::span<const Scalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<Scalar> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  Vector column_vector(std::size_t c) const;
  const std::vector<Scalar>& entries() const { return data_; }

  Matrix transpose() const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(const Scalar& s) const;
  Vector apply(const Vector& v) const;

  Matrix submatrix(std::size_t r0, std::size_t nr, std::size_t c0, std::size_t nc) const;
  Matrix select_columns(std::span<const std::size_t> cols) const;
  Matrix select_rows(std::span<const std::size_t> rows) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& block);
  Matrix hstack(const Matrix& o) const;
  Matrix vstack(const Matrix& o) const;

  bool is_zero() const;
  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> data_;
};

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

namespace kernels {

/// Gauss-Jordan elimination with first-nonzero pivoting, one row at a time.
/// Kept as the reference the parallel kernel is tested against.
void rref_serial(Matrix& m, std::vector<std::size_t>& pivots);

/// Same elimination; the row updates for each pivot run in an OpenMP
/// parallel loop. Output is bitwise identical to rref_serial.
void rref_parallel(Matrix& m, std::vector<std::size_t>& pivots);

/// Matrices with fewer entries than this are reduced serially by rref().
inline constexpr std::size_t kParallelThreshold = 64 * 64;

}  // namespace kernels

/// Unique reduced row echelon form with strictly increasing pivot columns.
RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);
/// Columns form a basis of the right null space; one column per free variable,
/// normalized to 1 in that variable.
Matrix kernel_basis(const Matrix& m);
/// Some x with a*x == b, or nothing if a column of b is outside the column space of a.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);
/// Indices of a maximal linearly independent prefix-greedy set of columns.
std::vector<std::size_t> independent_columns(const Matrix& m);
/// Basis of the row-space complement: rows of the result span {y : y*m == 0}.
Matrix left_kernel_basis(const Matrix& m);

/// Incrementally grown echelon basis of a subspace of k^n.
class EchelonBasis {
 public:
  EchelonBasis(Field f, std::size_t ambient) : field_(f), ambient_(ambient) {}
  /// Returns true if v was outside the span (and has now been added).
  bool add(const Vector& v);
  bool contains(const Vector& v) const;
  std::size_t dim() const { return rows_.size(); }
  std::size_t ambient() const { return ambient_; }

 private:
  Vector reduce(const Vector& v) const;
  Field field_;
  std::size_t ambient_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace gcdim
