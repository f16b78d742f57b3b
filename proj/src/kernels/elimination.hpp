#pragma once

// Shared pieces of the serial and OpenMP elimination kernels.

#include <cstdint>
#include <utility>
#include <vector>

#include "gcdim/matrix.hpp"

namespace gcdim::kernels::detail {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

inline std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
  std::uint64_t result = 1, base = a % p, e = p - 2;
  while (e) {
    if (e & 1) result = mulmod(result, base, p);
    base = mulmod(base, base, p);
    e >>= 1;
  }
  return result;
}

/// Residues of a prime-field matrix, row-major.
struct ModularImage {
  std::size_t rows, cols;
  std::uint64_t p;
  std::vector<std::uint64_t> a;

  explicit ModularImage(const Matrix& m)
      : rows(m.rows()), cols(m.cols()), p(m.field().characteristic()), a(rows * cols) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = m.entries()[i].get_num().get_ui();
  }
  std::uint64_t& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }

  void write_back(Matrix& m) const {
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = Scalar(static_cast<unsigned long>(a[r * cols + c]));
  }
};

/// Locates the pivot for column col at or below row, swaps it up and scales it
/// to 1. Returns false if the column has no nonzero entry there.
inline bool prepare_pivot(Matrix& m, std::size_t row, std::size_t col) {
  std::size_t r = row;
  while (r < m.rows() && m(r, col) == 0) ++r;
  if (r == m.rows()) return false;
  if (r != row) {
    for (std::size_t j = col; j < m.cols(); ++j) std::swap(m(r, j), m(row, j));
  }
  const Field& f = m.field();
  Scalar inv = f.inv(m(row, col));
  for (std::size_t j = col; j < m.cols(); ++j) {
    if (m(row, j) != 0) m(row, j) = f.mul(m(row, j), inv);
  }
  return true;
}

inline void eliminate_row(Matrix& m, std::size_t target, std::size_t row, std::size_t col, Scalar& tmp) {
  const Scalar factor = m(target, col);
  if (factor == 0) return;
  const Field& f = m.field();
  auto src = m.row(row);
  auto dst = m.row(target);
  for (std::size_t j = col; j < m.cols(); ++j) {
    if (src[j] == 0) continue;
    tmp = factor * src[j];
    dst[j] -= tmp;
    if (!f.is_rational()) f.normalize(dst[j]);
  }
}

inline bool prepare_pivot(ModularImage& m, std::size_t row, std::size_t col) {
  std::size_t r = row;
  while (r < m.rows && m.at(r, col) == 0) ++r;
  if (r == m.rows) return false;
  if (r != row) {
    for (std::size_t j = col; j < m.cols; ++j) std::swap(m.at(r, j), m.at(row, j));
  }
  std::uint64_t inv = invmod(m.at(row, col), m.p);
  for (std::size_t j = col; j < m.cols; ++j) m.at(row, j) = mulmod(m.at(row, j), inv, m.p);
  return true;
}

inline void eliminate_row(ModularImage& m, std::size_t target, std::size_t row, std::size_t col) {
  const std::uint64_t factor = m.at(target, col);
  if (factor == 0) return;
  for (std::size_t j = col; j < m.cols; ++j) {
    std::uint64_t s = mulmod(factor, m.at(row, j), m.p);
    std::uint64_t& d = m.at(target, j);
    d = d >= s ? d - s : d + m.p - s;
  }
}

}  // namespace gcdim::kernels::detail
