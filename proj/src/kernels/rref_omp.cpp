#include <omp.h>

#include "elimination.hpp"

namespace gcdim::kernels {

namespace {

// Pivot search and scaling stay sequential; only the independent row updates
// for a fixed pivot are distributed, so the result matches rref_serial exactly.
void reduce_rational(Matrix& m, std::vector<std::size_t>& pivots) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    if (!detail::prepare_pivot(m, row, col)) continue;
    const auto n = static_cast<std::ptrdiff_t>(rows);
#pragma omp parallel
    {
      Scalar tmp;
#pragma omp for schedule(static)
      for (std::ptrdiff_t i = 0; i < n; ++i) {
        if (static_cast<std::size_t>(i) != row) detail::eliminate_row(m, static_cast<std::size_t>(i), row, col, tmp);
      }
    }
    pivots.push_back(col);
    ++row;
  }
}

void reduce_modular(detail::ModularImage& m, std::vector<std::size_t>& pivots) {
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
    if (!detail::prepare_pivot(m, row, col)) continue;
    const auto n = static_cast<std::ptrdiff_t>(m.rows);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
      if (static_cast<std::size_t>(i) != row) detail::eliminate_row(m, static_cast<std::size_t>(i), row, col);
    }
    pivots.push_back(col);
    ++row;
  }
}

}  // namespace

void rref_parallel(Matrix& m, std::vector<std::size_t>& pivots) {
  pivots.clear();
  if (m.field().is_rational()) {
    reduce_rational(m, pivots);
    return;
  }
  detail::ModularImage img(m);
  reduce_modular(img, pivots);
  img.write_back(m);
}

}  // namespace gcdim::kernels
