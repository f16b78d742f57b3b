#include <type_traits>

#include "elimination.hpp"

namespace gcdim::kernels {

namespace {

template <typename M>
void reduce(M& m, std::size_t rows, std::size_t cols, std::vector<std::size_t>& pivots) {
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    if (!detail::prepare_pivot(m, row, col)) continue;
    if constexpr (std::is_same_v<M, Matrix>) {
      Scalar tmp;
      for (std::size_t i = 0; i < rows; ++i)
        if (i != row) detail::eliminate_row(m, i, row, col, tmp);
    } else {
      for (std::size_t i = 0; i < rows; ++i)
        if (i != row) detail::eliminate_row(m, i, row, col);
    }
    pivots.push_back(col);
    ++row;
  }
}

}  // namespace

void rref_serial(Matrix& m, std::vector<std::size_t>& pivots) {
  pivots.clear();
  if (m.field().is_rational()) {
    reduce(m, m.rows(), m.cols(), pivots);
    return;
  }
  detail::ModularImage img(m);
  reduce(img, img.rows, img.cols, pivots);
  img.write_back(m);
}

}  // namespace gcdim::kernels
