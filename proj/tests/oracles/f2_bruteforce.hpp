#pragma once

// Hom and Ext^1 between representations of 1 -> 2 over F_2 by enumeration.
// A representation has spaces F_2^{d0}, F_2^{d1} and one map V_1 -> V_0
// stored as a d0 x d1 bit matrix.

#include <cstdint>
#include <set>
#include <vector>

namespace oracle {

struct F2Rep {
  int d0 = 0;
  int d1 = 0;
  std::vector<std::vector<int>> arrow;  // d0 rows, d1 columns
};

using Bits = std::vector<std::vector<int>>;

inline Bits bits_matrix(std::uint32_t code, int rows, int cols) {
  Bits m(static_cast<std::size_t>(rows), std::vector<int>(static_cast<std::size_t>(cols), 0));
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m[r][c] = (code >> (r * cols + c)) & 1;
  return m;
}

inline Bits mul(const Bits& a, const Bits& b, int rows, int inner, int cols) {
  Bits m(static_cast<std::size_t>(rows), std::vector<int>(static_cast<std::size_t>(cols), 0));
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      int s = 0;
      for (int k = 0; k < inner; ++k) s ^= a[r][k] & b[k][c];
      m[r][c] = s;
    }
  return m;
}

inline std::uint32_t encode(const Bits& m) {
  std::uint32_t code = 0, bit = 0;
  for (const auto& row : m)
    for (int x : row) code |= static_cast<std::uint32_t>(x) << bit++;
  return code;
}

inline int log2_exact(std::size_t n) {
  int k = 0;
  while ((std::size_t{1} << k) < n) ++k;
  return k;
}

/// Every pair (f0, f1) is tried; the result is log2 of the number of maps
/// commuting with the arrows.
inline int hom_dim(const F2Rep& m, const F2Rep& n) {
  const int b0 = n.d0 * m.d0, b1 = n.d1 * m.d1;
  std::size_t count = 0;
  for (std::uint32_t c0 = 0; c0 < (1u << b0); ++c0) {
    Bits f0 = bits_matrix(c0, n.d0, m.d0);
    Bits left = mul(f0, m.arrow, n.d0, m.d0, m.d1);
    for (std::uint32_t c1 = 0; c1 < (1u << b1); ++c1) {
      Bits f1 = bits_matrix(c1, n.d1, m.d1);
      if (left == mul(n.arrow, f1, n.d0, n.d1, m.d1)) ++count;
    }
  }
  return log2_exact(count);
}

/// Ext^1 = Hom(M_1, N_0) modulo the maps f0 M_a - N_a f1, with the image
/// collected element by element.
inline int ext1_dim(const F2Rep& m, const F2Rep& n) {
  const int b0 = n.d0 * m.d0, b1 = n.d1 * m.d1;
  std::set<std::uint32_t> image;
  for (std::uint32_t c0 = 0; c0 < (1u << b0); ++c0) {
    Bits left = mul(bits_matrix(c0, n.d0, m.d0), m.arrow, n.d0, m.d0, m.d1);
    for (std::uint32_t c1 = 0; c1 < (1u << b1); ++c1) {
      Bits right = mul(n.arrow, bits_matrix(c1, n.d1, m.d1), n.d0, n.d1, m.d1);
      Bits diff = left;
      for (int r = 0; r < n.d0; ++r)
        for (int c = 0; c < m.d1; ++c) diff[r][c] ^= right[r][c];
      image.insert(encode(diff));
    }
  }
  return n.d0 * m.d1 - log2_exact(image.size());
}

/// All representations of total dimension at most max_dim.
inline std::vector<F2Rep> all_reps(int max_dim) {
  std::vector<F2Rep> out;
  for (int d0 = 0; d0 <= max_dim; ++d0)
    for (int d1 = 0; d0 + d1 <= max_dim; ++d1)
      for (std::uint32_t c = 0; c < (1u << (d0 * d1)); ++c) out.push_back({d0, d1, bits_matrix(c, d0, d1)});
  return out;
}

}  // namespace oracle
