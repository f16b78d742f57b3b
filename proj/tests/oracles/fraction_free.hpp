#pragma once

// Rank by fraction-free (Bareiss) elimination on integer matrices, and by
// plain elimination mod p. Independent of the library's arithmetic.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using RationalMatrix = std::vector<std::vector<Rational>>;

inline Rational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(Int(s));
  return Rational(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
}

/// Clears denominators row by row, then runs Bareiss elimination.
inline std::size_t rank(const RationalMatrix& in) {
  std::vector<std::vector<Int>> a;
  for (const auto& row : in) {
    Int l = 1;
    for (const auto& x : row) l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(x));
    std::vector<Int> r;
    for (const auto& x : row) r.push_back(boost::multiprecision::numerator(x) * (l / boost::multiprecision::denominator(x)));
    a.push_back(std::move(r));
  }
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  std::size_t rk = 0;
  Int prev = 1;
  for (std::size_t c = 0; c < cols && rk < rows; ++c) {
    std::size_t p = rk;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[rk]);
    for (std::size_t r = rk + 1; r < rows; ++r) {
      for (std::size_t k = c + 1; k < cols; ++k) a[r][k] = (a[rk][c] * a[r][k] - a[r][c] * a[rk][k]) / prev;
      a[r][c] = 0;
    }
    prev = a[rk][c];
    ++rk;
  }
  return rk;
}

inline std::size_t rank_mod_p(std::vector<std::vector<std::uint64_t>> a, std::uint64_t p) {
  auto inv = [p](std::uint64_t x) {
    std::uint64_t r = 1, e = p - 2;
    while (e) {
      if (e & 1) r = static_cast<std::uint64_t>((unsigned __int128)r * x % p);
      x = static_cast<std::uint64_t>((unsigned __int128)x * x % p);
      e >>= 1;
    }
    return r;
  };
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  std::size_t rk = 0;
  for (std::size_t c = 0; c < cols && rk < rows; ++c) {
    std::size_t q = rk;
    while (q < rows && a[q][c] % p == 0) ++q;
    if (q == rows) continue;
    std::swap(a[q], a[rk]);
    const std::uint64_t iv = inv(a[rk][c] % p);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rk || a[r][c] % p == 0) continue;
      const std::uint64_t f = static_cast<std::uint64_t>((unsigned __int128)(a[r][c] % p) * iv % p);
      for (std::size_t k = 0; k < cols; ++k) {
        a[r][k] = (a[r][k] % p + p - static_cast<std::uint64_t>((unsigned __int128)f * (a[rk][k] % p) % p)) % p;
      }
    }
    ++rk;
  }
  return rk;
}

}  // namespace oracle
