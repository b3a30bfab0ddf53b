#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "piradiance/matrix.hpp"
#include "piradiance/rational.hpp"

namespace piradiance::fixtures {

// Fixed seeds keep every property run reproducible.
inline std::mt19937_64 make_rng(std::uint64_t salt = 0) { return std::mt19937_64(0x5eed'c0ffee ^ salt); }

inline Rational random_rational(std::mt19937_64& rng, int max_num = 6, int max_den = 4) {
  std::uniform_int_distribution<int> num(-max_num, max_num);
  std::uniform_int_distribution<int> den(1, max_den);
  return Rational(num(rng), den(rng));
}

inline RationalMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int max_num = 3,
                                    int max_den = 2) {
  RationalMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      m(r, c) = random_rational(rng, max_num, max_den);
    }
  }
  return m;
}

// Cofactor expansion along the first row, independent of the elimination code.
inline Rational cofactor_determinant(const RationalMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return Rational(1);
  if (n == 1) return m(0, 0);
  Rational det;
  for (std::size_t c = 0; c < n; ++c) {
    if (m(0, c).is_zero()) continue;
    RationalMatrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      std::size_t cc = 0;
      for (std::size_t k = 0; k < n; ++k) {
        if (k == c) continue;
        minor(r - 1, cc++) = m(r, k);
      }
    }
    const Rational term = m(0, c) * cofactor_determinant(minor);
    det = (c % 2 == 0) ? det + term : det - term;
  }
  return det;
}

// Rank as the size of the largest non-vanishing minor, by brute force.
inline std::size_t minor_rank(const RationalMatrix& m) {
  const std::size_t rmax = std::min(m.rows(), m.cols());
  for (std::size_t k = rmax; k > 0; --k) {
    std::vector<bool> rsel(m.rows()), csel(m.cols());
    std::fill(rsel.begin(), rsel.begin() + static_cast<std::ptrdiff_t>(k), true);
    do {
      std::fill(csel.begin(), csel.end(), false);
      std::fill(csel.begin(), csel.begin() + static_cast<std::ptrdiff_t>(k), true);
      do {
        RationalMatrix sub(k, k);
        std::size_t i = 0;
        for (std::size_t r = 0; r < m.rows(); ++r) {
          if (!rsel[r]) continue;
          std::size_t j = 0;
          for (std::size_t c = 0; c < m.cols(); ++c) {
            if (csel[c]) sub(i, j++) = m(r, c);
          }
          ++i;
        }
        if (!cofactor_determinant(sub).is_zero()) return k;
      } while (std::prev_permutation(csel.begin(), csel.end()));
    } while (std::prev_permutation(rsel.begin(), rsel.end()));
  }
  return 0;
}

inline double rel_diff(double a, double b) { return std::abs(a - b) / std::max(std::abs(a), std::abs(b)); }

}  // namespace piradiance::fixtures
