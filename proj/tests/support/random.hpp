#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "trigvee/linalg.hpp"

namespace trigvee::testing {

/// Seeded source of small random rationals and matrices.
class RandomRationals {
 public:
  explicit RandomRationals(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

  /// Nonzero-denominator rational num/den with |num| <= max_num, 1 <= den <= max_den.
  Rational rational(long max_num = 9, long max_den = 5) {
    return Rational(integer(-max_num, max_num), integer(1, max_den));
  }

  Rational positive(long max_num = 9, long max_den = 5) {
    return Rational(integer(1, max_num), integer(1, max_den));
  }

  RatMatrix matrix(std::size_t rows, std::size_t cols) {
    RatMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rational();
    return m;
  }

  RatMatrix nonsingular_symmetric(std::size_t n) {
    for (;;) {
      RatMatrix m(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = rational();
      if (!determinant(m).is_zero()) return m;
    }
  }

  /// Product of random integer elementary matrices and a signed permutation;
  /// determinant +-1.
  RatMatrix unimodular(std::size_t n) {
    RatMatrix t = RatMatrix::identity(n);
    for (int step = 0; step < 3 * static_cast<int>(n) + 2; ++step) {
      const auto i = static_cast<std::size_t>(integer(0, static_cast<long>(n) - 1));
      const auto j = static_cast<std::size_t>(integer(0, static_cast<long>(n) - 1));
      if (i == j) continue;
      const Rational k = integer(-2, 2);
      for (std::size_t c = 0; c < n; ++c) t(i, c) += k * t(j, c);
    }
    if (n > 1 && integer(0, 1) == 1)
      for (std::size_t c = 0; c < n; ++c) std::swap(t(0, c), t(1, c));
    return t;
  }

  RatVec vector(std::size_t n) {
    RatVec v(n);
    for (auto& x : v) x = rational();
    return v;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace trigvee::testing
