#pragma once

// Shared helpers for the test suites: seeded generators of random inputs and
// small independent reference computations.

#include <random>
#include <vector>

#include "gammacoh/modular_group.hpp"
#include "gammacoh/qmatrix.hpp"

namespace testing_support {

using gammacoh::Integer;
using gammacoh::IntMatrix2;
using gammacoh::QMatrix;
using gammacoh::QVector;
using gammacoh::Rational;

inline std::mt19937_64& rng() {
  static std::mt19937_64 engine(0x5eed2026ULL);
  return engine;
}

inline long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

inline Rational small_rational(long bound = 5) {
  const long num = uniform(-bound, bound);
  const long den = uniform(1, bound);
  return Rational(Integer(num), Integer(den));
}

inline QVector random_vector(std::size_t n, long bound = 5) {
  QVector v(n);
  for (auto& x : v) x = small_rational(bound);
  return v;
}

inline QMatrix random_matrix(std::size_t rows, std::size_t cols, long bound = 4) {
  QMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = Rational(uniform(-bound, bound));
  return m;
}

// Random matrix of prescribed rank: product of random rows x rank and
// rank x cols factors, re-drawn until the rank is right.
inline QMatrix random_matrix_of_rank(std::size_t rows, std::size_t cols, std::size_t r) {
  for (;;) {
    QMatrix m = random_matrix(rows, r) * random_matrix(r, cols);
    if (gammacoh::rank(m) == r) return m;
  }
}

// Random word in (0 -1; 1 0) and (1 1; 0 1)^{+-1}.
inline IntMatrix2 random_sl2z(unsigned max_length = 12) {
  const IntMatrix2 s(0, -1, 1, 0), t(1, 1, 0, 1), ti(1, -1, 0, 1);
  IntMatrix2 g;
  const unsigned len = static_cast<unsigned>(uniform(0, max_length));
  for (unsigned i = 0; i < len; ++i) {
    switch (uniform(0, 2)) {
      case 0: g = g * s; break;
      case 1: g = g * t; break;
      default: g = g * ti; break;
    }
  }
  return g;
}

// Independent theta test: the reduction mod 2 is I or (0 1; 1 0).
inline bool theta_by_parity(const IntMatrix2& g) {
  auto odd = [](const Integer& x) { return mpz_odd_p(x.get_mpz_t()) != 0; };
  const bool a = odd(g.a()), b = odd(g.b()), c = odd(g.c()), d = odd(g.d());
  return (a && d && !b && !c) || (b && c && !a && !d);
}

inline IntMatrix2 random_theta(unsigned max_length = 12) {
  for (;;) {
    IntMatrix2 g = random_sl2z(max_length);
    if (theta_by_parity(g)) return g;
  }
}

}  // namespace testing_support
