#include <doctest.h>

#include <stdexcept>

#include "gammacoh/qmatrix.hpp"
#include "gammacoh/rational.hpp"
#include "support.hpp"

using namespace gammacoh;
using testing_support::random_matrix;
using testing_support::random_matrix_of_rank;
using testing_support::uniform;

namespace {

// Laplace expansion along the first row; only used on small matrices.
Rational cofactor_det(const QMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return Rational(1);
  if (n == 1) return m(0, 0);
  Rational sum(0);
  for (std::size_t j = 0; j < n; ++j) {
    QMatrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t c = 0, cc = 0; c < n; ++c)
        if (c != j) minor(r - 1, cc++) = m(r, c);
    const Rational term = m(0, j) * cofactor_det(minor);
    sum = (j % 2 == 0) ? sum + term : sum - term;
  }
  return sum;
}

}  // namespace

TEST_CASE("rational parsing and canonical form") {
  CHECK(Rational::parse("6/4").to_string() == "3/2");
  CHECK(Rational::parse("-6/-4").to_string() == "3/2");
  CHECK(Rational::parse("10/5").to_string() == "2");
  CHECK(Rational::parse("-0/7").to_string() == "0");
  CHECK(Rational::parse("123456789012345678901234567890").to_string() == "123456789012345678901234567890");
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("abc"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("rational arithmetic") {
  const Rational a = Rational::parse("2/3"), b = Rational::parse("-5/7");
  CHECK((a + b).to_string() == "-1/21");
  CHECK((a * b).to_string() == "-10/21");
  CHECK((a / b).to_string() == "-14/15");
  CHECK(a > b);
  CHECK(Rational::parse("3/9") == Rational::parse("1/3"));
  CHECK(factorial(20) == Integer("2432902008176640000"));
  CHECK(binomial(10, 3) == 120);
  CHECK(binomial(3, 5) == 0);
}

TEST_CASE("rational field axioms on random values") {
  for (int i = 0; i < 300; ++i) {
    const Rational a = testing_support::small_rational(50), b = testing_support::small_rational(50),
                   c = testing_support::small_rational(50);
    CHECK((a + b) * c == a * c + b * c);
    CHECK(a + b - b == a);
    if (!b.is_zero()) CHECK((a / b) * b == a);
    CHECK(Rational::parse(a.to_string()) == a);
  }
}

TEST_CASE("rref of a known matrix") {
  const QMatrix m = QMatrix::from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
  const RrefResult r = rref(m);
  CHECK(r.rank == 2);
  CHECK(r.pivots == std::vector<std::size_t>{0, 1});
  CHECK(r.matrix == QMatrix::from_rows({{1, 0, 1}, {0, 1, 1}, {0, 0, 0}}));
  const auto k = kernel_basis(m);
  REQUIRE(k.size() == 1);
  CHECK(k[0] == QVector{-1, -1, 1});
}

TEST_CASE("solve reports consistency") {
  const QMatrix m = QMatrix::from_rows({{1, 1}, {2, 2}});
  CHECK(solve(m, {2, 4}).consistent);
  CHECK_FALSE(solve(m, {2, 5}).consistent);
  CHECK_THROWS_AS(solve(m, {1, 2, 3}), std::invalid_argument);
}

TEST_CASE("kernel and rank on random matrices of prescribed rank") {
  for (int i = 0; i < 200; ++i) {
    const std::size_t rows = uniform(1, 6), cols = uniform(1, 6);
    const std::size_t r = uniform(0, std::min(rows, cols));
    const QMatrix m = r == 0 ? QMatrix(rows, cols) : random_matrix_of_rank(rows, cols, r);
    CHECK(rank(m) == r);
    const auto k = kernel_basis(m);
    CHECK(k.size() == cols - r);
    for (const auto& v : k) CHECK(is_zero(m * v));
    if (!k.empty()) CHECK(rank(QMatrix::from_columns(cols, k)) == k.size());
    CHECK(rank(m.transpose()) == r);
  }
}

TEST_CASE("solve returns a solution when one exists") {
  for (int i = 0; i < 200; ++i) {
    const std::size_t rows = uniform(1, 6), cols = uniform(1, 6);
    const QMatrix m = random_matrix(rows, cols);
    const QVector x = testing_support::random_vector(cols);
    const SolveResult s = solve(m, m * x);
    REQUIRE(s.consistent);
    CHECK(m * s.solution == m * x);
  }
}

TEST_CASE("determinant matches cofactor expansion") {
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = uniform(1, 5);
    const QMatrix m = random_matrix(n, n, 6);
    CHECK(determinant(m) == cofactor_det(m));
  }
}

TEST_CASE("subspace reducer membership") {
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = uniform(2, 6);
    const std::size_t r = uniform(1, n - 1);
    const QMatrix basis = random_matrix_of_rank(n, r, r);
    const SubspaceReducer red = SubspaceReducer::column_space(basis);
    const QVector coeffs = testing_support::random_vector(r);
    CHECK(red.contains(basis * coeffs));
    // reduce is idempotent and differs from the input by a subspace vector.
    const QVector v = testing_support::random_vector(n);
    const QVector rv = red.reduce(v);
    CHECK(red.reduce(rv) == rv);
    CHECK(red.contains(subtract(v, rv)));
  }
}
