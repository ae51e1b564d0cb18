#include <doctest.h>

#include <stdexcept>

#include "gammacoh/representations.hpp"
#include "support.hpp"

using namespace gammacoh;
using testing_support::random_sl2z;
using testing_support::random_vector;
using testing_support::uniform;

namespace {

// Reference expansion of g.X^(k-p) Y^p as a product of linear forms.
QVector naive_image(const IntMatrix2& g, unsigned k, unsigned p, Variant v) {
  Rational x1, x2, y1, y2;  // X -> x1 X + x2 Y, Y -> y1 X + y2 Y
  if (v == Variant::standard) {
    x1 = Rational(g.a()); x2 = Rational(g.c());
    y1 = Rational(g.b()); y2 = Rational(g.d());
  } else {
    x1 = Rational(g.d()); x2 = -Rational(g.b());
    y1 = -Rational(g.c()); y2 = Rational(g.a());
  }
  QVector acc{Rational(1)};
  auto mul = [&acc](const Rational& c0, const Rational& c1) {
    QVector out(acc.size() + 1, Rational(0));
    for (std::size_t i = 0; i < acc.size(); ++i) {
      out[i] += acc[i] * c0;
      out[i + 1] += acc[i] * c1;
    }
    acc = out;
  };
  for (unsigned i = 0; i < k - p; ++i) mul(x1, x2);
  for (unsigned i = 0; i < p; ++i) mul(y1, y2);
  return acc;
}

HomogeneousPoly random_poly(unsigned k, Variant v) { return HomogeneousPoly(k, v, random_vector(k + 1)); }

}  // namespace

TEST_CASE("monomial keys and printing") {
  CHECK(HomogeneousPoly::monomial_key(2, Variant::dual, 1) == "ex^1*ey^1");
  CHECK(HomogeneousPoly::monomial_key(3, Variant::standard, 0) == "x^3");
  CHECK(HomogeneousPoly::monomial_key(0, Variant::dual, 0) == "1");
  const auto f = HomogeneousPoly::first(Variant::dual).pow(2) - HomogeneousPoly::second(Variant::dual).pow(2);
  CHECK(f.to_string() == "ex^2 - ey^2");
  CHECK(HomogeneousPoly(3, Variant::dual).to_string() == "0");
}

TEST_CASE("action matrices match direct expansion") {
  for (int i = 0; i < 200; ++i) {
    const IntMatrix2 g = random_sl2z(6);
    const unsigned k = uniform(0, 7);
    const Variant v = uniform(0, 1) ? Variant::dual : Variant::standard;
    const QMatrix m = action_matrix(g, k, v);
    for (unsigned p = 0; p <= k; ++p) CHECK(m.column(p) == naive_image(g, k, p, v));
  }
}

TEST_CASE("group action axioms, both modules") {
  for (int i = 0; i < 250; ++i) {
    const IntMatrix2 g = random_sl2z(10), h = random_sl2z(10);
    const unsigned k = uniform(0, 10);
    for (Variant v : {Variant::standard, Variant::dual}) {
      const HomogeneousPoly f = random_poly(k, v);
      CHECK(act(g * h, f) == act(g, act(h, f)));
      CHECK(act(IntMatrix2(), f) == f);
      CHECK(action_matrix(g * h, k, v) == action_matrix(g, k, v) * action_matrix(h, k, v));
    }
  }
}

TEST_CASE("minus identity acts by the parity of the degree") {
  for (unsigned k = 0; k <= 9; ++k)
    for (Variant v : {Variant::standard, Variant::dual}) {
      const HomogeneousPoly f = random_poly(k, v);
      CHECK(act(-IntMatrix2(), f) == (k % 2 ? -f : f));
    }
}

TEST_CASE("s_gamma is invariant") {
  for (int i = 0; i < 250; ++i) {
    const IntMatrix2 g = random_sl2z(12);
    const HomogeneousPoly s = s_gamma(g);
    CHECK(s.variant() == Variant::standard);
    CHECK(act(g, s) == s);
    const unsigned m = uniform(1, 4);
    CHECK(act(g, s.pow(m)) == s.pow(m));
  }
  CHECK(s_gamma(generators::T()).to_string() == "x^2");
}

TEST_CASE("pairing is invariant and perfect") {
  for (int i = 0; i < 250; ++i) {
    const IntMatrix2 g = random_sl2z(10);
    const unsigned k = uniform(0, 12);
    const HomogeneousPoly w = random_poly(k, Variant::dual), v = random_poly(k, Variant::standard);
    CHECK(pairing(act(g, w), act(g, v)) == pairing(w, v));
  }
  for (unsigned k = 0; k <= 12; ++k) {
    QMatrix gram(k + 1, k + 1);
    for (unsigned i = 0; i <= k; ++i)
      for (unsigned j = 0; j <= k; ++j)
        gram(i, j) = pairing(HomogeneousPoly::monomial(k, Variant::dual, i),
                             HomogeneousPoly::monomial(k, Variant::standard, j));
    CHECK(determinant(gram) != Rational(0));
  }
  CHECK_THROWS_AS(pairing(random_poly(2, Variant::standard), random_poly(2, Variant::standard)),
                  std::invalid_argument);
  CHECK_THROWS_AS(pairing(random_poly(2, Variant::dual), random_poly(3, Variant::standard)),
                  std::invalid_argument);
}

TEST_CASE("specializations") {
  const auto ex = HomogeneousPoly::first(Variant::dual), ey = HomogeneousPoly::second(Variant::dual);
  const auto f = ex * ex - (ex * ey).scaled(3);
  CHECK(delta_star(f).to_string() == "-2*e^2");
  CHECK(pr_x(f).to_string() == "ex^2");
  CHECK(pr_x(ey.pow(3)).is_zero());
  CHECK_THROWS_AS(delta_star(HomogeneousPoly::first(Variant::standard)), std::invalid_argument);
}

TEST_CASE("coinduced module is a representation") {
  const auto mod = CoinducedModule::with_default_cosets(2, Variant::dual);
  CHECK(mod.dimension() == 9);
  for (int i = 0; i < 200; ++i) {
    const IntMatrix2 g = random_sl2z(8), h = random_sl2z(8);
    CHECK(mod.action_matrix(g * h) == mod.action_matrix(g) * mod.action_matrix(h));
  }
  CHECK_THROWS_AS(CoinducedModule(2, Variant::dual, {IntMatrix2(), generators::T(), generators::T().pow(2)}),
                  std::invalid_argument);
}
