#include <doctest.h>

#include <stdexcept>

#include "gammacoh/cohomology.hpp"
#include "support.hpp"

using namespace gammacoh;
using testing_support::random_sl2z;
using testing_support::random_theta;
using testing_support::random_vector;
using testing_support::uniform;

namespace {

IntMatrix2 random_member(GroupName g, unsigned len = 10) {
  return g == GroupName::SL2Z ? random_sl2z(len) : random_theta(len);
}

// dim H^1(SL2(Z); Sym^k) from the two relator conditions written out by hand:
// (1 + A + A^2 + A^3) f(A) = 0 and (1 + A) f(A) = (1 + B + B^2) f(B).
std::size_t sl2z_h1_by_hand(unsigned k, Variant v) {
  const std::size_t n = k + 1;
  const QMatrix I = QMatrix::identity(n);
  const QMatrix a = action_matrix(generators::alpha(), k, v), b = action_matrix(generators::beta(), k, v);
  QMatrix sys(2 * n, 2 * n);
  sys.set_block(0, 0, I + a + a * a + a * a * a);
  sys.set_block(n, 0, I + a);
  sys.set_block(n, n, (I + b + b * b).scaled(-1));
  const std::size_t z1 = 2 * n - rank(sys);
  const std::size_t b1 = rank(QMatrix::stack(I - a, I - b));
  return z1 - b1;
}

// Modular-forms count, written independently of the library.
std::size_t mf_count(unsigned m, GroupName g) {
  const unsigned w = 2 * m + 2;
  long cusp_forms;
  if (g == GroupName::SL2Z) {
    cusp_forms = w < 12 ? 0 : w / 12 - (w % 12 == 2 ? 1 : 0);
    return 1 + 2 * cusp_forms;
  }
  cusp_forms = -(long(w) - 1) + long(w) / 4 + (long(w) / 2 - 1) * 2;
  if (cusp_forms < 0) cusp_forms = 0;
  return 2 + 2 * cusp_forms;
}

CocycleClass random_class(const CohomologySpace& s) {
  CocycleClass c = CocycleClass::principal(s.group(), HomogeneousPoly(s.degree(), s.variant(),
                                                                       random_vector(s.degree() + 1)));
  for (const auto& b : s.basis()) c = c + b.scaled(testing_support::small_rational());
  return c;
}

}  // namespace

TEST_CASE("Fox derivatives of the SL2(Z) relators") {
  CHECK(fox_derivative(GroupWord::parse("A^4"), "A").to_string() == "1 + A + A^2 + A^3");
  CHECK(fox_derivative(GroupWord::parse("A^4"), "B").to_string() == "0");
  const auto d = fox_derivative(GroupWord::parse("A^2*B^-3"), "B");
  // -A^2 B^-1 - A^2 B^-2 - A^2 B^-3
  CHECK(d.terms.size() == 3);
  for (const auto& [coef, w] : d.terms) CHECK(coef == -1);
}

TEST_CASE("H^1 of SL2(Z) agrees with the hand-built system") {
  for (unsigned k = 0; k <= 16; ++k)
    for (Variant v : {Variant::standard, Variant::dual})
      CHECK(h1(GroupName::SL2Z, k, v).dimension() == sl2z_h1_by_hand(k, v));
}

TEST_CASE("H^1 dimensions against the modular-forms count") {
  for (unsigned m = 1; m <= 10; ++m) CHECK(h1(GroupName::SL2Z, 2 * m, Variant::dual).dimension() == mf_count(m, GroupName::SL2Z));
  for (unsigned m = 1; m <= 8; ++m) CHECK(h1(GroupName::Theta, 2 * m, Variant::dual).dimension() == mf_count(m, GroupName::Theta));
  CHECK(h1(GroupName::SL2Z, 0, Variant::dual).dimension() == 0);
  CHECK(h1(GroupName::Theta, 0, Variant::dual).dimension() == 1);
}

TEST_CASE("odd weights vanish and the two modules have equal dimensions") {
  for (GroupName g : {GroupName::SL2Z, GroupName::Theta})
    for (unsigned k = 0; k <= 16; ++k) {
      const std::size_t d = h1(g, k, Variant::dual).dimension();
      CHECK(h1(g, k, Variant::standard).dimension() == d);
      if (k % 2) CHECK(d == 0);
    }
}

TEST_CASE("no invariants in positive weight") {
  for (GroupName g : {GroupName::SL2Z, GroupName::Theta}) {
    CHECK(h0(g, 0, Variant::dual).size() == 1);
    for (unsigned k = 1; k <= 16; ++k)
      for (Variant v : {Variant::standard, Variant::dual}) CHECK(h0(g, k, v).empty());
  }
}

TEST_CASE("Shapiro cross-check") {
  for (unsigned k = 0; k <= 12; ++k)
    CHECK(shapiro_h1(k, Variant::dual) == h1(GroupName::Theta, k, Variant::dual).dimension());
}

TEST_CASE("basis classes are cocycles and independent modulo coboundaries") {
  for (GroupName g : {GroupName::SL2Z, GroupName::Theta})
    for (unsigned m = 1; m <= 5; ++m) {
      const auto s = h1(g, 2 * m, Variant::dual);
      for (std::size_t i = 0; i < s.dimension(); ++i) {
        const auto& c = s.basis()[i];
        CHECK(c.satisfies_cocycle_conditions());
        CHECK_FALSE(s.is_coboundary(c));
        QVector e(s.dimension(), Rational(0));
        e[i] = 1;
        CHECK(s.coordinates(c) == e);
      }
    }
}

TEST_CASE("coordinates ignore coboundaries") {
  for (int i = 0; i < 200; ++i) {
    const GroupName g = uniform(0, 1) ? GroupName::SL2Z : GroupName::Theta;
    const unsigned k = 2 * uniform(1, 5);
    const auto s = h1(g, k, Variant::dual);
    const CocycleClass c = random_class(s);
    const CocycleClass p = CocycleClass::principal(g, HomogeneousPoly(k, Variant::dual, random_vector(k + 1)));
    CHECK(s.is_coboundary(p));
    CHECK(s.coordinates(c + p) == s.coordinates(c));
  }
}

TEST_CASE("derivation law and word independence") {
  for (int i = 0; i < 250; ++i) {
    const GroupName g = uniform(0, 1) ? GroupName::SL2Z : GroupName::Theta;
    const unsigned k = 2 * uniform(1, 4);
    const auto s = h1(g, k, Variant::dual);
    const CocycleClass c = random_class(s);
    const IntMatrix2 x = random_member(g), y = random_member(g);
    CHECK(derivation_value(c, x * y) == derivation_value(c, x) + act(x, derivation_value(c, y)));
    CHECK(derivation_value(c, IntMatrix2()).is_zero());

    // Splice a relator into the canonical word: same element, different word.
    const auto& p = presentation(g);
    const GroupWord w = p.word_for(x);
    const GroupWord r = p.relators()[uniform(0, p.relators().size() - 1)];
    const GroupWord u = p.word_for(random_member(g, 4));
    const GroupWord spliced = w * u * r * u.inverse();
    REQUIRE(evaluate_word(spliced, p) == x);
    CHECK(derivation_value_on_word(c, spliced) == derivation_value(c, x));
  }
}

TEST_CASE("restriction to finite cyclic subgroups vanishes") {
  for (GroupName g : {GroupName::SL2Z, GroupName::Theta})
    for (unsigned m = 1; m <= 4; ++m) {
      const auto s = h1(g, 2 * m, Variant::dual);
      for (const auto& c : s.basis()) {
        for (int i = 0; i < 10; ++i) {
          const IntMatrix2 conj = random_member(g, 6);
          const IntMatrix2 elliptic = conj * generators::S() * conj.inverse();
          CHECK(restrict_to_cyclic(c, elliptic).is_zero);
        }
        CHECK(restrict_to_cyclic(c, -IntMatrix2()).is_zero);
      }
    }
}

TEST_CASE("decomposable pairing") {
  for (int i = 0; i < 200; ++i) {
    const GroupName g = uniform(0, 1) ? GroupName::SL2Z : GroupName::Theta;
    const unsigned m = uniform(1, 4);
    const auto s = h1(g, 2 * m, Variant::dual);
    const IntMatrix2 gamma = random_member(g, 12);
    const auto d = make_decomposable(gamma, m);
    const CocycleClass p = CocycleClass::principal(g, HomogeneousPoly(2 * m, Variant::dual, random_vector(2 * m + 1)));
    // Principal derivations pair to zero against every decomposable.
    CHECK(pair_decomposable(p, d) == Rational(0));
    // Independent of the coboundary.
    const CocycleClass c = random_class(s);
    CHECK(pair_decomposable(c + p, d) == pair_decomposable(c, d));
    // The invariant kills the image of (gamma - 1).
    const HomogeneousPoly w(2 * m, Variant::dual, random_vector(2 * m + 1));
    CHECK(pairing(act(gamma, w) - w, d.value) == Rational(0));
  }
  CHECK_THROWS_AS(make_decomposable(generators::T(), 0), std::invalid_argument);
}

TEST_CASE("ball enumeration") {
  const auto ball = enumerate_ball(sl2z_presentation(), 3);
  REQUIRE_FALSE(ball.empty());
  CHECK(ball.front().matrix.is_identity());
  for (std::size_t i = 1; i < ball.size(); ++i) {
    CHECK(ball[i].length >= ball[i - 1].length);
    CHECK(evaluate_word(ball[i].word, sl2z_presentation()) == ball[i].matrix);
  }
}

TEST_CASE("spanning and detection") {
  CHECK(spanning_rank(GroupName::SL2Z, 1, 6).full());
  for (GroupName g : {GroupName::SL2Z, GroupName::Theta})
    for (unsigned m = 1; m <= 3; ++m) {
      const auto cert = spanning_rank(g, m, 8);
      CHECK(cert.full());
      CHECK(cert.detecting.size() == cert.rank);
      const auto s = h1(g, 2 * m, Variant::dual);
      for (const auto& d : detect_classes(s, 8)) {
        REQUIRE(d.detecting_gamma.has_value());
        CHECK(!restrict_to_cyclic(s.basis()[d.class_index], *d.detecting_gamma).is_zero);
      }
    }
}

TEST_CASE("parabolic analysis") {
  for (GroupName g : {GroupName::SL2Z, GroupName::Theta})
    for (unsigned m = 1; m <= 4; ++m) {
      const auto p = parabolic_analysis(g, m);
      CHECK(p.each_cusp_one_dimensional());
      CHECK(p.surjective());
      CHECK(p.dim_h1 - p.dim_parabolic == p.cusps.size());
    }
  CHECK_THROWS_AS(parabolic_analysis(GroupName::SL2Z, 0), std::invalid_argument);
}
