#include <doctest.h>

#include <stdexcept>

#include "gammacoh/euler_pontryagin.hpp"
#include "support.hpp"

using namespace gammacoh;
using testing_support::uniform;

namespace {

SignedPermutation random_signed_permutation(unsigned d, bool even) {
  for (;;) {
    std::vector<int> idx(d);
    for (unsigned i = 0; i < d; ++i) idx[i] = static_cast<int>(i + 1);
    std::shuffle(idx.begin(), idx.end(), testing_support::rng());
    for (auto& v : idx)
      if (uniform(0, 1)) v = -v;
    SignedPermutation s{idx};
    if (!even || s.determinant() == 1) return s;
  }
}

EulerPontryaginPoly random_poly(unsigned d, unsigned n) {
  EulerPontryaginPoly f(d, n);
  for (int t = 0; t < 4; ++t) {
    EulerPontryaginPoly::Exponents e(f.variable_count(), 0);
    e[uniform(0, f.variable_count() - 1)] = uniform(0, 2);
    e[uniform(0, f.variable_count() - 1)] += uniform(0, 1);
    f.add_term(e, testing_support::small_rational());
  }
  return f;
}

}  // namespace

TEST_CASE("variables and grading") {
  const EulerPontryaginPoly e1 = EulerPontryaginPoly::euler(2, 5, 1);
  const EulerPontryaginPoly p21 = EulerPontryaginPoly::pontryagin(2, 5, 2, 1);
  CHECK(e1.variable_count() == 2 + 2 * 2);
  CHECK(e1.degree_cap() == 24);
  CHECK(p21.weighted_degree(p21.terms().begin()->first) == 8);
  CHECK(e1.weighted_degree(e1.terms().begin()->first) == 6);
  CHECK((e1 * e1 * e1 * e1 * e1).is_zero());  // degree 30 > cap 24
  CHECK_THROWS_AS(EulerPontryaginPoly(2, 4), std::invalid_argument);
}

TEST_CASE("signed permutations act as a group") {
  for (int i = 0; i < 200; ++i) {
    const unsigned d = uniform(1, 4), n = 2 * uniform(0, 2) + 1;
    const auto s = random_signed_permutation(d, true), t = random_signed_permutation(d, true);
    const auto f = random_poly(d, n);
    CHECK(sigma_act(s.compose(t), f) == sigma_act(s, sigma_act(t, f)));
    CHECK(sigma_act(SignedPermutation::identity(d), f) == f);
    const auto g = random_poly(d, n);
    CHECK(sigma_act(s, f * g) == sigma_act(s, f) * sigma_act(s, g));
  }
  CHECK_THROWS_AS(sigma_act(SignedPermutation{{-1}}, EulerPontryaginPoly::euler(1, 1, 1)), std::invalid_argument);
}

TEST_CASE("transvections fix Pontryagin classes and act linearly on Euler classes") {
  const unsigned d = 3, n = 5;
  const auto e1 = EulerPontryaginPoly::euler(d, n, 1), e2 = EulerPontryaginPoly::euler(d, n, 2);
  CHECK(transvection_act(1, 2, 1, e1) == e1 + e2.scaled(-1));
  CHECK(transvection_act(1, 2, 2, e1) == e1 + e2.scaled(-2));
  CHECK(transvection_act(1, 2, 1, e2) == e2);
  const auto p = EulerPontryaginPoly::pontryagin(d, n, 1, 1);
  CHECK(transvection_act(1, 2, 1, p) == p);
  for (int i = 0; i < 200; ++i) {
    const auto f = random_poly(d, n), g = random_poly(d, n);
    CHECK(transvection_act(2, 3, 1, f * g) == transvection_act(2, 3, 1, f) * transvection_act(2, 3, 1, g));
    CHECK(transvection_act(2, 3, 2, f) == transvection_act(2, 3, 1, transvection_act(2, 3, 1, f)));
  }
  CHECK_THROWS_AS(transvection_act(1, 1, 1, e1), std::invalid_argument);
}

TEST_CASE("Euler part drops Pontryagin terms") {
  const auto e = EulerPontryaginPoly::euler(2, 3, 1), p = EulerPontryaginPoly::pontryagin(2, 3, 1, 2);
  CHECK((e + e * p).euler_part() == e);
}
