#include <doctest.h>

#include <set>
#include <stdexcept>

#include "gammacoh/modular_group.hpp"
#include "support.hpp"

using namespace gammacoh;
using testing_support::random_sl2z;
using testing_support::random_theta;
using testing_support::theta_by_parity;

TEST_CASE("matrix literal parsing") {
  CHECK(IntMatrix2::parse("1,1;0,1") == generators::T());
  CHECK(IntMatrix2::parse(" 2 , -1 ; 1 , 0 ").to_string() == "2,-1;1,0");
  CHECK_THROWS_AS(IntMatrix2::parse("2,0;0,1"), std::invalid_argument);
  CHECK_THROWS_AS(IntMatrix2::parse("1,1;0"), std::invalid_argument);
  CHECK_THROWS(IntMatrix2::parse("a,b;c,d"));
}

TEST_CASE("generator identities") {
  const IntMatrix2 A = generators::alpha(), B = generators::beta();
  CHECK(A.pow(4).is_identity());
  CHECK(A.pow(2) == B.pow(3));
  CHECK(B.pow(6).is_identity());
  CHECK(B.inverse() * A == generators::T());
  CHECK(generators::S().pow(2).is_minus_identity());
  CHECK(generators::U() == generators::T().pow(2));
}

TEST_CASE("classification by trace") {
  CHECK(classify(IntMatrix2()) == ElementKind::identity);
  CHECK(classify(-IntMatrix2()) == ElementKind::minus_identity);
  CHECK(classify(generators::alpha()) == ElementKind::elliptic);
  CHECK(classify(generators::beta()) == ElementKind::elliptic);
  CHECK(classify(generators::T()) == ElementKind::parabolic);
  CHECK(classify(IntMatrix2(-1, 0, 3, -1)) == ElementKind::parabolic);
  CHECK(classify(IntMatrix2(2, 1, 1, 1)) == ElementKind::hyperbolic);
}

TEST_CASE("words parse and print") {
  const GroupWord w = GroupWord::parse("B^-1*A");
  CHECK(w.to_string() == "B^-1*A");
  CHECK(GroupWord::parse("A*A^-1").empty());
  CHECK(GroupWord::parse("1").to_string() == "1");
  CHECK(GroupWord::parse("A^2*A").to_string() == "A^3");
  CHECK((w * w.inverse()).empty());
  CHECK(evaluate_word(w, sl2z_presentation()) == generators::T());
  CHECK_THROWS_AS(evaluate_word(GroupWord::parse("Q"), sl2z_presentation()), std::invalid_argument);
}

TEST_CASE("presentations satisfy their relators") {
  for (GroupName g : {GroupName::SL2Z, GroupName::Theta}) {
    const auto& p = presentation(g);
    for (const auto& r : p.relators()) CHECK(evaluate_word(r, p).is_identity());
  }
}

TEST_CASE("sl2z_word evaluates back to the input") {
  const auto& p = sl2z_presentation();
  CHECK(sl2z_word(generators::T()).to_string() == "B^-1*A");
  CHECK(sl2z_word(IntMatrix2()).empty());
  for (int i = 0; i < 300; ++i) {
    const IntMatrix2 g = random_sl2z(20);
    CHECK(evaluate_word(sl2z_word(g), p) == g);
  }
}

TEST_CASE("theta membership and words") {
  const auto& p = theta_presentation();
  CHECK(theta_member(generators::S()));
  CHECK(theta_member(generators::U()));
  CHECK_FALSE(theta_member(generators::T()));
  CHECK_THROWS_AS(theta_word(generators::T()), std::domain_error);
  for (int i = 0; i < 300; ++i) {
    const IntMatrix2 g = random_sl2z(16);
    CHECK(theta_member(g) == theta_by_parity(g));
    if (theta_by_parity(g)) CHECK(evaluate_word(theta_word(g), p) == g);
  }
  for (int i = 0; i < 200; ++i) {
    const IntMatrix2 g = random_theta(16);
    CHECK(evaluate_word(p.word_for(g), p) == g);
  }
}

TEST_CASE("theta group is the d = 2 case of the realisation predicate") {
  for (int i = 0; i < 200; ++i) {
    const IntMatrix2 g = random_sl2z(12);
    const std::vector<std::vector<Integer>> m{{g.a(), g.b()}, {g.c(), g.d()}};
    CHECK(gamma_d_member(m, 1));
    CHECK(gamma_d_member(m, 7));
    CHECK(gamma_d_member(m, 5) == theta_by_parity(g));
  }
}

TEST_CASE("right cosets of the theta group") {
  const auto& p = theta_presentation();
  const auto reps = right_coset_representatives(p);
  REQUIRE(reps.size() == 3);
  CHECK(reps[0].is_identity());
  // Pairwise distinct cosets, and every element lands in exactly one.
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      CHECK(theta_by_parity(reps[i] * reps[j].inverse()) == (i == j));
  for (int i = 0; i < 200; ++i) {
    const IntMatrix2 x = random_sl2z(12);
    const std::size_t k = right_coset_index(p, reps, x);
    CHECK(theta_by_parity(x * reps[k].inverse()));
  }
  CHECK(right_coset_representatives(sl2z_presentation()).size() == 1);
}

TEST_CASE("cusps") {
  const auto sl = cusp_orbits(sl2z_presentation());
  REQUIRE(sl.size() == 1);
  CHECK(sl[0].stabilizer_generator == generators::T());
  CHECK(sl[0].width == 1);

  const auto th = cusp_orbits(theta_presentation());
  REQUIRE(th.size() == 2);
  std::set<std::string> gens;
  unsigned total_width = 0;
  for (const auto& c : th) {
    gens.insert(c.stabilizer_generator.to_string());
    total_width += c.width;
    CHECK(theta_member(c.stabilizer_generator));
    CHECK(classify(c.stabilizer_generator) == ElementKind::parabolic);
    // The generator fixes the cusp [p:q].
    const IntMatrix2& g = c.stabilizer_generator;
    CHECK(g.a() * c.p + g.b() * c.q == c.p);
    CHECK(g.c() * c.p + g.d() * c.q == c.q);
  }
  CHECK(gens == std::set<std::string>{"1,2;0,1", "2,-1;1,0"});
  CHECK(total_width == 3);
}
