#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gammacoh/modular_group.hpp"
#include "gammacoh/qmatrix.hpp"
#include "gammacoh/representations.hpp"

namespace gammacoh {

/// Formal Z-linear combination of group words.
struct GroupRingElement {
  std::vector<std::pair<long, GroupWord>> terms;

  /// Sum of coefficient times the action matrix of each word.
  QMatrix action(const GroupPresentation& g, const Module& m) const;
  /// "1 + A + A^2 + A^3"
  std::string to_string() const;
};

/// Left Fox derivative d(word)/d(generator).
GroupRingElement fox_derivative(const GroupWord& word, const std::string& generator);

/// A 1-cocycle (derivation) on a presented group with values in a
/// symmetric-power module, recorded by its values on the generators.
class CocycleClass {
 public:
  /// Throws std::invalid_argument if the number of values does not match
  /// the generators or a value lies in the wrong module.
  CocycleClass(GroupName group, unsigned degree, Variant variant,
               std::vector<HomogeneousPoly> generator_values);

  /// The principal derivation g -> v - g.v.
  static CocycleClass principal(GroupName group, const HomogeneousPoly& v);

  GroupName group() const { return group_; }
  const GroupPresentation& presentation() const { return gammacoh::presentation(group_); }
  unsigned degree() const { return degree_; }
  Variant variant() const { return variant_; }
  const std::vector<HomogeneousPoly>& generator_values() const { return values_; }
  const HomogeneousPoly& value(std::string_view generator) const;

  /// Fox condition sum_g rho(d r / d g) f(g) for relator r; zero for cocycles.
  HomogeneousPoly relator_defect(const GroupWord& relator) const;
  bool satisfies_cocycle_conditions() const;

  /// Generator values concatenated in generator order.
  QVector flatten() const;

  CocycleClass operator+(const CocycleClass& o) const;
  CocycleClass scaled(const Rational& s) const;
  friend bool operator==(const CocycleClass&, const CocycleClass&) = default;

 private:
  GroupName group_;
  unsigned degree_;
  Variant variant_;
  std::vector<HomogeneousPoly> values_;
};

/// Value of the derivation at the element represented by `word`.
HomogeneousPoly derivation_value_on_word(const CocycleClass& c, const GroupWord& word);
/// Value at g, through a word decomposition.  Throws std::domain_error if g
/// is not in the group.
HomogeneousPoly derivation_value(const CocycleClass& c, const IntMatrix2& g);

/// Cocycles modulo coboundaries for a general module: the raw linear algebra
/// behind H^1, shared by the symmetric-power and coinduced computations.
struct CochainComplexData {
  std::size_t module_dimension = 0;
  /// Stacked Fox conditions; its kernel is Z^1.
  QMatrix fox_matrix;
  /// Columns are the principal derivations of the module basis vectors.
  QMatrix coboundary_matrix;
  std::vector<QVector> z1_basis;
  std::size_t dim_z1 = 0;
  std::size_t dim_b1 = 0;
  std::size_t dim_h1() const { return dim_z1 - dim_b1; }
};

CochainComplexData cochain_data(const GroupPresentation& g, const Module& m);
std::size_t h1_dimension(const GroupPresentation& g, const Module& m);
/// Basis of the invariants V^G for a general module.
std::vector<QVector> invariants(const GroupPresentation& g, const Module& m);

/// H^1 of a presented group with coefficients in Sym^k (standard or dual).
class CohomologySpace {
 public:
  GroupName group() const { return group_; }
  unsigned degree() const { return degree_; }
  Variant variant() const { return variant_; }
  std::size_t dimension() const { return basis_.size(); }
  const std::vector<CocycleClass>& basis() const { return basis_; }
  const QMatrix& coboundary_matrix() const { return coboundary_; }
  std::size_t dim_z1() const { return dim_z1_; }
  std::size_t dim_b1() const { return dim_b1_; }

  /// True if c is a principal derivation.
  bool is_coboundary(const CocycleClass& c) const;
  /// Coordinates of [c] in the basis.  Throws std::invalid_argument if c is
  /// not a cocycle for this module.
  QVector coordinates(const CocycleClass& c) const;

  friend CohomologySpace h1(GroupName g, unsigned degree, Variant variant);

 private:
  GroupName group_ = GroupName::SL2Z;
  unsigned degree_ = 0;
  Variant variant_ = Variant::dual;
  std::vector<CocycleClass> basis_;
  QMatrix coboundary_;
  std::size_t dim_z1_ = 0;
  std::size_t dim_b1_ = 0;
};

CohomologySpace h1(GroupName g, unsigned degree, Variant variant);
/// Basis of the invariants of the group on Sym^k.
std::vector<HomogeneousPoly> h0(GroupName g, unsigned degree, Variant variant);
/// Invariants of the cyclic group generated by g.
std::vector<HomogeneousPoly> cyclic_invariants(const IntMatrix2& g, unsigned degree, Variant variant);

/// Image of a class in H^1 of a cyclic subgroup.
struct CyclicRestriction {
  ElementKind kind = ElementKind::identity;
  /// f(g) itself.
  HomogeneousPoly value;
  /// Canonical representative of f(g) modulo (g - 1)V; zero for finite g.
  HomogeneousPoly reduced;
  /// dim V / (g - 1)V for infinite-order g, 0 otherwise.
  std::size_t coinvariant_dimension = 0;
  bool is_zero = true;
};

CyclicRestriction restrict_to_cyclic(const CocycleClass& c, const IntMatrix2& g);
/// Same, given the derivation value at g already.
CyclicRestriction restrict_value_to_cyclic(const IntMatrix2& g, const HomogeneousPoly& value);

/// cor(s_g^m cap g): the invariant s_g^m paired against restrictions to <g>.
struct DecomposableClass {
  IntMatrix2 gamma;
  unsigned power = 1;
  HomogeneousPoly value;
};

/// Throws std::invalid_argument for power 0.
DecomposableClass make_decomposable(const IntMatrix2& gamma, unsigned power);

/// <f(gamma), s_gamma^m>.  Throws std::invalid_argument on degree mismatch.
Rational pair_decomposable(const CocycleClass& c, const DecomposableClass& d);

/// Element of a word-metric ball, with the letter that reached it:
/// matrix = generator(letter)^exponent * parent.
struct BallElement {
  IntMatrix2 matrix;
  GroupWord word;
  unsigned length = 0;
  std::ptrdiff_t parent = -1;
  std::size_t generator = 0;
  int exponent = 0;
};

/// Breadth-first enumeration of products of at most `radius` generators
/// and inverses, deduplicated by matrix; the identity comes first.
std::vector<BallElement> enumerate_ball(const GroupPresentation& g, unsigned radius);

/// Derivation values of each class at each ball element;
/// result[e][i] = f_i(ball[e].matrix).
std::vector<std::vector<HomogeneousPoly>> derivation_values_on_ball(
    const std::vector<CocycleClass>& classes, const std::vector<BallElement>& ball);

struct SpanningCertificate {
  std::size_t rank = 0;
  std::size_t dim_h1 = 0;
  unsigned radius = 0;
  std::size_t enumerated = 0;
  /// Minimal set of elements whose decomposables achieve the rank.
  std::vector<IntMatrix2> detecting;
  bool full() const { return rank == dim_h1; }
};

/// Rank of the pairing between H^1(G; Sym^2m dual) and the decomposables
/// s_g^m over the ball of the given radius.
SpanningCertificate spanning_rank(GroupName g, unsigned m, unsigned radius);
/// Same, over an explicit list of elements.
SpanningCertificate spanning_rank_over(const CohomologySpace& space, unsigned m,
                                       const std::vector<IntMatrix2>& elements);

struct ClassDetection {
  std::size_t class_index = 0;
  std::optional<IntMatrix2> detecting_gamma;
  HomogeneousPoly value;  // reduced restriction at detecting_gamma
};

/// For each basis class, the first ball element with nonzero restriction,
/// scanning by word length and, within a length, positive-trace parabolics
/// before the rest (BFS order otherwise).
std::vector<ClassDetection> detect_classes(const CohomologySpace& space, unsigned radius);

struct CuspRestriction {
  CuspClass cusp;
  std::size_t coinvariant_dimension = 0;
  std::size_t restriction_rank = 0;
};

struct ParabolicAnalysis {
  std::size_t dim_h1 = 0;
  std::vector<CuspRestriction> cusps;
  std::size_t combined_rank = 0;
  std::size_t dim_parabolic = 0;
  bool each_cusp_one_dimensional() const;
  bool surjective() const { return combined_rank == cusps.size(); }
};

/// Restriction of H^1(G; Sym^2m dual) to the cusp stabilizers.
ParabolicAnalysis parabolic_analysis(GroupName g, unsigned m);

/// dim H^1(SL2(Z); coinduced Sym^k) = dim H^1(theta; Sym^k).
std::size_t shapiro_h1(unsigned degree, Variant variant);

}  // namespace gammacoh
