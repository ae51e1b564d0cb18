#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "gammacoh/rational.hpp"

namespace gammacoh {

/// 2x2 integer matrix of determinant 1, row-major (a b; c d).
class IntMatrix2 {
 public:
  /// The identity.
  IntMatrix2();
  /// Throws std::invalid_argument unless ad - bc = 1.
  IntMatrix2(Integer a, Integer b, Integer c, Integer d);

  static IntMatrix2 identity() { return {}; }
  /// Parses the literal "a,b;c,d".  Throws std::invalid_argument on syntax
  /// errors or when the determinant is not 1.
  static IntMatrix2 parse(std::string_view text);

  const Integer& a() const { return a_; }
  const Integer& b() const { return b_; }
  const Integer& c() const { return c_; }
  const Integer& d() const { return d_; }

  Integer trace() const { return a_ + d_; }
  IntMatrix2 inverse() const;
  IntMatrix2 operator-() const;
  IntMatrix2 pow(long e) const;

  bool is_identity() const;
  bool is_minus_identity() const;

  friend IntMatrix2 operator*(const IntMatrix2& x, const IntMatrix2& y);
  friend bool operator==(const IntMatrix2& x, const IntMatrix2& y);

  /// "a,b;c,d"
  std::string to_string() const;

 private:
  struct Unchecked {};
  IntMatrix2(Unchecked, Integer a, Integer b, Integer c, Integer d);

  Integer a_, b_, c_, d_;
};

struct IntMatrix2Hash {
  std::size_t operator()(const IntMatrix2& m) const;
};

namespace generators {
/// (0 1; -1 0)
IntMatrix2 alpha();
/// (0 1; -1 1)
IntMatrix2 beta();
/// (1 1; 0 1)
IntMatrix2 T();
/// (0 -1; 1 0)
IntMatrix2 S();
/// (1 2; 0 1)
IntMatrix2 U();
/// (1 0; 1 1)
IntMatrix2 L();
}  // namespace generators

enum class ElementKind { identity, minus_identity, elliptic, parabolic, hyperbolic };

std::string to_string(ElementKind k);
ElementKind classify(const IntMatrix2& g);

/// Each row contains exactly one odd entry.
bool theta_member(const IntMatrix2& g);

/// Membership in the group of matrices realised by orientation-preserving
/// self-equivalences of a d-fold product of n-spheres: det 1, and for n
/// outside {1, 3, 7} every row has exactly one odd entry.
bool gamma_d_member(const std::vector<std::vector<Integer>>& m, unsigned n);

struct Letter {
  std::string generator;
  long exponent = 0;
  friend bool operator==(const Letter&, const Letter&) = default;
};

/// Freely reduced word in named generators.
class GroupWord {
 public:
  GroupWord() = default;
  explicit GroupWord(const std::vector<Letter>& letters);

  /// Parses "B^-1*A", "S^2*U", "" (empty word) or "1".
  static GroupWord parse(std::string_view text);

  const std::vector<Letter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  std::size_t length() const;

  /// Appends with free reduction.
  void append(const std::string& generator, long exponent);
  void append(const GroupWord& other);
  GroupWord inverse() const;

  friend GroupWord operator*(GroupWord a, const GroupWord& b) {
    a.append(b);
    return a;
  }
  friend bool operator==(const GroupWord&, const GroupWord&) = default;

  /// "B^-1*A"; the empty word prints as "1".
  std::string to_string() const;

 private:
  std::vector<Letter> letters_;
};

enum class GroupName { SL2Z, Theta };

std::string to_string(GroupName g);
/// Accepts "sl2z" / "theta" (case-insensitive).
GroupName parse_group_name(std::string_view text);

struct Generator {
  std::string name;
  IntMatrix2 matrix;
};

/// Finite presentation of SL2(Z) or of the theta subgroup, with the
/// generator images in SL2(Z).
class GroupPresentation {
 public:
  GroupName name() const { return name_; }
  const std::vector<Generator>& generators() const { return generators_; }
  const std::vector<GroupWord>& relators() const { return relators_; }

  /// Index of a generator by name; throws std::invalid_argument if unknown.
  std::size_t generator_index(std::string_view name) const;
  const IntMatrix2& generator_matrix(std::string_view name) const;

  bool contains(const IntMatrix2& g) const;
  /// A word in the generators evaluating to g.  Throws std::domain_error if
  /// g is not in the group.
  GroupWord word_for(const IntMatrix2& g) const;

  friend GroupPresentation sl2z_presentation();
  friend GroupPresentation theta_presentation();

 private:
  GroupName name_ = GroupName::SL2Z;
  std::vector<Generator> generators_;
  std::vector<GroupWord> relators_;
};

/// <A, B | A^4, A^2 B^-3> with A = (0 1; -1 0), B = (0 1; -1 1).
GroupPresentation sl2z_presentation();
/// <S, U, Z | S^4, S^2 U S^-2 U^-1, Z^-1 S^2> with S = (0 -1; 1 0),
/// U = (1 2; 0 1), Z = -I.
GroupPresentation theta_presentation();
const GroupPresentation& presentation(GroupName g);

/// Product of generator images.  Throws std::invalid_argument for a letter
/// that is not a generator of `g`.
IntMatrix2 evaluate_word(const GroupWord& w, const GroupPresentation& g);

/// Word over {A, B} by continued-fraction reduction.
GroupWord sl2z_word(const IntMatrix2& g);
/// Word over {S, U, Z}.  Throws std::domain_error for non-members.
GroupWord theta_word(const IntMatrix2& g);

/// Representatives r_i of the right cosets (group) r_i in SL2(Z), found by
/// breadth-first search over right multiplication by T and L; the identity
/// comes first.
std::vector<IntMatrix2> right_coset_representatives(const GroupPresentation& g);
/// Index of the right coset of x among `reps`.
std::size_t right_coset_index(const GroupPresentation& g, const std::vector<IntMatrix2>& reps,
                              const IntMatrix2& x);

struct CuspClass {
  /// Primitive pair [p:q] with a nonnegative first nonzero coordinate.
  Integer p, q;
  /// Positive-trace generator of the stabilizer, normalized so that c > 0,
  /// or c = 0 and b > 0.
  IntMatrix2 stabilizer_generator;
  unsigned width = 1;
};

/// One class per orbit of the group on P^1(Q).
std::vector<CuspClass> cusp_orbits(const GroupPresentation& g);

}  // namespace gammacoh
