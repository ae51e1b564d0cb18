#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gammacoh/rational.hpp"

namespace gammacoh {

/// Signed permutation of {1..d}: image[j-1] = +-k means e_j -> +-e_k.
struct SignedPermutation {
  std::vector<int> image;

  std::size_t size() const { return image.size(); }
  /// Determinant of the signed permutation matrix.
  int determinant() const;
  /// (this o other)(j) = this(other(j)).
  SignedPermutation compose(const SignedPermutation& other) const;
  static SignedPermutation identity(std::size_t d);
  bool valid() const;
};

/// Polynomial in the Euler classes e_1..e_d and Pontryagin classes p_{j,i}
/// (j = 1..floor(n/2), i = 1..d) of a d-fold product of BSO(n+1).
///
/// Graded with |e_i| = n + 1 and |p_{j,i}| = 4j.  Products are truncated at
/// a total-degree cap, 4(n+1) unless set otherwise.
class EulerPontryaginPoly {
 public:
  using Exponents = std::vector<unsigned>;

  /// Throws std::invalid_argument unless d >= 1 and n is odd.
  EulerPontryaginPoly(unsigned d, unsigned n);
  EulerPontryaginPoly(unsigned d, unsigned n, unsigned degree_cap);

  static EulerPontryaginPoly euler(unsigned d, unsigned n, unsigned i);
  static EulerPontryaginPoly pontryagin(unsigned d, unsigned n, unsigned j, unsigned i);
  static EulerPontryaginPoly constant(unsigned d, unsigned n, const Rational& c);

  unsigned factors() const { return d_; }
  unsigned sphere_dimension() const { return n_; }
  unsigned pontryagin_count() const { return n_ / 2; }
  unsigned degree_cap() const { return cap_; }
  std::size_t variable_count() const { return d_ + pontryagin_count() * d_; }
  const std::map<Exponents, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Index of e_i (1-based i) and p_{j,i} in the exponent vector.
  std::size_t euler_index(unsigned i) const;
  std::size_t pontryagin_index(unsigned j, unsigned i) const;
  unsigned weighted_degree(const Exponents& e) const;

  void add_term(const Exponents& e, const Rational& c);

  EulerPontryaginPoly& operator+=(const EulerPontryaginPoly& o);
  friend EulerPontryaginPoly operator+(EulerPontryaginPoly a, const EulerPontryaginPoly& b) {
    return a += b;
  }
  EulerPontryaginPoly scaled(const Rational& s) const;
  friend EulerPontryaginPoly operator*(const EulerPontryaginPoly& a, const EulerPontryaginPoly& b);
  friend bool operator==(const EulerPontryaginPoly& a, const EulerPontryaginPoly& b);

  /// Ring endomorphism sending each variable to the given polynomial.
  EulerPontryaginPoly substitute(const std::vector<EulerPontryaginPoly>& images) const;

  /// Drops every term involving a Pontryagin class.
  EulerPontryaginPoly euler_part() const;

  std::string to_string() const;

 private:
  void check_compatible(const EulerPontryaginPoly& o) const;

  unsigned d_;
  unsigned n_;
  unsigned cap_;
  std::map<Exponents, Rational> terms_;
};

/// e_j -> (-1)^s(j) e_|sigma(j)|, p_{j,i} -> p_{j,|sigma(i)|}.  Throws
/// std::invalid_argument if det(sigma) = -1 or the size differs from d.
EulerPontryaginPoly sigma_act(const SignedPermutation& sigma, const EulerPontryaginPoly& f);

/// Dual action of the transvection I + power * E_ij (power 1 or 2) on the
/// Euler classes, e_i -> e_i - power * e_j; Pontryagin classes are fixed.
/// Throws std::invalid_argument if i == j or an index is out of range.
EulerPontryaginPoly transvection_act(unsigned i, unsigned j, int power, const EulerPontryaginPoly& f);

}  // namespace gammacoh
