#pragma once

#include <functional>
#include <string>
#include <vector>

#include "gammacoh/modular_group.hpp"
#include "gammacoh/qmatrix.hpp"
#include "gammacoh/rational.hpp"

namespace gammacoh {

/// Which of the two polynomial modules a polynomial lives in.
///
/// standard: variables x, y with  g.f(x, y) = f(ax + cy, bx + dy).
/// dual:     variables ex, ey with g.f(ex, ey) = f(d ex - b ey, -c ex + a ey).
enum class Variant { standard, dual };

std::string to_string(Variant v);
/// Accepts "standard" / "dual" (and "trivial", which maps to dual).
Variant parse_variant(std::string_view text);

/// Homogeneous polynomial of degree k in two variables.  coefficients[p] is
/// the coefficient of X^(k-p) Y^p, i.e. descending in the first variable.
class HomogeneousPoly {
 public:
  HomogeneousPoly() = default;
  HomogeneousPoly(unsigned degree, Variant variant);
  HomogeneousPoly(unsigned degree, Variant variant, QVector coefficients);

  /// X^(degree - p) Y^p
  static HomogeneousPoly monomial(unsigned degree, Variant variant, unsigned p,
                                  const Rational& c = 1);
  /// The first variable (x or ex).
  static HomogeneousPoly first(Variant variant) { return monomial(1, variant, 0); }
  /// The second variable (y or ey).
  static HomogeneousPoly second(Variant variant) { return monomial(1, variant, 1); }

  unsigned degree() const { return degree_; }
  Variant variant() const { return variant_; }
  const QVector& coefficients() const { return coeffs_; }
  const Rational& coefficient(unsigned p) const { return coeffs_.at(p); }
  bool is_zero() const;

  HomogeneousPoly& operator+=(const HomogeneousPoly& o);
  HomogeneousPoly& operator-=(const HomogeneousPoly& o);
  friend HomogeneousPoly operator+(HomogeneousPoly a, const HomogeneousPoly& b) { return a += b; }
  friend HomogeneousPoly operator-(HomogeneousPoly a, const HomogeneousPoly& b) { return a -= b; }
  HomogeneousPoly operator-() const;
  HomogeneousPoly scaled(const Rational& s) const;
  friend HomogeneousPoly operator*(const HomogeneousPoly& a, const HomogeneousPoly& b);
  HomogeneousPoly pow(unsigned m) const;

  friend bool operator==(const HomogeneousPoly&, const HomogeneousPoly&) = default;

  /// Monomial key in the serialized form, e.g. "ex^2*ey^1", "x^3", "1".
  static std::string monomial_key(unsigned degree, Variant variant, unsigned p);
  /// Human-readable form in descending order, e.g. "-ex^2 + 2*ex*ey"; "0".
  std::string to_string() const;

 private:
  unsigned degree_ = 0;
  Variant variant_ = Variant::dual;
  QVector coeffs_{Rational(0)};
};

/// Matrix of g on the degree-k module; column p is the image of the basis
/// monomial p.
QMatrix action_matrix(const IntMatrix2& g, unsigned degree, Variant variant);

HomogeneousPoly act(const IntMatrix2& g, const HomogeneousPoly& f);

/// b x^2 + (d - a) x y - c y^2, invariant under g.
HomogeneousPoly s_gamma(const IntMatrix2& g);

/// Invariant pairing <ex^i ey^(k-i), x^j y^(k-j)> = delta_ij i!(k-i)!/k!.
/// Throws std::invalid_argument unless w is dual, v is standard and the
/// degrees agree.
Rational pairing(const HomogeneousPoly& w, const HomogeneousPoly& v);

/// Single-term polynomial c * var^degree (images of the specializations).
struct UnivariateTerm {
  std::string variable;
  unsigned degree = 0;
  Rational coefficient;

  bool is_zero() const { return coefficient.is_zero(); }
  /// "e^2", "-ex^4", "0"
  std::string to_string() const;
  friend bool operator==(const UnivariateTerm&, const UnivariateTerm&) = default;
};

/// ex, ey -> e.  Throws std::invalid_argument for standard polynomials.
UnivariateTerm delta_star(const HomogeneousPoly& f);
/// ey -> 0.  Throws std::invalid_argument for standard polynomials.
UnivariateTerm pr_x(const HomogeneousPoly& f);

/// A finite-dimensional Q-representation of SL2(Z) (or of a subgroup),
/// given by its action matrices.
class Module {
 public:
  using ActionFn = std::function<QMatrix(const IntMatrix2&)>;
  Module(std::string label, std::size_t dimension, ActionFn action);

  const std::string& label() const { return label_; }
  std::size_t dimension() const { return dim_; }
  QMatrix action(const IntMatrix2& g) const { return action_(g); }

 private:
  std::string label_;
  std::size_t dim_;
  ActionFn action_;
};

Module symmetric_power_module(unsigned degree, Variant variant);

/// Coinduction from the theta subgroup to SL2(Z).  Elements are tuples of
/// polynomials F(r_i), one per right coset representative r_i, with
/// (g.F)(r_i) = h.F(r_j) where r_i g = h r_j and h lies in the subgroup.
class CoinducedModule {
 public:
  /// Throws std::invalid_argument unless the three representatives lie in
  /// pairwise distinct right cosets of the theta subgroup.
  CoinducedModule(unsigned degree, Variant variant, std::vector<IntMatrix2> coset_reps);
  /// Representatives I, T, L.
  static CoinducedModule with_default_cosets(unsigned degree, Variant variant);

  unsigned degree() const { return degree_; }
  Variant variant() const { return variant_; }
  const std::vector<IntMatrix2>& coset_representatives() const { return reps_; }
  std::size_t dimension() const { return reps_.size() * (degree_ + 1); }

  QMatrix action_matrix(const IntMatrix2& g) const;
  /// Components are the blocks of `element`, one polynomial per coset.
  std::vector<HomogeneousPoly> act(const IntMatrix2& g,
                                   const std::vector<HomogeneousPoly>& element) const;
  Module as_module() const;

 private:
  std::size_t coset_of(const IntMatrix2& x) const;

  unsigned degree_;
  Variant variant_;
  std::vector<IntMatrix2> reps_;
};

}  // namespace gammacoh
