#pragma once

#include <gmpxx.h>

#include <compare>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace gammacoh {

using Integer = mpz_class;

/// Exact rational number, always stored reduced with a positive denominator.
///
/// Thin value wrapper over GMP's mpq_class.  Every mutating operation
/// re-canonicalizes, so structural equality is numeric equality.
class Rational {
 public:
  Rational() = default;
  Rational(long n) : value_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(int n) : value_(n) {}   // NOLINT(google-explicit-constructor)
  explicit Rational(const Integer& n) : value_(n) {}
  Rational(const Integer& num, const Integer& den);

  /// Parses "p", "-p" or "p/q" (q != 0).  Throws std::invalid_argument.
  static Rational parse(std::string_view text);

  Integer numerator() const { return value_.get_num(); }
  Integer denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  /// Bit length of numerator plus denominator; used to pick cheap pivots.
  std::size_t height() const;

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  /// Throws std::domain_error on division by zero.
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) {
    return cmp(a.value_, b.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.value_, b.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  /// "p/q" with q > 0, or "p" when q == 1.
  std::string to_string() const;

  const mpq_class& raw() const { return value_; }

 private:
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

using QVector = std::vector<Rational>;

Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);

/// Parses a decimal integer literal (optional sign).  Throws std::invalid_argument.
Integer parse_integer(std::string_view text);

}  // namespace gammacoh
