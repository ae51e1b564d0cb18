#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "gammacoh/rational.hpp"

namespace gammacoh {

/// Dense row-major matrix over the rationals.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols);
  /// Throws std::invalid_argument if the rows are ragged.
  static QMatrix from_rows(const std::vector<QVector>& rows);
  static QMatrix from_columns(std::size_t rows, const std::vector<QVector>& cols);
  static QMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  QVector row(std::size_t r) const;
  QVector column(std::size_t c) const;
  const std::vector<Rational>& entries() const { return entries_; }

  QMatrix transpose() const;
  bool is_zero() const;

  /// Copies `block` into this matrix with its top-left corner at (r0, c0).
  void set_block(std::size_t r0, std::size_t c0, const QMatrix& block);
  /// Adds `block` into this matrix at (r0, c0).
  void add_block(std::size_t r0, std::size_t c0, const QMatrix& block);

  /// Vertical concatenation; column counts must agree.
  static QMatrix stack(const QMatrix& top, const QMatrix& bottom);
  /// Horizontal concatenation; row counts must agree.
  static QMatrix concat(const QMatrix& left, const QMatrix& right);

  friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
  friend QVector operator*(const QMatrix& a, const QVector& v);
  friend QMatrix operator+(const QMatrix& a, const QMatrix& b);
  friend QMatrix operator-(const QMatrix& a, const QMatrix& b);
  QMatrix scaled(const Rational& s) const;

  friend bool operator==(const QMatrix& a, const QMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

struct RrefResult {
  QMatrix matrix;
  std::size_t rank = 0;
  /// Column index of the leading entry of each nonzero row, ascending.
  std::vector<std::size_t> pivots;
};

RrefResult rref(const QMatrix& m);
std::size_t rank(const QMatrix& m);

/// Basis of the right null space in canonical RREF form: one vector per free
/// column (ascending), with a 1 in that column and minus the pivot-row
/// coefficients in the pivot columns.
std::vector<QVector> kernel_basis(const QMatrix& m);

struct SolveResult {
  bool consistent = false;
  /// A particular solution (free variables set to zero) when consistent.
  QVector solution;
};

/// Solves m * x = b.  Throws std::invalid_argument if b.size() != m.rows();
/// an inconsistent system is reported through SolveResult::consistent.
SolveResult solve(const QMatrix& m, const QVector& b);

Rational determinant(const QMatrix& m);

/// Echelon basis of a subspace of Q^n, used to reduce vectors to a canonical
/// representative modulo the subspace.
class SubspaceReducer {
 public:
  SubspaceReducer(std::size_t ambient_dim, const std::vector<QVector>& spanning);
  /// Column space of `m`.
  static SubspaceReducer column_space(const QMatrix& m);

  std::size_t dimension() const { return rows_.size(); }
  std::size_t ambient_dimension() const { return ambient_; }
  /// Canonical representative of v + W: zero in every pivot coordinate.
  QVector reduce(QVector v) const;
  bool contains(const QVector& v) const;
  /// Adds v to the subspace; returns false if it was already contained.
  bool insert(const QVector& v);

 private:
  std::size_t ambient_;
  std::vector<QVector> rows_;
  std::vector<std::size_t> pivots_;
};

bool is_zero(const QVector& v);
QVector add(const QVector& a, const QVector& b);
QVector subtract(const QVector& a, const QVector& b);
QVector scale(const QVector& a, const Rational& s);
Rational dot(const QVector& a, const QVector& b);

}  // namespace gammacoh
