#include "gammacoh/qmatrix.hpp"

#include <stdexcept>
#include <utility>

namespace gammacoh {

QMatrix::QMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

QMatrix QMatrix::from_rows(const std::vector<QVector>& rows) {
  if (rows.empty()) return {};
  QMatrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_) throw std::invalid_argument("QMatrix::from_rows: ragged rows");
    for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

QMatrix QMatrix::from_columns(std::size_t rows, const std::vector<QVector>& cols) {
  QMatrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw std::invalid_argument("QMatrix::from_columns: bad length");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QVector QMatrix::row(std::size_t r) const {
  return QVector(entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                 entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

QVector QMatrix::column(std::size_t c) const {
  QVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

QMatrix QMatrix::transpose() const {
  QMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool QMatrix::is_zero() const {
  for (const auto& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

void QMatrix::set_block(std::size_t r0, std::size_t c0, const QMatrix& block) {
  if (r0 + block.rows_ > rows_ || c0 + block.cols_ > cols_)
    throw std::out_of_range("QMatrix::set_block");
  for (std::size_t r = 0; r < block.rows_; ++r)
    for (std::size_t c = 0; c < block.cols_; ++c) (*this)(r0 + r, c0 + c) = block(r, c);
}

void QMatrix::add_block(std::size_t r0, std::size_t c0, const QMatrix& block) {
  if (r0 + block.rows_ > rows_ || c0 + block.cols_ > cols_)
    throw std::out_of_range("QMatrix::add_block");
  for (std::size_t r = 0; r < block.rows_; ++r)
    for (std::size_t c = 0; c < block.cols_; ++c) (*this)(r0 + r, c0 + c) += block(r, c);
}

QMatrix QMatrix::stack(const QMatrix& top, const QMatrix& bottom) {
  if (top.rows_ == 0) return bottom;
  if (bottom.rows_ == 0) return top;
  if (top.cols_ != bottom.cols_) throw std::invalid_argument("QMatrix::stack: column mismatch");
  QMatrix m(top.rows_ + bottom.rows_, top.cols_);
  m.set_block(0, 0, top);
  m.set_block(top.rows_, 0, bottom);
  return m;
}

QMatrix QMatrix::concat(const QMatrix& left, const QMatrix& right) {
  if (left.cols_ == 0) return right;
  if (right.cols_ == 0) return left;
  if (left.rows_ != right.rows_) throw std::invalid_argument("QMatrix::concat: row mismatch");
  QMatrix m(left.rows_, left.cols_ + right.cols_);
  m.set_block(0, 0, left);
  m.set_block(0, left.cols_, right);
  return m;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("QMatrix product: dimension mismatch");
  QMatrix p(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (!b(k, j).is_zero()) p(i, j) += aik * b(k, j);
    }
  return p;
}

QVector operator*(const QMatrix& a, const QVector& v) {
  if (a.cols_ != v.size()) throw std::invalid_argument("QMatrix*vector: dimension mismatch");
  QVector out(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k)
      if (!v[k].is_zero() && !a(i, k).is_zero()) out[i] += a(i, k) * v[k];
  return out;
}

QMatrix operator+(const QMatrix& a, const QMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("QMatrix sum: shape");
  QMatrix s = a;
  for (std::size_t i = 0; i < s.entries_.size(); ++i) s.entries_[i] += b.entries_[i];
  return s;
}

QMatrix operator-(const QMatrix& a, const QMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("QMatrix diff: shape");
  QMatrix s = a;
  for (std::size_t i = 0; i < s.entries_.size(); ++i) s.entries_[i] -= b.entries_[i];
  return s;
}

QMatrix QMatrix::scaled(const Rational& s) const {
  QMatrix m = *this;
  for (auto& e : m.entries_) e *= s;
  return m;
}

RrefResult rref(const QMatrix& input) {
  RrefResult out{input, 0, {}};
  QMatrix& m = out.matrix;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    // Smallest-height nonzero entry keeps intermediate growth down; the
    // reduced form itself does not depend on this choice.
    std::size_t best = rows;
    for (std::size_t i = r; i < rows; ++i) {
      if (m(i, c).is_zero()) continue;
      if (best == rows || m(i, c).height() < m(best, c).height()) best = i;
    }
    if (best == rows) continue;
    if (best != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(r, j), m(best, j));
    const Rational inv = Rational(1) / m(r, c);
    for (std::size_t j = c; j < cols; ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      const Rational f = m(i, c);
      for (std::size_t j = c; j < cols; ++j)
        if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.rank = r;
  return out;
}

std::size_t rank(const QMatrix& m) { return rref(m).rank; }

std::vector<QVector> kernel_basis(const QMatrix& m) {
  const RrefResult red = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : red.pivots) is_pivot[p] = true;
  std::vector<QVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    QVector v(m.cols());
    v[free] = 1;
    for (std::size_t i = 0; i < red.pivots.size(); ++i) v[red.pivots[i]] = -red.matrix(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

SolveResult solve(const QMatrix& m, const QVector& b) {
  if (b.size() != m.rows())
    throw std::invalid_argument("solve: right-hand side length does not match row count");
  QMatrix aug(m.rows(), m.cols() + 1);
  aug.set_block(0, 0, m);
  for (std::size_t i = 0; i < m.rows(); ++i) aug(i, m.cols()) = b[i];
  const RrefResult red = rref(aug);
  if (!red.pivots.empty() && red.pivots.back() == m.cols()) return {false, {}};
  SolveResult res{true, QVector(m.cols())};
  for (std::size_t i = 0; i < red.pivots.size(); ++i)
    res.solution[red.pivots[i]] = red.matrix(i, m.cols());
  return res;
}

Rational determinant(const QMatrix& input) {
  if (input.rows() != input.cols()) throw std::invalid_argument("determinant: matrix not square");
  QMatrix m = input;
  const std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c).is_zero()) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c).is_zero()) continue;
      const Rational f = m(i, c) / m(c, c);
      for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

SubspaceReducer::SubspaceReducer(std::size_t ambient_dim, const std::vector<QVector>& spanning)
    : ambient_(ambient_dim) {
  if (spanning.empty()) return;
  const RrefResult red = rref(QMatrix::from_rows(spanning));
  for (std::size_t i = 0; i < red.rank; ++i) {
    rows_.push_back(red.matrix.row(i));
    pivots_.push_back(red.pivots[i]);
  }
}

SubspaceReducer SubspaceReducer::column_space(const QMatrix& m) {
  std::vector<QVector> cols;
  cols.reserve(m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c) cols.push_back(m.column(c));
  return SubspaceReducer(m.rows(), cols);
}

QVector SubspaceReducer::reduce(QVector v) const {
  if (v.size() != ambient_) throw std::invalid_argument("SubspaceReducer::reduce: bad length");
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Rational f = v[pivots_[i]];
    if (f.is_zero()) continue;
    for (std::size_t j = 0; j < ambient_; ++j)
      if (!rows_[i][j].is_zero()) v[j] -= f * rows_[i][j];
  }
  return v;
}

bool SubspaceReducer::contains(const QVector& v) const { return is_zero(reduce(v)); }

bool SubspaceReducer::insert(const QVector& v) {
  QVector r = reduce(v);
  std::size_t pivot = 0;
  while (pivot < r.size() && r[pivot].is_zero()) ++pivot;
  if (pivot == r.size()) return false;
  const Rational inv = Rational(1) / r[pivot];
  for (auto& e : r) e *= inv;
  // Rows carry a 1 at their own pivot and 0 at every other pivot, so the
  // order of rows_ does not matter to reduce().
  for (auto& row : rows_) {
    const Rational f = row[pivot];
    if (f.is_zero()) continue;
    for (std::size_t j = 0; j < ambient_; ++j)
      if (!r[j].is_zero()) row[j] -= f * r[j];
  }
  rows_.push_back(std::move(r));
  pivots_.push_back(pivot);
  return true;
}

bool is_zero(const QVector& v) {
  for (const auto& e : v)
    if (!e.is_zero()) return false;
  return true;
}

QVector add(const QVector& a, const QVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector add: length mismatch");
  QVector r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

QVector subtract(const QVector& a, const QVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector subtract: length mismatch");
  QVector r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

QVector scale(const QVector& a, const Rational& s) {
  QVector r = a;
  for (auto& e : r) e *= s;
  return r;
}

Rational dot(const QVector& a, const QVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
  Rational s;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace gammacoh
