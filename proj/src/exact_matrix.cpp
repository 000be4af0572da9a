#include "g2hol/exact_matrix.hpp"

#include <numeric>
#include <sstream>
#include <utility>

namespace g2hol {

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols, std::vector<QSqrt2> entries)
    : rows_(rows), cols_(cols), e_(std::move(entries)) {
  if (e_.size() != rows * cols) throw DimensionMismatch("entry count does not match shape");
}

ExactMatrix ExactMatrix::identity(std::size_t n) {
  ExactMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

ExactMatrix ExactMatrix::column(const std::vector<QSqrt2>& v) { return ExactMatrix(v.size(), 1, v); }

bool ExactMatrix::is_zero() const {
  for (const auto& x : e_)
    if (!x.is_zero()) return false;
  return true;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

ExactMatrix& ExactMatrix::operator+=(const ExactMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix sum: shape mismatch");
  for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
  return *this;
}

ExactMatrix& ExactMatrix::operator-=(const ExactMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix difference: shape mismatch");
  for (std::size_t i = 0; i < e_.size(); ++i) e_[i] -= o.e_[i];
  return *this;
}

ExactMatrix& ExactMatrix::operator*=(const QSqrt2& s) {
  for (auto& x : e_) x *= s;
  return *this;
}

ExactMatrix ExactMatrix::operator-() const {
  ExactMatrix m = *this;
  for (auto& x : m.e_) x = -x;
  return m;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product: inner dimensions differ");
  ExactMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const QSqrt2& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (!b(k, j).is_zero()) c(i, j) += aik * b(k, j);
    }
  return c;
}

std::string ExactMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j).to_string();
    os << "]";
  }
  os << "]";
  return os.str();
}

ExactMatrix commutator(const ExactMatrix& x, const ExactMatrix& y) { return x * y - y * x; }

namespace {

// Gauss-Jordan with full pivoting over the first `ncols` columns of `m`;
// trailing columns (a right-hand side) are carried along.
struct Elimination {
  ExactMatrix m;
  std::vector<std::size_t> perm;        // position -> original column
  std::size_t rank = 0;
};

Elimination eliminate(ExactMatrix m, std::size_t ncols) {
  Elimination el;
  el.perm.resize(ncols);
  std::iota(el.perm.begin(), el.perm.end(), 0);
  const std::size_t rows = m.rows(), total = m.cols();
  std::size_t r = 0;
  for (; r < rows && r < ncols; ++r) {
    std::size_t pr = rows, pc = ncols;
    for (std::size_t i = r; i < rows && pr == rows; ++i)
      for (std::size_t j = r; j < ncols; ++j)
        if (!m(i, el.perm[j]).is_zero()) {
          pr = i;
          pc = j;
          break;
        }
    if (pr == rows) break;
    std::swap(el.perm[r], el.perm[pc]);
    if (pr != r)
      for (std::size_t j = 0; j < total; ++j) std::swap(m(r, j), m(pr, j));
    const std::size_t col = el.perm[r];
    QSqrt2 inv = *m(r, col).inverse();
    for (std::size_t j = 0; j < total; ++j)
      if (!m(r, j).is_zero()) m(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m(i, col).is_zero()) continue;
      QSqrt2 f = m(i, col);
      for (std::size_t j = 0; j < total; ++j)
        if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
    }
  }
  el.rank = r;
  el.m = std::move(m);
  return el;
}

}  // namespace

std::size_t rank_exact(const ExactMatrix& m) { return eliminate(m, m.cols()).rank; }

std::vector<ExactMatrix> kernel_basis(const ExactMatrix& m) {
  Elimination el = eliminate(m, m.cols());
  std::vector<ExactMatrix> basis;
  for (std::size_t f = el.rank; f < m.cols(); ++f) {
    ExactMatrix v(m.cols(), 1);
    const std::size_t fc = el.perm[f];
    v(fc, 0) = 1;
    for (std::size_t r = 0; r < el.rank; ++r) v(el.perm[r], 0) = -el.m(r, fc);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<ExactMatrix> solve_exact(const ExactMatrix& m, const ExactMatrix& rhs) {
  if (rhs.rows() != m.rows()) throw DimensionMismatch("solve_exact: rhs row count differs from matrix");
  const std::size_t n = m.cols(), k = rhs.cols();
  ExactMatrix aug(m.rows(), n + k);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    for (std::size_t j = 0; j < k; ++j) aug(i, n + j) = rhs(i, j);
  }
  Elimination el = eliminate(std::move(aug), n);
  for (std::size_t i = el.rank; i < m.rows(); ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (!el.m(i, n + j).is_zero()) return std::nullopt;
  ExactMatrix x(n, k);
  for (std::size_t r = 0; r < el.rank; ++r)
    for (std::size_t j = 0; j < k; ++j) x(el.perm[r], j) = el.m(r, n + j);
  return x;
}

std::vector<QSqrt2> LinearSpan::reduce(std::vector<QSqrt2> v) const {
  if (v.size() != n_) throw DimensionMismatch("LinearSpan: vector length differs from ambient dimension");
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const QSqrt2 f = v[pivots_[i]];
    if (f.is_zero()) continue;
    const auto& row = rows_[i];
    for (std::size_t j = 0; j < n_; ++j)
      if (!row[j].is_zero()) v[j] -= f * row[j];
  }
  return v;
}

bool LinearSpan::contains(const std::vector<QSqrt2>& v) const {
  for (const auto& x : reduce(v))
    if (!x.is_zero()) return false;
  return true;
}

bool LinearSpan::insert(const std::vector<QSqrt2>& v) {
  std::vector<QSqrt2> w = reduce(v);
  std::size_t p = n_;
  for (std::size_t j = 0; j < n_; ++j)
    if (!w[j].is_zero()) {
      p = j;
      break;
    }
  if (p == n_) return false;
  QSqrt2 inv = *w[p].inverse();
  for (auto& x : w)
    if (!x.is_zero()) x *= inv;
  // keep existing rows reduced against the new pivot
  for (auto& row : rows_) {
    const QSqrt2 f = row[p];
    if (f.is_zero()) continue;
    for (std::size_t j = 0; j < n_; ++j)
      if (!w[j].is_zero()) row[j] -= f * w[j];
  }
  rows_.push_back(std::move(w));
  pivots_.push_back(p);
  return true;
}

}  // namespace g2hol
