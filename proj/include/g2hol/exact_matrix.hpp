#pragma once

#include "g2hol/qsqrt2.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace g2hol {

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Dense row-major matrix over Q(sqrt2).
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}
  ExactMatrix(std::size_t rows, std::size_t cols, std::vector<QSqrt2> entries);

  static ExactMatrix identity(std::size_t n);
  static ExactMatrix column(const std::vector<QSqrt2>& v);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  QSqrt2& operator()(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
  const QSqrt2& operator()(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }
  const std::vector<QSqrt2>& entries() const { return e_; }

  bool is_zero() const;
  ExactMatrix transpose() const;

  ExactMatrix& operator+=(const ExactMatrix& o);
  ExactMatrix& operator-=(const ExactMatrix& o);
  ExactMatrix& operator*=(const QSqrt2& s);
  ExactMatrix operator-() const;

  friend ExactMatrix operator+(ExactMatrix a, const ExactMatrix& b) { return a += b; }
  friend ExactMatrix operator-(ExactMatrix a, const ExactMatrix& b) { return a -= b; }
  friend ExactMatrix operator*(ExactMatrix a, const QSqrt2& s) { return a *= s; }
  friend ExactMatrix operator*(const QSqrt2& s, ExactMatrix a) { return a *= s; }
  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<QSqrt2> e_;
};

ExactMatrix commutator(const ExactMatrix& x, const ExactMatrix& y);

std::size_t rank_exact(const ExactMatrix& m);
// Columns spanning {v : m v = 0}; one per free column after elimination.
std::vector<ExactMatrix> kernel_basis(const ExactMatrix& m);
// A solution X of m X = rhs, or nullopt when inconsistent. Free unknowns are 0.
std::optional<ExactMatrix> solve_exact(const ExactMatrix& m, const ExactMatrix& rhs);

// Incrementally maintained reduced echelon basis of a subspace of Q(sqrt2)^n.
class LinearSpan {
 public:
  explicit LinearSpan(std::size_t ambient) : n_(ambient) {}

  std::size_t ambient() const { return n_; }
  std::size_t dim() const { return rows_.size(); }
  // Returns true if v was independent of the current span (and adds it).
  bool insert(const std::vector<QSqrt2>& v);
  bool contains(const std::vector<QSqrt2>& v) const;
  // v minus its projection along the echelon pivots; zero iff contained.
  std::vector<QSqrt2> reduce(std::vector<QSqrt2> v) const;

 private:
  std::size_t n_;
  std::vector<std::vector<QSqrt2>> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace g2hol
