#pragma once

#include "g2hol/expr.hpp"
#include "g2hol/lie.hpp"

#include <Eigen/Dense>

#include <random>

namespace g2hol::test {

inline std::mt19937_64& rng() {
  static std::mt19937_64 r(20261014);
  return r;
}

inline int rand_int(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }
inline double rand_double(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng()); }

inline Rational rand_rational(int span = 9) {
  int d = rand_int(1, 6);
  return Rational(rand_int(-span, span), d);
}

inline QSqrt2 rand_qs() {
  const bool irr = rand_int(0, 2) == 0;
  return QSqrt2(rand_rational(), irr ? rand_rational() : Rational(0));
}

inline HParams rand_hparams() {
  HParams p;
  for (auto& a : p.A) a = rand_qs();
  p.v = rand_qs();
  for (auto& x : p.u) x = rand_qs();
  for (auto& x : p.y) x = rand_qs();
  return p;
}

inline AlgebraElement rand_matrix(int span = 3) {
  AlgebraElement m(7, 7);
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) m(i, j) = QSqrt2(rand_int(-span, span));
  return m;
}

// Sum of a few c * x^alpha * exp(L) terms of low degree.
inline Expr rand_expr(int max_terms = 4, bool with_exp = true) {
  Expr e;
  const int n = rand_int(0, max_terms);
  for (int t = 0; t < n; ++t) {
    Monomial m;
    const int vars = rand_int(0, 3);
    for (int v = 0; v < vars; ++v) m.powers[rand_int(0, 6)] += static_cast<std::uint16_t>(rand_int(1, 2));
    LinForm l;
    if (with_exp && rand_int(0, 3) == 0) l.coeffs[rand_int(0, 6)] = SmallRational(rand_int(-2, 2), rand_int(1, 2));
    e += Expr::term(rand_qs(), m, l);
  }
  return e;
}

inline FloatPoint rand_point(double r = 0.5) {
  FloatPoint p;
  for (auto& x : p) x = rand_double(-r, r);
  return p;
}

inline Eigen::MatrixXd to_eigen(const ExactMatrix& m) {
  Eigen::MatrixXd out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).to_double();
  return out;
}

inline std::size_t float_rank(const Eigen::MatrixXd& m, double rel = 1e-8) {
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  const auto& s = svd.singularValues();
  std::size_t r = 0;
  for (int i = 0; i < s.size(); ++i)
    if (s(i) > rel * s(0)) ++r;
  return s(0) == 0 ? 0 : r;
}

// Rows are flattened basis elements.
inline std::size_t float_rank_of(const std::vector<AlgebraElement>& basis) {
  Eigen::MatrixXd m(basis.size(), 49);
  for (std::size_t r = 0; r < basis.size(); ++r)
    for (int k = 0; k < 49; ++k) m(r, k) = basis[r](k / 7, k % 7).to_double();
  return float_rank(m);
}

inline HParams hp(std::array<QSqrt2, 4> A, QSqrt2 v, std::array<QSqrt2, 2> u, std::array<QSqrt2, 2> y) {
  HParams p;
  p.A = A;
  p.v = v;
  p.u = u;
  p.y = y;
  return p;
}

inline const QSqrt2 kS2 = QSqrt2::sqrt2();

}  // namespace g2hol::test
