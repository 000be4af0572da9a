#pragma once

#include "g2hol/expr.hpp"
#include "g2hol/lie.hpp"

#include <array>
#include <stdexcept>
#include <vector>

namespace g2hol {

class UnsupportedCoframe : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// 7x7 matrix of Exprs, row-major, 0-based.
class ExprMatrix {
 public:
  ExprMatrix() = default;
  static ExprMatrix identity();
  static ExprMatrix constant(const ExactMatrix& m);

  Expr& operator()(int r, int c) { return e_[r * 7 + c]; }
  const Expr& operator()(int r, int c) const { return e_[r * 7 + c]; }

  bool is_zero() const;
  ExprMatrix transpose() const;
  ExprMatrix ddx(int k) const;  // k 1-based
  ExactMatrix eval_exact(const Point& pt) const;
  std::array<double, 49> eval_float(const FloatPoint& pt) const;

  ExprMatrix& operator+=(const ExprMatrix& o);
  ExprMatrix& operator-=(const ExprMatrix& o);
  ExprMatrix& operator*=(const Expr& s);
  friend ExprMatrix operator+(ExprMatrix a, const ExprMatrix& b) { return a += b; }
  friend ExprMatrix operator-(ExprMatrix a, const ExprMatrix& b) { return a -= b; }
  friend ExprMatrix operator*(const ExprMatrix& a, const ExprMatrix& b);
  friend ExprMatrix operator*(ExprMatrix a, const Expr& s) { return a *= s; }
  friend bool operator==(const ExprMatrix&, const ExprMatrix&) = default;

 private:
  std::array<Expr, 49> e_{};
};

ExprMatrix expr_commutator(const ExprMatrix& a, const ExprMatrix& b);

struct OneForm {
  std::array<Expr, 7> c{};  // components along dx1..dx7
  friend bool operator==(const OneForm&, const OneForm&) = default;
};

// Components on dx_i ^ dx_j, i<j, 0-based storage of 21 pairs.
struct TwoForm {
  std::array<Expr, 21> c{};

  static int index(int i, int j);  // 0-based, i<j
  // Signed component for 0-based (i, j).
  Expr at(int i, int j) const;
  bool is_zero() const;
  TwoForm& operator+=(const TwoForm& o);
  friend bool operator==(const TwoForm&, const TwoForm&) = default;
};

TwoForm exterior_derivative(const OneForm& w);
TwoForm wedge(const OneForm& a, const OneForm& b);

// b^i = sum_j B(i,j) dx_j
struct Coframe {
  ExprMatrix B = ExprMatrix::identity();

  static Coframe identity() { return {}; }
  OneForm form(int i) const;  // 0-based
};

// g = B^T G B
ExprMatrix metric_components(const Coframe& c);
// E = B^{-1} by Gauss-Jordan with unit pivots; throws UnsupportedCoframe.
ExprMatrix frame_inverse(const Coframe& c);

// Gamma[k][i][j] = Gamma^k_{ij}, 0-based coordinate indices.
using Christoffel = std::vector<Expr>;  // size 343, index (k*7+i)*7+j
Christoffel christoffel(const Coframe& c, const ExprMatrix& E);

struct ConnectionForm {
  ExprMatrix E;                       // frame vectors: b_j = sum_a E(a,j) d_a
  std::array<ExprMatrix, 7> coord{};  // theta(d_k)
  std::array<ExprMatrix, 7> frame{};  // theta(b_z)

  // theta^i_j as a 1-form (0-based)
  OneForm entry(int i, int j) const;
};

ConnectionForm levi_civita(const Coframe& c);

// Frame components R(b_k, b_l) as endomorphisms in the frame, k<l.
struct CurvatureField {
  std::array<ExprMatrix, 21> frame{};
  std::array<ExprMatrix, 21> coord{};  // R(d_a, d_b), a<b

  // 0-based; antisymmetric in (k,l).
  ExprMatrix at(int k, int l) const;
};

CurvatureField curvature(const Coframe& c, const ConnectionForm& theta);

// R(b_k, b_l)(pt), 1-based k, l. Throws TranscendentalEvaluation.
AlgebraElement curvature_operator(const CurvatureField& rf, int k, int l, const Point& pt);
// (nabla_{b_z} R)(b_k, b_l)(pt), 1-based.
AlgebraElement nabla_R(const CurvatureField& rf, const ConnectionForm& theta, int z, int k, int l,
                       const Point& pt);

// Symbolic (nabla_{b_z} R)_{kl} for all z and k<l.
struct NablaRField {
  std::array<ExprMatrix, 7 * 21> m{};
  ExprMatrix at(int z, int k, int l) const;  // 0-based
};
NablaRField nabla_R_field(const CurvatureField& rf, const ConnectionForm& theta);
// (nabla_{b_w} nabla R)_{z;kl}(pt), 1-based.
AlgebraElement nabla2_R(const NablaRField& nf, const ConnectionForm& theta, int w, int z, int k, int l,
                        const Point& pt);

// Identity checks; each returns the list of nonzero residual descriptions.
std::vector<std::string> structure_equation_residuals(const Coframe& c, const ConnectionForm& theta);
std::vector<std::string> metric_compatibility_residuals(const ConnectionForm& theta);
std::vector<std::string> first_bianchi_residuals(const CurvatureField& rf);
// Max relative deviation of first Bianchi sums at a float point.
double first_bianchi_float(const CurvatureField& rf, const FloatPoint& pt);
std::vector<std::string> second_bianchi_residuals(const CurvatureField& rf, const ConnectionForm& theta,
                                                  const Point& pt);

}  // namespace g2hol
