#pragma once

#include "g2hol/exact_matrix.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace g2hol {

// 7x7 matrices acting on R^{4,3}; indices 0..6 stand for e1..e7.
using AlgebraElement = ExactMatrix;

// Gram matrix of <.,.>: <e1,e5> = <e2,e6> = <e3,e7> = 1, <e4,e4> = -1.
const ExactMatrix& gram();

// Alternating 3-form stored on the 35 triples i<j<k (0-based).
class ThreeForm {
 public:
  static constexpr int kSize = 35;

  // Signed component phi(e_i, e_j, e_k) for arbitrary 0-based indices.
  QSqrt2 at(int i, int j, int k) const;
  // Adds c * e^i ^ e^j ^ e^k (0-based, any order; sign handled).
  void add(int i, int j, int k, const QSqrt2& c);
  const std::array<QSqrt2, kSize>& coeffs() const { return c_; }
  bool is_zero() const;
  friend bool operator==(const ThreeForm&, const ThreeForm&) = default;
  ThreeForm& operator*=(const QSqrt2& s);

  static int index(int i, int j, int k);  // requires i<j<k

 private:
  std::array<QSqrt2, kSize> c_{};
};

// sqrt2 (e167 + e235) - e4 ^ (e15 - e26 - e37)
const ThreeForm& omega();

ThreeForm act_on_threeform(const AlgebraElement& x, const ThreeForm& phi);
bool is_in_g2star(const AlgebraElement& x);
bool is_in_so43(const AlgebraElement& x);
// The 35x49 matrix of X -> X.omega on row-major flattened X.
ExactMatrix g2star_system();

struct HParams {
  std::array<QSqrt2, 4> A{};  // a1 a2 / a3 a4
  QSqrt2 v;
  std::array<QSqrt2, 2> u{};
  std::array<QSqrt2, 2> y{};

  friend bool operator==(const HParams&, const HParams&) = default;
};

// Slot names in HParams order: A11 A12 A21 A22 v u1 u2 y1 y2.
inline constexpr std::array<const char*, 9> kHSlots = {"A11", "A12", "A21", "A22", "v",
                                                       "u1",  "u2",  "y1",  "y2"};
QSqrt2 hparam_slot(const HParams& p, int slot);
void set_hparam_slot(HParams& p, int slot, const QSqrt2& value);
// -1 if unknown.
int hparam_slot_index(const std::string& name);

AlgebraElement h_matrix(const HParams& p);
AlgebraElement h_matrix(const std::array<QSqrt2, 4>& a, const QSqrt2& v,
                        const std::array<QSqrt2, 2>& u, const std::array<QSqrt2, 2>& y);

struct HDecomposition {
  HParams params;
  AlgebraElement residual;
  bool in_h() const { return residual.is_zero(); }
};
HDecomposition decompose_h(const AlgebraElement& m);
// "h([[a1, a2], [a3, a4]], v, (u1, u2), (y1, y2))"
std::string render_hparams(const HParams& p);
// Zero blocks as 0, diagonal A as diag(a1, a4): "h(0, -2, 0, 0)"
std::string render_hparams_compact(const HParams& p);

AlgebraElement bracket(const AlgebraElement& x, const AlgebraElement& y);

std::vector<QSqrt2> flatten(const AlgebraElement& x);
AlgebraElement unflatten(const std::vector<QSqrt2>& v);

class CatalogueError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct SubalgebraSpec {
  std::string name;
  std::vector<QSqrt2> params;
  std::vector<AlgebraElement> basis;

  std::size_t dim() const { return basis.size(); }
  // "name" or "name(p1,p2)"
  std::string label() const;
};

// Names: p1, m (alias 0_m), sl2_m, gl2_m, co2_m, b2_m, b2hat_m, d_m, Ca_m(a),
// S_m, s_lambda_m(lambda), diag1mu_m(mu), N_m, 2b, 2c(i,j), 3b, 4b(j).
// Validates independence and bracket closure; throws CatalogueError.
SubalgebraSpec catalogue(const std::string& name, const std::vector<QSqrt2>& params = {});
// Parses "name" or "name(p, q)" with QSqrt2 parameters.
SubalgebraSpec catalogue_from_label(const std::string& label);

struct CatalogueListing {
  std::string name;
  std::string params;  // parameter description, empty if none
  std::vector<QSqrt2> sample;
};
// The 20 catalogue entries reported by list-algebras.
std::vector<CatalogueListing> catalogue_listing();

SubalgebraSpec bracket_closure(const std::vector<AlgebraElement>& gens, std::string name = "closure");
bool subspace_contains(const SubalgebraSpec& s, const AlgebraElement& x);
bool subspace_equal(const SubalgebraSpec& s1, const SubalgebraSpec& s2);
LinearSpan span_of(const std::vector<AlgebraElement>& elems);

// The subspace m(i,j,2) of m.
std::vector<AlgebraElement> m_subspace(int i, int j);

}  // namespace g2hol
