#include "doctest.h"
#include "support.hpp"

#include "g2hol/lie.hpp"

#include <map>

using namespace g2hol;
using namespace g2hol::test;

namespace {

const QSqrt2 Z(0), I1(1);

// theta(u, u') = u1 u'2 - u2 u'1
QSqrt2 theta2(const std::array<QSqrt2, 2>& u, const std::array<QSqrt2, 2>& w) { return u[0] * w[1] - u[1] * w[0]; }

}  // namespace

TEST_SUITE("lie") {

TEST_CASE("h_matrix pattern") {
  const AlgebraElement d = h_matrix(hp({I1, Z, Z, I1}, Z, {Z, Z}, {Z, Z}));
  const int diag[7] = {2, 1, 1, 0, -2, -1, -1};
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) CHECK(d(i, j) == QSqrt2(i == j ? diag[i] : 0));
  CHECK(h_matrix(HParams{}).is_zero());
  const HParams n = hp({Z, I1, Z, Z}, Z, {Z, I1}, {Z, Z});
  const HDecomposition dn = decompose_h(h_matrix(n));
  CHECK(dn.in_h());
  CHECK(dn.params == n);
}

TEST_CASE("decompose_h") {
  for (int i = 0; i < 50; ++i) {
    const HParams p = rand_hparams();
    const HDecomposition d = decompose_h(h_matrix(p));
    CHECK(d.in_h());
    CHECK(d.params == p);
  }
  AlgebraElement e21(7, 7);
  e21(1, 0) = I1;
  CHECK_FALSE(decompose_h(e21).in_h());
  CHECK(render_hparams(hp({I1, Z, Z, Z}, Z, {Z, I1}, {Z, Z})) == "h([[1, 0], [0, 0]], 0, (0, 1), (0, 0))");
  CHECK(render_hparams_compact(hp({I1, Z, Z, Z}, Z, {Z, I1}, {Z, Z})) == "h(diag(1, 0), 0, (0, 1), 0)");
  CHECK(render_hparams_compact(hp({Z, Z, Z, Z}, QSqrt2(-2), {Z, Z}, {Z, Z})) == "h(0, -2, 0, 0)");
  CHECK(render_hparams_compact(hp({Z, I1, Z, Z}, Z, {Z, Z}, {Z, Z})) == "h([[0, 1], [0, 0]], 0, 0, 0)");
}

TEST_CASE("slot names") {
  const HParams p = rand_hparams();
  for (int s = 0; s < 9; ++s) CHECK(hparam_slot_index(kHSlots[s]) == s);
  CHECK(hparam_slot_index("w") == -1);
  CHECK(hparam_slot(p, 4) == p.v);
  CHECK(hparam_slot(p, 8) == p.y[1]);
  HParams q;
  for (int s = 0; s < 9; ++s) set_hparam_slot(q, s, hparam_slot(p, s));
  CHECK(q == p);
}

TEST_CASE("bracket examples") {
  const auto a = h_matrix(hp({Z, Z, Z, Z}, Z, {I1, Z}, {Z, Z}));
  const auto b = h_matrix(hp({Z, Z, Z, Z}, Z, {Z, I1}, {Z, Z}));
  CHECK(bracket(a, b) == h_matrix(hp({Z, Z, Z, Z}, QSqrt2(2), {Z, Z}, {Z, Z})));
  const auto v = h_matrix(hp({Z, Z, Z, Z}, I1, {Z, Z}, {Z, Z}));
  CHECK(bracket(v, a) == h_matrix(hp({Z, Z, Z, Z}, Z, {Z, Z}, {QSqrt2(-3), Z})));
  const auto x = rand_matrix();
  CHECK(bracket(x, x).is_zero());
}

TEST_CASE("bracket on m") {
  for (int i = 0; i < 50; ++i) {
    HParams p = rand_hparams(), q = rand_hparams();
    p.A = q.A = {};
    HParams expect;
    expect.v = QSqrt2(2) * theta2(p.u, q.u);
    for (int k = 0; k < 2; ++k) expect.y[k] = QSqrt2(3) * (q.v * p.u[k] - p.v * q.u[k]);
    CHECK(bracket(h_matrix(p), h_matrix(q)) == h_matrix(expect));
  }
}

TEST_CASE("gl2 action on m") {
  for (int i = 0; i < 50; ++i) {
    HParams a = rand_hparams(), m = rand_hparams();
    a.v = {};
    a.u = a.y = {};
    m.A = {};
    const QSqrt2 tr = a.A[0] + a.A[3];
    HParams expect;
    expect.v = tr * m.v;
    expect.u = {a.A[0] * m.u[0] + a.A[1] * m.u[1], a.A[2] * m.u[0] + a.A[3] * m.u[1]};
    expect.y = {a.A[0] * m.y[0] + a.A[1] * m.y[1] + tr * m.y[0], a.A[2] * m.y[0] + a.A[3] * m.y[1] + tr * m.y[1]};
    CHECK(bracket(h_matrix(a), h_matrix(m)) == h_matrix(expect));
  }
}

TEST_CASE("h is closed under brackets") {
  for (int i = 0; i < 50; ++i) CHECK(decompose_h(bracket(h_matrix(rand_hparams()), h_matrix(rand_hparams()))).in_h());
}

TEST_CASE("Jacobi identity") {
  for (int i = 0; i < 100; ++i) {
    const auto x = rand_matrix(), y = rand_matrix(), z = rand_matrix();
    CHECK((bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y))).is_zero());
  }
}

TEST_CASE("three-form action") {
  CHECK(omega().at(0, 5, 6) == QSqrt2::sqrt2());
  CHECK(omega().at(6, 5, 0) == -QSqrt2::sqrt2());
  CHECK(omega().at(3, 0, 4) == QSqrt2(-1));
  for (const auto& e : catalogue("p1").basis) {
    CHECK(act_on_threeform(e, omega()).is_zero());
    CHECK(is_in_g2star(e));
  }
  ThreeForm minus3 = omega();
  minus3 *= QSqrt2(-3);
  CHECK(act_on_threeform(ExactMatrix::identity(7), omega()) == minus3);
  CHECK_FALSE(is_in_g2star(ExactMatrix::identity(7)));
  CHECK(kernel_basis(g2star_system()).size() == 14);
}

TEST_CASE("so(4,3) membership") {
  for (int i = 0; i < 30; ++i) CHECK(is_in_so43(h_matrix(rand_hparams())));
  CHECK_FALSE(is_in_so43(ExactMatrix::identity(7)));
  CHECK_FALSE(is_in_so43(gram()));
  for (const auto& v : kernel_basis(g2star_system())) {
    const AlgebraElement x = unflatten(v.entries());
    CHECK(is_in_so43(x));
  }
}

TEST_CASE("catalogue dimensions") {
  const std::map<std::string, std::size_t> dims = {
      {"p1", 9},        {"m", 5},      {"sl2_m", 8},          {"gl2_m", 9},          {"co2_m", 7},
      {"b2_m", 8},      {"b2hat_m", 7}, {"d_m", 7},           {"Ca_m(1)", 6},        {"S_m", 6},
      {"s_lambda_m(2)", 7}, {"diag1mu_m(1/2)", 6}, {"N_m", 6}, {"2b", 6},            {"2c(0,0)", 4},
      {"2c(1,0)", 5},   {"2c(1,1)", 6}, {"3b", 5},            {"4b(0)", 4},          {"4b(1)", 5}};
  for (const auto& [label, dim] : dims) {
    CAPTURE(label);
    const SubalgebraSpec s = catalogue_from_label(label);
    CHECK(s.dim() == dim);
    CHECK(rank_exact(ExactMatrix(s.dim(), 49, [&] {
            std::vector<QSqrt2> v;
            for (const auto& e : s.basis) v.insert(v.end(), e.entries().begin(), e.entries().end());
            return v;
          }())) == dim);
    CHECK(float_rank_of(s.basis) == dim);
    for (const auto& e : s.basis) {
      CHECK(is_in_g2star(e));
      CHECK(is_in_so43(e));
      CHECK(decompose_h(e).in_h());
    }
    CHECK(subspace_equal(s, bracket_closure(s.basis)));
  }
  CHECK(catalogue_listing().size() == 20);
  for (const auto& l : catalogue_listing()) CHECK(dims.count(catalogue(l.name, l.sample).label()) == 1);
}

TEST_CASE("parameterized families") {
  CHECK(catalogue("Ca_m", {QSqrt2(Rational(-3, 2))}).dim() == 6);
  CHECK(catalogue("s_lambda_m", {QSqrt2(0)}).dim() == 7);
  CHECK(catalogue("diag1mu_m", {QSqrt2(-1)}).dim() == 6);
  CHECK(catalogue("diag1mu_m", {QSqrt2(0)}).dim() == 6);
  CHECK_THROWS_AS(catalogue("diag1mu_m", {QSqrt2(2)}), CatalogueError);
  CHECK_THROWS_AS(catalogue("2c", {QSqrt2(0), QSqrt2(1)}), CatalogueError);
  CHECK_THROWS_AS(catalogue("4b", {QSqrt2(2)}), CatalogueError);
  CHECK_THROWS_AS(catalogue("p1", {QSqrt2(1)}), CatalogueError);
  CHECK_THROWS_AS(catalogue("q7"), CatalogueError);
  CHECK_THROWS_AS(catalogue_from_label("2c(0"), CatalogueError);
  CHECK(catalogue_from_label("0_m").dim() == 5);
  CHECK(catalogue_from_label("Ca_m(1/2 + sqrt2)").dim() == 6);
}

TEST_CASE("m is three-step nilpotent") {
  const auto m = catalogue("m").basis;
  const SubalgebraSpec m002{"m002", {}, m_subspace(0, 0)};
  for (const auto& a : m)
    for (const auto& b : m)
      for (const auto& c : m) {
        const auto t = bracket(a, bracket(b, c));
        CHECK(subspace_contains(m002, t));
        for (const auto& d : m) CHECK(bracket(a, bracket(b, bracket(c, d))).is_zero());
      }
  for (int i = 0; i <= 1; ++i)
    for (int j = 0; j <= 1; ++j) CHECK(span_of(m_subspace(i, j)).dim() == static_cast<std::size_t>(i + j + 2));
}

TEST_CASE("subspace comparison") {
  const SubalgebraSpec p1 = catalogue("p1");
  CHECK(subspace_equal(p1, bracket_closure(p1.basis)));
  CHECK(bracket_closure({}).dim() == 0);
  CHECK_FALSE(subspace_equal(catalogue_from_label("2c(0,0)"), catalogue_from_label("2c(1,0)")));
  SubalgebraSpec rev = p1;
  std::reverse(rev.basis.begin(), rev.basis.end());
  CHECK(subspace_equal(p1, rev));
  CHECK(subspace_equal(catalogue("gl2_m"), p1));
  CHECK(subspace_contains(p1, h_matrix(rand_hparams())));
  CHECK_FALSE(subspace_contains(catalogue("m"), h_matrix(hp({I1, Z, Z, Z}, Z, {Z, Z}, {Z, Z}))));
}

}
