// One PASS/FAIL line per acceptance criterion; exit 0 iff all pass.
#include "g2hol/fixtures.hpp"
#include "g2hol/holonomy.hpp"
#include "g2hol/pde.hpp"

#include <Eigen/Dense>

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <random>
#include <set>
#include <sstream>

using namespace g2hol;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream notes;
  void fail(const std::string& why) {
    if (ok) notes << why;
    ok = false;
  }
};

const QSqrt2 Z(0), I1(1), R2 = QSqrt2::sqrt2(), HALF(Rational(1, 2));

bool is_text_prop(const std::string& name) {
  static const std::set<std::string> props = {"p1", "2b", "2c00", "2c10", "2c11", "3b", "4b0", "4b1"};
  return props.count(name) > 0;
}

std::size_t float_rank(const std::vector<AlgebraElement>& basis) {
  if (basis.empty()) return 0;
  Eigen::MatrixXd m(basis.size(), 49);
  for (std::size_t r = 0; r < basis.size(); ++r)
    for (int k = 0; k < 49; ++k) m(r, k) = basis[r](k / 7, k % 7).to_double();
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  const auto& s = svd.singularValues();
  std::size_t r = 0;
  for (int i = 0; i < s.size(); ++i)
    if (s(i) > 1e-8 * s(0)) ++r;
  return r;
}

Outcome criterion1() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  int props = 0, families = 0;
  for (const auto& f : registry()) {
    if (!all_zero(residuals(f.system, f.functions))) o.fail(f.name + ": nonzero residual; ");
    Pipeline p(f.coframe());
    const HolonomyVerdict v = verify(p, f.claimed(), f.point, 2);
    if (!v.containment_ok) o.fail(f.name + ": containment; ");
    if (!v.equal) o.fail(f.name + ": closure differs from claim; ");
    if (v.equal) (is_text_prop(f.name) ? props : families)++;
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (props < 8) o.fail("fewer than 8 normal-form examples pass; ");
  if (families < 11) o.fail("fewer than 11 family instances pass; ");
  if (secs > 300) o.fail("runtime above 5 minutes; ");
  o.notes << props << " normal-form examples and " << families << " family instances equal, " << secs << " s";
  return o;
}

struct Displayed {
  const char* fixture;
  const char* op;
  std::vector<std::pair<const char*, QSqrt2>> slots;  // unlisted slots are not compared
};

std::vector<Displayed> displayed() {
  const QSqrt2 q = QSqrt2(Rational(1, 4)) * R2;
  return {
      {"p1", "R56", {{"A11", -HALF * R2}, {"A12", Z}, {"A21", Z}, {"A22", Z}, {"u1", Z}, {"u2", -HALF}}},
      {"p1", "R57", {{"A11", Z}, {"A12", Z}, {"A21", QSqrt2(-1)}, {"A22", Z}, {"u1", HALF}, {"u2", Z}}},
      {"p1", "nR5_56", {{"A11", Z}, {"A12", -HALF * R2}, {"A21", I1 - q}, {"A22", Z}}},
      {"2b", "R56", {{"A11", QSqrt2(2)}, {"A12", Z}, {"A21", Z}, {"A22", Z}, {"v", Z}, {"u1", Z}, {"u2", QSqrt2(2)}, {"y1", Z}, {"y2", Z}}},
      {"2b", "R67", {{"A11", Z}, {"A12", Z}, {"A21", Z}, {"A22", Z}, {"v", QSqrt2(-2)}, {"u1", Z}, {"u2", Z}, {"y1", Z}, {"y2", Z}}},
      {"2b", "nR5_56", {{"A11", Z}, {"A12", -R2}, {"A21", Z}, {"A22", Z}, {"v", Z}, {"u1", R2}, {"u2", Z}, {"y1", Z}, {"y2", Z}}},
      {"2c00", "R36", {{"A11", Z}, {"A12", Z}, {"A21", Z}, {"A22", Z}, {"v", Z}, {"u1", Z}, {"u2", Z}, {"y1", Z}, {"y2", I1}}},
      {"2c10", "R25", {{"A11", Z}, {"A12", Z}, {"A21", Z}, {"A22", Z}, {"v", Z}, {"u1", Z}, {"u2", Z}, {"y1", Z}, {"y2", QSqrt2(-1)}}},
      {"2c10", "nR5_56", {{"v", QSqrt2(-1)}}},
      {"2c11", "R45", {{"A11", Z}, {"A12", Z}, {"A21", Z}, {"A22", Z}, {"v", -R2}, {"u1", QSqrt2(Rational(5, 3))}, {"u2", Z}, {"y1", Z}, {"y2", Z}}},
      {"3b", "nR4_56", {{"A11", Z}, {"A12", Z}, {"A21", Z}, {"A22", Z}, {"v", Z}, {"u1", Z}, {"u2", Z}, {"y1", Z}, {"y2", R2}}},
      {"3b", "nR6_57", {{"A11", Z}, {"A12", Z}, {"A21", Z}, {"A22", Z}, {"v", QSqrt2(-1)}, {"u1", Z}, {"u2", Z}, {"y1", Z}, {"y2", Z}}},
      {"4b0", "R57", {{"A11", Z}, {"A12", Z}, {"A21", Z}, {"A22", Z}, {"v", -HALF}, {"u1", Z}, {"u2", Z}, {"y1", Z}, {"y2", Z}}},
      {"4b0", "R36", {{"A11", Z}, {"A12", Z}, {"A21", Z}, {"A22", Z}, {"v", Z}, {"u1", Z}, {"u2", Z}, {"y1", QSqrt2(2)}, {"y2", Z}}},
      {"4b1", "R25", {{"A11", Z}, {"A12", Z}, {"A21", Z}, {"A22", Z}, {"v", Z}, {"u1", Z}, {"u2", Z}, {"y1", I1}, {"y2", QSqrt2(2)}}},
  };
}

Outcome criterion2() {
  Outcome o;
  int checked = 0;
  std::map<std::string, std::unique_ptr<Pipeline>> cache;
  for (const auto& d : displayed()) {
    const MetricFixture f = *find_fixture(d.fixture);
    auto& p = cache[d.fixture];
    if (!p) p = std::make_unique<Pipeline>(f.coframe());
    const HDecomposition dec = decompose_h(evaluate_operator(*p, OperatorId::parse(d.op), f.point));
    if (!dec.in_h()) o.fail(std::string(d.fixture) + " " + d.op + " not in h; ");
    for (const auto& [slot, value] : d.slots) {
      ++checked;
      const QSqrt2 got = hparam_slot(dec.params, hparam_slot_index(slot));
      if (!(got == value)) o.fail(std::string(d.fixture) + " " + d.op + " " + slot + " = " + got.to_string() + "; ");
    }
  }
  // [R56, R57] = (1/sqrt2) h(A57, *, (-1/2, 0), *)
  const MetricFixture f = *find_fixture("p1");
  Pipeline& p = *cache["p1"];
  const auto br = decompose_h(bracket(evaluate_operator(p, OperatorId::parse("R56"), f.point),
                                      evaluate_operator(p, OperatorId::parse("R57"), f.point)));
  const QSqrt2 c = HALF * R2;
  if (!(br.in_h() && br.params.A == std::array<QSqrt2, 4>{Z, Z, -c, Z} && br.params.u == std::array<QSqrt2, 2>{-c * HALF, Z}))
    o.fail("p1 [R56, R57]; ");
  o.notes << checked + 6 << " displayed entries compared exactly";
  return o;
}

Outcome criterion3() {
  Outcome o;
  const std::size_t stab = kernel_basis(g2star_system()).size();
  if (stab != 14) o.fail("dim stab = " + std::to_string(stab) + "; ");
  const std::map<std::string, std::size_t> dims = {
      {"p1", 9},      {"m", 5},        {"sl2_m", 8},         {"gl2_m", 9},          {"co2_m", 7},
      {"b2_m", 8},    {"b2hat_m", 7},  {"d_m", 7},           {"Ca_m(1)", 6},        {"S_m", 6},
      {"s_lambda_m(2)", 7}, {"diag1mu_m(1/2)", 6}, {"N_m", 6}, {"2b", 6},            {"2c(0,0)", 4},
      {"2c(1,0)", 5}, {"2c(1,1)", 6},  {"3b", 5},            {"4b(0)", 4},          {"4b(1)", 5}};
  for (const auto& [label, dim] : dims) {
    const SubalgebraSpec s = catalogue_from_label(label);
    const std::size_t exact = span_of(s.basis).dim();
    if (exact != dim || s.dim() != dim) o.fail(label + " exact dim " + std::to_string(exact) + "; ");
    if (float_rank(s.basis) != dim) o.fail(label + " float rank differs; ");
  }
  o.notes << "stab 14, " << dims.size() << " catalogue dimensions (b2_m = 8: full upper-triangular b2)";
  return o;
}

Outcome criterion4() {
  Outcome o;
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(-0.5, 0.5);
  double worst = 0;
  for (const auto& f : registry()) {
    const Coframe c = f.coframe();
    const ConnectionForm th = levi_civita(c);
    if (!structure_equation_residuals(c, th).empty()) o.fail(f.name + ": structure equation; ");
    if (!metric_compatibility_residuals(th).empty()) o.fail(f.name + ": metric compatibility; ");
    const CurvatureField rf = curvature(c, th);
    if (!first_bianchi_residuals(rf).empty()) o.fail(f.name + ": first Bianchi; ");
    if (!second_bianchi_residuals(rf, th, f.point).empty()) o.fail(f.name + ": second Bianchi; ");
    for (int rep = 0; rep < 10; ++rep) {
      FloatPoint pt;
      for (auto& x : pt) x = u(rng);
      worst = std::max(worst, first_bianchi_float(rf, pt));
    }
  }
  if (worst > 1e-6) o.fail("float Bianchi deviation " + std::to_string(worst) + "; ");
  o.notes << "all identities exact; worst float Bianchi deviation " << worst;
  return o;
}

FunctionBundle bundle(std::initializer_list<std::pair<const char*, const char*>> fns) {
  FunctionBundle b;
  for (const auto& [k, v] : fns) b[k] = parse(v);
  return b;
}

Outcome criterion5() {
  Outcome o;
  const std::vector<std::tuple<const char*, SystemId, FunctionBundle>> examples = {
      {"2b", SystemId::T2B, bundle({{"p", "x6^2"}, {"q2", "x3 + x4"}})},
      {"2c00", SystemId::T2C00, bundle({{"a", "1"}, {"r6bar", "4/9*x5*x6^8*x7 + 1/3*x5*x6^5*x7^2 + 2/3*x6*x7^3"}})},
      {"2c10", SystemId::T2C10, bundle({{"p", "x6*x7"}, {"q3bar_const", "x5"}})},
      {"2c11", SystemId::T2C11, bundle({{"q3bar", "x6*x7 + 1/3*sqrt2*x7^2"}, {"q4", "x6*x7"}})},
      {"3b", SystemId::T3B, bundle({{"p", "x5*x6^2"}, {"q2", "x6*x7 + x7"}})},
      {"4b0", SystemId::T4B0, bundle({{"p", "x5*x6 + x6^2"}, {"r6bar", "x5^2"}, {"r7bar", "x6^2"}})},
      {"4b1", SystemId::T4B1, bundle({{"q2bar", "2*x6*x7"}, {"q3", "x5*x7 + x6*x7 + x7^2"}})},
  };
  for (const auto& [name, sys, free] : examples) {
    const MetricFixture f = *find_fixture(name);
    if (save_fixture(synthesized_fixture(sys, FreeInputFile{sys, [&] {
                       MetricFixture m = f;
                       m.functions = free;
                       return m;
                     }()})) != save_fixture(f))
      o.fail(std::string(name) + " not reproduced; ");
  }
  std::mt19937_64 rng(5);
  int random_ok = 0;
  for (SystemId s : kAllSystems) {
    if (s == SystemId::P1) continue;
    for (int i = 0; i < 20; ++i) {
      try {
        if (all_zero(residuals(s, synthesize(s, random_admissible(s, rng))))) ++random_ok;
        else o.fail(to_string(s) + " random input left a residual; ");
      } catch (const std::exception& e) {
        o.fail(to_string(s) + ": " + e.what() + "; ");
      }
    }
  }
  o.notes << examples.size() << " examples reproduced bit-exactly, " << random_ok << "/140 random inputs consistent";
  return o;
}

Outcome criterion6() {
  Outcome o;
  double worst = 0;
  for (const auto& f : registry()) {
    Pipeline p(f.coframe());
    try {
      const NumericHolonomy nh = numeric_holonomy(p.theta(), default_loops(1e-2));
      const double dev = span_deviation(nh.logs, lower_bound(p, f.point, 2).algebra.basis);
      worst = std::max(worst, dev);
      if (dev > 1e-5) o.fail(f.name + " deviation " + std::to_string(dev) + "; ");
      if (nh.dimension > f.claimed().dim()) o.fail(f.name + " numeric dim " + std::to_string(nh.dimension) + "; ");
    } catch (const NumericError& e) {
      o.fail(f.name + ": " + e.what() + "; ");
    }
  }
  o.notes << "worst normalized deviation " << worst;
  return o;
}

Outcome criterion7() {
  Outcome o;
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-0.5, 0.5);
  double worst = 0;
  int checks = 0;
  for (const auto& f : registry())
    for (const auto& [slot, e] : f.functions)
      for (int rep = 0; rep < 20; ++rep) {
        FloatPoint pt;
        for (auto& x : pt) x = u(rng);
        for (int k = 1; k <= 7; ++k) {
          const double h = 1e-5;
          FloatPoint a = pt, b = pt;
          a[k - 1] += h;
          b[k - 1] -= h;
          const double fd = (eval_float(e, a) - eval_float(e, b)) / (2 * h);
          const double d = eval_float(ddx(e, k), pt);
          const double err = std::abs(fd - d) / std::max(1.0, std::abs(d));
          worst = std::max(worst, err);
          ++checks;
          if (err > 1e-6) o.fail(f.name + " " + slot + " d/dx" + std::to_string(k) + "; ");
        }
      }
  o.notes << checks << " derivative checks, worst relative error " << worst;
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"fixture suite verifies", criterion1},      {"displayed values reproduced", criterion2},
      {"dimension certificates", criterion3},      {"structure and Bianchi identities", criterion4},
      {"quadrature round trips", criterion5},      {"numeric oracle consistency", criterion6},
      {"derivatives match finite differences", criterion7}};
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    all &= o.ok;
    std::cout << (o.ok ? "PASS" : "FAIL") << "  criterion " << i + 1 << ": " << criteria[i].first << " ("
              << o.notes.str() << ")" << std::endl;
  }
  return all ? 0 : 1;
}
