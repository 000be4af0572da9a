#include "doctest.h"
#include "support.hpp"

#include "g2hol/fixtures.hpp"
#include "g2hol/holonomy.hpp"

#include <cmath>

using namespace g2hol;
using namespace g2hol::test;

TEST_SUITE("holonomy") {

TEST_CASE("operator ids") {
  for (const char* s : {"R56", "nR5_56", "nnR4_5_56", "R12"}) CHECK(OperatorId::parse(s).to_string() == s);
  const OperatorId n = OperatorId::parse("nR5_67");
  CHECK(n.order == 1);
  CHECK(n.z == 5);
  CHECK(n.k == 6);
  CHECK(n.l == 7);
  for (const char* s : {"R55", "R58", "nR8_56", "R5", "X56", "nnR4_56", ""})
    CHECK_THROWS_AS(OperatorId::parse(s), std::invalid_argument);
}

TEST_CASE("containment") {
  const ConnectionForm th = Pipeline(find_fixture("p1")->coframe()).theta();
  CHECK(containment(th, catalogue("p1")).ok);
  const ContainmentResult c = containment(th, catalogue_from_label("2c(0,0)"));
  CHECK_FALSE(c.ok);
  CHECK_FALSE(c.witness.empty());
  const ConnectionForm flat = levi_civita(Coframe::identity());
  for (const auto& l : catalogue_listing()) CHECK(containment(flat, catalogue(l.name, l.sample)).ok);
}

TEST_CASE("generation from displayed operators") {
  {
    const MetricFixture f = *find_fixture("p1");
    Pipeline p(f.coframe());
    std::vector<AlgebraElement> gens;
    for (const char* op : {"R56", "R57", "nR5_56"}) gens.push_back(evaluate_operator(p, OperatorId::parse(op), f.point));
    const SubalgebraSpec cl = bracket_closure(gens);
    CHECK(cl.dim() == 9);
    CHECK(subspace_equal(cl, catalogue("p1")));
    // the A-parts alone generate gl(2)
    std::vector<AlgebraElement> as;
    for (const auto& g : gens) {
      HParams a = decompose_h(g).params;
      a.v = {};
      a.u = a.y = {};
      as.push_back(h_matrix(a));
    }
    CHECK(bracket_closure(as).dim() == 4);
  }
  {
    const MetricFixture f = *find_fixture("2b");
    Pipeline p(f.coframe());
    std::vector<AlgebraElement> gens;
    for (const char* op : {"R56", "R67", "nR5_56"}) gens.push_back(evaluate_operator(p, OperatorId::parse(op), f.point));
    const SubalgebraSpec cl = bracket_closure(gens);
    CHECK(cl.dim() == 6);
    CHECK(subspace_equal(cl, catalogue("2b")));
  }
}

TEST_CASE("verdicts") {
  const MetricFixture p1 = *find_fixture("p1");
  const HolonomyVerdict v = verify(p1.coframe(), catalogue("gl2_m"), 2);
  CHECK(v.equal);
  CHECK(v.order_used == 1);
  const HolonomyVerdict v0 = verify(p1.coframe(), catalogue("p1"), 0);
  CHECK(v0.containment_ok);
  CHECK_FALSE(v0.generation_ok);
  CHECK_FALSE(v0.equal);
  const HolonomyVerdict wrong = verify(p1.coframe(), catalogue_from_label("2c(0,0)"), 2);
  CHECK_FALSE(wrong.containment_ok);
  CHECK_FALSE(wrong.equal);
  const HolonomyVerdict flat = verify(Coframe::identity(), catalogue("m"), 2);
  CHECK(flat.containment_ok);
  CHECK_FALSE(flat.generation_ok);
  CHECK_FALSE(flat.equal);
  CHECK(flat.lower_bound_dim == 0);
}

TEST_CASE("lower bound never exceeds the claim") {
  for (const auto& f : registry()) {
    CAPTURE(f.name);
    Pipeline p(f.coframe());
    const SubalgebraSpec claimed = f.claimed();
    const LowerBound lb = lower_bound(p, f.point, 2);
    CHECK(lb.algebra.dim() <= claimed.dim());
    CHECK(containment(p.theta(), claimed).ok);
    for (const auto& g : lb.generators) CHECK(subspace_contains(claimed, g.value));
    const HolonomyVerdict v = verify(p, claimed, f.point, 2);
    CHECK(v.equal);
    CHECK(v.order_used <= 1);
  }
}

TEST_CASE("numeric transport of the flat coframe") {
  const NumericHolonomy nh = numeric_holonomy(levi_civita(Coframe::identity()), default_loops());
  CHECK(nh.dimension == 0);
  CHECK(nh.logs.size() == 21);
}

TEST_CASE("numeric holonomy dimensions") {
  {
    Pipeline p(find_fixture("p1")->coframe());
    const NumericHolonomy nh = numeric_holonomy(p.theta(), default_loops(1e-2));
    CHECK(nh.dimension >= 5);
    CHECK(nh.dimension <= 9);
  }
  {
    Pipeline p(find_fixture("2c00")->coframe());
    CHECK(numeric_holonomy(p.theta(), default_loops(1e-2)).dimension <= 4);
  }
}

TEST_CASE("numeric logs lie in the exact span") {
  for (const auto& f : registry()) {
    CAPTURE(f.name);
    Pipeline p(f.coframe());
    const NumericHolonomy nh = numeric_holonomy(p.theta(), default_loops(1e-2));
    CHECK(nh.dimension <= f.claimed().dim());
    CHECK(span_deviation(nh.logs, lower_bound(p, f.point, 2).algebra.basis) <= 1e-5);
  }
}

TEST_CASE("logs scale with the loop area") {
  for (const char* name : {"p1", "2b", "sl2", "co2"}) {
    CAPTURE(name);
    Pipeline p(find_fixture(name)->coframe());
    const auto loops = default_loops(1e-2);
    auto half = loops;
    for (auto& l : half) l.side /= 2;
    const NumericHolonomy a = numeric_holonomy(p.theta(), loops), b = numeric_holonomy(p.theta(), half);
    for (std::size_t i = 0; i < loops.size(); ++i) {
      const auto& pl = loops[i].plane;
      if (p.curvature().coord[TwoForm::index(pl[0] - 1, pl[1] - 1)].eval_float({}) == FloatMatrix{}) continue;
      double na = 0, nb = 0;
      for (int k = 0; k < 49; ++k) {
        na += a.logs[i][k] * a.logs[i][k];
        nb += b.logs[i][k] * b.logs[i][k];
      }
      CHECK(std::abs(std::sqrt(nb / na) - 0.25) <= 0.025);
    }
  }
}

TEST_CASE("numeric preconditions") {
  const ConnectionForm th = Pipeline(find_fixture("p1")->coframe()).theta();
  auto loops = default_loops();
  loops[0].side = -1;
  CHECK_THROWS_AS(numeric_holonomy(th, loops), std::invalid_argument);
  CHECK_THROWS_AS(numeric_holonomy(th, default_loops(5.0)), NumericError);
}

}
