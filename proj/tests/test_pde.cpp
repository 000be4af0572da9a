#include "doctest.h"
#include "support.hpp"

#include "g2hol/fixtures.hpp"
#include "g2hol/holonomy.hpp"
#include "g2hol/pde.hpp"

using namespace g2hol;
using namespace g2hol::test;

namespace {

FunctionBundle bundle(std::initializer_list<std::pair<const char*, const char*>> fns) {
  FunctionBundle b;
  for (const auto& [k, v] : fns) b[k] = parse(v);
  return b;
}

std::vector<std::string> nonzero_tags(const std::vector<Residual>& rs) {
  std::vector<std::string> out;
  for (const auto& r : rs)
    if (!r.value.is_zero()) out.push_back(r.tag);
  return out;
}

// Free inputs as printed with each example metric.
struct ExampleInputs {
  const char* fixture;
  SystemId system;
  FunctionBundle free;
};

std::vector<ExampleInputs> example_inputs() {
  return {
      {"2b", SystemId::T2B, bundle({{"p", "x6^2"}, {"q2", "x3 + x4"}})},
      {"2c00", SystemId::T2C00,
       bundle({{"a", "1"}, {"r6bar", "4/9*x5*x6^8*x7 + 1/3*x5*x6^5*x7^2 + 2/3*x6*x7^3"}})},
      {"2c10", SystemId::T2C10, bundle({{"p", "x6*x7"}, {"q3bar_const", "x5"}})},
      {"2c11", SystemId::T2C11, bundle({{"q3bar", "x6*x7 + 1/3*sqrt2*x7^2"}, {"q4", "x6*x7"}})},
      {"3b", SystemId::T3B, bundle({{"p", "x5*x6^2"}, {"q2", "x6*x7 + x7"}})},
      {"4b0", SystemId::T4B0, bundle({{"p", "x5*x6 + x6^2"}, {"r6bar", "x5^2"}, {"r7bar", "x6^2"}})},
      {"4b1", SystemId::T4B1, bundle({{"q2bar", "2*x6*x7"}, {"q3", "x5*x7 + x6*x7 + x7^2"}})},
  };
}

}  // namespace

TEST_SUITE("pde") {

TEST_CASE("system names") {
  for (SystemId s : kAllSystems) CHECK(parse_system(to_string(s)) == s);
  CHECK_THROWS_AS(parse_system("T5"), std::invalid_argument);
  CHECK(system_algebra(SystemId::T2C10) == "2c(1,0)");
  CHECK(system_algebra(SystemId::P1) == "p1");
}

TEST_CASE("fixture bundles satisfy their systems") {
  for (const auto& f : registry()) {
    CAPTURE(f.name);
    const auto rs = residuals(f.system, f.functions);
    CHECK(!rs.empty());
    CHECK(all_zero(rs));
  }
  CHECK(residuals(SystemId::P1, find_fixture("p1")->functions).size() == 17);
}

TEST_CASE("perturbation breaks only equations touching the slot") {
  FunctionBundle b = find_fixture("p1")->functions;
  b["r6"] += parse("x4^2");
  const auto bad = nonzero_tags(residuals(SystemId::P1, b));
  REQUIRE(!bad.empty());
  for (const auto& t : bad) CHECK(t.find("r6") != std::string::npos);
}

TEST_CASE("schema checks") {
  FunctionBundle b = find_fixture("p1")->functions;
  b["q4"] += Expr::var(1);
  try {
    check_schema(SystemId::P1, b);
    FAIL("expected a dependence violation");
  } catch (const DependenceViolation& e) {
    CHECK(e.slot() == "q4");
    CHECK(e.var() == 1);
  }
  CHECK_THROWS_AS(residuals(SystemId::P1, b), DependenceViolation);
  CHECK_THROWS_AS(check_schema(SystemId::T2B, bundle({{"zz", "1"}})), SchemaError);
}

TEST_CASE("integrability of q2") {
  CHECK(check_integrability_2b(parse("x3 + x4")).is_zero());
  CHECK(check_integrability_2b(parse("x4^2")) == Expr(2));
  CHECK(check_integrability_2b(parse("x4^2 + x3*x7")).is_zero());
  CHECK_THROWS_AS(synthesize(SystemId::T2B, bundle({{"p", "x6^2"}, {"q2", "x4^2"}})), SynthesisError);
}

TEST_CASE("synthesis reproduces the example metrics") {
  for (const auto& ex : example_inputs()) {
    CAPTURE(ex.fixture);
    const MetricFixture f = *find_fixture(ex.fixture);
    REQUIRE(f.system == ex.system);
    CHECK(synthesize(ex.system, ex.free) == f.functions);
  }
}

TEST_CASE("round trip through the free slots") {
  for (const auto& f : registry()) {
    if (f.system == SystemId::P1) continue;
    CAPTURE(f.name);
    CHECK(synthesize(f.system, extract_free(f.system, f.functions)) == f.functions);
  }
}

TEST_CASE("zero inputs give a consistent bundle") {
  for (SystemId s : kAllSystems) {
    if (s == SystemId::P1) continue;
    CAPTURE(to_string(s));
    CHECK(all_zero(residuals(s, synthesize(s, {}))));
  }
}

TEST_CASE("P1 has no synthesizer") {
  try {
    synthesize(SystemId::P1, {});
    FAIL("expected SynthesisError");
  } catch (const SynthesisError& e) {
    CHECK(std::string(e.what()).find("unsupported") != std::string::npos);
  }
}

TEST_CASE("unsatisfied preconditions are named") {
  CHECK_THROWS_AS(synthesize(SystemId::T2C10, bundle({{"p", "x7^2"}})), SynthesisError);
  CHECK_THROWS_AS(synthesize(SystemId::T2B, bundle({{"p", "x1"}})), SynthesisError);
  CHECK_THROWS_AS(synthesize(SystemId::T2B, bundle({{"nope", "x1"}})), SchemaError);
}

TEST_CASE("random admissible inputs") {
  std::mt19937_64 r(7);
  for (SystemId s : kAllSystems) {
    if (s == SystemId::P1) continue;
    CAPTURE(to_string(s));
    for (int i = 0; i < 20; ++i) {
      const FunctionBundle in = random_admissible(s, r);
      const FunctionBundle out = synthesize(s, in);
      CHECK(all_zero(residuals(s, out)));
      if (i < 3) {
        const ConnectionForm th = levi_civita(build_coframe(s, out));
        CHECK(containment(th, catalogue_from_label(system_algebra(s))).ok);
      }
    }
  }
}

}
