#include "doctest.h"
#include "support.hpp"

#include "g2hol/fixtures.hpp"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>

using namespace g2hol;
using namespace g2hol::test;

namespace {

const char* kSmall = R"(# two slots
name tiny
system T4B1
claim 4b(1)
point 0 0 0 0 0 0 0
fn q2 = x6
fn q3 = x5*x7
expect R25 y1 = 1
expect R25 v = *
)";

}  // namespace

TEST_SUITE("fixtures") {

TEST_CASE("registry") {
  const auto& all = registry();
  CHECK(all.size() >= 19);
  std::set<std::string> names;
  for (const auto& f : all) names.insert(f.name);
  CHECK(names.size() == all.size());
  for (const char* n : {"p1", "2b", "2c00", "2c10", "2c11", "3b", "4b0", "4b1", "sl2", "b2", "d", "S", "b2hat", "co2",
                        "Ca1", "diag_m1", "diag_0", "diag_1_2", "s_0", "s_2"})
    CHECK(names.count(n) == 1);
  for (const auto& f : all) CHECK(f.claimed().label() != "s_lambda_m(1/2)");
  CHECK_FALSE(find_fixture("nonexistent").has_value());
}

TEST_CASE("built-in p1") {
  const MetricFixture f = *find_fixture("p1");
  CHECK(f.system == SystemId::P1);
  CHECK(f.claim == "p1");
  REQUIRE(!f.expected.empty());
  CHECK(f.expected[0].op == "R56");
  CHECK(f.expected[0].slots[0].slot == "A11");
  CHECK(*f.expected[0].slots[0].value == QSqrt2(0, Rational(-1, 2)));
  int starred = 0;
  for (const auto& s : f.expected[0].slots) starred += !s.value;
  CHECK(starred == 3);
}

TEST_CASE("save and load round trip") {
  for (const auto& f : registry()) {
    CAPTURE(f.name);
    const std::string text = save_fixture(f);
    const MetricFixture g = parse_fixture(text);
    CHECK(g == f);
    CHECK(save_fixture(g) == text);
  }
  const MetricFixture t = parse_fixture(kSmall);
  CHECK(t.comments == std::vector<std::string>{"two slots"});
  CHECK(save_fixture(t) == kSmall);
}

TEST_CASE("expected operators match") {
  for (const auto& f : registry()) {
    CAPTURE(f.name);
    Pipeline p(f.coframe());
    for (const auto& c : compare_expected(f, p)) {
      CAPTURE(c.op);
      CHECK(c.in_h);
      CHECK(c.mismatches.empty());
    }
  }
}

TEST_CASE("diagnostics carry line numbers") {
  const std::string base = "system P1\nclaim p1\n";
  try {
    parse_fixture(base + "fn q4 = x1 + x5\n", "bad.fx");
    FAIL("expected an error");
  } catch (const FixtureError& e) {
    CHECK(e.line() == 3);
    CHECK(std::string(e.what()).find("x1") != std::string::npos);
  }
  try {
    parse_fixture(base + "\nfn q4 = x5 +\n", "bad.fx");
    FAIL("expected an error");
  } catch (const FixtureError& e) {
    CHECK(e.line() == 4);
  }
  CHECK_THROWS_AS(parse_fixture("claim p1\n"), FixtureError);
  CHECK_THROWS_AS(parse_fixture("system P1\n"), FixtureError);
  CHECK_THROWS_AS(parse_fixture(base + "point 0 0\n"), FixtureError);
  CHECK_THROWS_AS(parse_fixture(base + "fn zz = 1\n"), FixtureError);
  CHECK_THROWS_AS(parse_fixture(base + "expect R56 w = 1\n"), FixtureError);
  CHECK_THROWS_AS(parse_fixture(base + "expect R66 v = 1\n"), FixtureError);
  CHECK_THROWS_AS(parse_fixture(base + "frobnicate\n"), FixtureError);
  CHECK_THROWS_AS(parse_fixture("system P1\nclaim nope\n"), FixtureError);
  CHECK_THROWS_AS(parse_fixture(base + "fn f = 1\nfn f = 1\n"), FixtureError);
}

TEST_CASE("files and the search path") {
  const auto dir = std::filesystem::temp_directory_path() / "g2hol_fixture_test";
  std::filesystem::create_directories(dir);
  const auto path = (dir / "tiny.fx").string();
  save_fixture_file(parse_fixture(kSmall), path);
  CHECK(load_fixture(path) == parse_fixture(kSmall));
  CHECK_THROWS_AS(load_fixture((dir / "missing.fx").string()), FixtureError);
  ::setenv("HOLONOMY_FIXTURE_DIR", ("/nonexistent:" + dir.string()).c_str(), 1);
  const auto found = find_fixture("tiny");
  ::unsetenv("HOLONOMY_FIXTURE_DIR");
  REQUIRE(found.has_value());
  CHECK(found->system == SystemId::T4B1);
  std::filesystem::remove_all(dir);
}

TEST_CASE("flat fixture") {
  const MetricFixture f = *find_fixture("flat");
  CHECK(f.claimed().dim() == 5);
  CHECK(f.functions.empty());
  CHECK(all_zero(residuals(f.system, f.functions)));
}

TEST_CASE("free input files") {
  const FreeInputFile in = parse_free_inputs("name 2b\nfn p = x6^2\nfn q2 = x3 + x4\n");
  CHECK_FALSE(in.system.has_value());
  const MetricFixture f = synthesized_fixture(SystemId::T2B, in);
  CHECK(f.functions == find_fixture("2b")->functions);
  CHECK(f.claim == "2b");
}

TEST_CASE("symbolic derivatives match finite differences") {
  for (const auto& f : registry()) {
    CAPTURE(f.name);
    for (const auto& [slot, e] : f.functions) {
      CAPTURE(slot);
      for (int rep = 0; rep < 20; ++rep) {
        const FloatPoint pt = rand_point();
        for (int k = 1; k <= 7; ++k) {
          const double h = 1e-5;
          FloatPoint a = pt, b = pt;
          a[k - 1] += h;
          b[k - 1] -= h;
          const double fd = (eval_float(e, a) - eval_float(e, b)) / (2 * h);
          const double d = eval_float(ddx(e, k), pt);
          CHECK(std::abs(fd - d) <= 1e-6 * std::max(1.0, std::abs(d)));
        }
      }
    }
  }
}

}
