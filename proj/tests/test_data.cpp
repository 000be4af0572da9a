#include "doctest.h"

#include "g2hol/fixtures.hpp"

#include <fstream>
#include <sstream>

using namespace g2hol;

namespace {

std::string slurp(const std::string& name) {
  std::ifstream in(std::string(G2HOL_TEST_DATA) + "/" + name);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_SUITE("data") {

TEST_CASE("golden 2b file is the canonical built-in text") { CHECK(slurp("2b.fx") == save_fixture(*find_fixture("2b"))); }

TEST_CASE("broken metric differs from p1 in one slot") {
  const MetricFixture b = parse_fixture(slurp("broken.fx"));
  const MetricFixture p1 = *find_fixture("p1");
  for (const auto& [slot, e] : p1.functions) CHECK((b.functions.at(slot) == e) == (slot != "r6"));
  CHECK(b.functions.at("r6") - p1.functions.at("r6") == parse("x4^2"));
  CHECK_FALSE(all_zero(residuals(b.system, b.functions)));
}

TEST_CASE("free input file synthesizes the golden file") {
  const FreeInputFile in = parse_free_inputs(slurp("2b_free.fx"));
  CHECK(save_fixture(synthesized_fixture(SystemId::T2B, in)) == slurp("2b.fx"));
  CHECK_THROWS_AS(synthesized_fixture(SystemId::T2B, parse_free_inputs(slurp("2b_nonintegrable.fx"))), SynthesisError);
}

TEST_CASE("fixture directory mirrors the registry") {
  for (const auto& f : registry()) {
    CAPTURE(f.name);
    std::ifstream in(std::string(G2HOL_FIXTURE_FILES) + "/" + f.name + ".fx");
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(ss.str() == save_fixture(f));
  }
}

TEST_CASE("search path fixture") {
  const MetricFixture t = parse_fixture(slurp("tiny.fx"));
  CHECK(t.functions == find_fixture("4b1")->functions);
}

}
