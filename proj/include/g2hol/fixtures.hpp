#pragma once

#include "g2hol/expr.hpp"
#include "g2hol/holonomy.hpp"
#include "g2hol/pde.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace g2hol {

struct ExpectedSlot {
  std::string slot;             // one of kHSlots
  std::optional<QSqrt2> value;  // nullopt: starred, not compared
  friend bool operator==(const ExpectedSlot&, const ExpectedSlot&) = default;
};

struct ExpectedOperator {
  std::string op;  // OperatorId text
  std::vector<ExpectedSlot> slots;
  friend bool operator==(const ExpectedOperator&, const ExpectedOperator&) = default;
};

struct MetricFixture {
  std::string name;
  std::vector<std::string> comments;  // '#' lines, without the marker
  SystemId system = SystemId::P1;
  std::string claim;  // catalogue label
  Point point = origin();
  FunctionBundle functions;
  std::vector<ExpectedOperator> expected;

  Coframe coframe() const { return build_coframe(system, functions); }
  SubalgebraSpec claimed() const { return catalogue_from_label(claim); }
  friend bool operator==(const MetricFixture&, const MetricFixture&) = default;
};

class FixtureError : public std::invalid_argument {
 public:
  FixtureError(const std::string& origin, int line, const std::string& msg)
      : std::invalid_argument(origin + ":" + std::to_string(line) + ": " + msg), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Parses the text format; validates the slot schema. Throws FixtureError.
MetricFixture parse_fixture(const std::string& text, const std::string& origin = "<fixture>");
// Input of synthesize: same format, 'fn' lines name free inputs, 'system' and 'claim' optional.
struct FreeInputFile {
  std::optional<SystemId> system;
  MetricFixture meta;  // functions hold the unvalidated free inputs; claim may be empty
};
FreeInputFile parse_free_inputs(const std::string& text, const std::string& origin = "<input>");
// Fixture built from synthesized slots, carrying over name, comments, point and expectations.
MetricFixture synthesized_fixture(SystemId s, const FreeInputFile& in);

// Canonical text; parse_fixture(save_fixture(f)) == f.
std::string save_fixture(const MetricFixture& f);
MetricFixture load_fixture(const std::string& path);
void save_fixture_file(const MetricFixture& f, const std::string& path);

// Built-in fixtures in a fixed order.
const std::vector<MetricFixture>& registry();
// Identity coframe of system T4B1, claimed m.
MetricFixture flat_fixture();
// Registry, then "flat", then <dir>/<name>.fx for each dir in HOLONOMY_FIXTURE_DIR (':'-separated).
std::optional<MetricFixture> find_fixture(const std::string& name);

struct OperatorComparison {
  std::string op;
  HParams computed;
  bool in_h = false;
  std::vector<std::string> mismatches;  // "slot: expected X, got Y"
  bool ok() const { return in_h && mismatches.empty(); }
};
std::vector<OperatorComparison> compare_expected(const MetricFixture& f, Pipeline& p);

}  // namespace g2hol
