#pragma once

#include <string>
#include <vector>

namespace g2hol::detail {

struct FixtureSource {
  const char* name;
  const char* text;
};

const std::vector<FixtureSource>& fixture_sources();

}  // namespace g2hol::detail
