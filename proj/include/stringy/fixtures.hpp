#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "stringy/invariants.hpp"
#include "stringy/lattice.hpp"

namespace stringy {

struct PolytopeFixture {
  std::string name;
  LatticePolytope polytope;
  bool reflexive = false;
  /// Fixture holding the polar dual; empty when it is not bundled.
  std::string mirror;
};

struct FanFixture {
  std::string name;
  Fan fan;
};

/// The bundled test polytopes, shipped as fixtures/<name>.json as well.
const std::vector<PolytopeFixture>& polytope_fixtures();
const std::vector<FanFixture>& fan_fixtures();

/// Throws InvalidArgument for unknown names.
const PolytopeFixture& polytope_fixture(std::string_view name);
const FanFixture& fan_fixture(std::string_view name);

}  // namespace stringy
