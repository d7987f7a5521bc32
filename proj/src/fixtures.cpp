#include "stringy/fixtures.hpp"

#include "stringy/error.hpp"

namespace stringy {

namespace {

std::vector<PolytopeFixture> make_polytopes() {
  auto reflexive = [](std::string name, std::size_t rank, std::vector<IntVector> v,
                      std::string mirror) {
    return PolytopeFixture{std::move(name), LatticePolytope(rank, std::move(v)), true,
                           std::move(mirror)};
  };
  std::vector<PolytopeFixture> out;
  out.push_back(reflexive("segment", 1, {{-1}, {1}}, "segment"));
  out.push_back(PolytopeFixture{"segment_m1_2", LatticePolytope(1, {{-1}, {2}}), false, ""});
  out.push_back(reflexive("diamond", 2, {{1, 0}, {0, 1}, {-1, 0}, {0, -1}}, "square"));
  out.push_back(reflexive("square", 2, {{1, 1}, {1, -1}, {-1, 1}, {-1, -1}}, "diamond"));
  out.push_back(reflexive("p2_simplex", 2, {{1, 0}, {0, 1}, {-1, -1}}, "p2_dual"));
  out.push_back(reflexive("p2_dual", 2, {{-1, -1}, {2, -1}, {-1, 2}}, "p2_simplex"));
  out.push_back(reflexive("cube", 3,
                          {{-1, -1, -1}, {-1, -1, 1}, {-1, 1, -1}, {-1, 1, 1},
                           {1, -1, -1}, {1, -1, 1}, {1, 1, -1}, {1, 1, 1}},
                          "cross_polytope"));
  out.push_back(reflexive("cross_polytope", 3,
                          {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}},
                          "cube"));
  out.push_back(reflexive("quartic_simplex", 3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -1}},
                          "quartic_dual"));
  out.push_back(reflexive("quartic_dual", 3,
                          {{3, -1, -1}, {-1, 3, -1}, {-1, -1, 3}, {-1, -1, -1}},
                          "quartic_simplex"));
  out.push_back(reflexive("quintic_simplex", 4,
                          {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {-1, -1, -1, -1}},
                          "quintic_dual"));
  out.push_back(reflexive("quintic_dual", 4,
                          {{4, -1, -1, -1}, {-1, 4, -1, -1}, {-1, -1, 4, -1}, {-1, -1, -1, 4},
                           {-1, -1, -1, -1}},
                          "quintic_simplex"));
  return out;
}

std::vector<FanFixture> make_fans() {
  return {
      {"p1_fan", Fan{1, {{1}, {-1}}, {{0}, {1}}}},
      {"p2_fan", Fan{2, {{1, 0}, {0, 1}, {-1, -1}}, {{0, 1}, {1, 2}, {0, 2}}}},
      {"p112_fan", Fan{2, {{1, 0}, {0, 1}, {-1, -2}}, {{0, 1}, {1, 2}, {0, 2}}}},
  };
}

}  // namespace

const std::vector<PolytopeFixture>& polytope_fixtures() {
  static const std::vector<PolytopeFixture> fixtures = make_polytopes();
  return fixtures;
}

const std::vector<FanFixture>& fan_fixtures() {
  static const std::vector<FanFixture> fixtures = make_fans();
  return fixtures;
}

const PolytopeFixture& polytope_fixture(std::string_view name) {
  for (const auto& f : polytope_fixtures())
    if (f.name == name) return f;
  throw Error(ErrorKind::InvalidArgument, "unknown polytope fixture '" + std::string(name) + "'");
}

const FanFixture& fan_fixture(std::string_view name) {
  for (const auto& f : fan_fixtures())
    if (f.name == name) return f;
  throw Error(ErrorKind::InvalidArgument, "unknown fan fixture '" + std::string(name) + "'");
}

}  // namespace stringy
