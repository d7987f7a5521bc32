#include <doctest.h>

#include <bit>

#include "stringy/fixtures.hpp"
#include "stringy/koszul.hpp"
#include "support.hpp"

using namespace stringy;

namespace {

IntVector apex(std::size_t rank) {
  IntVector a(rank + 1, 0);
  a.back() = 1;
  return a;
}

struct Setup {
  ReflexivePair pair;
  DegreeOneElement f;
  DegreeOneElement g;

  explicit Setup(const char* name, std::uint64_t seed = 1)
      : pair(polytope_fixture(name).polytope),
        f(generic_element(FanSubdivision::trivial(pair.cone()), seed)),
        g(generic_element(FanSubdivision::trivial(pair.dual_cone()), seed + 1)) {}
};

}  // namespace

TEST_SUITE("koszul") {
  TEST_CASE("differential respects both gradings") {
    const Setup s("diamond");
    const auto complex = build_complex(s.pair, s.f, s.g);
    CHECK(complex.cap == 3);
    CHECK(complex.lattice_rank == 3);
    for (const auto& [source, block] : complex.blocks) {
      CHECK(block.target.total == source.total + 1);
      CHECK(block.target.weight == source.weight);
      CHECK(block.images.size() == complex.pieces.at(source).size());
      for (const auto& row : block.images)
        for (const auto& [col, x] : row) CHECK(col < complex.pieces.at(block.target).size());
    }
    for (const auto& [degree, basis] : complex.pieces)
      for (const auto& e : basis) {
        CHECK(e.deg_m + e.deg_n == degree.total);
        CHECK(std::popcount(e.wedge) + e.deg_m - e.deg_n == degree.weight);
      }
  }

  TEST_CASE("cohomology agrees with the face decomposition") {
    for (const char* name : {"segment", "diamond", "p2_simplex"}) {
      CAPTURE(name);
      const Setup s(name, 3);
      const auto cmp = compare_with_decomposition(s.pair, s.f, s.g);
      CHECK(cmp.agrees);
      CHECK(cmp.mismatches.empty());
      CHECK_FALSE(cmp.contributions.empty());
    }
  }

  TEST_CASE("deformation on K* keeps the cohomology") {
    const Setup s("diamond", 5);
    KoszulOptions options;
    options.dual_subdivision = star_subdivision(s.pair.dual_cone(), apex(2));
    const auto g = generic_element(*options.dual_subdivision, 9);
    const auto deformed = compare_with_decomposition(s.pair, s.f, g, options);
    CHECK(deformed.agrees);
    CHECK(deformed.observed == compare_with_decomposition(s.pair, s.f, s.g).observed);
  }

  TEST_CASE("rational and prime cohomology coincide") {
    const Setup s("p2_simplex", 2);
    const auto complex = build_complex(s.pair, s.f, s.g);
    CHECK(cohomology_dims(complex) == cohomology_dims(complex, FieldSpec::rational_field()));
  }

  TEST_CASE("zero differential leaves every piece as cohomology") {
    const Setup s("segment");
    KoszulOptions options;
    options.check_regularity = false;
    const DegreeOneElement f{s.pair.cone(), {}, 0};
    const DegreeOneElement g{s.pair.dual_cone(), {}, 0};
    const auto complex = build_complex(s.pair, f, g, options);
    const auto h = cohomology_dims(complex);
    for (const auto& [degree, basis] : complex.pieces)
      if (degree.total <= complex.cap) CHECK(h.at(degree) == basis.size());
  }

  TEST_CASE("monomial differentials still square to zero") {
    const Setup s("diamond");
    KoszulOptions options;
    options.check_regularity = false;
    const DegreeOneElement f{s.pair.cone(), {{IntVector{1, 0, 1}, 1}}, 0};
    const DegreeOneElement g{s.pair.dual_cone(), {{IntVector{1, 1, 1}, 2}, {IntVector{0, 0, 1}, 3}}, 0};
    CHECK_NOTHROW(build_complex(s.pair, f, g, options));
    CHECK(kind_of([&] { build_complex(s.pair, f, g); }) == ErrorKind::NotRegular);
  }

  TEST_CASE("argument errors") {
    const Setup s("diamond");
    KoszulOptions small;
    small.cap = 2;
    CHECK(kind_of([&] { build_complex(s.pair, s.f, s.g, small); }) == ErrorKind::CapTooSmall);
    CHECK(kind_of([&] { build_complex(s.pair, s.g, s.f); }) == ErrorKind::InvalidArgument);
    KoszulOptions wrong;
    wrong.dual_subdivision = FanSubdivision::trivial(s.pair.cone());
    CHECK(kind_of([&] { build_complex(s.pair, s.f, s.g, wrong); }) == ErrorKind::InvalidSubdivision);
  }

  TEST_CASE("larger cap reports its boundary") {
    const Setup s("segment");
    KoszulOptions options;
    options.cap = 3;
    const auto cmp = compare_with_decomposition(s.pair, s.f, s.g, options);
    CHECK(cmp.agrees);
    for (const auto& d : cmp.boundary) CHECK(d.total == 3);
  }
}
