#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <tuple>

#include "oracles.hpp"
#include "stringy/fixtures.hpp"
#include "stringy/invariants.hpp"
#include "stringy/lattice.hpp"
#include "support.hpp"

using namespace stringy;

namespace {

BivariateLaurentPolynomial bivariate(const std::vector<std::tuple<int, int, long>>& terms) {
  BivariateLaurentPolynomial p;
  for (const auto& [a, b, c] : terms) p.add_term(a, b, BigInt(c));
  return p;
}

UnivariatePolynomial from_big(const std::vector<BigInt>& c) {
  UnivariatePolynomial p;
  for (std::size_t i = 0; i < c.size(); ++i) p.add_term(static_cast<int>(i), c[i]);
  return p;
}

// h* of P by counting points of its dilates through the inequalities of P.
UnivariatePolynomial brute_force_s(const LatticePolytope& p) {
  const auto polar = dual_polytope(p).to_lattice();
  std::vector<oracle::Point> normals;
  for (const auto& v : polar.vertices()) {
    oracle::Point n;
    for (const auto& x : v) n.push_back(x);
    normals.push_back(n);
  }
  std::int64_t bound = 0;
  for (const auto& v : p.vertices())
    for (const auto& x : v) bound = std::max<std::int64_t>(bound, std::abs(x));
  std::vector<std::size_t> counts;
  for (std::int64_t k = 0; k <= static_cast<std::int64_t>(p.rank()); ++k)
    counts.push_back(oracle::count_dilate(normals, p.rank(), k, bound));
  return from_big(oracle::h_star(counts));
}

}  // namespace

TEST_SUITE("invariants") {
  TEST_CASE("S of a reflexive cone matches brute-force Ehrhart counts") {
    for (const auto& f : polytope_fixtures()) {
      if (!f.reflexive || f.polytope.rank() > 4) continue;
      CAPTURE(f.name);
      const auto cone = gorenstein_cone_over(f.polytope);
      const auto s = s_polynomial(cone);
      CHECK(s == brute_force_s(f.polytope));
      CHECK(s.reversed(static_cast<int>(cone.dim())) == s_polynomial_from_interior(cone));
      CHECK(s.is_palindromic(static_cast<int>(f.polytope.rank())));
    }
  }

  TEST_CASE("S of a non-reflexive segment") {
    const auto cone = gorenstein_cone_over(polytope_fixture("segment_m1_2").polytope);
    CHECK(s_polynomial(cone) == UnivariatePolynomial(std::vector<long>{1, 2}));
    CHECK(tilde_s_polynomial(cone) == UnivariatePolynomial(std::vector<long>{0, 2}));
  }

  TEST_CASE("tilde S goldens") {
    const auto cube = gorenstein_cone_over(polytope_fixture("cube").polytope);
    CHECK(tilde_s_polynomial(cube) == UnivariatePolynomial(std::vector<long>{0, 1, 17, 1}));
    const auto diamond = gorenstein_cone_over(polytope_fixture("diamond").polytope);
    CHECK(tilde_s_polynomial(diamond) == UnivariatePolynomial(std::vector<long>{0, 1, 1}));
    CHECK(kind_of([&] { tilde_s_simplicial(diamond); }) == ErrorKind::NotSimplicial);
  }

  TEST_CASE("simplicial tilde S agrees with the corrected face sum") {
    for (const char* name : {"p2_simplex", "p2_dual", "quartic_simplex", "cross_polytope"}) {
      CAPTURE(name);
      const auto lattice = face_lattice(gorenstein_cone_over(polytope_fixture(name).polytope));
      for (std::size_t c = 0; c < lattice.size(); ++c) {
        const auto& face = lattice.face_cone(c);
        if (!face.is_simplicial()) continue;
        CHECK(tilde_s_polynomial(face) == tilde_s_simplicial(face));
      }
    }
  }

  TEST_CASE("box points of a simplicial cone") {
    const auto cone = gorenstein_cone_over(polytope_fixture("segment_m1_2").polytope);
    const auto table = box_points(cone);
    REQUIRE(table.by_shift.count(1) == 1);
    CHECK(table.by_shift.at(1) == std::vector<IntVector>{{0, 1}, {1, 1}});
    CHECK(table.by_shift.count(0) == 0);
    CHECK(kind_of([] { box_points(gorenstein_cone_over(polytope_fixture("cube").polytope)); }) ==
          ErrorKind::NotSimplicial);
  }

  TEST_CASE("E_st of small Calabi-Yau hypersurfaces") {
    const ReflexivePair diamond(polytope_fixture("diamond").polytope);
    CHECK(e_st_hypersurface(diamond) == bivariate({{0, 0, 1}, {1, 0, -1}, {0, 1, -1}, {1, 1, 1}}));
    const ReflexivePair cube(polytope_fixture("cube").polytope);
    CHECK(e_st_hypersurface(cube) ==
          bivariate({{0, 0, 1}, {2, 0, 1}, {1, 1, 20}, {0, 2, 1}, {2, 2, 1}}));
    const ReflexivePair segment(polytope_fixture("segment").polytope);
    CHECK(e_st_hypersurface(segment) == BivariateLaurentPolynomial(2));
  }

  TEST_CASE("both E_st formulas and the mirror transform") {
    for (const auto& f : polytope_fixtures()) {
      if (!f.reflexive || f.polytope.rank() > 3) continue;
      CAPTURE(f.name);
      const ReflexivePair pair(f.polytope);
      const auto e = e_st_hypersurface(pair);
      CHECK(e == e_st_oracle(pair));
      CHECK(mirror_transform(e, pair.rank()) == e_st_hypersurface(pair.mirror()));
    }
  }

  TEST_CASE("hodge table errors and symmetry") {
    CHECK(kind_of([] { stringy_hodge_table(BivariateLaurentPolynomial::monomial(1, -1, 0), 1); }) ==
          ErrorKind::InvalidArgument);
    CHECK(kind_of([] { stringy_hodge_table(BivariateLaurentPolynomial(-1), 1); }) ==
          ErrorKind::NegativeHodgeNumber);
    const auto table = stringy_hodge_table(bivariate({{0, 0, 1}, {1, 0, -1}, {0, 1, -1}, {1, 1, 1}}), 1);
    CHECK(table.at(1, 0) == 1);
    CHECK(table.at(0, 0) == 1);
    CHECK(table.is_symmetric());
    CHECK(table.signed_sum() == bivariate({{0, 0, 1}, {1, 0, -1}, {0, 1, -1}, {1, 1, 1}}));
  }

  TEST_CASE("string cohomology table sums back to E_st") {
    for (const char* name : {"diamond", "p2_simplex", "cube"}) {
      CAPTURE(name);
      const ReflexivePair pair(polytope_fixture(name).polytope);
      IntVector apex(pair.rank() + 1, 0);
      apex.back() = 1;
      const auto trivial = string_cohomology_table(pair, FanSubdivision::trivial(pair.dual_cone()));
      CHECK(trivial.signed_sum() == e_st_hypersurface(pair));
      CHECK(trivial == string_cohomology_table(pair, star_subdivision(pair.dual_cone(), apex)));
    }
    const ReflexivePair pair(polytope_fixture("diamond").polytope);
    CHECK(kind_of([&] { string_cohomology_table(pair, FanSubdivision::trivial(pair.cone())); }) ==
          ErrorKind::InvalidSubdivision);
  }

  TEST_CASE("toric E-functions") {
    const auto uv = bivariate({{1, 1, 1}});
    CHECK(e_st_toric(fan_fixture("p1_fan").fan) == 1 + uv);
    CHECK(e_st_toric(fan_fixture("p2_fan").fan) == 1 + uv + uv * uv);
    CHECK(e_st_toric(fan_fixture("p112_fan").fan) == (1 + uv) * (1 + uv));
    const auto& p2 = fan_fixture("p2_fan").fan;
    CHECK(e_int_orbit_closure(p2, {0}) == 1 + uv);
    CHECK(e_int_orbit_closure(p2, {0, 1}) == BivariateLaurentPolynomial(1));
    CHECK(e_int_orbit_closure(p2, {}) == e_st_toric(p2));
    CHECK(fan_cones(p2).size() == 7);
  }

  TEST_CASE("toric errors") {
    const auto& p2 = fan_fixture("p2_fan").fan;
    CHECK(kind_of([&] { e_int_orbit_closure(p2, {0, 1, 2}); }) == ErrorKind::ConeNotInFan);
    Fan half = p2;
    half.cones.pop_back();
    CHECK(kind_of([&] { e_st_toric(half); }) == ErrorKind::NotComplete);
    const Fan skew{2, {{3, 1}, {1, 3}, {-1, -1}}, {{0, 1}, {1, 2}, {0, 2}}};
    CHECK(kind_of([&] { e_st_toric(skew); }) == ErrorKind::NotGorenstein);
  }
}
