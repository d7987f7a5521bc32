#include <doctest.h>

#include <random>

#include "stringy/fixtures.hpp"
#include "stringy/linalg.hpp"
#include "stringy/semigroup.hpp"
#include "support.hpp"

using namespace stringy;

namespace {

GradedCone cone_of(const char* name) { return gorenstein_cone_over(polytope_fixture(name).polytope); }

IntVector apex(std::size_t rank) {
  IntVector a(rank + 1, 0);
  a.back() = 1;
  return a;
}

// rows of B * C for random integer B (n x k) and C (k x m): rank k with
// overwhelming probability, and never more.
std::vector<SparseIntRow> low_rank_product(std::size_t n, std::size_t k, std::size_t m,
                                           unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<long> dist(-1000, 1000);
  std::vector<std::vector<long>> b(n, std::vector<long>(k)), c(k, std::vector<long>(m));
  for (auto& row : b)
    for (auto& x : row) x = dist(rng);
  for (auto& row : c)
    for (auto& x : row) x = dist(rng);
  std::vector<SparseIntRow> rows(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      BigInt s = 0;
      for (std::size_t t = 0; t < k; ++t) s += BigInt(b[i][t]) * c[t][j];
      if (s != 0) rows[i].emplace_back(j, s);
    }
  return rows;
}

std::vector<std::size_t> dims(std::initializer_list<std::size_t> v) { return v; }

}  // namespace

TEST_SUITE("semigroup") {
  TEST_CASE("certified rational rank") {
    CHECK(certified_rational_rank({}, 4) == 0);
    CHECK(certified_rational_rank({{{0, 1}, {1, 2}}, {{0, 2}, {1, 4}}}, 2) == 1);
    // singular mod the default prime, regular over Q
    const BigInt p = 2147483647;
    CHECK(certified_rational_rank({{{0, p}, {1, 1}}, {{0, 1}, {1, p}}}, 2) == 2);
    CHECK(certified_rational_rank({{{0, p}}, {{1, 1}}}, 2) == 2);
    CHECK(certified_rational_rank(low_rank_product(12, 5, 9, 1), 9) == 5);
    CHECK(certified_rational_rank(low_rank_product(30, 17, 40, 2), 40) == 17);
    CHECK(certified_rational_rank(low_rank_product(8, 8, 8, 3), 8) == 8);
  }

  TEST_CASE("field specification") {
    CHECK(kind_of([] { FieldSpec::prime_field(101).check(); }) == ErrorKind::FieldCharacteristicTooSmall);
    CHECK(kind_of([] { FieldSpec::prime_field(1000004).check(); }) == ErrorKind::InvalidArgument);
    FieldSpec::prime_field(kMinimumPrime).check();
    CHECK(FieldSpec::rational_field().describe() == "rational");
    CHECK(FieldSpec{}.describe() == "prime:2147483647");
    const auto cone = cone_of("segment");
    const auto g = DegreeOneElement::random(cone, 1);
    CHECK(kind_of([&] { graded_quotient_dims(g, FanSubdivision::trivial(cone), FieldSpec::prime_field(7)); }) ==
          ErrorKind::FieldCharacteristicTooSmall);
  }

  TEST_CASE("random elements are reproducible") {
    const auto cone = cone_of("diamond");
    const auto a = DegreeOneElement::random(cone, 42);
    const auto b = DegreeOneElement::random(cone, 42);
    CHECK(a.coefficients == b.coefficients);
    CHECK(a.coefficients.size() == 5);
    CHECK(a.coefficients != DegreeOneElement::random(cone, 43).coefficients);
    for (const auto& [m, c] : a.coefficients) {
      CHECK(c >= 1);
      CHECK(c <= static_cast<long>(kMaxCoefficient));
    }
    CHECK(logarithmic_derivatives(a).size() == cone.dim());
  }

  TEST_CASE("deformed product") {
    const auto cone = cone_of("diamond");
    const auto star = star_subdivision(cone, apex(2));
    const auto trivial = FanSubdivision::trivial(cone);
    CHECK(deformed_product(trivial, {1, 0, 1}, {-1, 0, 1}) == IntVector{0, 0, 2});
    CHECK_FALSE(deformed_product(star, {1, 0, 1}, {-1, 0, 1}).has_value());
    CHECK(deformed_product(star, {1, 0, 1}, {0, 1, 1}) == IntVector{1, 1, 2});
    CHECK(deformed_product(star, {0, 0, 1}, {-1, 0, 1}) == IntVector{-1, 0, 2});
    CHECK(kind_of([&] { deformed_product(star, {0, 0, -1}, {0, 0, 1}); }) == ErrorKind::PointOutsideCone);
  }

  TEST_CASE("graded dimensions of small cones") {
    const auto segment = cone_of("segment");
    const auto g = generic_element(FanSubdivision::trivial(segment), 1);
    const auto r = graded_quotient_dims(g, FanSubdivision::trivial(segment));
    CHECK(r.dims_r0 == dims({1, 1, 0}));
    CHECK(r.dims_r1 == dims({0, 1, 0}));
    CHECK(r.r0_above_top == 0);

    const auto cube = cone_of("cube");
    const auto sigma = FanSubdivision::trivial(cube);
    const auto h = generic_element(sigma, 7);
    const auto prime = graded_quotient_dims(h, sigma);
    CHECK(prime.dims_r0 == dims({1, 23, 23, 1, 0}));
    CHECK(prime.dims_r1 == dims({0, 1, 17, 1, 0}));
    CHECK(prime.seed == h.seed);
    CHECK(graded_quotient_dims(h, sigma, FieldSpec::rational_field()) == prime);
  }

  TEST_CASE("star subdivision keeps the dimensions") {
    const auto cone = cone_of("p2_dual");
    const auto star = star_subdivision(cone, apex(2));
    star.validate();
    const auto trivial = graded_quotient_dims(generic_element(FanSubdivision::trivial(cone), 3),
                                              FanSubdivision::trivial(cone));
    const auto deformed = graded_quotient_dims(generic_element(star, 3), star);
    CHECK(deformed == trivial);
    CHECK_FALSE(deformed.trivial_subdivision);
    CHECK(deformed.subdivision.effective_heights.size() == 10);
  }

  TEST_CASE("certified quotient dims cross-checks a prime") {
    const auto cone = cone_of("p2_simplex");
    const auto sigma = FanSubdivision::trivial(cone);
    const auto report = certified_quotient_dims(generic_element(sigma, 5), sigma);
    CHECK(report.field == FieldSpec::rational_field());
    REQUIRE(report.cross_checked_prime.has_value());
    CHECK(*report.cross_checked_prime == FieldSpec{}.prime);
    CHECK(report.dims_r0 == dims({1, 1, 1, 0}));
  }

  TEST_CASE("regularity") {
    const auto cone = cone_of("diamond");
    const auto sigma = FanSubdivision::trivial(cone);
    CHECK(is_sigma_regular(generic_element(sigma, 2), sigma).regular);
    const DegreeOneElement only_apex{cone, {{apex(2), 1}}, 0};
    const auto verdict = is_sigma_regular(only_apex, sigma);
    CHECK_FALSE(verdict.regular);
    CHECK(verdict.witness == std::optional<std::size_t>(0));
    CHECK_FALSE(verdict.note.empty());
    CHECK(kind_of([&] { pairing_matrix(only_apex, sigma, 1); }) == ErrorKind::NotRegular);
  }

  TEST_CASE("pairing into the top interior degree") {
    const auto cone = cone_of("p2_simplex");
    const auto sigma = FanSubdivision::trivial(cone);
    const auto g = generic_element(sigma, 11);
    for (std::size_t k = 0; k <= cone.dim(); ++k) {
      CAPTURE(k);
      const auto report = pairing_matrix(g, sigma, k);
      CHECK(report.full_rank);
      CHECK(report.r1_symmetric);
    }
  }

  TEST_CASE("computed string cohomology matches the tilde S table") {
    for (const char* name : {"diamond", "p2_simplex"}) {
      CAPTURE(name);
      const ReflexivePair pair(polytope_fixture(name).polytope);
      const auto sigma = star_subdivision(pair.dual_cone(), apex(pair.rank()));
      CHECK(computed_string_cohomology_table(pair, sigma, 4) == string_cohomology_table(pair, sigma));
    }
  }
}
