#include <doctest.h>

#include "oracles.hpp"
#include "stringy/fixtures.hpp"
#include "stringy/lattice.hpp"
#include "stringy/poset.hpp"
#include "support.hpp"

using namespace stringy;

namespace {

UnivariatePolynomial from_big(const std::vector<BigInt>& c) {
  UnivariatePolynomial p;
  for (std::size_t i = 0; i < c.size(); ++i) p.add_term(static_cast<int>(i), c[i]);
  return p;
}

// Boolean lattice on n atoms as subsets.
GradedPoset boolean_lattice(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  for (std::size_t s = 0; s < (1u << n); ++s)
    for (std::size_t i = 0; i < n; ++i)
      if (!(s >> i & 1u)) covers.emplace_back(s, s | (1u << i));
  return GradedPoset(1u << n, covers);
}

}  // namespace

TEST_SUITE("poset") {
  TEST_CASE("graded poset validation") {
    CHECK(kind_of([] { GradedPoset(3, {{0, 1}, {0, 2}}); }) == ErrorKind::NotGraded);
    CHECK(kind_of([] { GradedPoset(4, {{0, 1}, {1, 3}, {0, 3}, {0, 2}, {2, 3}}); }) == ErrorKind::NotGraded);
    CHECK(kind_of([] { GradedPoset(2, {{0, 1}, {1, 0}}); }) == ErrorKind::NotGraded);
    const GradedPoset chain(3, {{0, 1}, {1, 2}});
    CHECK(chain.rank() == 2);
    CHECK(chain.leq(0, 2));
    CHECK_FALSE(chain.leq(2, 0));
    CHECK(chain.intervals().size() == 6);
    CHECK_FALSE(is_eulerian(chain));
    CHECK(kind_of([&] { EulerianPoset{chain}; }) == ErrorKind::NotEulerian);
  }

  TEST_CASE("interval helpers") {
    const GradedPoset b = boolean_lattice(3);
    const Interval whole = b.whole();
    CHECK(b.rank_of(whole) == 3);
    CHECK(b.elements(whole).size() == 8);
    const Interval upper = b.to_top(whole, 1);
    CHECK(b.rank_of(upper) == 2);
    const Interval lower = b.from_bottom(whole.reversed(), 1);
    CHECK(lower.dual);
    CHECK(b.rank_of(lower) == 2);
    CHECK(b.rank_in(whole.reversed(), 1) == 2);
  }

  TEST_CASE("boolean lattices: G = 1 and B = (1 - u)^n") {
    for (std::size_t n = 0; n <= 4; ++n) {
      CAPTURE(n);
      const EulerianPoset e(boolean_lattice(n));
      CHECK(e.g_polynomial(e.whole()) == UnivariatePolynomial(1));
      const auto one_minus_u = BivariateLaurentPolynomial(1) - BivariateLaurentPolynomial::monomial(1, 1, 0);
      CHECK(e.b_polynomial(e.whole()) == one_minus_u.pow(static_cast<int>(n)));
      CHECK(e.b_via_g(e.whole()) == one_minus_u.pow(static_cast<int>(n)));
    }
  }

  TEST_CASE("G of a face lattice is the g-polynomial of the simplicial polar") {
    // upper intervals of the face lattice of the cone over P see the faces of P*
    auto g_of = [](const GradedCone& cone, bool reversed) {
      const FaceLattice lattice = face_lattice(cone);
      const Interval whole = lattice.poset().whole();
      return lattice.poset().g_polynomial(reversed ? whole.reversed() : whole);
    };
    const auto octahedron = from_big(oracle::simplicial_g({6, 12, 8}));
    CHECK(g_of(gorenstein_cone_over(polytope_fixture("cube").polytope), false) == octahedron);
    CHECK(g_of(gorenstein_cone_over(polytope_fixture("cross_polytope").polytope), true) == octahedron);
    const GradedCone hexagon(3, {{1, 0, 1}, {0, 1, 1}, {-1, 1, 1}, {-1, 0, 1}, {0, -1, 1}, {1, -1, 1}});
    CHECK(g_of(hexagon, false) == from_big(oracle::simplicial_g({6, 6})));
    CHECK(g_of(gorenstein_cone_over(polytope_fixture("quintic_dual").polytope), false) ==
          from_big(oracle::simplicial_g({5, 10, 10, 5})));
  }

  TEST_CASE("H is palindromic on face lattices") {
    const FaceLattice lattice = face_lattice(gorenstein_cone_over(polytope_fixture("cube").polytope));
    const EulerianPoset& p = lattice.poset();
    for (const auto& i : p.graded().intervals()) {
      const auto h = p.h_polynomial(i);
      const int r = static_cast<int>(p.graded().rank_of(i));
      if (r > 0) CHECK(h.is_palindromic(r - 1));
    }
  }

  TEST_CASE("B recursion and convolution agree on every interval of the cube") {
    const FaceLattice lattice = face_lattice(gorenstein_cone_over(polytope_fixture("cube").polytope));
    const EulerianPoset& p = lattice.poset();
    std::size_t n = 0;
    for (const auto& i : p.graded().intervals())
      for (const auto& j : {i, i.reversed()}) {
        CHECK(p.b_polynomial(j) == p.b_via_g(j));
        if (p.graded().rank_of(j) > 0) CHECK(p.convolution_inverse_check(j));
        ++n;
      }
    CHECK(n == 2 * p.graded().intervals().size());
  }
}
