#include <doctest.h>

#include "stringy/polynomial.hpp"

using namespace stringy;

TEST_SUITE("polynomial") {
  TEST_CASE("univariate arithmetic") {
    const UnivariatePolynomial p({1, 2, 1});
    CHECK(p == UnivariatePolynomial::binomial_power(1, 1, 2));
    CHECK(p.degree() == 2);
    CHECK(p.value_at_one() == 4);
    CHECK((p - p).is_zero());
    CHECK((p * UnivariatePolynomial({1, -1})) == UnivariatePolynomial({1, 1, -1, -1}));
    CHECK(UnivariatePolynomial().degree() == -1);
  }

  TEST_CASE("truncation and reversal") {
    const UnivariatePolynomial p({1, 2, 3, 4});
    CHECK(p.truncate_below(3, 2) == UnivariatePolynomial({1, 2}));
    CHECK(p.truncate_below(2) == UnivariatePolynomial({1, 2}));
    CHECK(p.reversed(3) == UnivariatePolynomial({4, 3, 2, 1}));
    CHECK(UnivariatePolynomial({0, 1, 17, 1}).is_palindromic(4));
    CHECK_FALSE(p.is_palindromic(3));
  }

  TEST_CASE("coefficients survive past machine words") {
    UnivariatePolynomial p = UnivariatePolynomial::binomial_power(1, 1, 80);
    CHECK(p.coefficient(40) == BigInt("107507208733336176461620"));
    CHECK(p.to_string().rfind("1 + 80*t", 0) == 0);
  }

  TEST_CASE("laurent substitution") {
    // (1 - u)(1 - v) under u -> 1/u, then times -u
    BivariateLaurentPolynomial e = BivariateLaurentPolynomial(1) - BivariateLaurentPolynomial::monomial(1, 1, 0);
    e *= BivariateLaurentPolynomial(1) - BivariateLaurentPolynomial::monomial(1, 0, 1);
    const auto flipped = e.substitute({1, -1, 0}, {1, 0, 1});
    CHECK_FALSE(flipped.is_polynomial());
    CHECK(flipped.min_u_exponent() == -1);
    const auto back = flipped * BivariateLaurentPolynomial::monomial(-1, 1, 0);
    CHECK(back == e);
  }

  TEST_CASE("from univariate with signed monomial") {
    const auto b = BivariateLaurentPolynomial::from_univariate(UnivariatePolynomial({1, 1, 1}), {-1, 1, 1});
    CHECK(b.coefficient(1, 1) == -1);
    CHECK(b.coefficient(2, 2) == 1);
    CHECK(b.to_string() == "1 - u*v + u^2*v^2");
  }

  TEST_CASE("zero coefficients are never stored") {
    BivariateLaurentPolynomial p = BivariateLaurentPolynomial::monomial(3, -1, 2);
    p.add_term(-1, 2, BigInt(-3));
    CHECK(p.is_zero());
    CHECK(p.terms().empty());
  }
}
