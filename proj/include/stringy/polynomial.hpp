#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "stringy/numeric.hpp"

namespace stringy {

/// Univariate polynomial in t with nonnegative exponents and exact integer
/// coefficients. Zero coefficients are never stored.
class UnivariatePolynomial {
 public:
  UnivariatePolynomial() = default;
  UnivariatePolynomial(long constant);  // NOLINT(google-explicit-constructor)
  explicit UnivariatePolynomial(const std::vector<long>& coeffs);

  static UnivariatePolynomial monomial(BigInt c, int degree);
  /// (a + b t)^n
  static UnivariatePolynomial binomial_power(long a, long b, int n);

  bool is_zero() const { return terms_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const;
  BigInt coefficient(int k) const;
  const std::map<int, BigInt>& terms() const { return terms_; }
  /// Dense coefficient list of length max(degree()+1, min_length).
  std::vector<BigInt> coefficients(std::size_t min_length = 0) const;
  BigInt value_at_one() const;

  void add_term(int degree, const BigInt& c);

  UnivariatePolynomial& operator+=(const UnivariatePolynomial& o);
  UnivariatePolynomial& operator-=(const UnivariatePolynomial& o);
  UnivariatePolynomial& operator*=(const UnivariatePolynomial& o);
  friend UnivariatePolynomial operator+(UnivariatePolynomial a, const UnivariatePolynomial& b) {
    return a += b;
  }
  friend UnivariatePolynomial operator-(UnivariatePolynomial a, const UnivariatePolynomial& b) {
    return a -= b;
  }
  friend UnivariatePolynomial operator*(UnivariatePolynomial a, const UnivariatePolynomial& b) {
    return a *= b;
  }
  UnivariatePolynomial operator-() const;
  UnivariatePolynomial scaled(const BigInt& c) const;
  friend bool operator==(const UnivariatePolynomial&, const UnivariatePolynomial&) = default;

  /// Keeps terms of degree strictly below num/den.
  UnivariatePolynomial truncate_below(long num, long den = 1) const;
  UnivariatePolynomial truncate_below(const Rational& r) const;
  /// t^n p(1/t); requires degree() <= n.
  UnivariatePolynomial reversed(int n) const;
  bool is_palindromic(int n) const { return reversed(n) == *this; }

  std::string to_string(const std::string& var = "t") const;

 private:
  std::map<int, BigInt> terms_;
};

/// A signed monomial +-u^a v^b used as the image of a variable.
struct SignedMonomial {
  int sign = 1;
  int u = 0;
  int v = 0;
};

/// Sparse Laurent polynomial in u, v with exact integer coefficients.
class BivariateLaurentPolynomial {
 public:
  using Exponent = std::pair<int, int>;

  BivariateLaurentPolynomial() = default;
  BivariateLaurentPolynomial(long constant);  // NOLINT(google-explicit-constructor)

  static BivariateLaurentPolynomial monomial(BigInt c, int a, int b);
  /// p(t) with t replaced by the monomial image.
  static BivariateLaurentPolynomial from_univariate(const UnivariatePolynomial& p,
                                                    SignedMonomial t);

  bool is_zero() const { return terms_.empty(); }
  BigInt coefficient(int a, int b) const;
  const std::map<Exponent, BigInt>& terms() const { return terms_; }
  void add_term(int a, int b, const BigInt& c);
  /// True when no exponent is negative.
  bool is_polynomial() const;
  int min_u_exponent() const;
  int min_v_exponent() const;

  BivariateLaurentPolynomial& operator+=(const BivariateLaurentPolynomial& o);
  BivariateLaurentPolynomial& operator-=(const BivariateLaurentPolynomial& o);
  BivariateLaurentPolynomial& operator*=(const BivariateLaurentPolynomial& o);
  friend BivariateLaurentPolynomial operator+(BivariateLaurentPolynomial a,
                                              const BivariateLaurentPolynomial& b) {
    return a += b;
  }
  friend BivariateLaurentPolynomial operator-(BivariateLaurentPolynomial a,
                                              const BivariateLaurentPolynomial& b) {
    return a -= b;
  }
  friend BivariateLaurentPolynomial operator*(BivariateLaurentPolynomial a,
                                              const BivariateLaurentPolynomial& b) {
    return a *= b;
  }
  BivariateLaurentPolynomial operator-() const;
  BivariateLaurentPolynomial pow(int n) const;
  /// Multiplication by u^a v^b, exact for any sign of a, b.
  BivariateLaurentPolynomial shifted(int a, int b) const;
  friend bool operator==(const BivariateLaurentPolynomial&,
                         const BivariateLaurentPolynomial&) = default;

  BivariateLaurentPolynomial substitute(SignedMonomial u_image, SignedMonomial v_image) const;

  std::string to_string() const;

 private:
  std::map<Exponent, BigInt> terms_;
};

}  // namespace stringy
