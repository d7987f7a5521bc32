#include "stringy/polynomial.hpp"

#include <cstdlib>
#include <sstream>

namespace stringy {

namespace {

template <class Map, class Key>
void accumulate(Map& terms, const Key& key, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

}  // namespace

UnivariatePolynomial::UnivariatePolynomial(long constant) {
  if (constant != 0) terms_.emplace(0, BigInt(constant));
}

UnivariatePolynomial::UnivariatePolynomial(const std::vector<long>& coeffs) {
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    add_term(static_cast<int>(i), BigInt(coeffs[i]));
}

UnivariatePolynomial UnivariatePolynomial::monomial(BigInt c, int degree) {
  UnivariatePolynomial p;
  p.add_term(degree, c);
  return p;
}

UnivariatePolynomial UnivariatePolynomial::binomial_power(long a, long b, int n) {
  UnivariatePolynomial base;
  base.add_term(0, BigInt(a));
  base.add_term(1, BigInt(b));
  UnivariatePolynomial out(1);
  for (int i = 0; i < n; ++i) out *= base;
  return out;
}

int UnivariatePolynomial::degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first; }

BigInt UnivariatePolynomial::coefficient(int k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? BigInt(0) : it->second;
}

std::vector<BigInt> UnivariatePolynomial::coefficients(std::size_t min_length) const {
  std::size_t n = std::max<std::size_t>(static_cast<std::size_t>(degree() + 1), min_length);
  std::vector<BigInt> out(n, BigInt(0));
  for (const auto& [k, c] : terms_) out[static_cast<std::size_t>(k)] = c;
  return out;
}

BigInt UnivariatePolynomial::value_at_one() const {
  BigInt s = 0;
  for (const auto& [k, c] : terms_) s += c;
  return s;
}

void UnivariatePolynomial::add_term(int degree, const BigInt& c) { accumulate(terms_, degree, c); }

UnivariatePolynomial& UnivariatePolynomial::operator+=(const UnivariatePolynomial& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

UnivariatePolynomial& UnivariatePolynomial::operator-=(const UnivariatePolynomial& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

UnivariatePolynomial& UnivariatePolynomial::operator*=(const UnivariatePolynomial& o) {
  std::map<int, BigInt> out;
  for (const auto& [i, a] : terms_)
    for (const auto& [j, b] : o.terms_) accumulate(out, i + j, BigInt(a * b));
  terms_ = std::move(out);
  return *this;
}

UnivariatePolynomial UnivariatePolynomial::operator-() const { return scaled(BigInt(-1)); }

UnivariatePolynomial UnivariatePolynomial::scaled(const BigInt& c) const {
  UnivariatePolynomial p;
  for (const auto& [k, a] : terms_) p.add_term(k, BigInt(a * c));
  return p;
}

UnivariatePolynomial UnivariatePolynomial::truncate_below(long num, long den) const {
  return truncate_below(Rational(num, den));
}

UnivariatePolynomial UnivariatePolynomial::truncate_below(const Rational& r) const {
  UnivariatePolynomial p;
  for (const auto& [k, c] : terms_)
    if (Rational(k) < r) p.terms_.emplace(k, c);
  return p;
}

UnivariatePolynomial UnivariatePolynomial::reversed(int n) const {
  UnivariatePolynomial p;
  for (const auto& [k, c] : terms_) p.add_term(n - k, c);
  return p;
}

std::string UnivariatePolynomial::to_string(const std::string& var) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    BigInt mag = abs(c);
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    if (k == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << "*";
    os << var;
    if (k != 1) os << "^" << k;
  }
  return os.str();
}

BivariateLaurentPolynomial::BivariateLaurentPolynomial(long constant) {
  if (constant != 0) terms_.emplace(Exponent{0, 0}, BigInt(constant));
}

BivariateLaurentPolynomial BivariateLaurentPolynomial::monomial(BigInt c, int a, int b) {
  BivariateLaurentPolynomial p;
  p.add_term(a, b, c);
  return p;
}

BivariateLaurentPolynomial BivariateLaurentPolynomial::from_univariate(
    const UnivariatePolynomial& p, SignedMonomial t) {
  BivariateLaurentPolynomial out;
  for (const auto& [k, c] : p.terms()) {
    BigInt coeff = (t.sign < 0 && (k % 2 != 0)) ? BigInt(-c) : c;
    out.add_term(t.u * k, t.v * k, coeff);
  }
  return out;
}

BigInt BivariateLaurentPolynomial::coefficient(int a, int b) const {
  auto it = terms_.find({a, b});
  return it == terms_.end() ? BigInt(0) : it->second;
}

void BivariateLaurentPolynomial::add_term(int a, int b, const BigInt& c) {
  accumulate(terms_, Exponent{a, b}, c);
}

bool BivariateLaurentPolynomial::is_polynomial() const {
  for (const auto& [e, c] : terms_)
    if (e.first < 0 || e.second < 0) return false;
  return true;
}

int BivariateLaurentPolynomial::min_u_exponent() const {
  int m = 0;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (first || e.first < m) m = e.first;
    first = false;
  }
  return m;
}

int BivariateLaurentPolynomial::min_v_exponent() const {
  int m = 0;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (first || e.second < m) m = e.second;
    first = false;
  }
  return m;
}

BivariateLaurentPolynomial& BivariateLaurentPolynomial::operator+=(
    const BivariateLaurentPolynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, c);
  return *this;
}

BivariateLaurentPolynomial& BivariateLaurentPolynomial::operator-=(
    const BivariateLaurentPolynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, -c);
  return *this;
}

BivariateLaurentPolynomial& BivariateLaurentPolynomial::operator*=(
    const BivariateLaurentPolynomial& o) {
  std::map<Exponent, BigInt> out;
  for (const auto& [e1, a] : terms_)
    for (const auto& [e2, b] : o.terms_)
      accumulate(out, Exponent{e1.first + e2.first, e1.second + e2.second}, BigInt(a * b));
  terms_ = std::move(out);
  return *this;
}

BivariateLaurentPolynomial BivariateLaurentPolynomial::operator-() const {
  BivariateLaurentPolynomial p;
  for (const auto& [e, c] : terms_) p.terms_.emplace(e, -c);
  return p;
}

BivariateLaurentPolynomial BivariateLaurentPolynomial::pow(int n) const {
  BivariateLaurentPolynomial out(1);
  for (int i = 0; i < n; ++i) out *= *this;
  return out;
}

BivariateLaurentPolynomial BivariateLaurentPolynomial::shifted(int a, int b) const {
  BivariateLaurentPolynomial p;
  for (const auto& [e, c] : terms_) p.terms_.emplace(Exponent{e.first + a, e.second + b}, c);
  return p;
}

BivariateLaurentPolynomial BivariateLaurentPolynomial::substitute(SignedMonomial u_image,
                                                                  SignedMonomial v_image) const {
  BivariateLaurentPolynomial out;
  for (const auto& [e, c] : terms_) {
    const auto [i, j] = e;
    int sign = 1;
    if (u_image.sign < 0 && std::abs(i) % 2 == 1) sign = -sign;
    if (v_image.sign < 0 && std::abs(j) % 2 == 1) sign = -sign;
    out.add_term(u_image.u * i + v_image.u * j, u_image.v * i + v_image.v * j,
                 sign < 0 ? BigInt(-c) : c);
  }
  return out;
}

std::string BivariateLaurentPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    BigInt mag = abs(c);
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    const bool constant = e.first == 0 && e.second == 0;
    if (constant) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << "*";
    bool need_star = false;
    if (e.first != 0) {
      os << "u";
      if (e.first != 1) os << "^" << e.first;
      need_star = true;
    }
    if (e.second != 0) {
      if (need_star) os << "*";
      os << "v";
      if (e.second != 1) os << "^" << e.second;
    }
  }
  return os.str();
}

}  // namespace stringy
