#include "stringy/linalg.hpp"

#include <utility>

namespace stringy {

RationalVector to_rational(const IntVector& v) {
  RationalVector r;
  r.reserve(v.size());
  for (auto x : v) r.emplace_back(static_cast<long>(x));
  return r;
}

std::vector<std::size_t> rref(RationalMatrix& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t ncols = m.front().size();
  std::size_t row = 0;
  for (std::size_t col = 0; col < ncols && row < m.size(); ++col) {
    std::size_t sel = row;
    while (sel < m.size() && sgn(m[sel][col]) == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[row], m[sel]);
    const Rational inv = 1 / m[row][col];
    for (auto& x : m[row]) x *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || sgn(m[r][col]) == 0) continue;
      const Rational f = m[r][col];
      for (std::size_t k = col; k < ncols; ++k) m[r][k] -= f * m[row][k];
    }
    pivots.push_back(col);
    ++row;
  }
  m.resize(row);
  return pivots;
}

std::size_t rank(RationalMatrix m) { return rref(m).size(); }

std::size_t rank(const std::vector<IntVector>& rows) {
  RationalMatrix m;
  m.reserve(rows.size());
  for (const auto& r : rows) m.push_back(to_rational(r));
  return rank(std::move(m));
}

std::vector<RationalVector> nullspace(RationalMatrix m, std::size_t ncols) {
  const auto pivots = rref(m);
  std::vector<bool> is_pivot(ncols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<RationalVector> basis;
  for (std::size_t f = 0; f < ncols; ++f) {
    if (is_pivot[f]) continue;
    RationalVector x(ncols, Rational(0));
    x[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = -m[i][f];
    basis.push_back(std::move(x));
  }
  return basis;
}

IntVector primitive(const RationalVector& v) {
  BigInt den = 1;
  for (const auto& x : v) den = lcm(den, BigInt(x.get_den()));
  std::vector<BigInt> num;
  num.reserve(v.size());
  BigInt g = 0;
  for (const auto& x : v) {
    num.push_back(BigInt(x.get_num()) * (den / x.get_den()));
    g = gcd(g, num.back());
  }
  IntVector out(v.size(), 0);
  if (g == 0) return out;
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = to_int64(BigInt(num[i] / g));
  return out;
}

IntVector primitive(const IntVector& v) { return primitive(to_rational(v)); }

std::optional<IntVector> solve_integral(const std::vector<IntVector>& rows,
                                        const std::vector<BigInt>& rhs, std::size_t ncols) {
  const std::size_t nrows = rows.size();
  std::vector<std::vector<BigInt>> a(nrows, std::vector<BigInt>(ncols));
  for (std::size_t i = 0; i < nrows; ++i)
    for (std::size_t j = 0; j < ncols; ++j) a[i][j] = static_cast<long>(rows[i][j]);
  std::vector<std::vector<BigInt>> u(ncols, std::vector<BigInt>(ncols, 0));
  for (std::size_t j = 0; j < ncols; ++j) u[j][j] = 1;

  // Column operations: (c_p, c_j) <- (x c_p + y c_j, -(b/g) c_p + (a/g) c_j).
  auto combine = [&](std::size_t p, std::size_t j, const BigInt& x, const BigInt& y,
                     const BigInt& s, const BigInt& t) {
    for (auto* mat : {&a, &u}) {
      for (auto& r : *mat) {
        BigInt cp = r[p], cj = r[j];
        r[p] = x * cp + y * cj;
        r[j] = s * cp + t * cj;
      }
    }
  };

  std::vector<std::optional<std::size_t>> pivot_of_row(nrows);
  std::size_t col = 0;
  for (std::size_t i = 0; i < nrows && col < ncols; ++i) {
    for (std::size_t j = col + 1; j < ncols; ++j) {
      if (a[i][j] == 0) continue;
      BigInt g, x, y;
      mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a[i][col].get_mpz_t(),
                 a[i][j].get_mpz_t());
      BigInt s = -a[i][j] / g;
      BigInt t = a[i][col] / g;
      combine(col, j, x, y, s, t);
    }
    if (a[i][col] != 0) pivot_of_row[i] = col++;
  }

  std::vector<BigInt> y(ncols, 0);
  for (std::size_t i = 0; i < nrows; ++i) {
    BigInt sum = 0;
    const std::size_t limit = pivot_of_row[i] ? *pivot_of_row[i] : ncols;
    for (std::size_t j = 0; j < limit; ++j) sum += a[i][j] * y[j];
    if (pivot_of_row[i]) {
      const BigInt diff = rhs[i] - sum;
      const BigInt& d = a[i][*pivot_of_row[i]];
      if (diff % d != 0) return std::nullopt;
      y[*pivot_of_row[i]] = diff / d;
    } else if (sum != rhs[i]) {
      return std::nullopt;
    }
  }
  IntVector x(ncols, 0);
  for (std::size_t r = 0; r < ncols; ++r) {
    BigInt s = 0;
    for (std::size_t j = 0; j < ncols; ++j) s += u[r][j] * y[j];
    x[r] = to_int64(s);
  }
  return x;
}

IntVector SpanChart::project(const IntVector& x) const {
  IntVector out;
  out.reserve(coords.size());
  for (auto c : coords) out.push_back(x[c]);
  return out;
}

std::optional<IntVector> SpanChart::lift(const IntVector& projected) const {
  const std::size_t n = ambient;
  IntVector out(n, 0);
  for (std::size_t j = 0; j < n; ++j) {
    Rational s = 0;
    for (std::size_t i = 0; i < coords.size(); ++i) {
      if (projected[i] != 0 && sgn(basis[i][j]) != 0) s += basis[i][j] * projected[i];
    }
    if (s.get_den() != 1) return std::nullopt;
    out[j] = to_int64(BigInt(s.get_num()));
  }
  return out;
}

SpanChart span_chart(const std::vector<IntVector>& rows, std::size_t ncols) {
  RationalMatrix m;
  for (const auto& r : rows) m.push_back(to_rational(r));
  SpanChart chart;
  chart.ambient = ncols;
  if (m.empty()) return chart;
  chart.coords = rref(m);
  for (auto& r : m) r.resize(ncols);
  chart.basis = std::move(m);
  return chart;
}

PrimeField::value_type PrimeField::inv(value_type a) const {
  value_type result = 1, base = a % p;
  std::uint64_t e = p - 2;
  while (e) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return result;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace stringy
