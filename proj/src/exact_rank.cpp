#include <algorithm>

#include "stringy/error.hpp"
#include "stringy/linalg.hpp"

namespace stringy {

std::uint64_t previous_prime(std::uint64_t p) {
  do --p;
  while (p > 2 && !is_prime(p));
  return p;
}

namespace {

using Dense = std::vector<std::vector<std::uint64_t>>;

/// Inverse of a square matrix mod p by Gauss-Jordan; nullopt if singular.
std::optional<Dense> inverse_mod(Dense a, const PrimeField& f) {
  const std::size_t n = a.size();
  Dense inv(n, std::vector<std::uint64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t sel = col;
    while (sel < n && a[sel][col] == 0) ++sel;
    if (sel == n) return std::nullopt;
    std::swap(a[sel], a[col]);
    std::swap(inv[sel], inv[col]);
    const auto s = f.inv(a[col][col]);
    for (std::size_t k = 0; k < n; ++k) {
      a[col][k] = f.mul(a[col][k], s);
      inv[col][k] = f.mul(inv[col][k], s);
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const auto m = a[r][col];
      for (std::size_t k = 0; k < n; ++k) {
        if (a[col][k]) a[r][k] = f.sub(a[r][k], f.mul(m, a[col][k]));
        if (inv[col][k]) inv[r][k] = f.sub(inv[r][k], f.mul(m, inv[col][k]));
      }
    }
  }
  return inv;
}

/// n/d with |n|, d <= sqrt(m/2) and n = a d mod m, if one exists.
std::optional<Rational> rational_reconstruction(const BigInt& a, const BigInt& m) {
  BigInt bound;
  mpz_sqrt(bound.get_mpz_t(), BigInt(m / 2).get_mpz_t());
  BigInt r0 = m, r1 = a % m, t0 = 0, t1 = 1;
  if (r1 < 0) r1 += m;
  while (r1 > bound) {
    const BigInt q = r0 / r1;
    BigInt r2 = r0 - q * r1, t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (abs(t1) > bound || t1 == 0) return std::nullopt;
  Rational out(r1, t1);
  out.canonicalize();
  return out;
}

std::size_t rational_elimination_rank(const std::vector<SparseIntRow>& rows, std::size_t width) {
  Echelon<RationalField> e(RationalField{}, width);
  for (const auto& row : rows) {
    Echelon<RationalField>::SparseRow r;
    for (const auto& [c, x] : row) r.emplace_back(c, Rational(x));
    e.insert(r);
    if (e.rank() == width) break;
  }
  return e.rank();
}

enum class Outcome { certified, unlucky };

/// Tries to certify rank = number of rows independent mod p.
Outcome certify(const std::vector<SparseIntRow>& rows, std::size_t width, std::uint64_t p,
                std::size_t& rank_out) {
  const PrimeField f{p};
  Echelon<PrimeField> e(f, width);
  std::vector<std::size_t> independent;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    Echelon<PrimeField>::SparseRow r;
    for (const auto& [c, x] : rows[i]) r.emplace_back(c, f.from_big(x));
    if (e.insert(r)) independent.push_back(i);
    if (e.rank() == width) break;
  }
  rank_out = e.rank();
  if (rank_out == width) return Outcome::certified;
  const std::size_t r = rank_out;
  if (r == 0) {
    for (const auto& row : rows)
      for (const auto& [c, x] : row)
        if (x != 0) return Outcome::unlucky;
    return Outcome::certified;
  }
  std::vector<std::size_t> pivots, free;
  for (std::size_t c = 0; c < width; ++c) (e.is_pivot(c) ? pivots : free).push_back(c);
  std::vector<std::size_t> column_slot(width);
  for (std::size_t i = 0; i < pivots.size(); ++i) column_slot[pivots[i]] = i;
  for (std::size_t i = 0; i < free.size(); ++i) column_slot[free[i]] = i;

  // A = M[P, pivots] (r x r); rhs = -M[P, free] (r x d).
  const std::size_t d = free.size();
  std::vector<std::vector<BigInt>> a(r, std::vector<BigInt>(r, 0)), rhs(r, std::vector<BigInt>(d, 0));
  for (std::size_t i = 0; i < r; ++i)
    for (const auto& [c, x] : rows[independent[i]]) {
      if (e.is_pivot(c)) a[i][column_slot[c]] += x;
      else rhs[i][column_slot[c]] -= x;
    }
  Dense a_mod(r, std::vector<std::uint64_t>(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) a_mod[i][j] = f.from_big(a[i][j]);
  const auto inv = inverse_mod(a_mod, f);
  if (!inv) return Outcome::unlucky;

  // Dixon lifting: A X = rhs, X accumulated p-adically.
  std::vector<std::vector<BigInt>> x(r, std::vector<BigInt>(d, 0));
  BigInt modulus = 1;
  const BigInt pb(static_cast<unsigned long>(p));
  std::vector<std::vector<BigInt>> residual = rhs;
  constexpr int kMaxIterations = 20000;
  for (int it = 1; it <= kMaxIterations; ++it) {
    std::vector<std::vector<std::uint64_t>> step(r, std::vector<std::uint64_t>(d, 0));
    std::vector<std::vector<std::uint64_t>> res_mod(r, std::vector<std::uint64_t>(d));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t k = 0; k < d; ++k) res_mod[i][k] = f.from_big(residual[i][k]);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) {
        const auto v = (*inv)[i][j];
        if (!v) continue;
        for (std::size_t k = 0; k < d; ++k)
          if (res_mod[j][k]) step[i][k] = f.add(step[i][k], f.mul(v, res_mod[j][k]));
      }
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) {
        if (a[i][j] == 0) continue;
        for (std::size_t k = 0; k < d; ++k)
          if (step[j][k]) residual[i][k] -= a[i][j] * static_cast<unsigned long>(step[j][k]);
      }
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t k = 0; k < d; ++k) {
        x[i][k] += modulus * static_cast<unsigned long>(step[i][k]);
        residual[i][k] /= pb;  // exact
      }
    modulus *= pb;
    const bool done = std::all_of(residual.begin(), residual.end(), [](const auto& row) {
      return std::all_of(row.begin(), row.end(), [](const BigInt& v) { return v == 0; });
    });
    if (!done && it % 16 != 0) continue;

    // Reconstruct every kernel vector and check it against A first.
    std::vector<std::vector<Rational>> y(d, std::vector<Rational>(width, Rational(0)));
    bool reconstructed = true;
    for (std::size_t k = 0; k < d && reconstructed; ++k) {
      y[k][free[k]] = 1;
      for (std::size_t i = 0; i < r && reconstructed; ++i) {
        auto q = rational_reconstruction(x[i][k], modulus);
        if (!q) reconstructed = false;
        else y[k][pivots[i]] = *q;
      }
    }
    if (!reconstructed) continue;
    bool solves = true;
    for (std::size_t i = 0; i < r && solves; ++i)
      for (std::size_t k = 0; k < d && solves; ++k) {
        Rational s = 0;
        for (const auto& [c, v] : rows[independent[i]]) s += y[k][c] * v;
        if (sgn(s) != 0) solves = false;
      }
    if (!solves) continue;
    // y spans ker M[P, :]; the rank is r iff every row is orthogonal to it.
    for (const auto& row : rows)
      for (std::size_t k = 0; k < d; ++k) {
        Rational s = 0;
        for (const auto& [c, v] : row) s += y[k][c] * v;
        if (sgn(s) != 0) return Outcome::unlucky;
      }
    return Outcome::certified;
  }
  return Outcome::unlucky;
}

}  // namespace

std::size_t certified_rational_rank(const std::vector<SparseIntRow>& rows, std::size_t width,
                                    std::uint64_t prime) {
  if (width == 0) return 0;
  for (int attempt = 0; attempt < 4; ++attempt) {
    std::size_t rank = 0;
    if (certify(rows, width, prime, rank) == Outcome::certified) return rank;
    prime = previous_prime(prime);
  }
  return rational_elimination_rank(rows, width);
}

}  // namespace stringy
