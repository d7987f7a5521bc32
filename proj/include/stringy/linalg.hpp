#pragma once

#include <cstddef>
#include <cstdint>
#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "stringy/numeric.hpp"

namespace stringy {

using RationalMatrix = std::vector<RationalVector>;

RationalVector to_rational(const IntVector& v);

/// Reduced row echelon form, in place. Returns the pivot column of each
/// nonzero row, in order.
std::vector<std::size_t> rref(RationalMatrix& m);

std::size_t rank(RationalMatrix m);
std::size_t rank(const std::vector<IntVector>& rows);

/// Basis of {x : M x = 0} for a matrix with `ncols` columns.
std::vector<RationalVector> nullspace(RationalMatrix m, std::size_t ncols);

/// Scale a rational vector to the primitive integer vector on its ray.
IntVector primitive(const RationalVector& v);
IntVector primitive(const IntVector& v);

/// Integer solution of rows * x = rhs (x has `ncols` entries), or nullopt
/// when no integral solution exists. Free coordinates of the column Hermite
/// form are fixed to zero, so the answer is deterministic.
std::optional<IntVector> solve_integral(const std::vector<IntVector>& rows,
                                        const std::vector<BigInt>& rhs,
                                        std::size_t ncols);

/// Coordinates on which the projection of span(rows) is injective, together
/// with the lift back: x = sum_i x[coords[i]] * basis[i] for x in the span.
struct SpanChart {
  std::size_t ambient = 0;
  std::vector<std::size_t> coords;
  RationalMatrix basis;

  std::size_t dim() const { return coords.size(); }
  IntVector project(const IntVector& x) const;
  /// Lift of projected coordinates; nullopt when the lift is not integral.
  std::optional<IntVector> lift(const IntVector& projected) const;
};

SpanChart span_chart(const std::vector<IntVector>& rows, std::size_t ncols);

/// Arithmetic in Z/p for a prime p < 2^32.
struct PrimeField {
  using value_type = std::uint64_t;
  std::uint64_t p;

  value_type zero() const { return 0; }
  value_type from_int(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p);
    return static_cast<value_type>(r < 0 ? r + static_cast<std::int64_t>(p) : r);
  }
  value_type from_big(const BigInt& v) const {
    BigInt r = v % BigInt(static_cast<unsigned long>(p));
    if (r < 0) r += static_cast<unsigned long>(p);
    return r.get_ui();
  }
  bool is_zero(value_type a) const { return a == 0; }
  value_type add(value_type a, value_type b) const { return (a + b) % p; }
  value_type sub(value_type a, value_type b) const { return (a + p - b) % p; }
  value_type mul(value_type a, value_type b) const { return (a * b) % p; }
  value_type neg(value_type a) const { return a == 0 ? 0 : p - a; }
  value_type inv(value_type a) const;
};

struct RationalField {
  using value_type = Rational;

  value_type zero() const { return 0; }
  value_type from_int(std::int64_t v) const { return Rational(static_cast<long>(v)); }
  value_type from_big(const BigInt& v) const { return Rational(v); }
  bool is_zero(const value_type& a) const { return sgn(a) == 0; }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type inv(const value_type& a) const { return 1 / a; }
};

bool is_prime(std::uint64_t n);

/// Incrementally maintained echelon basis with sparse pivot rows. Every
/// inserted vector is fully reduced against all pivots, so `reduce` yields
/// a normal form modulo the span (zero in every pivot column).
template <class Field>
class Echelon {
 public:
  using value_type = typename Field::value_type;
  using SparseRow = std::vector<std::pair<std::size_t, value_type>>;

  Echelon(Field field, std::size_t width)
      : field_(std::move(field)), width_(width), pivot_row_(width, kNone), work_(width) {}

  /// Reports whether the vector was independent of the rows seen so far.
  bool insert(const SparseRow& v) {
    load(v);
    eliminate();
    std::size_t lead = width_;
    for (std::size_t c = lo_; c < hi_; ++c)
      if (!field_.is_zero(work_[c])) {
        lead = c;
        break;
      }
    if (lead == width_) return false;
    const value_type s = field_.inv(work_[lead]);
    SparseRow row;
    for (std::size_t c = lead; c < hi_; ++c) {
      if (field_.is_zero(work_[c])) continue;
      row.emplace_back(c, field_.mul(work_[c], s));
      work_[c] = field_.zero();
    }
    pivot_row_[lead] = rows_.size();
    rows_.push_back(std::move(row));
    return true;
  }

  bool insert_dense(const std::vector<value_type>& dense) { return insert(sparse(dense)); }

  /// Normal form of v modulo the current span.
  std::vector<value_type> reduce(const SparseRow& v) {
    load(v);
    eliminate();
    std::vector<value_type> out(width_, field_.zero());
    for (std::size_t c = lo_; c < hi_; ++c) {
      out[c] = work_[c];
      work_[c] = field_.zero();
    }
    return out;
  }

  bool is_pivot(std::size_t column) const { return pivot_row_[column] != kNone; }
  std::size_t rank() const { return rows_.size(); }
  std::size_t width() const { return width_; }
  const Field& field() const { return field_; }

  SparseRow sparse(const std::vector<value_type>& dense) const {
    SparseRow out;
    for (std::size_t c = 0; c < dense.size(); ++c)
      if (!field_.is_zero(dense[c])) out.emplace_back(c, dense[c]);
    return out;
  }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  void load(const SparseRow& v) {
    lo_ = width_;
    hi_ = 0;
    for (const auto& [c, x] : v) {
      work_[c] = field_.add(work_[c], x);
      lo_ = std::min(lo_, c);
      hi_ = std::max(hi_, c + 1);
    }
  }

  // Work row entries live in [lo_, hi_); pivot rows only extend it upward.
  void eliminate() {
    for (std::size_t c = lo_; c < hi_; ++c) {
      if (field_.is_zero(work_[c]) || pivot_row_[c] == kNone) continue;
      const value_type f = work_[c];
      for (const auto& [k, x] : rows_[pivot_row_[c]]) {
        work_[k] = field_.sub(work_[k], field_.mul(f, x));
        hi_ = std::max(hi_, k + 1);
      }
    }
  }

  Field field_;
  std::size_t width_;
  std::vector<std::size_t> pivot_row_;
  std::vector<SparseRow> rows_;
  std::vector<value_type> work_;
  std::size_t lo_ = 0;
  std::size_t hi_ = 0;
};

using SparseIntRow = std::vector<std::pair<std::size_t, BigInt>>;

/// Rank over Q of an integer matrix given by sparse rows, certified rather
/// than estimated. A minor that is nonsingular mod p bounds the rank from
/// below; the kernel of the independent rows is lifted p-adically to Q and
/// checked exactly against every row for the upper bound. Unlucky primes
/// are replaced by smaller ones; after several failures the rank is
/// computed by plain rational elimination.
std::size_t certified_rational_rank(const std::vector<SparseIntRow>& rows, std::size_t width,
                                    std::uint64_t prime = 2147483647);

/// Largest prime below p.
std::uint64_t previous_prime(std::uint64_t p);

}  // namespace stringy
