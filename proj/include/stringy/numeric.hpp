#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace stringy {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Integer lattice vector; coordinates of all fixtures are tiny, the
/// exact-arithmetic paths promote to BigInt/Rational where products grow.
using IntVector = std::vector<std::int64_t>;
using RationalVector = std::vector<Rational>;

inline std::int64_t dot(const IntVector& a, const IntVector& b) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Rational dot(const RationalVector& a, const IntVector& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline std::int64_t to_int64(const BigInt& v) {
  return static_cast<std::int64_t>(v.get_si());
}

inline std::string to_string(const BigInt& v) { return v.get_str(); }

}  // namespace stringy
