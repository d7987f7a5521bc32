#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "stringy/invariants.hpp"
#include "stringy/lattice.hpp"

namespace stringy {

/// Scalar field for rank computations.
struct FieldSpec {
  enum class Kind { prime, rational };
  Kind kind = Kind::prime;
  std::uint64_t prime = 2147483647;  // 2^31 - 1

  static FieldSpec rational_field() { return {Kind::rational, 0}; }
  static FieldSpec prime_field(std::uint64_t p) { return {Kind::prime, p}; }
  /// "rational" or "prime:<p>".
  std::string describe() const;
  /// Throws FieldCharacteristicTooSmall or InvalidArgument.
  void check() const;
  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

/// Random coefficients are drawn from [1, kMaxCoefficient]; primes must
/// exceed that range so no drawn coefficient vanishes.
inline constexpr std::uint64_t kMaxCoefficient = 1000000;
inline constexpr std::uint64_t kMinimumPrime = 1000003;
inline constexpr int kGenericRetries = 5;

/// g = sum g(m)[m] over degree-1 points of the cone. Coefficients are
/// integers; the field only enters when ranks are computed.
struct DegreeOneElement {
  GradedCone cone;
  std::map<IntVector, BigInt> coefficients;
  std::uint64_t seed = 0;

  /// Uniform coefficients in [1, kMaxCoefficient] on every degree-1 point,
  /// from a generator seeded with `seed`.
  static DegreeOneElement random(const GradedCone& cone, std::uint64_t seed);
  /// Same coefficients restricted to the degree-1 points of `sub`.
  DegreeOneElement restricted_to(const GradedCone& sub) const;
};

/// [m1][m2] in the deformed ring: m1 + m2 when both lie in one cell of
/// sigma, nullopt (the zero product) otherwise. Throws PointOutsideCone.
std::optional<IntVector> deformed_product(const FanSubdivision& sigma, const IntVector& m1,
                                          const IntVector& m2);

/// g_j = sum (m . n_j) g(m)[m] for the chart coordinate functionals n_j of
/// the cone's span; one element per dimension.
std::vector<DegreeOneElement> logarithmic_derivatives(const DegreeOneElement& g);

struct GradedQuotientReport {
  std::vector<std::size_t> dims_r0;  // degrees 0..dim
  std::vector<std::size_t> dims_r1;  // degrees 0..dim
  std::size_t r0_above_top = 0;      // degree dim + 1
  std::size_t r1_above_top = 0;
  std::uint64_t seed = 0;
  FieldSpec field;
  FanSubdivision::Provenance subdivision;
  bool trivial_subdivision = true;
  /// Set by certified_quotient_dims: the prime whose report matched the
  /// rational one.
  std::optional<std::uint64_t> cross_checked_prime;

  bool operator==(const GradedQuotientReport& o) const {
    return dims_r0 == o.dims_r0 && dims_r1 == o.dims_r1 && r0_above_top == o.r0_above_top &&
           r1_above_top == o.r1_above_top;
  }
};

/// Dimensions of R0 = A / (g_1..g_n) and of R1, the image of the interior
/// ideal, in degrees 0..dim+1, where A is the deformed semigroup ring.
GradedQuotientReport graded_quotient_dims(const DegreeOneElement& g, const FanSubdivision& sigma,
                                          const FieldSpec& field = {});

/// Runs both backends; on disagreement retries with the next smaller
/// primes (up to three) and returns the rational report.
GradedQuotientReport certified_quotient_dims(const DegreeOneElement& g,
                                             const FanSubdivision& sigma,
                                             std::uint64_t prime = FieldSpec{}.prime);

struct RegularityVerdict {
  bool regular = true;
  /// Index into sigma.max_cones of the first cell that failed.
  std::optional<std::size_t> witness;
  /// Empty when regular; otherwise states that the verdict is at the cutoff.
  std::string note;
};

/// Checks every cell: the quotient vanishes in degree dim+1 and its total
/// dimension equals S(cell, 1).
RegularityVerdict is_sigma_regular(const DegreeOneElement& g, const FanSubdivision& sigma,
                                   const FieldSpec& field = {});

/// Random Sigma-regular element, trying seeds seed, seed+1, ... for up to
/// kGenericRetries reseeds. Throws NotGenericAfterRetries.
DegreeOneElement generic_element(const FanSubdivision& sigma, std::uint64_t seed,
                                 const FieldSpec& field = {});

struct PairingReport {
  std::size_t degree = 0;
  /// Entries of R0_k x R0int_{dim-k} -> R0int_dim on monomial bases.
  std::vector<std::vector<Rational>> matrix;
  std::size_t rank = 0;
  bool full_rank = false;
  /// dim R1_k == dim R1_{dim-k}.
  bool r1_symmetric = false;
};

/// Throws NotRegular when g is not Sigma-regular.
PairingReport pairing_matrix(const DegreeOneElement& g, const FanSubdivision& sigma,
                             std::size_t k, const FieldSpec& field = {});

/// Conjectured string cohomology table with R1 dimensions computed by
/// exact linear algebra: generic elements on the faces of K (trivial
/// subdivision) and on the faces of K* (sigma restricted to each face).
HodgeTable computed_string_cohomology_table(const ReflexivePair& pair, const FanSubdivision& sigma,
                                            std::uint64_t seed, const FieldSpec& field = {});

}  // namespace stringy
