#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "stringy/lattice.hpp"
#include "stringy/polynomial.hpp"

namespace stringy {

/// S(C,t) from lattice-point counts of degree <= dim C.
UnivariatePolynomial s_polynomial(const GradedCone& cone);
/// t^dim S(C,1/t), computed from interior points only.
UnivariatePolynomial s_polynomial_from_interior(const GradedCone& cone);

/// S of every face of the lattice, indexed like lattice.faces().
std::vector<UnivariatePolynomial> face_s_polynomials(const FaceLattice& lattice);
/// tilde S of every face, from the face S-polynomials and G of face intervals.
std::vector<UnivariatePolynomial> face_tilde_s_polynomials(
    const FaceLattice& lattice, const std::vector<UnivariatePolynomial>& s);

UnivariatePolynomial tilde_s_polynomial(const GradedCone& cone);
/// Alternating face sum without G-corrections. Throws NotSimplicial.
UnivariatePolynomial tilde_s_simplicial(const GradedCone& cone);

/// Points sum a_i e_i with every a_i in (0,1), grouped by l = sum a_i.
struct BoxPointTable {
  GradedCone cone;
  std::map<std::int64_t, std::vector<IntVector>> by_shift;
};

/// Throws NotSimplicial.
BoxPointTable box_points(const GradedCone& cone);

/// E_st of the Calabi-Yau hypersurface from tilde S of dual face pairs.
BivariateLaurentPolynomial e_st_hypersurface(const ReflexivePair& pair);
/// E_st from B-polynomials of dual intervals and S-polynomials; shares no
/// code with e_st_hypersurface beyond S and G.
BivariateLaurentPolynomial e_st_oracle(const ReflexivePair& pair);
/// (-u)^(d-1) E(u^-1, v): the form the mirror's E-function must take.
BivariateLaurentPolynomial mirror_transform(const BivariateLaurentPolynomial& e, std::size_t d);

/// Hodge numbers h^{p,q} keyed by exact (p, q); zero entries are omitted.
struct HodgeTable {
  int dimension = 0;
  std::map<std::pair<Rational, Rational>, BigInt> entries;

  BigInt at(long p, long q) const;
  /// sum (-1)^{p+q} h^{p,q} u^p v^q over integral (p,q).
  BivariateLaurentPolynomial signed_sum() const;
  bool is_symmetric() const;
  friend bool operator==(const HodgeTable&, const HodgeTable&) = default;
};

/// Throws InvalidArgument for negative exponents and NegativeHodgeNumber
/// when a sign-corrected coefficient is negative.
HodgeTable stringy_hodge_table(const BivariateLaurentPolynomial& e, int dimension);

/// Fan given by rays and maximal cones (ray indices).
struct Fan {
  std::size_t rank = 0;
  std::vector<IntVector> rays;
  std::vector<std::vector<std::size_t>> cones;
};

/// All cones of the fan (faces of the maximal cones) as sorted ray index
/// lists, ordered by dimension then indices.
std::vector<std::vector<std::size_t>> fan_cones(const Fan& fan);

/// Throws NotGorenstein and NotComplete.
BivariateLaurentPolynomial e_st_toric(const Fan& fan);
/// Throws ConeNotInFan.
BivariateLaurentPolynomial e_int_orbit_closure(const Fan& fan, std::vector<std::size_t> cone);

/// Table assembled from per-face R1 dimension vectors: r[C] for faces of K
/// and r_dual[D] for faces of K*, indexed like the respective lattices.
HodgeTable assemble_string_cohomology(const ReflexivePair& pair,
                                      const std::vector<std::vector<BigInt>>& r,
                                      const std::vector<std::vector<BigInt>>& r_dual);
/// Table with both dimension vectors taken from tilde S. Throws
/// InvalidSubdivision when `sigma` does not validate as a subdivision of K*.
HodgeTable string_cohomology_table(const ReflexivePair& pair, const FanSubdivision& sigma);

}  // namespace stringy
