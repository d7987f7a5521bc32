#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "stringy/lattice.hpp"
#include "stringy/semigroup.hpp"

namespace stringy {

/// The two gradings D preserves: total = deg m + deg n goes up by one,
/// weight = wedge degree + deg m - deg n is constant.
struct KoszulDegree {
  int total = 0;
  int weight = 0;
  friend auto operator<=>(const KoszulDegree&, const KoszulDegree&) = default;
};

/// w (x) [m, n]; w is a subset of the basis of N as a bitmask, m and n
/// index the points of K and K* at their degrees.
struct KoszulBasisElement {
  std::uint32_t wedge = 0;
  int deg_m = 0;
  std::size_t m = 0;
  int deg_n = 0;
  std::size_t n = 0;
  friend auto operator<=>(const KoszulBasisElement&, const KoszulBasisElement&) = default;
};

struct DifferentialBlock {
  KoszulDegree source;
  KoszulDegree target;
  /// Image of each source basis vector in the target basis.
  std::vector<SparseIntRow> images;
};

struct KoszulOptions {
  /// Highest total degree whose cohomology is computed; defaults to dim K.
  std::optional<int> cap;
  /// Deforms the K* side; its parent must be K*.
  std::optional<FanSubdivision> dual_subdivision;
  bool check_regularity = true;
  FieldSpec field;
};

struct KoszulComplex {
  int cap = 0;
  std::size_t lattice_rank = 0;
  std::map<KoszulDegree, std::vector<KoszulBasisElement>> pieces;
  /// Keyed by source degree.
  std::map<KoszulDegree, DifferentialBlock> blocks;
};

/// V = exterior algebra of N tensored with the span of [m, n], m.n = 0, in
/// total degrees 0..cap+1, with D = f-contraction + g-wedge. D^2 = 0 is
/// checked exactly on every composable pair. Throws CapTooSmall, NotRegular
/// and InvalidArgument.
KoszulComplex build_complex(const ReflexivePair& pair, const DegreeOneElement& f,
                            const DegreeOneElement& g, const KoszulOptions& options = {});

/// dim ker - dim im in every piece of total degree 0..cap.
std::map<KoszulDegree, std::size_t> cohomology_dims(const KoszulComplex& complex,
                                                    const FieldSpec& field = {});

struct KoszulContribution {
  std::size_t face = 0;  // index in the face lattice of K
  int deg_m = 0;
  int deg_n = 0;
  int wedge_degree = 0;  // dim C*
  std::size_t count = 0;
};

struct KoszulComparison {
  std::map<KoszulDegree, std::size_t> observed;
  std::map<KoszulDegree, std::size_t> predicted;
  std::vector<KoszulContribution> contributions;
  std::vector<KoszulDegree> mismatches;
  /// Pieces at total degree == cap, listed so truncation effects are visible.
  std::vector<KoszulDegree> boundary;
  bool agrees = false;
};

/// Cohomology against the face sum of tS(C)_i tS(C*)_j placed at wedge
/// degree dim C*, i.e. at total i + j and weight dim C* + i - j.
KoszulComparison compare_with_decomposition(const ReflexivePair& pair, const DegreeOneElement& f,
                                            const DegreeOneElement& g,
                                            const KoszulOptions& options = {});

}  // namespace stringy
