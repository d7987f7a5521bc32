#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "stringy/linalg.hpp"
#include "stringy/numeric.hpp"

namespace stringy {

class EulerianPoset;

/// Largest ambient rank any cone may live in.
inline constexpr std::size_t kAmbientRankBudget = 8;

/// Full-dimensional lattice polytope; vertices sorted lexicographically.
class LatticePolytope {
 public:
  /// Validates distinct points and full dimension; points that are not
  /// vertices of the convex hull are dropped.
  LatticePolytope(std::size_t rank, std::vector<IntVector> vertices);

  std::size_t rank() const { return rank_; }
  const std::vector<IntVector>& vertices() const { return vertices_; }
  friend bool operator==(const LatticePolytope&, const LatticePolytope&) = default;

 private:
  std::size_t rank_;
  std::vector<IntVector> vertices_;
};

struct RationalPolytope {
  std::size_t rank = 0;
  std::vector<RationalVector> vertices;  // sorted

  bool is_integral() const;
  /// Only valid when is_integral().
  LatticePolytope to_lattice() const;
  friend bool operator==(const RationalPolytope&, const RationalPolytope&) = default;
};

RationalPolytope to_rational(const LatticePolytope& p);

/// Polar dual {n : <m,n> >= -1 for all m in P}. Throws OriginNotInterior.
RationalPolytope dual_polytope(const LatticePolytope& p);
RationalPolytope dual_polytope(const RationalPolytope& p);

bool is_reflexive(const LatticePolytope& p) noexcept;

/// Integer functional taking value 1 on every generator; NotGorenstein when
/// none exists.
IntVector deg_functional(const std::vector<IntVector>& generators, std::size_t ambient_rank);

/// Inward facet normals of cone(generators), expressed as ambient functionals
/// supported on the span chart coordinates. Throws InvalidArgument for cones
/// that are not pointed.
std::vector<IntVector> cone_facets(const std::vector<IntVector>& generators,
                                   const SpanChart& chart);

/// Pointed Gorenstein cone with its extreme rays, facets and degree.
class GradedCone {
 public:
  /// `generators` may contain redundant or non-primitive vectors; only the
  /// extreme rays survive. When `deg` is given it is checked, not solved for.
  explicit GradedCone(std::size_t ambient_rank, std::vector<IntVector> generators,
                      std::optional<IntVector> deg = std::nullopt);

  std::size_t ambient_rank() const { return ambient_rank_; }
  std::size_t dim() const { return chart_.dim(); }
  const std::vector<IntVector>& generators() const { return generators_; }
  const std::vector<IntVector>& facets() const { return facets_; }
  const IntVector& deg() const { return deg_; }
  const SpanChart& chart() const { return chart_; }
  bool is_simplicial() const { return generators_.size() == dim(); }

  std::int64_t degree_of(const IntVector& x) const { return dot(deg_, x); }
  bool in_span(const IntVector& x) const;
  bool contains(const IntVector& x) const;
  bool in_relative_interior(const IntVector& x) const;

  /// Lattice points of degree k (relative interior only when asked), in
  /// lexicographic order.
  std::vector<IntVector> lattice_points_at_degree(std::int64_t k, bool interior_only = false) const;

  friend bool operator==(const GradedCone& a, const GradedCone& b) {
    return a.ambient_rank_ == b.ambient_rank_ && a.generators_ == b.generators_;
  }

 private:
  struct PointCache {
    std::mutex mutex;
    std::map<std::int64_t, std::vector<IntVector>> by_degree;
  };

  std::vector<IntVector> enumerate_degree(std::int64_t k) const;

  std::size_t ambient_rank_;
  std::vector<IntVector> generators_;
  std::vector<IntVector> facets_;
  IntVector deg_;
  SpanChart chart_;
  std::shared_ptr<PointCache> cache_;
};

/// Gorenstein cone over P x {1}; deg is the last coordinate.
GradedCone gorenstein_cone_over(const LatticePolytope& p);

/// A face, named by the indices of the parent's generators it contains.
struct Face {
  std::vector<std::size_t> generators;
  std::size_t dim = 0;
  friend bool operator==(const Face&, const Face&) = default;
};

class FaceLattice {
 public:
  /// Throws DimensionBudgetExceeded for cones of dimension above the budget.
  explicit FaceLattice(GradedCone cone);

  const GradedCone& cone() const { return cone_; }
  const std::vector<Face>& faces() const { return faces_; }
  std::size_t size() const { return faces_.size(); }
  /// Cover relations (lower, upper).
  const std::vector<std::pair<std::size_t, std::size_t>>& covers() const { return covers_; }
  std::size_t bottom() const { return 0; }
  std::size_t top() const { return faces_.size() - 1; }
  bool contains(std::size_t lower, std::size_t upper) const;
  std::optional<std::size_t> find(const std::vector<std::size_t>& generators) const;
  /// Smallest face containing a point of the cone.
  std::size_t minimal_face_of(const IntVector& x) const;
  /// The face as a cone in its own right (deg inherited); cached.
  const GradedCone& face_cone(std::size_t index) const;
  /// Partial order with rank = face dimension.
  const EulerianPoset& poset() const;
  /// Points of the face at degree k, filtered from the parent's points.
  std::vector<IntVector> face_points_at_degree(std::size_t index, std::int64_t k,
                                               bool interior_only = false) const;

 private:
  struct Cache;

  GradedCone cone_;
  std::vector<Face> faces_;
  std::vector<std::uint64_t> masks_;
  std::vector<std::uint64_t> facet_masks_;
  std::vector<std::pair<std::size_t, std::size_t>> covers_;
  std::shared_ptr<Cache> cache_;
};

FaceLattice face_lattice(const GradedCone& cone);

/// Reflexive polytope together with its polar dual, both Gorenstein cones,
/// both face lattices, and the order-reversing dual-face bijection.
class ReflexivePair {
 public:
  /// Throws NotReflexivePair unless p is reflexive.
  explicit ReflexivePair(const LatticePolytope& p);

  const LatticePolytope& polytope() const { return polytope_; }
  const LatticePolytope& dual_polytope() const { return dual_; }
  /// Rank d of the polytope; the cones have dimension d + 1.
  std::size_t rank() const { return polytope_.rank(); }
  const FaceLattice& lattice() const { return *lattice_; }
  const FaceLattice& dual_lattice() const { return *dual_lattice_; }
  const GradedCone& cone() const { return lattice_->cone(); }
  const GradedCone& dual_cone() const { return dual_lattice_->cone(); }
  /// Index in the dual lattice of C* for face index C of K.
  std::size_t dual_face(std::size_t face) const { return dual_face_[face]; }
  /// Inverse direction: index in K's lattice of D* for face D of K*.
  std::size_t dual_face_of_dual(std::size_t face) const { return dual_face_inverse_[face]; }
  ReflexivePair mirror() const { return ReflexivePair(dual_); }

 private:
  LatticePolytope polytope_;
  LatticePolytope dual_;
  std::shared_ptr<const FaceLattice> lattice_;
  std::shared_ptr<const FaceLattice> dual_lattice_;
  std::vector<std::size_t> dual_face_;
  std::vector<std::size_t> dual_face_inverse_;
};

/// Subdivision of a Gorenstein cone into cones spanned by its lattice points.
struct FanSubdivision {
  struct Provenance {
    bool explicit_cells = true;
    std::vector<std::int64_t> heights;            // as supplied
    std::vector<std::int64_t> effective_heights;  // after perturbation
    std::int64_t perturbation_base = 0;           // 0: no perturbation applied
    int perturbation_power = 0;                   // w_i = i^power
  };

  GradedCone parent;
  std::vector<GradedCone> max_cones;
  Provenance provenance;

  static FanSubdivision trivial(const GradedCone& parent);

  bool is_trivial() const { return max_cones.size() == 1 && max_cones.front() == parent; }
  /// Product rule of the deformed semigroup ring: both points in one cone.
  bool share_cone(const IntVector& a, const IntVector& b) const;
  /// Throws InvalidSubdivision; the cover is checked on points of degree
  /// up to `max_degree`.
  void validate(std::int64_t max_degree = 3) const;
  /// Subdivision induced on a face of the parent (cells meeting the face in
  /// a full-dimensional cone of the face).
  FanSubdivision restrict_to(const GradedCone& face) const;
};

enum class LiftPolicy {
  /// Use the heights as given; cells are the lower facets.
  literal,
  /// Require every cell to be simplicial with no extra points on the lower
  /// hull; perturb h_i -> h_i * B + i^power until that holds.
  generic,
};

/// Regular subdivision from heights on the degree-1 points of `cone`, in the
/// order of lattice_points_at_degree(1). Throws InvalidArgument on a size
/// mismatch and DegenerateLift when the generic policy cannot be satisfied.
FanSubdivision regular_subdivision(const GradedCone& cone, const std::vector<std::int64_t>& heights,
                                   LiftPolicy policy = LiftPolicy::literal);

/// Cells cone(apex, F) over the facets F of `cone` missing the apex: the
/// regular subdivision with height -1 at the apex and 0 elsewhere, built
/// without enumerating the lower hull. Throws PointOutsideCone.
FanSubdivision star_subdivision(const GradedCone& cone, const IntVector& apex);

}  // namespace stringy
