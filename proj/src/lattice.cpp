#include "stringy/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "stringy/error.hpp"
#include "stringy/poset.hpp"

namespace stringy {

namespace {

void check_budget(std::size_t ambient_rank) {
  if (ambient_rank > kAmbientRankBudget)
    throw Error(ErrorKind::DimensionBudgetExceeded,
                "ambient rank " + std::to_string(ambient_rank) + " exceeds " +
                    std::to_string(kAmbientRankBudget));
}

IntVector with_last(const IntVector& v, std::int64_t last) {
  IntVector out = v;
  out.push_back(last);
  return out;
}

/// Generators of cone(gens) that span extreme rays, given its facets.
std::vector<std::size_t> extreme_indices(const std::vector<IntVector>& gens,
                                         const std::vector<IntVector>& facets, std::size_t dim) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    std::vector<IntVector> tight;
    for (const auto& f : facets)
      if (dot(f, gens[i]) == 0) tight.push_back(f);
    if (rank(tight) + 1 == dim) out.push_back(i);
  }
  return out;
}

bool in_span_of(const SpanChart& chart, const IntVector& x) {
  for (std::size_t j = 0; j < chart.ambient; ++j) {
    Rational s = 0;
    for (std::size_t i = 0; i < chart.coords.size(); ++i)
      s += chart.basis[i][j] * x[chart.coords[i]];
    if (s != x[j]) return false;
  }
  return true;
}

}  // namespace

LatticePolytope::LatticePolytope(std::size_t rank, std::vector<IntVector> vertices)
    : rank_(rank) {
  if (rank == 0) throw Error(ErrorKind::InvalidArgument, "polytope rank must be positive");
  check_budget(rank + 1);
  std::vector<IntVector> lifted;
  for (const auto& v : vertices) {
    if (v.size() != rank)
      throw Error(ErrorKind::InvalidArgument, "vertex has wrong number of coordinates");
    lifted.push_back(with_last(v, 1));
  }
  std::sort(lifted.begin(), lifted.end());
  if (std::adjacent_find(lifted.begin(), lifted.end()) != lifted.end())
    throw Error(ErrorKind::InvalidArgument, "repeated vertex");
  if (stringy::rank(lifted) != rank + 1)
    throw Error(ErrorKind::InvalidArgument, "polytope is not full-dimensional");
  const SpanChart chart = span_chart(lifted, rank + 1);
  const auto facets = cone_facets(lifted, chart);
  for (auto i : extreme_indices(lifted, facets, rank + 1)) {
    IntVector v = lifted[i];
    v.pop_back();
    vertices_.push_back(std::move(v));
  }
}

bool RationalPolytope::is_integral() const {
  for (const auto& v : vertices)
    for (const auto& x : v)
      if (x.get_den() != 1) return false;
  return true;
}

LatticePolytope RationalPolytope::to_lattice() const {
  std::vector<IntVector> out;
  for (const auto& v : vertices) {
    IntVector w;
    for (const auto& x : v) w.push_back(to_int64(BigInt(x.get_num())));
    out.push_back(std::move(w));
  }
  return LatticePolytope(rank, std::move(out));
}

RationalPolytope to_rational(const LatticePolytope& p) {
  RationalPolytope out{p.rank(), {}};
  for (const auto& v : p.vertices()) out.vertices.push_back(stringy::to_rational(v));
  return out;
}

RationalPolytope dual_polytope(const LatticePolytope& p) {
  std::vector<IntVector> lifted;
  for (const auto& v : p.vertices()) lifted.push_back(with_last(v, 1));
  const SpanChart chart = span_chart(lifted, p.rank() + 1);
  RationalPolytope out{p.rank(), {}};
  for (const auto& f : cone_facets(lifted, chart)) {
    const std::int64_t b = f.back();
    if (b <= 0) throw Error(ErrorKind::OriginNotInterior, "origin is not an interior point");
    RationalVector w;
    for (std::size_t i = 0; i < p.rank(); ++i) {
      Rational x(static_cast<long>(f[i]), static_cast<long>(b));
      x.canonicalize();
      w.push_back(x);
    }
    out.vertices.push_back(std::move(w));
  }
  std::sort(out.vertices.begin(), out.vertices.end());
  return out;
}

RationalPolytope dual_polytope(const RationalPolytope& p) {
  BigInt c = 1;
  for (const auto& v : p.vertices)
    for (const auto& x : v) c = lcm(c, BigInt(x.get_den()));
  std::vector<IntVector> scaled;
  for (const auto& v : p.vertices) {
    IntVector w;
    for (const auto& x : v) w.push_back(to_int64(BigInt(x * c)));
    scaled.push_back(std::move(w));
  }
  RationalPolytope out = dual_polytope(LatticePolytope(p.rank, std::move(scaled)));
  for (auto& v : out.vertices)
    for (auto& x : v) x *= c;
  std::sort(out.vertices.begin(), out.vertices.end());
  return out;
}

bool is_reflexive(const LatticePolytope& p) noexcept {
  try {
    return dual_polytope(p).is_integral();
  } catch (...) {
    return false;
  }
}

IntVector deg_functional(const std::vector<IntVector>& generators, std::size_t ambient_rank) {
  if (generators.empty()) return IntVector(ambient_rank, 0);
  auto solved =
      solve_integral(generators, std::vector<BigInt>(generators.size(), BigInt(1)), ambient_rank);
  if (!solved) throw Error(ErrorKind::NotGorenstein, "no integral degree functional");
  return *solved;
}

std::vector<IntVector> cone_facets(const std::vector<IntVector>& generators,
                                   const SpanChart& chart) {
  const std::size_t k = chart.dim();
  if (k == 0) return {};
  std::vector<IntVector> projected;
  for (const auto& g : generators) projected.push_back(chart.project(g));

  std::set<IntVector> found;
  std::vector<std::size_t> pick(k - 1);
  // Enumerate (k-1)-subsets in lexicographic order.
  std::iota(pick.begin(), pick.end(), 0);
  const std::size_t n = projected.size();
  if (n < k - 1) throw Error(ErrorKind::InvalidArgument, "too few generators");
  while (true) {
    RationalMatrix m;
    for (auto i : pick) m.push_back(stringy::to_rational(projected[i]));
    auto null = nullspace(m, k);
    if (null.size() == 1) {
      IntVector normal = primitive(null.front());
      bool nonneg = true, nonpos = true;
      for (const auto& g : projected) {
        const auto s = dot(normal, g);
        if (s < 0) nonneg = false;
        if (s > 0) nonpos = false;
      }
      if (nonpos && !nonneg)
        for (auto& x : normal) x = -x;
      if (nonneg != nonpos) found.insert(normal);
    }
    // Advance the combination.
    std::size_t i = pick.size();
    while (i > 0 && pick[i - 1] == n - pick.size() + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < pick.size(); ++j) pick[j] = pick[j - 1] + 1;
  }

  std::vector<IntVector> facets;
  for (const auto& normal : found) {
    IntVector f(chart.ambient, 0);
    for (std::size_t i = 0; i < k; ++i) f[chart.coords[i]] = normal[i];
    facets.push_back(std::move(f));
  }
  if (rank(std::vector<IntVector>(found.begin(), found.end())) != k)
    throw Error(ErrorKind::InvalidArgument, "cone is not pointed");
  return facets;
}

GradedCone::GradedCone(std::size_t ambient_rank, std::vector<IntVector> generators,
                       std::optional<IntVector> deg)
    : ambient_rank_(ambient_rank), cache_(std::make_shared<PointCache>()) {
  check_budget(ambient_rank);
  std::vector<IntVector> gens;
  for (auto& g : generators) {
    if (g.size() != ambient_rank)
      throw Error(ErrorKind::InvalidArgument, "generator has wrong number of coordinates");
    if (std::all_of(g.begin(), g.end(), [](auto x) { return x == 0; })) continue;
    gens.push_back(primitive(g));
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  chart_ = span_chart(gens, ambient_rank);
  facets_ = cone_facets(gens, chart_);
  for (auto i : extreme_indices(gens, facets_, chart_.dim())) generators_.push_back(gens[i]);

  if (deg) {
    if (deg->size() != ambient_rank)
      throw Error(ErrorKind::InvalidArgument, "degree functional has wrong size");
    for (const auto& g : generators_)
      if (dot(*deg, g) != 1)
        throw Error(ErrorKind::NotGorenstein, "generator not of degree one");
    deg_ = *deg;
  } else {
    deg_ = deg_functional(generators_, ambient_rank);
  }
}

bool GradedCone::in_span(const IntVector& x) const {
  if (x.size() != ambient_rank_) return false;
  return chart_.dim() == ambient_rank_ || in_span_of(chart_, x);
}

bool GradedCone::contains(const IntVector& x) const {
  if (!in_span(x)) return false;
  for (const auto& f : facets_)
    if (dot(f, x) < 0) return false;
  return true;
}

bool GradedCone::in_relative_interior(const IntVector& x) const {
  if (!in_span(x)) return false;
  for (const auto& f : facets_)
    if (dot(f, x) <= 0) return false;
  return true;
}

std::vector<IntVector> GradedCone::lattice_points_at_degree(std::int64_t k,
                                                            bool interior_only) const {
  std::vector<IntVector> all;
  bool cached = false;
  {
    std::lock_guard lock(cache_->mutex);
    auto it = cache_->by_degree.find(k);
    if (it != cache_->by_degree.end()) {
      all = it->second;
      cached = true;
    }
  }
  if (!cached) {
    all = enumerate_degree(k);
    std::lock_guard lock(cache_->mutex);
    cache_->by_degree.emplace(k, all);
  }
  if (!interior_only) return all;
  std::vector<IntVector> out;
  for (auto& x : all) {
    bool interior = true;
    for (const auto& f : facets_)
      if (dot(f, x) == 0) interior = false;
    if (interior) out.push_back(std::move(x));
  }
  return out;
}

std::vector<IntVector> GradedCone::enumerate_degree(std::int64_t k) const {
  const std::size_t n = dim();
  if (k < 0) return {};
  if (n == 0) return k == 0 ? std::vector<IntVector>{IntVector(ambient_rank_, 0)}
                            : std::vector<IntVector>{};

  // The slice at degree k is k * conv(generators): bound each chart coordinate.
  std::vector<std::int64_t> lo(n), hi(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t c = chart_.coords[i];
    lo[i] = hi[i] = generators_.front()[c] * k;
    for (const auto& g : generators_) {
      lo[i] = std::min(lo[i], g[c] * k);
      hi[i] = std::max(hi[i], g[c] * k);
    }
  }
  // deg restricted to the span, in chart coordinates.
  std::vector<Rational> deg_chart(n);
  for (std::size_t i = 0; i < n; ++i) deg_chart[i] = dot(chart_.basis[i], deg_);
  std::size_t solved = n;
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(deg_chart[i]) == 0) continue;
    if (solved == n || hi[i] - lo[i] > hi[solved] - lo[solved]) solved = i;
  }
  const bool identity_chart = n == ambient_rank_;

  std::vector<IntVector> out;
  IntVector y(n, 0);
  auto visit = [&]() {
    if (solved != n) {
      Rational rest = k;
      for (std::size_t i = 0; i < n; ++i)
        if (i != solved) rest -= deg_chart[i] * y[i];
      rest /= deg_chart[solved];
      if (rest.get_den() != 1) return;
      const BigInt v = rest.get_num();
      if (v < lo[solved] || v > hi[solved]) return;
      y[solved] = to_int64(v);
    }
    IntVector x;
    if (identity_chart) {
      x.assign(ambient_rank_, 0);
      for (std::size_t i = 0; i < n; ++i) x[chart_.coords[i]] = y[i];
    } else {
      auto lifted = chart_.lift(y);
      if (!lifted) return;
      x = std::move(*lifted);
    }
    for (const auto& f : facets_)
      if (dot(f, x) < 0) return;
    if (degree_of(x) != k) return;
    out.push_back(std::move(x));
  };
  // Odometer over all chart coordinates except the solved one.
  std::vector<std::size_t> free;
  for (std::size_t i = 0; i < n; ++i)
    if (i != solved) free.push_back(i);
  for (auto i : free) y[i] = lo[i];
  while (true) {
    visit();
    std::size_t j = 0;
    while (j < free.size()) {
      const std::size_t i = free[j];
      if (y[i] < hi[i]) {
        ++y[i];
        break;
      }
      y[i] = lo[i];
      ++j;
    }
    if (j == free.size()) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

GradedCone gorenstein_cone_over(const LatticePolytope& p) {
  std::vector<IntVector> gens;
  for (const auto& v : p.vertices()) gens.push_back(with_last(v, 1));
  IntVector deg(p.rank() + 1, 0);
  deg.back() = 1;
  return GradedCone(p.rank() + 1, std::move(gens), deg);
}

struct FaceLattice::Cache {
  std::mutex mutex;
  std::vector<std::unique_ptr<GradedCone>> cones;
  std::unique_ptr<EulerianPoset> poset;
};

FaceLattice::FaceLattice(GradedCone cone)
    : cone_(std::move(cone)), cache_(std::make_shared<Cache>()) {
  const auto& gens = cone_.generators();
  if (gens.size() > 64)
    throw Error(ErrorKind::DimensionBudgetExceeded, "more than 64 extreme rays");
  const std::uint64_t full = gens.size() == 64 ? ~0ULL : ((1ULL << gens.size()) - 1);
  for (const auto& f : cone_.facets()) {
    std::uint64_t m = 0;
    for (std::size_t i = 0; i < gens.size(); ++i)
      if (dot(f, gens[i]) == 0) m |= 1ULL << i;
    facet_masks_.push_back(m);
  }
  std::set<std::uint64_t> seen{full};
  std::vector<std::uint64_t> queue{full};
  for (std::size_t q = 0; q < queue.size(); ++q) {
    for (auto fm : facet_masks_) {
      const std::uint64_t m = queue[q] & fm;
      if (seen.insert(m).second) queue.push_back(m);
    }
  }
  std::vector<std::pair<std::size_t, std::uint64_t>> ordered;
  for (auto m : seen) {
    std::vector<IntVector> sub;
    for (std::size_t i = 0; i < gens.size(); ++i)
      if (m >> i & 1) sub.push_back(gens[i]);
    ordered.emplace_back(rank(sub), m);
  }
  std::sort(ordered.begin(), ordered.end());
  for (auto [d, m] : ordered) {
    Face face;
    face.dim = d;
    for (std::size_t i = 0; i < gens.size(); ++i)
      if (m >> i & 1) face.generators.push_back(i);
    faces_.push_back(std::move(face));
    masks_.push_back(m);
  }
  for (std::size_t a = 0; a < faces_.size(); ++a)
    for (std::size_t b = 0; b < faces_.size(); ++b)
      if (faces_[b].dim == faces_[a].dim + 1 && (masks_[a] & ~masks_[b]) == 0)
        covers_.emplace_back(a, b);
  cache_->cones.resize(faces_.size());
}

bool FaceLattice::contains(std::size_t lower, std::size_t upper) const {
  return (masks_[lower] & ~masks_[upper]) == 0;
}

std::optional<std::size_t> FaceLattice::find(const std::vector<std::size_t>& generators) const {
  std::uint64_t m = 0;
  for (auto i : generators) m |= 1ULL << i;
  auto it = std::find(masks_.begin(), masks_.end(), m);
  if (it == masks_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - masks_.begin());
}

std::size_t FaceLattice::minimal_face_of(const IntVector& x) const {
  if (!cone_.contains(x)) throw Error(ErrorKind::PointOutsideCone, "point is not in the cone");
  std::uint64_t m = masks_.back();
  for (std::size_t f = 0; f < facet_masks_.size(); ++f)
    if (dot(cone_.facets()[f], x) == 0) m &= facet_masks_[f];
  return static_cast<std::size_t>(std::find(masks_.begin(), masks_.end(), m) - masks_.begin());
}

const GradedCone& FaceLattice::face_cone(std::size_t index) const {
  std::lock_guard lock(cache_->mutex);
  auto& slot = cache_->cones.at(index);
  if (!slot) {
    std::vector<IntVector> gens;
    for (auto i : faces_[index].generators) gens.push_back(cone_.generators()[i]);
    slot = std::make_unique<GradedCone>(cone_.ambient_rank(), std::move(gens), cone_.deg());
  }
  return *slot;
}

const EulerianPoset& FaceLattice::poset() const {
  std::lock_guard lock(cache_->mutex);
  if (!cache_->poset)
    cache_->poset = std::make_unique<EulerianPoset>(GradedPoset(faces_.size(), covers_));
  return *cache_->poset;
}

std::vector<IntVector> FaceLattice::face_points_at_degree(std::size_t index, std::int64_t k,
                                                          bool interior_only) const {
  const std::uint64_t m = masks_.at(index);
  std::vector<IntVector> out;
  for (auto& x : cone_.lattice_points_at_degree(k)) {
    bool keep = true;
    for (std::size_t f = 0; f < facet_masks_.size() && keep; ++f) {
      const bool contains_face = (m & ~facet_masks_[f]) == 0;
      const auto s = dot(cone_.facets()[f], x);
      if (contains_face && s != 0) keep = false;
      if (!contains_face && interior_only && s == 0) keep = false;
    }
    if (keep) out.push_back(std::move(x));
  }
  return out;
}

FaceLattice face_lattice(const GradedCone& cone) { return FaceLattice(cone); }

ReflexivePair::ReflexivePair(const LatticePolytope& p)
    : polytope_(p), dual_([&] {
        if (!is_reflexive(p)) throw Error(ErrorKind::NotReflexivePair, "polytope is not reflexive");
        return stringy::dual_polytope(p).to_lattice();
      }()) {
  lattice_ = std::make_shared<const FaceLattice>(gorenstein_cone_over(polytope_));
  dual_lattice_ = std::make_shared<const FaceLattice>(gorenstein_cone_over(dual_));
  auto dual_map = [](const FaceLattice& from, const FaceLattice& to) {
    std::vector<std::size_t> out;
    const auto& to_gens = to.cone().generators();
    for (const auto& face : from.faces()) {
      std::vector<std::size_t> orth;
      for (std::size_t j = 0; j < to_gens.size(); ++j) {
        bool ok = true;
        for (auto i : face.generators)
          if (dot(from.cone().generators()[i], to_gens[j]) != 0) ok = false;
        if (ok) orth.push_back(j);
      }
      auto idx = to.find(orth);
      if (!idx || to.faces()[*idx].dim + face.dim != from.cone().dim())
        throw Error(ErrorKind::NotReflexivePair, "dual face correspondence failed");
      out.push_back(*idx);
    }
    return out;
  };
  dual_face_ = dual_map(*lattice_, *dual_lattice_);
  dual_face_inverse_ = dual_map(*dual_lattice_, *lattice_);
}

FanSubdivision FanSubdivision::trivial(const GradedCone& parent) {
  return FanSubdivision{parent, {parent}, {}};
}

bool FanSubdivision::share_cone(const IntVector& a, const IntVector& b) const {
  for (const auto& c : max_cones)
    if (c.contains(a) && c.contains(b)) return true;
  return false;
}

namespace {

/// Generators of `cell` on the smallest face of `cell` containing x.
GradedCone minimal_face_in(const GradedCone& cell, const IntVector& x) {
  std::vector<IntVector> gens;
  for (const auto& g : cell.generators()) {
    bool on = true;
    for (const auto& f : cell.facets())
      if (dot(f, x) == 0 && dot(f, g) != 0) on = false;
    if (on) gens.push_back(g);
  }
  return GradedCone(cell.ambient_rank(), std::move(gens), cell.deg());
}

}  // namespace

void FanSubdivision::validate(std::int64_t max_degree) const {
  if (max_cones.empty()) throw Error(ErrorKind::InvalidSubdivision, "no cells");
  for (const auto& c : max_cones) {
    if (c.ambient_rank() != parent.ambient_rank() || c.dim() != parent.dim())
      throw Error(ErrorKind::InvalidSubdivision, "cell is not full-dimensional");
    for (const auto& g : c.generators()) {
      if (!parent.contains(g)) throw Error(ErrorKind::InvalidSubdivision, "cell leaves the cone");
      if (parent.degree_of(g) != 1)
        throw Error(ErrorKind::InvalidSubdivision, "cell generator not of degree one");
    }
  }
  for (std::int64_t k = 1; k <= max_degree; ++k) {
    for (const auto& x : parent.lattice_points_at_degree(k)) {
      std::optional<GradedCone> first;
      for (const auto& c : max_cones) {
        if (!c.contains(x)) continue;
        GradedCone face = minimal_face_in(c, x);
        if (!first) first = std::move(face);
        else if (!(*first == face))
          throw Error(ErrorKind::InvalidSubdivision, "cells overlap improperly");
      }
      if (!first) throw Error(ErrorKind::InvalidSubdivision, "cells do not cover the cone");
    }
  }
}

FanSubdivision FanSubdivision::restrict_to(const GradedCone& face) const {
  FanSubdivision out{face, {}, provenance};
  std::set<std::vector<IntVector>> seen;
  for (const auto& c : max_cones) {
    std::vector<IntVector> gens;
    for (const auto& g : c.generators())
      if (face.contains(g)) gens.push_back(g);
    if (gens.empty() || rank(gens) != face.dim()) continue;
    GradedCone cell(face.ambient_rank(), std::move(gens), face.deg());
    if (seen.insert(cell.generators()).second) out.max_cones.push_back(std::move(cell));
  }
  return out;
}

namespace {

/// Cells of the lower hull; `degenerate` reports a cell with more points on
/// its lower facet than its dimension.
std::vector<GradedCone> lower_hull_cells(const GradedCone& cone,
                                         const std::vector<IntVector>& points,
                                         const std::vector<std::int64_t>& heights,
                                         bool& degenerate) {
  const std::size_t n = cone.ambient_rank();
  std::vector<IntVector> lifted;
  for (std::size_t i = 0; i < points.size(); ++i) lifted.push_back(with_last(points[i], heights[i]));
  IntVector up(n + 1, 0);
  up.back() = 1;
  lifted.push_back(up);
  const SpanChart chart = span_chart(lifted, n + 1);
  degenerate = false;
  std::vector<GradedCone> cells;
  for (const auto& f : cone_facets(lifted, chart)) {
    if (dot(f, up) <= 0) continue;
    std::vector<IntVector> on;
    for (std::size_t i = 0; i < points.size(); ++i)
      if (dot(f, lifted[i]) == 0) on.push_back(points[i]);
    if (on.size() > cone.dim()) degenerate = true;
    cells.emplace_back(n, std::move(on), cone.deg());
  }
  std::sort(cells.begin(), cells.end(),
            [](const GradedCone& a, const GradedCone& b) { return a.generators() < b.generators(); });
  return cells;
}

}  // namespace

FanSubdivision regular_subdivision(const GradedCone& cone, const std::vector<std::int64_t>& heights,
                                   LiftPolicy policy) {
  const auto points = cone.lattice_points_at_degree(1);
  if (heights.size() != points.size())
    throw Error(ErrorKind::InvalidArgument,
                "expected " + std::to_string(points.size()) + " heights, got " +
                    std::to_string(heights.size()));
  FanSubdivision out{cone, {}, {}};
  out.provenance.explicit_cells = false;
  out.provenance.heights = heights;
  out.provenance.effective_heights = heights;

  bool degenerate = false;
  out.max_cones = lower_hull_cells(cone, points, heights, degenerate);
  if (policy == LiftPolicy::literal || !degenerate) return out;

  for (int power = 1; power <= 3; ++power) {
    std::vector<std::int64_t> w(points.size());
    std::int64_t base = 1;
    for (std::size_t i = 0; i < points.size(); ++i) {
      std::int64_t v = 1;
      for (int p = 0; p < power; ++p) v *= static_cast<std::int64_t>(i + 1);
      w[i] = v;
      base += v;
    }
    std::vector<std::int64_t> effective(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) effective[i] = heights[i] * base + w[i];
    auto cells = lower_hull_cells(cone, points, effective, degenerate);
    if (degenerate) continue;
    out.max_cones = std::move(cells);
    out.provenance.effective_heights = std::move(effective);
    out.provenance.perturbation_base = base;
    out.provenance.perturbation_power = power;
    return out;
  }
  throw Error(ErrorKind::DegenerateLift, "heights stay degenerate after perturbation");
}

FanSubdivision star_subdivision(const GradedCone& cone, const IntVector& apex) {
  if (cone.degree_of(apex) != 1 || !cone.contains(apex))
    throw Error(ErrorKind::PointOutsideCone, "apex must be a degree-1 point of the cone");
  const auto points = cone.lattice_points_at_degree(1);
  FanSubdivision out{cone, {}, {}};
  out.provenance.explicit_cells = false;
  for (const auto& x : points) out.provenance.heights.push_back(x == apex ? -1 : 0);
  out.provenance.effective_heights = out.provenance.heights;
  for (const auto& f : cone.facets()) {
    if (dot(f, apex) == 0) continue;
    std::vector<IntVector> gens{apex};
    for (const auto& g : cone.generators())
      if (dot(f, g) == 0) gens.push_back(g);
    out.max_cones.emplace_back(cone.ambient_rank(), std::move(gens), cone.deg());
  }
  std::sort(out.max_cones.begin(), out.max_cones.end(),
            [](const GradedCone& a, const GradedCone& b) { return a.generators() < b.generators(); });
  return out;
}

}  // namespace stringy
