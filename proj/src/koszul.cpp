#include "stringy/koszul.hpp"

#include <bit>
#include <future>
#include <tuple>

#include "stringy/error.hpp"
#include "stringy/invariants.hpp"

namespace stringy {

namespace {

using PointsByDegree = std::vector<std::vector<IntVector>>;
using PointIndex = std::vector<std::map<IntVector, std::size_t>>;

struct Side {
  PointsByDegree points;
  PointIndex index;

  Side(const GradedCone& cone, int max_degree) {
    for (int k = 0; k <= max_degree; ++k) {
      points.push_back(cone.lattice_points_at_degree(k));
      std::map<IntVector, std::size_t> idx;
      for (std::size_t i = 0; i < points.back().size(); ++i) idx.emplace(points.back()[i], i);
      index.push_back(std::move(idx));
    }
  }
};

IntVector add(const IntVector& a, const IntVector& b) {
  IntVector s = a;
  for (std::size_t i = 0; i < s.size(); ++i) s[i] += b[i];
  return s;
}

// (-1)^{#{j in w : j < i}}
int wedge_sign(std::uint32_t w, std::size_t i) {
  return std::popcount(w & ((1u << i) - 1)) % 2 == 0 ? 1 : -1;
}

KoszulDegree degree_of(const KoszulBasisElement& x) {
  return {x.deg_m + x.deg_n, std::popcount(x.wedge) + x.deg_m - x.deg_n};
}

using Key = std::tuple<std::uint32_t, int, std::size_t, std::size_t>;

Key key_of(const KoszulBasisElement& x) { return {x.wedge, x.deg_m, x.m, x.n}; }

void check_d_squared(const DifferentialBlock& first, const DifferentialBlock& second) {
  for (const auto& image : first.images) {
    std::map<std::size_t, BigInt> out;
    for (const auto& [k, c] : image)
      for (const auto& [j, x] : second.images[k]) out[j] += c * x;
    for (const auto& [j, v] : out)
      if (v != 0) throw Error(ErrorKind::InvalidArgument, "differential does not square to zero");
  }
}

std::size_t block_rank(const DifferentialBlock& block, std::size_t width, const FieldSpec& field) {
  if (block.images.empty() || width == 0) return 0;
  if (field.kind == FieldSpec::Kind::rational) return certified_rational_rank(block.images, width);
  const PrimeField f{field.prime};
  Echelon<PrimeField> e(f, width);
  for (const auto& image : block.images) {
    Echelon<PrimeField>::SparseRow row;
    for (const auto& [c, x] : image) row.emplace_back(c, f.from_big(x));
    e.insert(row);
    if (e.rank() == width) break;
  }
  return e.rank();
}

}  // namespace

KoszulComplex build_complex(const ReflexivePair& pair, const DegreeOneElement& f,
                            const DegreeOneElement& g, const KoszulOptions& options) {
  const GradedCone& k_cone = pair.cone();
  const GradedCone& dual = pair.dual_cone();
  if (!(f.cone == k_cone)) throw Error(ErrorKind::InvalidArgument, "f must live on K");
  if (!(g.cone == dual)) throw Error(ErrorKind::InvalidArgument, "g must live on K*");
  if (options.dual_subdivision && !(options.dual_subdivision->parent == dual))
    throw Error(ErrorKind::InvalidSubdivision, "subdivision is not of K*");
  options.field.check();

  const int dim = static_cast<int>(k_cone.dim());
  const int cap = options.cap.value_or(dim);
  if (cap < dim)
    throw Error(ErrorKind::CapTooSmall,
                "cap " + std::to_string(cap) + " is below dim K = " + std::to_string(dim));
  const FanSubdivision sigma = options.dual_subdivision.value_or(FanSubdivision::trivial(dual));
  if (options.check_regularity) {
    if (!is_sigma_regular(f, FanSubdivision::trivial(k_cone), options.field).regular)
      throw Error(ErrorKind::NotRegular, "f is degenerate");
    if (!is_sigma_regular(g, sigma, options.field).regular)
      throw Error(ErrorKind::NotRegular, "g is degenerate");
  }

  const std::size_t rank = k_cone.ambient_rank();
  const std::uint32_t full = (1u << rank) - 1;
  const Side ks(k_cone, cap + 1), ns(dual, cap + 1);

  KoszulComplex out;
  out.cap = cap;
  out.lattice_rank = rank;
  for (int s = 0; s <= cap + 1; ++s)
    for (int a = 0; a <= s; ++a) {
      const int b = s - a;
      for (std::size_t mi = 0; mi < ks.points[a].size(); ++mi)
        for (std::size_t ni = 0; ni < ns.points[b].size(); ++ni) {
          if (dot(ks.points[a][mi], ns.points[b][ni]) != 0) continue;
          for (std::uint32_t w = 0; w <= full; ++w) {
            KoszulBasisElement x{w, a, mi, b, ni};
            out.pieces[degree_of(x)].push_back(x);
          }
        }
    }
  std::map<KoszulDegree, std::map<Key, std::size_t>> lookup;
  for (auto& [deg, basis] : out.pieces) {
    std::sort(basis.begin(), basis.end());
    auto& l = lookup[deg];
    for (std::size_t i = 0; i < basis.size(); ++i) l.emplace(key_of(basis[i]), i);
  }

  for (const auto& [deg, basis] : out.pieces) {
    if (deg.total > cap) continue;
    const KoszulDegree target{deg.total + 1, deg.weight};
    DifferentialBlock block{deg, target, {}};
    const auto target_lookup = lookup.find(target);
    for (const auto& x : basis) {
      std::map<std::size_t, BigInt> image;
      const IntVector& m = ks.points[x.deg_m][x.m];
      const IntVector& n = ns.points[x.deg_n][x.n];
      for (const auto& [mp, c] : f.coefficients) {
        if (dot(mp, n) != 0) continue;
        const std::size_t mj = ks.index[x.deg_m + 1].at(add(m, mp));
        for (std::size_t i = 0; i < rank; ++i) {
          if (!(x.wedge >> i & 1u) || mp[i] == 0) continue;
          const Key key{x.wedge & ~(1u << i), x.deg_m + 1, mj, x.n};
          image[target_lookup->second.at(key)] += c * (wedge_sign(x.wedge, i) * mp[i]);
        }
      }
      for (const auto& [np, c] : g.coefficients) {
        if (dot(m, np) != 0) continue;
        const auto sum = deformed_product(sigma, n, np);
        if (!sum) continue;
        const std::size_t nj = ns.index[x.deg_n + 1].at(*sum);
        for (std::size_t i = 0; i < rank; ++i) {
          if ((x.wedge >> i & 1u) || np[i] == 0) continue;
          const Key key{x.wedge | (1u << i), x.deg_m, x.m, nj};
          image[target_lookup->second.at(key)] += c * (wedge_sign(x.wedge, i) * np[i]);
        }
      }
      SparseIntRow row;
      for (auto& [j, v] : image)
        if (v != 0) row.emplace_back(j, std::move(v));
      block.images.push_back(std::move(row));
    }
    out.blocks.emplace(deg, std::move(block));
  }

  for (const auto& [deg, block] : out.blocks) {
    auto next = out.blocks.find(block.target);
    if (next != out.blocks.end()) check_d_squared(block, next->second);
  }
  return out;
}

std::map<KoszulDegree, std::size_t> cohomology_dims(const KoszulComplex& complex,
                                                    const FieldSpec& field) {
  field.check();
  std::vector<std::pair<KoszulDegree, std::future<std::size_t>>> jobs;
  for (const auto& [deg, block] : complex.blocks) {
    const std::size_t width = complex.pieces.at(block.target).size();
    jobs.emplace_back(deg, std::async(std::launch::async, [&block, width, &field] {
                        return block_rank(block, width, field);
                      }));
  }
  std::map<KoszulDegree, std::size_t> ranks;
  for (auto& [deg, job] : jobs) ranks[deg] = job.get();

  std::map<KoszulDegree, std::size_t> out;
  for (const auto& [deg, basis] : complex.pieces) {
    if (deg.total > complex.cap) continue;
    const KoszulDegree previous{deg.total - 1, deg.weight};
    const std::size_t outgoing = ranks.count(deg) ? ranks.at(deg) : 0;
    const std::size_t incoming = ranks.count(previous) ? ranks.at(previous) : 0;
    out[deg] = basis.size() - outgoing - incoming;
  }
  return out;
}

KoszulComparison compare_with_decomposition(const ReflexivePair& pair, const DegreeOneElement& f,
                                            const DegreeOneElement& g,
                                            const KoszulOptions& options) {
  const KoszulComplex complex = build_complex(pair, f, g, options);
  KoszulComparison report;
  report.observed = cohomology_dims(complex, options.field);

  const FaceLattice& lattice = pair.lattice();
  const FaceLattice& dual_lattice = pair.dual_lattice();
  const auto ts = face_tilde_s_polynomials(lattice, face_s_polynomials(lattice));
  const auto ts_dual = face_tilde_s_polynomials(dual_lattice, face_s_polynomials(dual_lattice));
  for (std::size_t c = 0; c < lattice.size(); ++c) {
    const std::size_t d = pair.dual_face(c);
    const int wedge = static_cast<int>(dual_lattice.faces()[d].dim);
    for (const auto& [i, x] : ts[c].terms())
      for (const auto& [j, y] : ts_dual[d].terms()) {
        if (i + j > complex.cap) continue;
        const BigInt count = x * y;
        if (count <= 0) throw Error(ErrorKind::InvalidArgument, "tilde S has a negative coefficient");
        const std::size_t n = count.get_ui();
        report.contributions.push_back({c, i, j, wedge, n});
        report.predicted[{i + j, wedge + i - j}] += n;
      }
  }

  std::map<KoszulDegree, std::size_t> keys = report.observed;
  for (const auto& [deg, n] : report.predicted) keys.emplace(deg, 0);
  for (const auto& [deg, unused] : keys) {
    const auto o = report.observed.count(deg) ? report.observed.at(deg) : 0;
    const auto p = report.predicted.count(deg) ? report.predicted.at(deg) : 0;
    if (o != p) report.mismatches.push_back(deg);
    if (deg.total == complex.cap) report.boundary.push_back(deg);
  }
  report.agrees = report.mismatches.empty();
  return report;
}

}  // namespace stringy
