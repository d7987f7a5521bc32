#include "stringy/invariants.hpp"

#include <algorithm>
#include <set>

#include "stringy/error.hpp"
#include "stringy/poset.hpp"

namespace stringy {

namespace {

constexpr SignedMonomial kUV{1, 1, 1};
constexpr SignedMonomial kVOverU{1, -1, 1};

UnivariatePolynomial s_from_counts(const std::vector<std::size_t>& counts, std::size_t dim) {
  UnivariatePolynomial series;
  for (std::size_t k = 0; k < counts.size(); ++k)
    series.add_term(static_cast<int>(k), BigInt(static_cast<unsigned long>(counts[k])));
  return (UnivariatePolynomial::binomial_power(1, -1, static_cast<int>(dim)) * series)
      .truncate_below(static_cast<long>(dim) + 1);
}

BivariateLaurentPolynomial divide_by_uv(const BivariateLaurentPolynomial& numerator) {
  for (const auto& [e, c] : numerator.terms())
    if (e.first < 1 || e.second < 1)
      throw Error(ErrorKind::DivisionNotExact,
                  "numerator term u^" + std::to_string(e.first) + " v^" +
                      std::to_string(e.second) + " is not divisible by uv");
  return numerator.shifted(-1, -1);
}

BivariateLaurentPolynomial uv_minus_one_power(std::size_t n) {
  return BivariateLaurentPolynomial::from_univariate(
      UnivariatePolynomial::binomial_power(-1, 1, static_cast<int>(n)), kUV);
}

}  // namespace

UnivariatePolynomial s_polynomial(const GradedCone& cone) {
  std::vector<std::size_t> counts;
  for (std::size_t k = 0; k <= cone.dim(); ++k)
    counts.push_back(cone.lattice_points_at_degree(static_cast<std::int64_t>(k)).size());
  return s_from_counts(counts, cone.dim());
}

UnivariatePolynomial s_polynomial_from_interior(const GradedCone& cone) {
  std::vector<std::size_t> counts;
  for (std::size_t k = 0; k <= cone.dim(); ++k)
    counts.push_back(cone.lattice_points_at_degree(static_cast<std::int64_t>(k), true).size());
  return s_from_counts(counts, cone.dim());
}

std::vector<UnivariatePolynomial> face_s_polynomials(const FaceLattice& lattice) {
  std::vector<UnivariatePolynomial> out;
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    const std::size_t dim = lattice.faces()[i].dim;
    std::vector<std::size_t> counts;
    for (std::size_t k = 0; k <= dim; ++k)
      counts.push_back(lattice.face_points_at_degree(i, static_cast<std::int64_t>(k)).size());
    out.push_back(s_from_counts(counts, dim));
  }
  return out;
}

std::vector<UnivariatePolynomial> face_tilde_s_polynomials(
    const FaceLattice& lattice, const std::vector<UnivariatePolynomial>& s) {
  const EulerianPoset& poset = lattice.poset();
  std::vector<UnivariatePolynomial> out;
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    UnivariatePolynomial sum;
    for (std::size_t j = 0; j < lattice.size(); ++j) {
      if (!lattice.contains(j, i)) continue;
      UnivariatePolynomial term = s[j] * poset.g_polynomial({j, i, false});
      if ((lattice.faces()[i].dim - lattice.faces()[j].dim) % 2 == 0) sum += term;
      else sum -= term;
    }
    out.push_back(std::move(sum));
  }
  return out;
}

UnivariatePolynomial tilde_s_polynomial(const GradedCone& cone) {
  const FaceLattice lattice(cone);
  return face_tilde_s_polynomials(lattice, face_s_polynomials(lattice)).back();
}

UnivariatePolynomial tilde_s_simplicial(const GradedCone& cone) {
  if (!cone.is_simplicial()) throw Error(ErrorKind::NotSimplicial, "cone is not simplicial");
  const FaceLattice lattice(cone);
  const auto s = face_s_polynomials(lattice);
  UnivariatePolynomial sum;
  for (std::size_t j = 0; j < lattice.size(); ++j) {
    if ((cone.dim() - lattice.faces()[j].dim) % 2 == 0) sum += s[j];
    else sum -= s[j];
  }
  return sum;
}

BoxPointTable box_points(const GradedCone& cone) {
  if (!cone.is_simplicial()) throw Error(ErrorKind::NotSimplicial, "cone is not simplicial");
  BoxPointTable table{cone, {}};
  const std::size_t k = cone.dim();
  if (k == 0) return table;
  // Invert the generator matrix in chart coordinates: rows of [M | I].
  RationalMatrix m(k, RationalVector(2 * k, Rational(0)));
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t c = 0; c < k; ++c)
      m[r][c] = static_cast<long>(cone.generators()[c][cone.chart().coords[r]]);
    m[r][k + r] = 1;
  }
  rref(m);
  for (std::int64_t l = 1; l < static_cast<std::int64_t>(k); ++l) {
    for (const auto& x : cone.lattice_points_at_degree(l, true)) {
      const IntVector y = cone.chart().project(x);
      bool inside = true;
      for (std::size_t r = 0; r < k && inside; ++r) {
        Rational a = 0;
        for (std::size_t c = 0; c < k; ++c) a += m[r][k + c] * y[c];
        if (sgn(a) <= 0 || a >= 1) inside = false;
      }
      if (inside) table.by_shift[l].push_back(x);
    }
  }
  return table;
}

BivariateLaurentPolynomial e_st_hypersurface(const ReflexivePair& pair) {
  const FaceLattice& lat = pair.lattice();
  const FaceLattice& dual = pair.dual_lattice();
  const auto ts = face_tilde_s_polynomials(lat, face_s_polynomials(lat));
  const auto ts_dual = face_tilde_s_polynomials(dual, face_s_polynomials(dual));
  BivariateLaurentPolynomial numerator;
  for (std::size_t c = 0; c < lat.size(); ++c) {
    const int dim = static_cast<int>(lat.faces()[c].dim);
    BivariateLaurentPolynomial term =
        (BivariateLaurentPolynomial::from_univariate(ts[c], kVOverU) *
         BivariateLaurentPolynomial::from_univariate(ts_dual[pair.dual_face(c)], kUV))
            .shifted(dim, 0);
    if (dim % 2 == 0) numerator += term;
    else numerator -= term;
  }
  return divide_by_uv(numerator);
}

BivariateLaurentPolynomial e_st_oracle(const ReflexivePair& pair) {
  const FaceLattice& lat = pair.lattice();
  const EulerianPoset& poset = lat.poset();
  const auto s = face_s_polynomials(lat);
  const auto s_dual = face_s_polynomials(pair.dual_lattice());
  BivariateLaurentPolynomial numerator;
  for (std::size_t f = 0; f < lat.size(); ++f) {
    const auto s_f = BivariateLaurentPolynomial::from_univariate(s[f], kVOverU);
    for (std::size_t g = 0; g < lat.size(); ++g) {
      if (!lat.contains(f, g)) continue;
      BivariateLaurentPolynomial term =
          (poset.b_polynomial({f, g, true}) * s_f *
           BivariateLaurentPolynomial::from_univariate(s_dual[pair.dual_face(g)], kUV))
              .shifted(static_cast<int>(lat.faces()[f].dim), 0);
      if (lat.faces()[g].dim % 2 == 0) numerator += term;
      else numerator -= term;
    }
  }
  return divide_by_uv(numerator);
}

BivariateLaurentPolynomial mirror_transform(const BivariateLaurentPolynomial& e, std::size_t d) {
  const auto flipped = e.substitute({1, -1, 0}, {1, 0, 1});
  return flipped * BivariateLaurentPolynomial::monomial(BigInt(-1), 1, 0).pow(static_cast<int>(d) - 1);
}

BigInt HodgeTable::at(long p, long q) const {
  auto it = entries.find({Rational(p), Rational(q)});
  return it == entries.end() ? BigInt(0) : it->second;
}

BivariateLaurentPolynomial HodgeTable::signed_sum() const {
  BivariateLaurentPolynomial out;
  for (const auto& [pq, h] : entries) {
    const auto& [p, q] = pq;
    if (p.get_den() != 1 || q.get_den() != 1) continue;
    const long a = p.get_num().get_si(), b = q.get_num().get_si();
    out.add_term(static_cast<int>(a), static_cast<int>(b), (a + b) % 2 == 0 ? h : BigInt(-h));
  }
  return out;
}

bool HodgeTable::is_symmetric() const {
  for (const auto& [pq, h] : entries) {
    auto it = entries.find({pq.second, pq.first});
    if (it == entries.end() || it->second != h) return false;
  }
  return true;
}

HodgeTable stringy_hodge_table(const BivariateLaurentPolynomial& e, int dimension) {
  HodgeTable table;
  table.dimension = dimension;
  for (const auto& [pq, c] : e.terms()) {
    const auto [p, q] = pq;
    if (p < 0 || q < 0)
      throw Error(ErrorKind::InvalidArgument, "E-polynomial has negative exponents");
    const BigInt h = (p + q) % 2 == 0 ? c : BigInt(-c);
    if (h < 0)
      throw Error(ErrorKind::NegativeHodgeNumber, "h^{" + std::to_string(p) + "," +
                                                      std::to_string(q) + "} = " + h.get_str());
    table.entries.emplace(std::make_pair(Rational(p), Rational(q)), h);
  }
  return table;
}

namespace {

struct FanCone {
  std::vector<std::size_t> rays;
  std::size_t dim;
};

GradedCone cone_of(const Fan& fan, const std::vector<std::size_t>& rays) {
  std::vector<IntVector> gens;
  for (auto r : rays) gens.push_back(fan.rays.at(r));
  return GradedCone(fan.rank, std::move(gens));
}

/// Ray indices of each generator of `cone`, which was built from `rays`.
std::vector<std::size_t> generator_rays(const Fan& fan, const GradedCone& cone,
                                        const std::vector<std::size_t>& rays) {
  std::vector<std::size_t> out;
  for (const auto& g : cone.generators()) {
    auto it = std::find_if(rays.begin(), rays.end(),
                           [&](std::size_t r) { return primitive(fan.rays[r]) == g; });
    out.push_back(*it);
  }
  if (out.size() != rays.size())
    throw Error(ErrorKind::InvalidArgument, "fan cone lists a ray that is not extreme");
  return out;
}

std::vector<FanCone> all_cones(const Fan& fan) {
  for (const auto& r : fan.rays)
    if (r.size() != fan.rank) throw Error(ErrorKind::InvalidArgument, "ray has wrong size");
  std::set<std::pair<std::size_t, std::vector<std::size_t>>> found;
  for (const auto& max : fan.cones) {
    std::vector<std::size_t> rays = max;
    std::sort(rays.begin(), rays.end());
    const GradedCone cone = cone_of(fan, rays);
    const auto map = generator_rays(fan, cone, rays);
    const FaceLattice lattice(cone);
    for (const auto& face : lattice.faces()) {
      std::vector<std::size_t> idx;
      for (auto g : face.generators) idx.push_back(map[g]);
      std::sort(idx.begin(), idx.end());
      found.emplace(face.dim, std::move(idx));
    }
  }
  std::vector<FanCone> out;
  for (const auto& [dim, rays] : found) out.push_back({rays, dim});
  return out;
}

void check_complete(const Fan& fan, const std::vector<FanCone>& cones) {
  std::vector<std::vector<std::size_t>> maximal;
  for (const auto& c : cones)
    if (c.dim == fan.rank) maximal.push_back(c.rays);
  if (maximal.empty()) throw Error(ErrorKind::NotComplete, "fan has no full-dimensional cone");
  for (const auto& max : fan.cones) {
    std::vector<std::size_t> rays = max;
    std::sort(rays.begin(), rays.end());
    if (std::find(maximal.begin(), maximal.end(), rays) == maximal.end())
      throw Error(ErrorKind::NotComplete, "fan has a maximal cone of lower dimension");
  }
  for (const auto& c : cones) {
    if (c.dim + 1 != fan.rank) continue;
    std::size_t borders = 0;
    for (const auto& m : maximal)
      if (std::includes(m.begin(), m.end(), c.rays.begin(), c.rays.end())) ++borders;
    if (borders != 2)
      throw Error(ErrorKind::NotComplete, "a codimension-one cone borders " +
                                              std::to_string(borders) + " maximal cones");
  }
}

}  // namespace

std::vector<std::vector<std::size_t>> fan_cones(const Fan& fan) {
  std::vector<std::vector<std::size_t>> out;
  for (auto& c : all_cones(fan)) out.push_back(std::move(c.rays));
  return out;
}

BivariateLaurentPolynomial e_st_toric(const Fan& fan) {
  const auto cones = all_cones(fan);
  check_complete(fan, cones);
  BivariateLaurentPolynomial e;
  for (const auto& c : cones) {
    const UnivariatePolynomial s =
        c.rays.empty() ? UnivariatePolynomial(1) : s_polynomial(cone_of(fan, c.rays));
    e += uv_minus_one_power(fan.rank - c.dim) * BivariateLaurentPolynomial::from_univariate(s, kUV);
  }
  return e;
}

BivariateLaurentPolynomial e_int_orbit_closure(const Fan& fan, std::vector<std::size_t> cone) {
  std::sort(cone.begin(), cone.end());
  const auto cones = all_cones(fan);
  if (std::none_of(cones.begin(), cones.end(), [&](const FanCone& c) { return c.rays == cone; }))
    throw Error(ErrorKind::ConeNotInFan, "cone is not in the fan");
  BivariateLaurentPolynomial e;
  for (const auto& tau : cones) {
    if (!std::includes(tau.rays.begin(), tau.rays.end(), cone.begin(), cone.end())) continue;
    UnivariatePolynomial g = 1;
    if (!tau.rays.empty()) {
      const GradedCone tau_cone = cone_of(fan, tau.rays);
      const auto map = generator_rays(fan, tau_cone, tau.rays);
      std::vector<std::size_t> sigma_gens;
      for (std::size_t i = 0; i < map.size(); ++i)
        if (std::binary_search(cone.begin(), cone.end(), map[i])) sigma_gens.push_back(i);
      const FaceLattice lattice(tau_cone);
      const auto sigma = lattice.find(sigma_gens);
      if (!sigma) throw Error(ErrorKind::ConeNotInFan, "cone is not a face of its star");
      g = lattice.poset().g_polynomial({*sigma, lattice.top(), true});
    }
    e += uv_minus_one_power(fan.rank - tau.dim) * BivariateLaurentPolynomial::from_univariate(g, kUV);
  }
  return e;
}

HodgeTable assemble_string_cohomology(const ReflexivePair& pair,
                                      const std::vector<std::vector<BigInt>>& r,
                                      const std::vector<std::vector<BigInt>>& r_dual) {
  const long d = static_cast<long>(pair.rank());
  HodgeTable table;
  table.dimension = static_cast<int>(d - 1);
  for (std::size_t c = 0; c < pair.lattice().size(); ++c) {
    const std::size_t cs = pair.dual_face(c);
    const long dim_c = static_cast<long>(pair.lattice().faces()[c].dim);
    const long dim_cs = static_cast<long>(pair.dual_lattice().faces()[cs].dim);
    for (std::size_t a = 0; a < r_dual[cs].size(); ++a) {
      if (r_dual[cs][a] == 0) continue;
      for (std::size_t b = 0; b < r[c].size(); ++b) {
        if (r[c][b] == 0) continue;
        // a = (p+q-d+dim C*+1)/2 and b = (q-p+dim C)/2.
        const Rational sum(2 * static_cast<long>(a) + d - dim_cs - 1);
        const Rational diff(2 * static_cast<long>(b) - dim_c);
        const Rational p = (sum - diff) / 2, q = (sum + diff) / 2;
        auto& h = table.entries[{p, q}];
        h += r_dual[cs][a] * r[c][b];
      }
    }
  }
  return table;
}

HodgeTable string_cohomology_table(const ReflexivePair& pair, const FanSubdivision& sigma) {
  if (!(sigma.parent == pair.dual_cone()))
    throw Error(ErrorKind::InvalidSubdivision, "subdivision is not of the dual cone");
  sigma.validate();
  auto vectors = [](const FaceLattice& lat) {
    std::vector<std::vector<BigInt>> out;
    for (const auto& p : face_tilde_s_polynomials(lat, face_s_polynomials(lat)))
      out.push_back(p.coefficients());
    return out;
  };
  return assemble_string_cohomology(pair, vectors(pair.lattice()), vectors(pair.dual_lattice()));
}

}  // namespace stringy
