#include "stringy/semigroup.hpp"

#include <random>

#include "stringy/error.hpp"
#include "stringy/linalg.hpp"

namespace stringy {

std::string FieldSpec::describe() const {
  return kind == Kind::rational ? "rational" : "prime:" + std::to_string(prime);
}

void FieldSpec::check() const {
  if (kind == Kind::rational) return;
  if (prime < kMinimumPrime)
    throw Error(ErrorKind::FieldCharacteristicTooSmall,
                "prime " + std::to_string(prime) + " is below " + std::to_string(kMinimumPrime));
  if (prime >= (1ULL << 32) || !is_prime(prime))
    throw Error(ErrorKind::InvalidArgument, std::to_string(prime) + " is not a prime below 2^32");
}

DegreeOneElement DegreeOneElement::random(const GradedCone& cone, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<unsigned long> dist(1, kMaxCoefficient);
  DegreeOneElement g{cone, {}, seed};
  for (const auto& m : cone.lattice_points_at_degree(1)) g.coefficients.emplace(m, BigInt(dist(rng)));
  return g;
}

DegreeOneElement DegreeOneElement::restricted_to(const GradedCone& sub) const {
  DegreeOneElement out{sub, {}, seed};
  for (const auto& m : sub.lattice_points_at_degree(1)) {
    auto it = coefficients.find(m);
    if (it != coefficients.end()) out.coefficients.emplace(m, it->second);
  }
  return out;
}

std::optional<IntVector> deformed_product(const FanSubdivision& sigma, const IntVector& m1,
                                          const IntVector& m2) {
  if (!sigma.parent.contains(m1) || !sigma.parent.contains(m2))
    throw Error(ErrorKind::PointOutsideCone, "factor is not a point of the cone");
  if (!sigma.share_cone(m1, m2)) return std::nullopt;
  IntVector sum = m1;
  for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += m2[i];
  return sum;
}

std::vector<DegreeOneElement> logarithmic_derivatives(const DegreeOneElement& g) {
  std::vector<DegreeOneElement> out;
  for (auto coord : g.cone.chart().coords) {
    DegreeOneElement gj{g.cone, {}, g.seed};
    for (const auto& [m, c] : g.coefficients) {
      BigInt v = c * static_cast<long>(m[coord]);
      if (v != 0) gj.coefficients.emplace(m, std::move(v));
    }
    out.push_back(std::move(gj));
  }
  return out;
}

namespace {

/// Which cells of sigma contain a point, as a bitset.
class CellMembership {
 public:
  explicit CellMembership(const FanSubdivision& sigma)
      : sigma_(sigma), trivial_(sigma.is_trivial()) {}

  bool share(const IntVector& a, const IntVector& b) {
    if (trivial_) return true;
    const auto& ma = mask(a);
    const auto& mb = mask(b);
    for (std::size_t i = 0; i < ma.size(); ++i)
      if (ma[i] & mb[i]) return true;
    return false;
  }

 private:
  const std::vector<std::uint64_t>& mask(const IntVector& x) {
    auto it = cache_.find(x);
    if (it != cache_.end()) return it->second;
    std::vector<std::uint64_t> bits((sigma_.max_cones.size() + 63) / 64, 0);
    for (std::size_t c = 0; c < sigma_.max_cones.size(); ++c)
      if (sigma_.max_cones[c].contains(x)) bits[c / 64] |= 1ULL << (c % 64);
    return cache_.emplace(x, std::move(bits)).first->second;
  }

  const FanSubdivision& sigma_;
  bool trivial_;
  std::map<IntVector, std::vector<std::uint64_t>> cache_;
};

IntVector add(const IntVector& a, const IntVector& b) {
  IntVector s = a;
  for (std::size_t i = 0; i < s.size(); ++i) s[i] += b[i];
  return s;
}

std::map<IntVector, std::size_t> index_of(const std::vector<IntVector>& points) {
  std::map<IntVector, std::size_t> out;
  for (std::size_t i = 0; i < points.size(); ++i) out.emplace(points[i], i);
  return out;
}

Rational as_rational(const Rational& x) { return x; }
Rational as_rational(std::uint64_t x) { return Rational(static_cast<unsigned long>(x)); }

/// Relations g_j * [b] for b in `sources`, as rows over the columns of
/// `targets`. Products leaving `targets` cannot occur: targets hold every
/// point of the right degree (or every interior one, for interior sources).
template <class Field>
class RelationBuilder {
 public:
  using Row = typename Echelon<Field>::SparseRow;

  RelationBuilder(const DegreeOneElement& g, const FanSubdivision& sigma, const Field& field)
      : field_(field), cells_(sigma) {
    for (const auto& gj : logarithmic_derivatives(g)) {
      std::vector<std::pair<IntVector, typename Field::value_type>> terms;
      for (const auto& [m, c] : gj.coefficients) terms.emplace_back(m, field.from_big(c));
      derivs_.push_back(std::move(terms));
    }
  }

  /// Inserts relations into `echelon` until it has full rank.
  void insert_relations(Echelon<Field>& echelon, const std::vector<IntVector>& sources,
                        const std::map<IntVector, std::size_t>& targets) {
    for (const auto& terms : derivs_) {
      for (const auto& b : sources) {
        if (echelon.rank() == echelon.width()) return;
        Row row;
        for (const auto& [m, c] : terms)
          if (cells_.share(m, b)) row.emplace_back(targets.at(add(m, b)), c);
        echelon.insert(row);
      }
    }
  }

  CellMembership& cells() { return cells_; }
  const Field& field() const { return field_; }

 private:
  Field field_;
  CellMembership cells_;
  std::vector<std::vector<std::pair<IntVector, typename Field::value_type>>> derivs_;
};

template <class Field>
GradedQuotientReport quotient_dims(const DegreeOneElement& g, const FanSubdivision& sigma,
                                   const Field& field) {
  const GradedCone& cone = sigma.parent;
  RelationBuilder<Field> relations(g, sigma, field);
  GradedQuotientReport report;
  const std::size_t n = cone.dim();
  for (std::size_t k = 0; k <= n + 1; ++k) {
    const auto points = cone.lattice_points_at_degree(static_cast<std::int64_t>(k));
    const auto index = index_of(points);
    Echelon<Field> echelon(field, points.size());
    if (k > 0)
      relations.insert_relations(echelon, cone.lattice_points_at_degree(static_cast<std::int64_t>(k - 1)),
                                 index);
    const std::size_t r0 = points.size() - echelon.rank();
    std::size_t r1 = 0;
    for (const auto& x : cone.lattice_points_at_degree(static_cast<std::int64_t>(k), true)) {
      if (echelon.rank() == echelon.width()) break;
      if (echelon.insert({{index.at(x), field.from_int(1)}})) ++r1;
    }
    if (k <= n) {
      report.dims_r0.push_back(r0);
      report.dims_r1.push_back(r1);
    } else {
      report.r0_above_top = r0;
      report.r1_above_top = r1;
    }
  }
  return report;
}

// Over Q the ranks are certified (see certified_rational_rank) instead of
// eliminated directly; exact elimination is far too slow past small cones.
GradedQuotientReport quotient_dims(const DegreeOneElement& g, const FanSubdivision& sigma,
                                   const RationalField&) {
  const GradedCone& cone = sigma.parent;
  CellMembership cells(sigma);
  const auto derivs = logarithmic_derivatives(g);
  GradedQuotientReport report;
  const std::size_t n = cone.dim();
  for (std::size_t k = 0; k <= n + 1; ++k) {
    const auto points = cone.lattice_points_at_degree(static_cast<std::int64_t>(k));
    const auto index = index_of(points);
    std::vector<SparseIntRow> rows;
    if (k > 0)
      for (const auto& gj : derivs)
        for (const auto& b : cone.lattice_points_at_degree(static_cast<std::int64_t>(k - 1))) {
          SparseIntRow row;
          for (const auto& [m, c] : gj.coefficients)
            if (cells.share(m, b)) row.emplace_back(index.at(add(m, b)), c);
          rows.push_back(std::move(row));
        }
    const std::size_t rank = certified_rational_rank(rows, points.size());
    const std::size_t r0 = points.size() - rank;
    std::size_t r1 = 0;
    if (r0 > 0) {
      for (const auto& x : cone.lattice_points_at_degree(static_cast<std::int64_t>(k), true))
        rows.push_back({{index.at(x), BigInt(1)}});
      r1 = certified_rational_rank(rows, points.size()) - rank;
    }
    if (k <= n) {
      report.dims_r0.push_back(r0);
      report.dims_r1.push_back(r1);
    } else {
      report.r0_above_top = r0;
      report.r1_above_top = r1;
    }
  }
  return report;
}

template <class Visitor>
auto with_field(const FieldSpec& spec, Visitor&& visit) {
  spec.check();
  if (spec.kind == FieldSpec::Kind::rational) return visit(RationalField{});
  return visit(PrimeField{spec.prime});
}

}  // namespace

GradedQuotientReport graded_quotient_dims(const DegreeOneElement& g, const FanSubdivision& sigma,
                                          const FieldSpec& field) {
  if (!(g.cone == sigma.parent))
    throw Error(ErrorKind::InvalidArgument, "element and subdivision live on different cones");
  GradedQuotientReport report =
      with_field(field, [&](const auto& f) { return quotient_dims(g, sigma, f); });
  report.seed = g.seed;
  report.field = field;
  report.subdivision = sigma.provenance;
  report.trivial_subdivision = sigma.is_trivial();
  return report;
}

GradedQuotientReport certified_quotient_dims(const DegreeOneElement& g,
                                             const FanSubdivision& sigma, std::uint64_t prime) {
  GradedQuotientReport exact = graded_quotient_dims(g, sigma, FieldSpec::rational_field());
  for (int attempt = 0; attempt < 3; ++attempt) {
    if (graded_quotient_dims(g, sigma, FieldSpec::prime_field(prime)) == exact) {
      exact.cross_checked_prime = prime;
      break;
    }
    prime = previous_prime(prime);
  }
  return exact;
}

RegularityVerdict is_sigma_regular(const DegreeOneElement& g, const FanSubdivision& sigma,
                                   const FieldSpec& field) {
  RegularityVerdict verdict;
  for (std::size_t c = 0; c < sigma.max_cones.size(); ++c) {
    const GradedCone& cell = sigma.max_cones[c];
    const auto report =
        graded_quotient_dims(g.restricted_to(cell), FanSubdivision::trivial(cell), field);
    std::size_t total = 0;
    for (auto d : report.dims_r0) total += d;
    const BigInt expected = s_polynomial(cell).value_at_one();
    if (report.r0_above_top != 0 || BigInt(static_cast<unsigned long>(total)) != expected) {
      verdict.regular = false;
      verdict.witness = c;
      verdict.note = "not regular at cutoff: cell " + std::to_string(c) + " has quotient " +
                     std::to_string(total) + " (expected " + expected.get_str() +
                     ") and degree-" + std::to_string(cell.dim() + 1) + " part " +
                     std::to_string(report.r0_above_top);
      return verdict;
    }
  }
  return verdict;
}

DegreeOneElement generic_element(const FanSubdivision& sigma, std::uint64_t seed,
                                 const FieldSpec& field) {
  for (int attempt = 0; attempt <= kGenericRetries; ++attempt) {
    DegreeOneElement g = DegreeOneElement::random(sigma.parent, seed + attempt);
    if (is_sigma_regular(g, sigma, field).regular) return g;
  }
  throw Error(ErrorKind::NotGenericAfterRetries,
              "no regular element after " + std::to_string(kGenericRetries) + " reseeds of seed " +
                  std::to_string(seed));
}

namespace {

template <class Field>
PairingReport pairing(const DegreeOneElement& g, const FanSubdivision& sigma, std::size_t k,
                      const Field& field) {
  const GradedCone& cone = sigma.parent;
  const std::size_t n = cone.dim();
  PairingReport report;
  report.degree = k;
  if (k > n) {
    report.full_rank = true;
    report.r1_symmetric = true;
    return report;
  }
  RelationBuilder<Field> relations(g, sigma, field);
  auto deg = [](std::size_t d) { return static_cast<std::int64_t>(d); };

  // R0_k: monomials outside the pivot columns of the relations.
  const auto points = cone.lattice_points_at_degree(deg(k));
  Echelon<Field> ek(field, points.size());
  if (k > 0) relations.insert_relations(ek, cone.lattice_points_at_degree(deg(k - 1)), index_of(points));
  std::vector<IntVector> left;
  for (std::size_t i = 0; i < points.size(); ++i)
    if (!ek.is_pivot(i)) left.push_back(points[i]);

  // Interior module in degree j modulo g_j times interior points of degree j-1.
  auto interior_quotient = [&](std::size_t j) {
    const auto interior = cone.lattice_points_at_degree(deg(j), true);
    Echelon<Field> e(field, interior.size());
    if (j > 0)
      relations.insert_relations(e, cone.lattice_points_at_degree(deg(j - 1), true),
                                 index_of(interior));
    return std::make_pair(interior, std::move(e));
  };
  auto [complement_pts, complement] = interior_quotient(n - k);
  std::vector<IntVector> right;
  for (std::size_t i = 0; i < complement_pts.size(); ++i)
    if (!complement.is_pivot(i)) right.push_back(complement_pts[i]);
  auto [top_pts, top] = interior_quotient(n);
  const auto top_index = index_of(top_pts);
  std::optional<std::size_t> free_column;
  for (std::size_t i = 0; i < top_pts.size(); ++i)
    if (!top.is_pivot(i)) free_column = i;

  Echelon<Field> rank_check(field, right.size());
  for (const auto& a : left) {
    std::vector<Rational> row;
    std::vector<typename Field::value_type> values;
    for (const auto& b : right) {
      typename Field::value_type value = field.zero();
      if (free_column && relations.cells().share(a, b)) {
        const auto reduced = top.reduce({{top_index.at(add(a, b)), field.from_int(1)}});
        value = reduced[*free_column];
      }
      values.push_back(value);
      row.push_back(as_rational(value));
    }
    rank_check.insert_dense(values);
    report.matrix.push_back(std::move(row));
  }
  report.rank = rank_check.rank();
  report.full_rank = top_pts.size() - top.rank() == 1 && report.rank == left.size() &&
                     report.rank == right.size();
  const auto dims = quotient_dims(g, sigma, field);
  report.r1_symmetric = dims.dims_r1[k] == dims.dims_r1[n - k];
  return report;
}

}  // namespace

PairingReport pairing_matrix(const DegreeOneElement& g, const FanSubdivision& sigma, std::size_t k,
                             const FieldSpec& field) {
  if (!(g.cone == sigma.parent))
    throw Error(ErrorKind::InvalidArgument, "element and subdivision live on different cones");
  const auto verdict = is_sigma_regular(g, sigma, field);
  if (!verdict.regular) throw Error(ErrorKind::NotRegular, verdict.note);
  return with_field(field, [&](const auto& f) { return pairing(g, sigma, k, f); });
}

HodgeTable computed_string_cohomology_table(const ReflexivePair& pair, const FanSubdivision& sigma,
                                            std::uint64_t seed, const FieldSpec& field) {
  if (!(sigma.parent == pair.dual_cone()))
    throw Error(ErrorKind::InvalidSubdivision, "subdivision is not of the dual cone");
  sigma.validate();
  auto dims = [&](const FanSubdivision& sub) {
    const auto g = generic_element(sub, seed, field);
    std::vector<BigInt> out;
    for (auto d : graded_quotient_dims(g, sub, field).dims_r1)
      out.emplace_back(static_cast<unsigned long>(d));
    return out;
  };
  std::vector<std::vector<BigInt>> r, r_dual;
  for (std::size_t c = 0; c < pair.lattice().size(); ++c)
    r.push_back(dims(FanSubdivision::trivial(pair.lattice().face_cone(c))));
  for (std::size_t c = 0; c < pair.dual_lattice().size(); ++c)
    r_dual.push_back(dims(sigma.restrict_to(pair.dual_lattice().face_cone(c))));
  return assemble_string_cohomology(pair, r, r_dual);
}

}  // namespace stringy
