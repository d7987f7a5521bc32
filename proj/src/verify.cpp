#include "stringy/verify.hpp"

#include <functional>

#include "stringy/error.hpp"
#include "stringy/fixtures.hpp"
#include "stringy/koszul.hpp"
#include "stringy/poset.hpp"

namespace stringy {

namespace {

using Check = std::function<std::string()>;

std::vector<BigInt> dims_as_big(const std::vector<std::size_t>& v) {
  std::vector<BigInt> out;
  for (auto x : v) out.emplace_back(static_cast<unsigned long>(x));
  return out;
}

IntVector interior_apex(std::size_t rank) {
  IntVector apex(rank + 1, 0);
  apex.back() = 1;
  return apex;
}

std::string poset_identities(const FaceLattice& lattice) {
  const EulerianPoset& poset = lattice.poset();
  std::size_t checked = 0;
  for (const auto& i : poset.graded().intervals())
    for (const auto& j : {i, i.reversed()}) {
      if (poset.b_polynomial(j) != poset.b_via_g(j))
        return "B recursion and G-convolution differ on [" + std::to_string(i.lower) + "," +
               std::to_string(i.upper) + "]";
      if (poset.graded().rank_of(j) > 0 && !poset.convolution_inverse_check(j))
        return "G-convolution inverse fails on [" + std::to_string(i.lower) + "," +
               std::to_string(i.upper) + "]";
      ++checked;
    }
  return checked == 0 ? "no intervals" : "";
}

std::string tilde_s_identities(const FaceLattice& lattice) {
  const auto s = face_s_polynomials(lattice);
  const auto ts = face_tilde_s_polynomials(lattice, s);
  const EulerianPoset& poset = lattice.poset();
  for (std::size_t c = 0; c < lattice.size(); ++c) {
    const int dim = static_cast<int>(lattice.faces()[c].dim);
    if (!ts[c].is_palindromic(dim)) return "tilde S of face " + std::to_string(c) + " is not palindromic";
    const GradedCone& cone = lattice.face_cone(c);
    if (dim > 0 && cone.is_simplicial() && tilde_s_simplicial(cone) != ts[c])
      return "simplicial formula disagrees on face " + std::to_string(c);
    UnivariatePolynomial sum;
    for (std::size_t c1 = 0; c1 < lattice.size(); ++c1)
      if (lattice.contains(c1, c)) sum += ts[c1] * poset.g_polynomial(Interval{c1, c, true});
    if (sum != s[c]) return "S is not recovered from tilde S on face " + std::to_string(c);
  }
  return "";
}

std::string graded_dims(const GradedCone& cone, std::uint64_t seed, const FieldSpec& field) {
  const auto s = s_polynomial(cone).coefficients(cone.dim() + 1);
  const auto ts = tilde_s_polynomial(cone).coefficients(cone.dim() + 1);
  for (const auto& sigma : {FanSubdivision::trivial(cone),
                            star_subdivision(cone, interior_apex(cone.ambient_rank() - 1))}) {
    const auto g = generic_element(sigma, seed, field);
    const auto r = graded_quotient_dims(g, sigma, field);
    const char* which = sigma.is_trivial() ? "trivial" : "star";
    if (dims_as_big(r.dims_r0) != s || r.r0_above_top != 0)
      return std::string("R0 dimensions differ from S (") + which + ")";
    if (dims_as_big(r.dims_r1) != ts || r.r1_above_top != 0)
      return std::string("R1 dimensions differ from tilde S (") + which + ")";
  }
  return "";
}

std::string box_identities(const FaceLattice& lattice) {
  const auto ts = face_tilde_s_polynomials(lattice, face_s_polynomials(lattice));
  for (std::size_t c = 0; c < lattice.size(); ++c) {
    const GradedCone& cone = lattice.face_cone(c);
    if (lattice.faces()[c].dim == 0 || !cone.is_simplicial()) continue;
    const auto table = box_points(cone);
    for (int l = 0; l <= static_cast<int>(cone.dim()); ++l) {
      auto it = table.by_shift.find(l);
      const std::size_t n = it == table.by_shift.end() ? 0 : it->second.size();
      if (BigInt(static_cast<unsigned long>(n)) != ts[c].coefficient(l))
        return "box points disagree with tilde S on face " + std::to_string(c);
    }
  }
  return "";
}

std::string koszul_identities(const ReflexivePair& pair, std::uint64_t seed, const FieldSpec& field) {
  for (const auto& sigma : {FanSubdivision::trivial(pair.dual_cone()),
                            star_subdivision(pair.dual_cone(), interior_apex(pair.rank()))}) {
    KoszulOptions options;
    options.field = field;
    options.dual_subdivision = sigma;
    const auto f = generic_element(FanSubdivision::trivial(pair.cone()), seed, field);
    const auto g = generic_element(sigma, seed + 1, field);
    if (!compare_with_decomposition(pair, f, g, options).agrees)
      return std::string("cohomology differs from the face decomposition (") +
             (sigma.is_trivial() ? "trivial" : "star") + ")";
  }
  return "";
}

std::string toric_identities(const Fan& fan) {
  const auto e = e_st_toric(fan);
  const int n = static_cast<int>(fan.rank);
  for (const auto& [ex, c] : e.terms()) {
    if (ex.first != ex.second || ex.first < 0 || ex.first > n) return "E is not a polynomial in uv";
    if (c <= 0) return "E has a nonpositive coefficient";
    if (e.coefficient(n - ex.first, n - ex.second) != c) return "E violates Poincare duality";
  }
  for (std::size_t r = 0; r < fan.rays.size(); ++r) {
    const auto orbit = e_int_orbit_closure(fan, {r});
    for (const auto& [ex, c] : orbit.terms())
      if (ex.first != ex.second || ex.first < 0 || ex.first > n - 1)
        return "orbit closure of ray " + std::to_string(r) + " has the wrong shape";
  }
  return "";
}

}  // namespace

bool VerifyReport::passed() const {
  for (const auto& r : results)
    if (!r.passed) return false;
  return true;
}

VerifyReport run_verification(const std::vector<std::string>& fixtures, std::uint64_t seed,
                              const FieldSpec& field) {
  field.check();
  const bool all = fixtures.empty() || (fixtures.size() == 1 && fixtures.front() == "all");
  std::vector<const PolytopeFixture*> polytopes;
  std::vector<const FanFixture*> fans;
  if (all) {
    for (const auto& f : polytope_fixtures()) polytopes.push_back(&f);
    for (const auto& f : fan_fixtures()) fans.push_back(&f);
  } else {
    for (const auto& name : fixtures) {
      bool found = false;
      for (const auto& f : polytope_fixtures())
        if (f.name == name) polytopes.push_back(&f), found = true;
      for (const auto& f : fan_fixtures())
        if (f.name == name) fans.push_back(&f), found = true;
      if (!found) throw Error(ErrorKind::InvalidArgument, "unknown fixture '" + name + "'");
    }
  }

  VerifyReport report;
  auto run = [&](const std::string& suite, const std::string& fixture, const Check& check) {
    SuiteResult r{suite, fixture, false, ""};
    try {
      r.detail = check();
      r.passed = r.detail.empty();
    } catch (const std::exception& e) {
      r.detail = e.what();
    }
    report.results.push_back(std::move(r));
  };

  for (const auto* fx : polytopes) {
    run("reflexivity", fx->name, [&] {
      return is_reflexive(fx->polytope) == fx->reflexive ? "" : "reflexivity flag is wrong";
    });
    if (!fx->reflexive) continue;
    const ReflexivePair pair(fx->polytope);
    const std::size_t d = pair.rank();
    run("e_st_two_formulas", fx->name, [&] {
      return e_st_hypersurface(pair) == e_st_oracle(pair) ? "" : "the two E_st formulas differ";
    });
    if (!fx->mirror.empty())
      run("mirror_duality", fx->name, [&] {
        const ReflexivePair mirror(polytope_fixture(fx->mirror).polytope);
        return mirror_transform(e_st_hypersurface(pair), d) == e_st_hypersurface(mirror)
                   ? ""
                   : "E_st of the mirror is not the transformed E_st";
      });
    run("hodge_table", fx->name, [&] {
      const auto e = e_st_hypersurface(pair);
      const auto table = stringy_hodge_table(e, static_cast<int>(d) - 1);
      if (!table.is_symmetric()) return "table is not symmetric";
      return table.signed_sum() == e ? "" : "table does not sum back to E_st";
    });
    run("poset_identities", fx->name, [&] {
      auto r = poset_identities(pair.lattice());
      return r.empty() ? poset_identities(pair.dual_lattice()) : r;
    });
    run("tilde_s", fx->name, [&] {
      auto r = tilde_s_identities(pair.lattice());
      return r.empty() ? tilde_s_identities(pair.dual_lattice()) : r;
    });
    run("box_points", fx->name, [&] {
      auto r = box_identities(pair.lattice());
      return r.empty() ? box_identities(pair.dual_lattice()) : r;
    });
    if (pair.cone().dim() <= 4)
      run("graded_dims", fx->name, [&] {
        auto r = graded_dims(pair.cone(), seed, field);
        return r.empty() ? graded_dims(pair.dual_cone(), seed, field) : r;
      });
    if (d <= 2)
      run("koszul", fx->name, [&] { return koszul_identities(pair, seed, field); });
    run("string_cohomology", fx->name, [&] {
      const auto trivial = string_cohomology_table(pair, FanSubdivision::trivial(pair.dual_cone()));
      const auto star =
          string_cohomology_table(pair, star_subdivision(pair.dual_cone(), interior_apex(d)));
      if (trivial.signed_sum() != e_st_hypersurface(pair)) return "table does not sum back to E_st";
      return trivial == star ? "" : "table depends on the subdivision";
    });
  }
  for (const auto* fx : fans) run("toric_e", fx->name, [&] { return toric_identities(fx->fan); });
  return report;
}

Json to_json(const VerifyReport& report) {
  Json results = Json::array();
  for (const auto& r : report.results)
    results.push_back(
        Json{{"suite", r.suite}, {"fixture", r.fixture}, {"passed", r.passed}, {"detail", r.detail}});
  return Json{{"passed", report.passed()}, {"results", results}};
}

}  // namespace stringy
