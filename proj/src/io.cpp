#include "stringy/io.hpp"

#include <charconv>

#include "stringy/error.hpp"

namespace stringy {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw Error(ErrorKind::ParseError, "field '" + (path.empty() ? "<root>" : path) + "': " + what);
}

std::string child(const std::string& path, const std::string& key) {
  return path.empty() ? key : path + "." + key;
}

std::string element(const std::string& path, std::size_t i) {
  return path + "[" + std::to_string(i) + "]";
}

const Json& member(const Json& j, const std::string& path, const std::string& key) {
  if (!j.is_object()) fail(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(child(path, key), "missing");
  return *it;
}

const Json& array(const Json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array");
  return j;
}

std::int64_t integer(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  return j.get<std::int64_t>();
}

std::size_t count(const Json& j, const std::string& path) {
  const auto v = integer(j, path);
  if (v < 0) fail(path, "expected a nonnegative integer");
  return static_cast<std::size_t>(v);
}

bool boolean(const Json& j, const std::string& path) {
  if (!j.is_boolean()) fail(path, "expected true or false");
  return j.get<bool>();
}

const std::string& text(const Json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a string");
  return j.get_ref<const std::string&>();
}

BigInt big(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return BigInt(std::to_string(j.get<std::int64_t>()));
  BigInt v;
  if (!j.is_string() || v.set_str(j.get<std::string>(), 10) != 0)
    fail(path, "expected a decimal integer string");
  return v;
}

Rational rational(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(big(j, path));
  Rational v;
  if (!j.is_string() || v.set_str(j.get<std::string>(), 10) != 0 || v.get_den() == 0)
    fail(path, "expected a rational such as \"3\" or \"1/2\"");
  v.canonicalize();
  return v;
}

IntVector int_vector(const Json& j, const std::string& path) {
  IntVector out;
  for (std::size_t i = 0; i < array(j, path).size(); ++i) out.push_back(integer(j[i], element(path, i)));
  return out;
}

std::vector<std::size_t> index_list(const Json& j, const std::string& path) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < array(j, path).size(); ++i) out.push_back(count(j[i], element(path, i)));
  return out;
}

std::vector<IntVector> points(const Json& j, const std::string& path, std::size_t rank) {
  std::vector<IntVector> out;
  for (std::size_t i = 0; i < array(j, path).size(); ++i) {
    out.push_back(int_vector(j[i], element(path, i)));
    if (out.back().size() != rank)
      fail(element(path, i), "expected " + std::to_string(rank) + " coordinates");
  }
  return out;
}

Json rational_json(const Rational& q) {
  if (q.get_den() == 1 && q.get_num().fits_slong_p()) return q.get_num().get_si();
  return q.get_str();
}

template <class T>
Json list(const std::vector<T>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(x);
  return out;
}

Json degree_json(const KoszulDegree& d) { return Json{{"total", d.total}, {"weight", d.weight}}; }

KoszulDegree degree_from(const Json& j, const std::string& path) {
  return {static_cast<int>(integer(member(j, path, "total"), child(path, "total"))),
          static_cast<int>(integer(member(j, path, "weight"), child(path, "weight")))};
}

std::vector<std::string> variables(const Json& j, std::size_t expected) {
  const Json& vars = array(member(j, "", "vars"), "vars");
  if (vars.size() != expected) fail("vars", "expected " + std::to_string(expected) + " variables");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < vars.size(); ++i) out.push_back(text(vars[i], element("vars", i)));
  return out;
}

}  // namespace

Json parse_json_text(const std::string& input) {
  try {
    return Json::parse(input);
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < input.size(); ++i) {
      if (input[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ", column " +
                                           std::to_string(column) + ": malformed JSON");
  }
}

std::string dump(const Json& j) { return j.dump(); }

LatticePolytope polytope_from_json(const Json& j) {
  const std::size_t rank = count(member(j, "", "rank"), "rank");
  if (rank == 0) fail("rank", "must be positive");
  return LatticePolytope(rank, points(member(j, "", "vertices"), "vertices", rank));
}

Json to_json(const LatticePolytope& p) {
  Json vertices = Json::array();
  for (const auto& v : p.vertices()) vertices.push_back(list(v));
  return Json{{"rank", p.rank()}, {"vertices", vertices}};
}

Json to_json(const RationalPolytope& p) {
  Json vertices = Json::array();
  for (const auto& v : p.vertices) {
    Json row = Json::array();
    for (const auto& x : v) row.push_back(rational_json(x));
    vertices.push_back(row);
  }
  return Json{{"rank", p.rank}, {"vertices", vertices}};
}

Fan fan_from_json(const Json& j) {
  Fan fan;
  fan.rank = count(member(j, "", "rank"), "rank");
  fan.rays = points(member(j, "", "rays"), "rays", fan.rank);
  const Json& cones = array(member(j, "", "cones"), "cones");
  for (std::size_t i = 0; i < cones.size(); ++i) {
    const std::string path = element("cones", i);
    fan.cones.push_back(index_list(cones[i], path));
    for (auto r : fan.cones.back())
      if (r >= fan.rays.size()) fail(path, "ray index " + std::to_string(r) + " out of range");
  }
  return fan;
}

Json to_json(const Fan& fan) {
  Json rays = Json::array(), cones = Json::array();
  for (const auto& r : fan.rays) rays.push_back(list(r));
  for (const auto& c : fan.cones) cones.push_back(list(c));
  return Json{{"rank", fan.rank}, {"rays", rays}, {"cones", cones}};
}

std::vector<std::int64_t> heights_from_json(const Json& j) {
  return int_vector(member(j, "", "heights"), "heights");
}

Json heights_to_json(const std::vector<std::int64_t>& heights) {
  return Json{{"heights", list(heights)}};
}

Json to_json(const UnivariatePolynomial& p, const std::string& var) {
  Json terms = Json::array();
  for (const auto& [k, c] : p.terms()) terms.push_back(Json{{var, k}, {"c", c.get_str()}});
  return Json{{"vars", Json::array({var})}, {"terms", terms}};
}

UnivariatePolynomial univariate_from_json(const Json& j) {
  const auto vars = variables(j, 1);
  const Json& terms = array(member(j, "", "terms"), "terms");
  UnivariatePolynomial p;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const std::string path = element("terms", i);
    const auto k = integer(member(terms[i], path, vars[0]), child(path, vars[0]));
    if (k < 0) fail(child(path, vars[0]), "exponent must be nonnegative");
    p.add_term(static_cast<int>(k), big(member(terms[i], path, "c"), child(path, "c")));
  }
  return p;
}

Json to_json(const BivariateLaurentPolynomial& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms())
    terms.push_back(Json{{"u", e.first}, {"v", e.second}, {"c", c.get_str()}});
  return Json{{"vars", Json::array({"u", "v"})}, {"terms", terms}};
}

BivariateLaurentPolynomial bivariate_from_json(const Json& j) {
  const auto vars = variables(j, 2);
  const Json& terms = array(member(j, "", "terms"), "terms");
  BivariateLaurentPolynomial p;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const std::string path = element("terms", i);
    const auto a = integer(member(terms[i], path, vars[0]), child(path, vars[0]));
    const auto b = integer(member(terms[i], path, vars[1]), child(path, vars[1]));
    p.add_term(static_cast<int>(a), static_cast<int>(b),
               big(member(terms[i], path, "c"), child(path, "c")));
  }
  return p;
}

Json to_json(const HodgeTable& t) {
  Json entries = Json::array();
  for (const auto& [pq, h] : t.entries)
    entries.push_back(Json{{"p", pq.first.get_str()}, {"q", pq.second.get_str()}, {"h", h.get_str()}});
  return Json{{"dimension", t.dimension}, {"entries", entries}};
}

HodgeTable hodge_table_from_json(const Json& j) {
  HodgeTable t;
  t.dimension = static_cast<int>(integer(member(j, "", "dimension"), "dimension"));
  const Json& entries = array(member(j, "", "entries"), "entries");
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const std::string path = element("entries", i);
    const Rational p = rational(member(entries[i], path, "p"), child(path, "p"));
    const Rational q = rational(member(entries[i], path, "q"), child(path, "q"));
    t.entries[{p, q}] = big(member(entries[i], path, "h"), child(path, "h"));
  }
  return t;
}

Json to_json(const GradedQuotientReport& r) {
  const auto& s = r.subdivision;
  Json out{{"dims_r0", list(r.dims_r0)},
           {"dims_r1", list(r.dims_r1)},
           {"r0_above_top", r.r0_above_top},
           {"r1_above_top", r.r1_above_top},
           {"seed", r.seed},
           {"field", r.field.describe()},
           {"trivial_subdivision", r.trivial_subdivision},
           {"subdivision",
            Json{{"explicit_cells", s.explicit_cells},
                 {"heights", list(s.heights)},
                 {"effective_heights", list(s.effective_heights)},
                 {"perturbation_base", s.perturbation_base},
                 {"perturbation_power", s.perturbation_power}}}};
  out["cross_checked_prime"] = r.cross_checked_prime ? Json(*r.cross_checked_prime) : Json(nullptr);
  return out;
}

GradedQuotientReport quotient_report_from_json(const Json& j) {
  GradedQuotientReport r;
  r.dims_r0 = index_list(member(j, "", "dims_r0"), "dims_r0");
  r.dims_r1 = index_list(member(j, "", "dims_r1"), "dims_r1");
  r.r0_above_top = count(member(j, "", "r0_above_top"), "r0_above_top");
  r.r1_above_top = count(member(j, "", "r1_above_top"), "r1_above_top");
  const Json& seed = member(j, "", "seed");
  if (!seed.is_number_unsigned() && !seed.is_number_integer()) fail("seed", "expected an integer");
  r.seed = seed.get<std::uint64_t>();
  r.field = field_from_string(text(member(j, "", "field"), "field"));
  r.trivial_subdivision = boolean(member(j, "", "trivial_subdivision"), "trivial_subdivision");
  const Json& s = member(j, "", "subdivision");
  r.subdivision.explicit_cells = boolean(member(s, "subdivision", "explicit_cells"), "subdivision.explicit_cells");
  r.subdivision.heights = int_vector(member(s, "subdivision", "heights"), "subdivision.heights");
  r.subdivision.effective_heights =
      int_vector(member(s, "subdivision", "effective_heights"), "subdivision.effective_heights");
  r.subdivision.perturbation_base =
      integer(member(s, "subdivision", "perturbation_base"), "subdivision.perturbation_base");
  r.subdivision.perturbation_power = static_cast<int>(
      integer(member(s, "subdivision", "perturbation_power"), "subdivision.perturbation_power"));
  const Json& cross = member(j, "", "cross_checked_prime");
  if (!cross.is_null()) r.cross_checked_prime = count(cross, "cross_checked_prime");
  return r;
}

Json to_json(const KoszulComparison& r) {
  auto dims = [](const std::map<KoszulDegree, std::size_t>& m) {
    Json out = Json::array();
    for (const auto& [d, n] : m) {
      Json e = degree_json(d);
      e["dim"] = n;
      out.push_back(e);
    }
    return out;
  };
  auto degrees = [](const std::vector<KoszulDegree>& v) {
    Json out = Json::array();
    for (const auto& d : v) out.push_back(degree_json(d));
    return out;
  };
  Json contributions = Json::array();
  for (const auto& c : r.contributions)
    contributions.push_back(Json{{"face", c.face},
                                 {"deg_m", c.deg_m},
                                 {"deg_n", c.deg_n},
                                 {"wedge_degree", c.wedge_degree},
                                 {"count", c.count}});
  return Json{{"agrees", r.agrees},
              {"observed", dims(r.observed)},
              {"predicted", dims(r.predicted)},
              {"contributions", contributions},
              {"mismatches", degrees(r.mismatches)},
              {"boundary", degrees(r.boundary)}};
}

KoszulComparison koszul_comparison_from_json(const Json& j) {
  KoszulComparison r;
  r.agrees = boolean(member(j, "", "agrees"), "agrees");
  for (const char* key : {"observed", "predicted"}) {
    const Json& a = array(member(j, "", key), key);
    auto& target = std::string(key) == "observed" ? r.observed : r.predicted;
    for (std::size_t i = 0; i < a.size(); ++i) {
      const std::string path = element(key, i);
      target[degree_from(a[i], path)] = count(member(a[i], path, "dim"), child(path, "dim"));
    }
  }
  const Json& contributions = array(member(j, "", "contributions"), "contributions");
  for (std::size_t i = 0; i < contributions.size(); ++i) {
    const std::string path = element("contributions", i);
    const Json& c = contributions[i];
    auto field = [&](const char* key) { return integer(member(c, path, key), child(path, key)); };
    r.contributions.push_back({static_cast<std::size_t>(field("face")), static_cast<int>(field("deg_m")),
                               static_cast<int>(field("deg_n")), static_cast<int>(field("wedge_degree")),
                               static_cast<std::size_t>(field("count"))});
  }
  for (const char* key : {"mismatches", "boundary"}) {
    const Json& a = array(member(j, "", key), key);
    auto& target = std::string(key) == "mismatches" ? r.mismatches : r.boundary;
    for (std::size_t i = 0; i < a.size(); ++i) target.push_back(degree_from(a[i], element(key, i)));
  }
  return r;
}

Json to_json(const FanSubdivision& s) {
  Json cells = Json::array();
  for (const auto& c : s.max_cones) {
    Json gens = Json::array();
    for (const auto& g : c.generators()) gens.push_back(list(g));
    cells.push_back(gens);
  }
  Json parent = Json::array();
  for (const auto& g : s.parent.generators()) parent.push_back(list(g));
  const auto& p = s.provenance;
  return Json{{"parent", parent},
              {"cells", cells},
              {"provenance",
               Json{{"explicit_cells", p.explicit_cells},
                    {"heights", list(p.heights)},
                    {"effective_heights", list(p.effective_heights)},
                    {"perturbation_base", p.perturbation_base},
                    {"perturbation_power", p.perturbation_power}}}};
}

Json to_json(const FaceLattice& lattice) {
  Json faces = Json::array();
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    const auto& f = lattice.faces()[i];
    faces.push_back(Json{{"index", i}, {"dim", f.dim}, {"generators", list(f.generators)}});
  }
  Json covers = Json::array();
  for (const auto& [a, b] : lattice.covers()) covers.push_back(Json::array({a, b}));
  Json generators = Json::array();
  for (const auto& g : lattice.cone().generators()) generators.push_back(list(g));
  return Json{{"dim", lattice.cone().dim()},
              {"generators", generators},
              {"faces", faces},
              {"covers", covers}};
}

Json to_json(const BoxPointTable& t) {
  Json shifts = Json::array();
  for (const auto& [l, pts] : t.by_shift) {
    Json p = Json::array();
    for (const auto& x : pts) p.push_back(list(x));
    shifts.push_back(Json{{"l", l}, {"count", pts.size()}, {"points", p}});
  }
  Json generators = Json::array();
  for (const auto& g : t.cone.generators()) generators.push_back(list(g));
  return Json{{"generators", generators}, {"shifts", shifts}};
}

Json to_json(const RegularityVerdict& v) {
  return Json{{"regular", v.regular},
              {"witness", v.witness ? Json(*v.witness) : Json(nullptr)},
              {"note", v.note}};
}

FieldSpec field_from_string(std::string_view s) {
  if (s == "rational") return FieldSpec::rational_field();
  if (s == "prime") return FieldSpec{};
  constexpr std::string_view prefix = "prime:";
  if (s.substr(0, prefix.size()) == prefix) {
    const auto digits = s.substr(prefix.size());
    std::uint64_t p = 0;
    const auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec == std::errc() && end == digits.data() + digits.size() && !digits.empty())
      return FieldSpec::prime_field(p);
  }
  throw Error(ErrorKind::ParseError,
              "field '" + std::string(s) + "': expected rational, prime or prime:<p>");
}

}  // namespace stringy
