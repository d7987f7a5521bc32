#include "stringy/stringy.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <sstream>

#include "stringy/error.hpp"
#include "stringy/fixtures.hpp"
#include "stringy/io.hpp"
#include "stringy/koszul.hpp"
#include "stringy/poset.hpp"
#include "stringy/verify.hpp"

using namespace stringy;

struct stringy_polytope {
  LatticePolytope polytope;
};
struct stringy_pair {
  ReflexivePair pair;
};
struct stringy_cone {
  GradedCone cone;
};
struct stringy_fan {
  Fan fan;
};
struct stringy_subdivision {
  FanSubdivision sigma;
};

namespace {

static_assert(static_cast<int>(ErrorKind::InvalidArgument) + 1 == STRINGY_INVALID_ARGUMENT,
              "status codes must follow ErrorKind");

thread_local std::string last_error;

template <class Body>
stringy_status guard(Body&& body) {
  try {
    body();
    last_error.clear();
    return STRINGY_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return static_cast<stringy_status>(static_cast<int>(e.kind()) + 1);
  } catch (const std::exception& e) {
    last_error = std::string("internal error: ") + e.what();
    return STRINGY_INTERNAL_ERROR;
  } catch (...) {
    last_error = "internal error";
    return STRINGY_INTERNAL_ERROR;
  }
}

char* copy_out(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void emit(const Json& j, char** out) { *out = copy_out(dump(j)); }

FieldSpec field_of(const char* field) {
  FieldSpec f = field ? field_from_string(field) : FieldSpec{};
  f.check();
  return f;
}

// Null pointer arguments get their own status rather than InvalidArgument.
#define STRINGY_REQUIRE(ptr)                                  \
  do {                                                        \
    if (!(ptr)) {                                             \
      last_error = std::string(#ptr) + " must not be null";   \
      return STRINGY_NULL_ARGUMENT;                           \
    }                                                         \
  } while (0)

}  // namespace

extern "C" {

const char* stringy_status_name(stringy_status status) {
  switch (status) {
    case STRINGY_OK: return "Ok";
    case STRINGY_NULL_ARGUMENT: return "NullArgument";
    case STRINGY_INTERNAL_ERROR: return "InternalError";
    default:
      if (status > STRINGY_OK && status <= STRINGY_INVALID_ARGUMENT)
        return error_name(static_cast<ErrorKind>(status - 1)).data();
      return "Unknown";
  }
}

const char* stringy_last_error(void) { return last_error.c_str(); }

void stringy_string_free(char* s) { std::free(s); }

stringy_status stringy_polytope_from_json(const char* json, stringy_polytope** out) {
  STRINGY_REQUIRE(json);
  STRINGY_REQUIRE(out);
  return guard([&] { *out = new stringy_polytope{polytope_from_json(parse_json_text(json))}; });
}

stringy_status stringy_polytope_from_fixture(const char* name, stringy_polytope** out) {
  STRINGY_REQUIRE(name);
  STRINGY_REQUIRE(out);
  return guard([&] { *out = new stringy_polytope{polytope_fixture(name).polytope}; });
}

void stringy_polytope_free(stringy_polytope* p) { delete p; }

stringy_status stringy_polytope_to_json(const stringy_polytope* p, char** out) {
  STRINGY_REQUIRE(p);
  STRINGY_REQUIRE(out);
  return guard([&] { emit(to_json(p->polytope), out); });
}

stringy_status stringy_polytope_is_reflexive(const stringy_polytope* p, int* out) {
  STRINGY_REQUIRE(p);
  STRINGY_REQUIRE(out);
  return guard([&] { *out = is_reflexive(p->polytope) ? 1 : 0; });
}

stringy_status stringy_polytope_dual(const stringy_polytope* p, char** out) {
  STRINGY_REQUIRE(p);
  STRINGY_REQUIRE(out);
  return guard([&] { emit(to_json(dual_polytope(p->polytope)), out); });
}

stringy_status stringy_cone_over_polytope(const stringy_polytope* p, stringy_cone** out) {
  STRINGY_REQUIRE(p);
  STRINGY_REQUIRE(out);
  return guard([&] { *out = new stringy_cone{gorenstein_cone_over(p->polytope)}; });
}

void stringy_cone_free(stringy_cone* c) { delete c; }

stringy_status stringy_cone_faces(const stringy_cone* c, char** out) {
  STRINGY_REQUIRE(c);
  STRINGY_REQUIRE(out);
  return guard([&] { emit(to_json(face_lattice(c->cone)), out); });
}

stringy_status stringy_cone_s_polynomial(const stringy_cone* c, char** out) {
  STRINGY_REQUIRE(c);
  STRINGY_REQUIRE(out);
  return guard([&] { emit(to_json(s_polynomial(c->cone)), out); });
}

stringy_status stringy_cone_tilde_s_polynomial(const stringy_cone* c, char** out) {
  STRINGY_REQUIRE(c);
  STRINGY_REQUIRE(out);
  return guard([&] { emit(to_json(tilde_s_polynomial(c->cone)), out); });
}

stringy_status stringy_cone_box_points(const stringy_cone* c, char** out) {
  STRINGY_REQUIRE(c);
  STRINGY_REQUIRE(out);
  return guard([&] { emit(to_json(box_points(c->cone)), out); });
}

stringy_status stringy_cone_g_polynomial(const stringy_cone* c, int dual, char** out) {
  STRINGY_REQUIRE(c);
  STRINGY_REQUIRE(out);
  return guard([&] {
    const FaceLattice lattice = face_lattice(c->cone);
    const Interval whole = lattice.poset().whole();
    emit(to_json(lattice.poset().g_polynomial(dual ? whole.reversed() : whole)), out);
  });
}

stringy_status stringy_cone_b_polynomial(const stringy_cone* c, int dual, char** out) {
  STRINGY_REQUIRE(c);
  STRINGY_REQUIRE(out);
  return guard([&] {
    const FaceLattice lattice = face_lattice(c->cone);
    const Interval whole = lattice.poset().whole();
    emit(to_json(lattice.poset().b_polynomial(dual ? whole.reversed() : whole)), out);
  });
}

stringy_status stringy_pair_new(const stringy_polytope* p, stringy_pair** out) {
  STRINGY_REQUIRE(p);
  STRINGY_REQUIRE(out);
  return guard([&] { *out = new stringy_pair{ReflexivePair(p->polytope)}; });
}

void stringy_pair_free(stringy_pair* pair) { delete pair; }

stringy_status stringy_pair_cone(const stringy_pair* pair, int dual, stringy_cone** out) {
  STRINGY_REQUIRE(pair);
  STRINGY_REQUIRE(out);
  return guard([&] {
    *out = new stringy_cone{dual ? pair->pair.dual_cone() : pair->pair.cone()};
  });
}

stringy_status stringy_pair_e_st(const stringy_pair* pair, int oracle, char** out) {
  STRINGY_REQUIRE(pair);
  STRINGY_REQUIRE(out);
  return guard([&] {
    emit(to_json(oracle ? e_st_oracle(pair->pair) : e_st_hypersurface(pair->pair)), out);
  });
}

stringy_status stringy_pair_hodge(const stringy_pair* pair, char** out) {
  STRINGY_REQUIRE(pair);
  STRINGY_REQUIRE(out);
  return guard([&] {
    const int dim = static_cast<int>(pair->pair.rank()) - 1;
    emit(to_json(stringy_hodge_table(e_st_hypersurface(pair->pair), dim)), out);
  });
}

stringy_status stringy_pair_string_cohomology(const stringy_pair* pair,
                                              const stringy_subdivision* sigma, int computed,
                                              uint64_t seed, const char* field, char** out) {
  STRINGY_REQUIRE(pair);
  STRINGY_REQUIRE(out);
  return guard([&] {
    const FanSubdivision s = sigma ? sigma->sigma : FanSubdivision::trivial(pair->pair.dual_cone());
    const HodgeTable table = computed
                                 ? computed_string_cohomology_table(pair->pair, s, seed, field_of(field))
                                 : string_cohomology_table(pair->pair, s);
    emit(to_json(table), out);
  });
}

stringy_status stringy_fan_from_json(const char* json, stringy_fan** out) {
  STRINGY_REQUIRE(json);
  STRINGY_REQUIRE(out);
  return guard([&] { *out = new stringy_fan{fan_from_json(parse_json_text(json))}; });
}

void stringy_fan_free(stringy_fan* fan) { delete fan; }

stringy_status stringy_fan_e_st(const stringy_fan* fan, char** out) {
  STRINGY_REQUIRE(fan);
  STRINGY_REQUIRE(out);
  return guard([&] { emit(to_json(e_st_toric(fan->fan)), out); });
}

stringy_status stringy_fan_e_int(const stringy_fan* fan, const size_t* rays, size_t count,
                                 char** out) {
  STRINGY_REQUIRE(fan);
  STRINGY_REQUIRE(out);
  if (count > 0) STRINGY_REQUIRE(rays);
  return guard([&] {
    std::vector<std::size_t> cone(rays, rays + count);
    emit(to_json(e_int_orbit_closure(fan->fan, std::move(cone))), out);
  });
}

stringy_status stringy_subdivision_trivial(const stringy_cone* c, stringy_subdivision** out) {
  STRINGY_REQUIRE(c);
  STRINGY_REQUIRE(out);
  return guard([&] { *out = new stringy_subdivision{FanSubdivision::trivial(c->cone)}; });
}

stringy_status stringy_subdivision_from_heights(const stringy_cone* c, const char* heights_json,
                                                int generic, stringy_subdivision** out) {
  STRINGY_REQUIRE(c);
  STRINGY_REQUIRE(heights_json);
  STRINGY_REQUIRE(out);
  return guard([&] {
    const auto heights = heights_from_json(parse_json_text(heights_json));
    *out = new stringy_subdivision{regular_subdivision(
        c->cone, heights, generic ? LiftPolicy::generic : LiftPolicy::literal)};
  });
}

void stringy_subdivision_free(stringy_subdivision* s) { delete s; }

stringy_status stringy_subdivision_to_json(const stringy_subdivision* s, char** out) {
  STRINGY_REQUIRE(s);
  STRINGY_REQUIRE(out);
  return guard([&] { emit(to_json(s->sigma), out); });
}

stringy_status stringy_ring_dims(const stringy_cone* c, const stringy_subdivision* sigma,
                                 uint64_t seed, const char* field, char** out) {
  STRINGY_REQUIRE(c);
  STRINGY_REQUIRE(out);
  return guard([&] {
    const FanSubdivision s = sigma ? sigma->sigma : FanSubdivision::trivial(c->cone);
    if (!(s.parent == c->cone))
      throw Error(ErrorKind::InvalidArgument, "subdivision is not of this cone");
    const FieldSpec f = field_of(field);
    const auto g = DegreeOneElement::random(c->cone, seed);
    Json j = to_json(graded_quotient_dims(g, s, f));
    j["regularity"] = to_json(is_sigma_regular(g, s, f));
    emit(j, out);
  });
}

stringy_status stringy_koszul(const stringy_pair* pair, const stringy_subdivision* sigma,
                              uint64_t seed, int cap, const char* field, char** out) {
  STRINGY_REQUIRE(pair);
  STRINGY_REQUIRE(out);
  return guard([&] {
    KoszulOptions options;
    options.field = field_of(field);
    if (cap >= 0) options.cap = cap;
    const FanSubdivision s = sigma ? sigma->sigma : FanSubdivision::trivial(pair->pair.dual_cone());
    options.dual_subdivision = s;
    const auto f = generic_element(FanSubdivision::trivial(pair->pair.cone()), seed, options.field);
    const auto g = generic_element(s, seed + 1, options.field);
    Json j = to_json(compare_with_decomposition(pair->pair, f, g, options));
    j["seed_f"] = f.seed;
    j["seed_g"] = g.seed;
    j["field"] = options.field.describe();
    emit(j, out);
  });
}

stringy_status stringy_verify(const char* fixtures, uint64_t seed, const char* field, char** out,
                              int* passed) {
  STRINGY_REQUIRE(out);
  STRINGY_REQUIRE(passed);
  return guard([&] {
    std::vector<std::string> names;
    std::stringstream list(fixtures ? fixtures : "all");
    for (std::string name; std::getline(list, name, ',');)
      if (!name.empty()) names.push_back(name);
    const VerifyReport report = run_verification(names, seed, field_of(field));
    *passed = report.passed() ? 1 : 0;
    emit(to_json(report), out);
  });
}

stringy_status stringy_polynomial_to_text(const char* json, char** out) {
  STRINGY_REQUIRE(json);
  STRINGY_REQUIRE(out);
  return guard([&] {
    const Json j = parse_json_text(json);
    const Json& vars = j.contains("vars") ? j["vars"] : Json();
    if (vars.is_array() && vars.size() == 1) {
      *out = copy_out(univariate_from_json(j).to_string(vars[0].get<std::string>()));
    } else {
      *out = copy_out(bivariate_from_json(j).to_string());
    }
  });
}

}  // extern "C"
