#ifndef STRINGY_STRINGY_H
#define STRINGY_STRINGY_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define STRINGY_API __declspec(dllexport)
#else
#define STRINGY_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Every call returns a status; on failure stringy_last_error() holds the
   message for the calling thread. Strings handed out by the library are
   JSON documents and must be released with stringy_string_free. */
typedef enum stringy_status {
  STRINGY_OK = 0,
  STRINGY_ORIGIN_NOT_INTERIOR,
  STRINGY_NOT_GORENSTEIN,
  STRINGY_NOT_REFLEXIVE_PAIR,
  STRINGY_DIMENSION_BUDGET_EXCEEDED,
  STRINGY_DEGENERATE_LIFT,
  STRINGY_INVALID_SUBDIVISION,
  STRINGY_NOT_EULERIAN,
  STRINGY_NOT_GRADED,
  STRINGY_NOT_SIMPLICIAL,
  STRINGY_DIVISION_NOT_EXACT,
  STRINGY_NEGATIVE_HODGE_NUMBER,
  STRINGY_NOT_COMPLETE,
  STRINGY_CONE_NOT_IN_FAN,
  STRINGY_POINT_OUTSIDE_CONE,
  STRINGY_FIELD_CHARACTERISTIC_TOO_SMALL,
  STRINGY_NOT_REGULAR,
  STRINGY_NOT_GENERIC_AFTER_RETRIES,
  STRINGY_CAP_TOO_SMALL,
  STRINGY_PARSE_ERROR,
  STRINGY_INVALID_ARGUMENT,
  STRINGY_NULL_ARGUMENT,
  STRINGY_INTERNAL_ERROR
} stringy_status;

typedef struct stringy_polytope stringy_polytope;
typedef struct stringy_pair stringy_pair;
typedef struct stringy_cone stringy_cone;
typedef struct stringy_fan stringy_fan;
typedef struct stringy_subdivision stringy_subdivision;

STRINGY_API const char* stringy_status_name(stringy_status status);
STRINGY_API const char* stringy_last_error(void);
STRINGY_API void stringy_string_free(char* s);

/* Polytopes: {"rank": d, "vertices": [[...], ...]} */
STRINGY_API stringy_status stringy_polytope_from_json(const char* json, stringy_polytope** out);
STRINGY_API stringy_status stringy_polytope_from_fixture(const char* name, stringy_polytope** out);
STRINGY_API void stringy_polytope_free(stringy_polytope* p);
STRINGY_API stringy_status stringy_polytope_to_json(const stringy_polytope* p, char** out);
STRINGY_API stringy_status stringy_polytope_is_reflexive(const stringy_polytope* p, int* out);
/* Polar dual; coordinates that are not integers appear as "a/b" strings. */
STRINGY_API stringy_status stringy_polytope_dual(const stringy_polytope* p, char** out);

/* Gorenstein cone over P x {1}. */
STRINGY_API stringy_status stringy_cone_over_polytope(const stringy_polytope* p, stringy_cone** out);
STRINGY_API void stringy_cone_free(stringy_cone* c);
STRINGY_API stringy_status stringy_cone_faces(const stringy_cone* c, char** out);
STRINGY_API stringy_status stringy_cone_s_polynomial(const stringy_cone* c, char** out);
STRINGY_API stringy_status stringy_cone_tilde_s_polynomial(const stringy_cone* c, char** out);
STRINGY_API stringy_status stringy_cone_box_points(const stringy_cone* c, char** out);
/* G and B of the face poset of the cone; dual != 0 reverses the order. */
STRINGY_API stringy_status stringy_cone_g_polynomial(const stringy_cone* c, int dual, char** out);
STRINGY_API stringy_status stringy_cone_b_polynomial(const stringy_cone* c, int dual, char** out);

/* Reflexive pair (K, K*); fails with STRINGY_NOT_REFLEXIVE_PAIR. */
STRINGY_API stringy_status stringy_pair_new(const stringy_polytope* p, stringy_pair** out);
STRINGY_API void stringy_pair_free(stringy_pair* pair);
/* K when dual == 0, K* otherwise. */
STRINGY_API stringy_status stringy_pair_cone(const stringy_pair* pair, int dual, stringy_cone** out);
/* oracle != 0 selects the B-polynomial formula. */
STRINGY_API stringy_status stringy_pair_e_st(const stringy_pair* pair, int oracle, char** out);
STRINGY_API stringy_status stringy_pair_hodge(const stringy_pair* pair, char** out);
/* Conjectured string cohomology table. sigma subdivides K* (NULL: trivial).
   computed != 0 takes R1 dimensions from linear algebra instead of tilde S. */
STRINGY_API stringy_status stringy_pair_string_cohomology(const stringy_pair* pair,
                                                          const stringy_subdivision* sigma,
                                                          int computed, uint64_t seed,
                                                          const char* field, char** out);

/* Fans: {"rank": d, "rays": [[...]], "cones": [[ray indices], ...]} */
STRINGY_API stringy_status stringy_fan_from_json(const char* json, stringy_fan** out);
STRINGY_API void stringy_fan_free(stringy_fan* fan);
STRINGY_API stringy_status stringy_fan_e_st(const stringy_fan* fan, char** out);
STRINGY_API stringy_status stringy_fan_e_int(const stringy_fan* fan, const size_t* rays,
                                             size_t count, char** out);

/* Subdivisions of a cone into cones over its degree-1 points. Heights:
   {"heights": [...]} in the order of the degree-1 points. generic != 0
   perturbs degenerate heights. */
STRINGY_API stringy_status stringy_subdivision_trivial(const stringy_cone* c,
                                                       stringy_subdivision** out);
STRINGY_API stringy_status stringy_subdivision_from_heights(const stringy_cone* c,
                                                            const char* heights_json, int generic,
                                                            stringy_subdivision** out);
STRINGY_API void stringy_subdivision_free(stringy_subdivision* s);
STRINGY_API stringy_status stringy_subdivision_to_json(const stringy_subdivision* s, char** out);

/* Field strings: "rational", "prime" or "prime:<p>"; NULL means "prime". */

/* Graded dimensions of R0 and R1 for a random degree-1 element drawn
   from seed; sigma NULL means the trivial subdivision of c. */
STRINGY_API stringy_status stringy_ring_dims(const stringy_cone* c, const stringy_subdivision* sigma,
                                             uint64_t seed, const char* field, char** out);

/* Koszul cohomology against the face decomposition. sigma subdivides K*
   (NULL: trivial); cap < 0 means dim K. */
STRINGY_API stringy_status stringy_koszul(const stringy_pair* pair, const stringy_subdivision* sigma,
                                          uint64_t seed, int cap, const char* field, char** out);

/* Invariant suites on bundled fixtures: "all" or a comma-separated list.
   *passed is set to 1 when every suite passed. */
STRINGY_API stringy_status stringy_verify(const char* fixtures, uint64_t seed, const char* field,
                                          char** out, int* passed);

/* Human-readable form of a polynomial JSON document. */
STRINGY_API stringy_status stringy_polynomial_to_text(const char* json, char** out);

#ifdef __cplusplus
}
#endif

#endif
