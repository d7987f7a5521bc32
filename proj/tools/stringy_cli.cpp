#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "stringy/stringy.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailedCheck = 1;
constexpr int kExitInputError = 2;

struct Failure {
  std::string message;
};

void check(stringy_status status) {
  if (status != STRINGY_OK) throw Failure{stringy_last_error()};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Failure{"cannot read '" + path + "'"};
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

template <class T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using Polytope = std::unique_ptr<stringy_polytope, Deleter<stringy_polytope, stringy_polytope_free>>;
using Pair = std::unique_ptr<stringy_pair, Deleter<stringy_pair, stringy_pair_free>>;
using Cone = std::unique_ptr<stringy_cone, Deleter<stringy_cone, stringy_cone_free>>;
using Fan = std::unique_ptr<stringy_fan, Deleter<stringy_fan, stringy_fan_free>>;
using Subdivision =
    std::unique_ptr<stringy_subdivision, Deleter<stringy_subdivision, stringy_subdivision_free>>;

std::string take(char* s) {
  std::string out(s);
  stringy_string_free(s);
  return out;
}

Polytope load_polytope(const std::string& path) {
  stringy_polytope* p = nullptr;
  check(stringy_polytope_from_json(read_file(path).c_str(), &p));
  return Polytope(p);
}

Pair load_pair(const std::string& path) {
  const Polytope p = load_polytope(path);
  stringy_pair* pair = nullptr;
  check(stringy_pair_new(p.get(), &pair));
  return Pair(pair);
}

// K over the polytope, or K* of its reflexive pair.
Cone load_cone(const std::string& path, bool dual) {
  stringy_cone* c = nullptr;
  if (dual) {
    check(stringy_pair_cone(load_pair(path).get(), 1, &c));
  } else {
    check(stringy_cone_over_polytope(load_polytope(path).get(), &c));
  }
  return Cone(c);
}

Subdivision load_subdivision(const stringy_cone* cone, const std::string& heights, bool generic) {
  stringy_subdivision* s = nullptr;
  if (heights.empty()) {
    check(stringy_subdivision_trivial(cone, &s));
  } else {
    check(stringy_subdivision_from_heights(cone, read_file(heights).c_str(), generic ? 1 : 0, &s));
  }
  return Subdivision(s);
}

struct Options {
  std::uint64_t seed = 0;
  std::string field = "prime";
  std::string format = "json";
};

void print_polynomial(const std::string& json, const Options& o) {
  if (o.format == "text") {
    char* text = nullptr;
    check(stringy_polynomial_to_text(json.c_str(), &text));
    std::cout << take(text) << "\n";
  } else {
    std::cout << json << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stringy invariants of Calabi-Yau hypersurfaces from reflexive polytopes"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--seed", o.seed, "Seed for random degree-one elements")->capture_default_str();
  app.add_option("--field", o.field, "rational, prime or prime:<p>")->capture_default_str();
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();

  std::string input, heights, toric, hypersurface, fixtures = "all";
  bool dual = false, reversed = false, generic = false, oracle = false, conjectural = false,
       computed = false;
  int cap = -1;
  int exit_code = kExitOk;

  auto polytope_command = [&](const char* name, const char* help) {
    auto* cmd = app.add_subcommand(name, help);
    cmd->add_option("polytope", input, "Polytope JSON file")->required();
    return cmd;
  };

  auto* dual_cmd = polytope_command("dual", "Polar dual polytope");
  auto* reflexive_cmd = polytope_command("check-reflexive", "Print whether the polytope is reflexive");
  auto* faces_cmd = polytope_command("faces", "Face lattice of the cone");
  auto* s_cmd = polytope_command("s-poly", "S-polynomial of the cone");
  auto* ts_cmd = polytope_command("tilde-s", "tilde S-polynomial of the cone");
  auto* g_cmd = polytope_command("g-poly", "G-polynomial of the face poset");
  auto* b_cmd = polytope_command("b-poly", "B-polynomial of the face poset");
  auto* box_cmd = polytope_command("box", "Box points of a simplicial cone, by shift");
  auto* ring_cmd = polytope_command("ring-dims", "Graded dimensions of R0 and R1");
  auto* koszul_cmd = polytope_command("koszul", "Koszul cohomology against the face decomposition");
  auto* subdivide_cmd = polytope_command("subdivide", "Regular subdivision from heights");
  auto* hodge_cmd = polytope_command("hodge", "Stringy Hodge numbers");
  for (auto* cmd : {faces_cmd, s_cmd, ts_cmd, g_cmd, b_cmd, box_cmd, ring_cmd, subdivide_cmd})
    cmd->add_flag("--dual", dual, "Use K* instead of the cone over the polytope");
  for (auto* cmd : {g_cmd, b_cmd}) cmd->add_flag("--reversed", reversed, "Reverse the order");
  for (auto* cmd : {ring_cmd, koszul_cmd, subdivide_cmd, hodge_cmd}) {
    cmd->add_option("--heights", heights, "Heights JSON file for a regular subdivision");
    cmd->add_flag("--generic", generic, "Perturb degenerate heights");
  }
  subdivide_cmd->get_option("--heights")->required();
  koszul_cmd->add_option("--cap", cap, "Highest total degree (default dim K)");
  hodge_cmd->add_flag("--conjectural", conjectural, "Conjectured string cohomology table");
  hodge_cmd->add_flag("--computed", computed, "Take R1 dimensions from linear algebra");

  auto* est_cmd = app.add_subcommand("e-st", "Stringy E-function");
  auto* hyp = est_cmd->add_option("--hypersurface", hypersurface, "Polytope JSON file");
  auto* tor = est_cmd->add_option("--toric", toric, "Fan JSON file");
  hyp->excludes(tor);
  est_cmd->add_flag("--oracle", oracle, "Use the B-polynomial formula");

  auto* verify_cmd = app.add_subcommand("verify", "Run every invariant suite on bundled fixtures");
  verify_cmd->add_option("--fixtures", fixtures, "all, or comma-separated fixture names")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    char* out = nullptr;
    const char* field = o.field.c_str();
    if (app.got_subcommand(dual_cmd)) {
      check(stringy_polytope_dual(load_polytope(input).get(), &out));
      std::cout << take(out) << "\n";
    } else if (app.got_subcommand(reflexive_cmd)) {
      int r = 0;
      check(stringy_polytope_is_reflexive(load_polytope(input).get(), &r));
      std::cout << (r ? "true" : "false") << "\n";
    } else if (app.got_subcommand(faces_cmd)) {
      check(stringy_cone_faces(load_cone(input, dual).get(), &out));
      std::cout << take(out) << "\n";
    } else if (app.got_subcommand(s_cmd)) {
      check(stringy_cone_s_polynomial(load_cone(input, dual).get(), &out));
      print_polynomial(take(out), o);
    } else if (app.got_subcommand(ts_cmd)) {
      check(stringy_cone_tilde_s_polynomial(load_cone(input, dual).get(), &out));
      print_polynomial(take(out), o);
    } else if (app.got_subcommand(g_cmd)) {
      check(stringy_cone_g_polynomial(load_cone(input, dual).get(), reversed, &out));
      print_polynomial(take(out), o);
    } else if (app.got_subcommand(b_cmd)) {
      check(stringy_cone_b_polynomial(load_cone(input, dual).get(), reversed, &out));
      print_polynomial(take(out), o);
    } else if (app.got_subcommand(box_cmd)) {
      check(stringy_cone_box_points(load_cone(input, dual).get(), &out));
      std::cout << take(out) << "\n";
    } else if (app.got_subcommand(ring_cmd)) {
      const Cone cone = load_cone(input, dual);
      const Subdivision sigma = load_subdivision(cone.get(), heights, generic);
      check(stringy_ring_dims(cone.get(), sigma.get(), o.seed, field, &out));
      std::cout << take(out) << "\n";
    } else if (app.got_subcommand(subdivide_cmd)) {
      const Cone cone = load_cone(input, dual);
      check(stringy_subdivision_to_json(load_subdivision(cone.get(), heights, generic).get(), &out));
      std::cout << take(out) << "\n";
    } else if (app.got_subcommand(koszul_cmd)) {
      const Pair pair = load_pair(input);
      stringy_cone* dual_cone = nullptr;
      check(stringy_pair_cone(pair.get(), 1, &dual_cone));
      const Cone k_dual(dual_cone);
      const Subdivision sigma = load_subdivision(k_dual.get(), heights, generic);
      check(stringy_koszul(pair.get(), sigma.get(), o.seed, cap, field, &out));
      std::cout << take(out) << "\n";
    } else if (app.got_subcommand(hodge_cmd)) {
      const Pair pair = load_pair(input);
      if (conjectural || computed) {
        stringy_cone* dual_cone = nullptr;
        check(stringy_pair_cone(pair.get(), 1, &dual_cone));
        const Cone k_dual(dual_cone);
        const Subdivision sigma = load_subdivision(k_dual.get(), heights, generic);
        check(stringy_pair_string_cohomology(pair.get(), sigma.get(), computed, o.seed, field, &out));
      } else {
        check(stringy_pair_hodge(pair.get(), &out));
      }
      std::cout << take(out) << "\n";
    } else if (app.got_subcommand(est_cmd)) {
      if (!hypersurface.empty()) {
        check(stringy_pair_e_st(load_pair(hypersurface).get(), oracle, &out));
      } else if (!toric.empty()) {
        stringy_fan* f = nullptr;
        check(stringy_fan_from_json(read_file(toric).c_str(), &f));
        const Fan fan(f);
        check(stringy_fan_e_st(fan.get(), &out));
      } else {
        throw Failure{"e-st needs --hypersurface or --toric"};
      }
      print_polynomial(take(out), o);
    } else if (app.got_subcommand(verify_cmd)) {
      int passed = 0;
      check(stringy_verify(fixtures.c_str(), o.seed, field, &out, &passed));
      std::cout << take(out) << "\n";
      if (!passed) exit_code = kExitFailedCheck;
    }
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << "\n";
    return kExitInputError;
  }
  return exit_code;
}
