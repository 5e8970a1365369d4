// xdisc: command-line front end to the library.
//
// Structured results go to stdout (or --out) as JSON, traces as CSV.
// Exit codes: 0 success, 1 failed check or library error, 2 usage or parse error.

#include <CLI11.hpp>

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "xdisc/constructions.hpp"
#include "xdisc/error.hpp"
#include "xdisc/json_io.hpp"
#include "xdisc/verify_suite.hpp"

namespace {

using namespace xdisc;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Globals {
  std::optional<double> tol;
  std::uint64_t seed = kDefaultSeed;
  std::string out;
  bool json = false;
};

// Raised for malformed arguments that get past CLI11 itself.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(const Globals& g, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream f(g.out, std::ios::binary);
  if (!f) throw Error(Errc::IoError, "cannot write " + g.out);
  f << text;
  if (!text.empty() && text.back() != '\n') f << '\n';
  if (!f) throw Error(Errc::IoError, "write failed for " + g.out);
}

void emit_json(const Globals& g, const json& j) { emit(g, j.dump(2)); }

const json& required(const json& params, const char* key) {
  if (!params.is_object() || !params.contains(key))
    throw Error(Errc::ParseError, std::string("params need '") + key + "'");
  return params.at(key);
}

double number_field(const json& params, const char* key, std::optional<double> fallback = std::nullopt) {
  if (params.is_object() && params.contains(key)) {
    const json& v = params.at(key);
    if (!v.is_number()) throw Error(Errc::ParseError, std::string("'") + key + "' must be a number");
    return v.get<double>();
  }
  if (fallback) return *fallback;
  required(params, key);
  return 0.0;
}

int int_field(const json& params, const char* key, int fallback) {
  if (!params.is_object() || !params.contains(key)) return fallback;
  const json& v = params.at(key);
  if (!v.is_number_integer()) throw Error(Errc::ParseError, std::string("'") + key + "' must be an integer");
  return v.get<int>();
}

PointND point_for(const DomainId& d, const json& j) {
  if (d.is_cartan() && j.is_array() && j.size() == 2 && j[0].is_array() && j[0].size() == 2 && j[0][0].is_array())
    return flatten(matrix_from_json(j));
  return point_from_json(j);
}

Family build_family(const std::string& name, const json& params) {
  if (name == "ball3") {
    const DiscAutomorphism m = params.contains("automorphism") ? automorphism_from_json(params.at("automorphism"))
                                                                : DiscAutomorphism::identity();
    return ball_three_extremal(number_field(params, "a1"), m, int_field(params, "n", 2));
  }
  if (name == "ball-k2") return ball_nongeodesic(int_field(params, "k", 2), number_field(params, "a1"));
  if (name == "lem1") {
    Lem1Params p;
    const json& as = required(params, "a");
    if (!as.is_array()) throw Error(Errc::ParseError, "'a' must be an array of matrices");
    for (const auto& a : as) p.a_list.push_back(matrix_from_json(a));
    if (params.contains("u")) p.u = matrix_from_json(params.at("u"));
    if (params.contains("z")) p.z = rational_from_json(params.at("z"));
    p.fit_factor = int_field(params, "fit_factor", p.fit_factor);
    return family_lem1(p);
  }
  if (name == "thlb")
    return family_thlb(blaschke_from_json(required(params, "b1")), blaschke_from_json(required(params, "b2")));
  if (name.size() == 5 && name.starts_with("thla") && name[4] >= '1' && name[4] <= '4') {
    ThlaParams p;
    p.which = name[4] - '0';
    if (params.contains("b")) p.b = blaschke_from_json(params.at("b"));
    if (params.contains("automorphism")) p.automorphism = automorphism_from_json(params.at("automorphism"));
    if (params.contains("a1")) p.a1 = matrix_from_json(params.at("a1"));
    if (params.contains("a")) p.a1 = matrix_from_json(params.at("a"));
    if (params.contains("a2")) p.a2 = matrix_from_json(params.at("a2"));
    if (params.contains("u")) p.u = matrix_from_json(params.at("u"));
    if (params.contains("m")) p.m = automorphism_from_json(params.at("m"));
    return family_thla(p);
  }
  throw UsageError("unknown family '" + name + "' (ball3, ball-k2, lem1, thla1..4, thlb)");
}

struct GridAxis {
  std::string name;
  std::vector<double> values;
};

// "name=lo:hi:n", n points including both ends.
GridAxis parse_axis(const std::string& spec) {
  const auto eq = spec.find('=');
  if (eq == std::string::npos) throw UsageError("grid axis '" + spec + "' is not name=lo:hi:n");
  GridAxis axis{spec.substr(0, eq), {}};
  double lo = 0, hi = 0;
  long n = 0;
  char tail = 0;
  if (std::sscanf(spec.c_str() + eq + 1, "%lf:%lf:%ld%c", &lo, &hi, &n, &tail) != 3 || n < 0)
    throw UsageError("grid axis '" + spec + "' is not name=lo:hi:n");
  for (long k = 0; k < n; ++k) axis.values.push_back(n == 1 ? lo : lo + (hi - lo) * static_cast<double>(k) / (n - 1));
  return axis;
}

std::string csv_number(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string trace_shilov_g2(int n) {
  std::ostringstream os;
  os << "theta1,theta2,re_s,im_s,re_p,im_p\n";
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const double t1 = kTwoPi * i / n, t2 = kTwoPi * j / n;
      const cplx z = std::polar(1.0, t1), w = std::polar(1.0, t2);
      const cplx s = z + w, p = z * w;
      os << csv_number(t1) << ',' << csv_number(t2) << ',' << csv_number(s.real()) << ',' << csv_number(s.imag())
         << ',' << csv_number(p.real()) << ',' << csv_number(p.imag()) << '\n';
    }
  return os.str();
}

// pi of the unitaries [[c, -s], [s, c]] diag(1, e^{i theta2}), which sweep the
// distinguished boundary of the tetrablock.
std::string trace_tetra_boundary(int n) {
  std::ostringstream os;
  os << "theta1,theta2,re_x1,im_x1,re_x2,im_x2,re_x3,im_x3\n";
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const double t1 = std::numbers::pi * i / n, t2 = kTwoPi * j / n;
      const cplx e = std::polar(1.0, t2);
      const CMatrix2 u{std::cos(t1), -std::sin(t1) * e, std::sin(t1), std::cos(t1) * e};
      const PointND x = pi_map(u);
      os << csv_number(t1) << ',' << csv_number(t2);
      for (cplx c : x.coords) os << ',' << csv_number(c.real()) << ',' << csv_number(c.imag());
      os << '\n';
    }
  return os.str();
}

std::string trace_family_orbit(const Disc& phi, int samples) {
  std::ostringstream os;
  os << "theta";
  for (std::size_t k = 0; k < phi.size(); ++k) os << ",re_" << k + 1 << ",im_" << k + 1;
  os << '\n';
  for (int j = 0; j < samples; ++j) {
    const double t = kTwoPi * j / samples;
    const PointND x = phi(std::polar(1.0, t));
    os << csv_number(t);
    for (cplx c : x.coords) os << ',' << csv_number(c.real()) << ',' << csv_number(c.imag());
    os << '\n';
  }
  return os.str();
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("XDISC_SEED"); env && *env) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0') return v;
    std::cerr << "xdisc: ignoring malformed XDISC_SEED='" << env << "'\n";
  }
  return kDefaultSeed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Extremal holomorphic discs: domains, automorphisms, Pick certificates, constructions."};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  g.seed = default_seed();
  app.add_option("--tol", g.tol, "tolerance (check: boundary band, certify: relative eigenvalue band)");
  app.add_option("--seed", g.seed, "seed for randomized commands (default: $XDISC_SEED or 20240611)");
  app.add_option("--out", g.out, "write the result to this file instead of stdout");
  app.add_flag("--json", g.json, "JSON on stdout where a command also has a text form");

  int code = kExitOk;

  // check
  auto* check = app.add_subcommand("check", "domain membership, closed membership or Shilov boundary test");
  std::string domain_tag, point_arg;
  bool closed = false, shilov = false;
  check->add_option("--domain", domain_tag, "domain tag, e.g. SymBidisc, Tetrablock, Ball(2)")->required();
  check->add_option("--point", point_arg, "point as JSON (literal or file)")->required();
  check->add_flag("--closed", closed, "closed membership");
  check->add_flag("--shilov", shilov, "Shilov boundary membership");
  check->callback([&] {
    const DomainId d = DomainId::parse(domain_tag);
    const PointND x = point_for(d, load_json_arg(point_arg));
    const double defect = membership_defect(d, x);
    json out = {{"domain", d.name()}, {"defect", defect}};
    if (shilov) {
      const double tol = g.tol.value_or(1e-10);
      out["mode"] = "shilov";
      out["member"] = shilov_test(d, x, tol);
      out["tolerance"] = tol;
    } else {
      const Closure mode = closed ? Closure::Closed : Closure::Open;
      out["mode"] = closed ? "closed" : "open";
      out["member"] = contains(d, x, mode);
      out["tolerance"] = closed ? 1e-12 : 0.0;
    }
    emit_json(g, out);
  });

  // aut
  auto* aut = app.add_subcommand("aut", "apply a chain of Phi_a / U x U^t generators to a matrix");
  std::string chain_arg, aut_point;
  aut->add_option("--chain", chain_arg, "{\"steps\": [{\"phi\": m}, {\"lu\": m}, ...]}")->required();
  aut->add_option("--point", aut_point, "2x2 matrix as JSON")->required();
  aut->callback([&] {
    const AutR2 chain = chain_from_json(load_json_arg(chain_arg));
    const CMatrix2 z = matrix_from_json(load_json_arg(aut_point));
    emit_json(g, {{"point", to_json(aut_chain_apply(chain, z))}, {"preserves_r2", chain.preserves_r2()}});
  });

  // certify
  auto* certify = app.add_subcommand("certify", "Pick certificate for a disc at interpolation nodes");
  std::string disc_arg, nodes_arg;
  certify->add_option("--disc", disc_arg, "disc JSON")->required();
  certify->add_option("--nodes", nodes_arg, "array of nodes in the disc")->required();
  certify->callback([&] {
    const Disc f = disc_from_json(load_json_arg(disc_arg));
    const json nodes_json = load_json_arg(nodes_arg);
    if (!nodes_json.is_array()) throw Error(Errc::ParseError, "nodes must be an array");
    std::vector<cplx> nodes;
    for (const auto& z : nodes_json) nodes.push_back(complex_from_json(z));
    emit_json(g, to_json(certify_disc(f, NodeSet(nodes), g.tol.value_or(kPickRelTol))));
  });

  // construct
  auto* construct = app.add_subcommand("construct", "build a disc from one of the extremal families");
  std::string family, params_arg = "{}";
  construct->add_option("--family", family, "ball3 | ball-k2 | lem1 | thla1..4 | thlb")->required();
  construct->add_option("--params", params_arg, "family parameters as JSON");
  construct->callback([&] { emit_json(g, to_json(build_family(family, load_json_arg(params_arg)))); });

  // lift
  auto* lift = app.add_subcommand("lift", "lift a rational disc in G2 to a symmetric disc in R_II");
  std::string lift_disc;
  lift->add_option("--disc", lift_disc, "disc JSON with target SymBidisc")->required();
  lift->callback([&] {
    const LiftResult r = lift_to_r2(disc_from_json(load_json_arg(lift_disc)));
    emit_json(g, {{"disc", to_json(r.f)}, {"warning", r.warning}});
  });

  // verify-shape
  auto* shape = app.add_subcommand("verify-shape", "degree and innerness of a candidate 3-extremal in G2");
  std::string shape_disc;
  shape->add_option("--disc", shape_disc, "disc JSON with target SymBidisc")->required();
  shape->callback([&] {
    const ShapeReport r = verify_three_extremal_shape(disc_from_json(load_json_arg(shape_disc)));
    emit_json(g, to_json(r));
    if (!(r.degree_ok && r.inner)) code = kExitCheckFailed;
  });

  // scan-four-extremal
  auto* scan = app.add_subcommand("scan-four-extremal", "grid minimum of the 4-extremal infeasibility functional");
  std::vector<std::string> grid_args;
  scan->add_option("--grid", grid_args, "a1=lo:hi:n gamma=lo:hi:n")->expected(2)->required();
  scan->callback([&] {
    std::vector<double> a1, gamma_r;
    bool have_a1 = false, have_gamma = false;
    for (const auto& s : grid_args) {
      GridAxis axis = parse_axis(s);
      if (axis.name == "a1") {
        a1 = std::move(axis.values);
        have_a1 = true;
      } else if (axis.name == "gamma") {
        gamma_r = std::move(axis.values);
        have_gamma = true;
      } else {
        throw UsageError("unknown grid axis '" + axis.name + "'");
      }
    }
    if (!have_a1 || !have_gamma) throw UsageError("--grid needs both a1=... and gamma=...");
    // The functional depends on gamma through |gamma| only.
    std::vector<cplx> gamma(gamma_r.begin(), gamma_r.end());
    const ScanResult r = four_extremal_scan(a1, gamma);
    emit_json(g, {{"min", r.min_value}, {"argmin", {{"a1", r.a1}, {"gamma", to_json(r.gamma)}}}});
  });

  // trace
  auto* trace = app.add_subcommand("trace", "CSV samples of boundary sets and disc orbits");
  std::string what, trace_family, trace_params = "{}";
  int trace_grid = 64, samples = 360;
  trace->add_option("what", what, "shilov-g2 | tetra-boundary | family-orbit")->required();
  trace->add_option("--grid", trace_grid, "points per angle for the boundary grids")->check(CLI::NonNegativeNumber);
  trace->add_option("--family", trace_family, "family for family-orbit");
  trace->add_option("--params", trace_params, "family parameters for family-orbit");
  trace->add_option("--samples", samples, "circle samples for family-orbit")->check(CLI::NonNegativeNumber);
  trace->callback([&] {
    if (what == "shilov-g2") {
      emit(g, trace_shilov_g2(trace_grid));
    } else if (what == "tetra-boundary") {
      emit(g, trace_tetra_boundary(trace_grid));
    } else if (what == "family-orbit") {
      if (trace_family.empty()) throw UsageError("family-orbit needs --family");
      emit(g, trace_family_orbit(build_family(trace_family, load_json_arg(trace_params)).disc, samples));
    } else {
      throw UsageError("unknown trace '" + what + "'");
    }
  });

  // verify-paper
  auto* verify = app.add_subcommand("verify-paper", "run the seeded reproduction suite");
  double tol_scale = 1.0;
  verify->add_option("--tol-scale", tol_scale, "multiply every tolerance by this factor")->check(CLI::PositiveNumber);
  verify->callback([&] {
    const VerifyReport rep = run_verify_suite(g.seed, tol_scale);
    const std::string report = to_json(rep).dump(2) + "\n";
    if (!g.out.empty()) emit(g, report);
    if (g.json) {
      std::cout << report;
    } else {
      std::cout << "seed=" << rep.seed << " tol_scale=" << csv_number(rep.tol_scale) << "\n";
      for (const auto& c : rep.checks) std::cout << format_line(c) << "\n";
      std::cout << rep.passed() << "/" << rep.checks.size() << " checks passed\n";
    }
    if (!rep.all_pass()) code = kExitCheckFailed;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "xdisc: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "xdisc: " << e.what() << "\n";
    const bool usage = e.code() == Errc::ParseError || e.code() == Errc::IoError;
    return usage ? kExitUsage : kExitCheckFailed;
  }
  return code;
}
