#include "xdisc/json_io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "xdisc/error.hpp"

namespace xdisc {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(Errc::ParseError, what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

double number(const json& j) {
  if (!j.is_number()) bad("expected a number, got " + j.dump());
  return j.get<double>();
}

std::vector<cplx> complex_list(const json& j) {
  if (!j.is_array()) bad("expected an array of complex numbers");
  std::vector<cplx> out;
  for (const auto& e : j) out.push_back(complex_from_json(e));
  return out;
}

}  // namespace

json to_json(cplx z) { return json::array({z.real(), z.imag()}); }

cplx complex_from_json(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2) bad("complex numbers are [re, im], got " + j.dump());
  return {number(j[0]), number(j[1])};
}

json to_json(const Poly& p) {
  json a = json::array();
  for (cplx c : p.coeffs()) a.push_back(to_json(c));
  return a;
}

Poly poly_from_json(const json& j) { return Poly(complex_list(j)); }

json to_json(const RationalMap& r) { return {{"num", to_json(r.num())}, {"den", to_json(r.den())}}; }

RationalMap rational_from_json(const json& j) {
  if (j.is_array()) return RationalMap(poly_from_json(j));
  return RationalMap(poly_from_json(field(j, "num")), poly_from_json(field(j, "den")));
}

json to_json(const BlaschkeProduct& b) {
  json zeros = json::array();
  for (cplx z : b.zeros()) zeros.push_back(to_json(z));
  return {{"unimodular", to_json(b.unimodular())}, {"zeros", zeros}};
}

BlaschkeProduct blaschke_from_json(const json& j) {
  const cplx u = j.contains("unimodular") ? complex_from_json(j.at("unimodular")) : cplx{1.0};
  return BlaschkeProduct(u, j.contains("zeros") ? complex_list(j.at("zeros")) : std::vector<cplx>{});
}

json to_json(const DiscAutomorphism& m) { return {{"omega", to_json(m.omega())}, {"alpha", to_json(m.alpha())}}; }

DiscAutomorphism automorphism_from_json(const json& j) {
  if (!j.is_object()) bad("disc automorphisms are {\"omega\": c, \"alpha\": c}");
  return {j.contains("omega") ? complex_from_json(j.at("omega")) : cplx{1.0},
          j.contains("alpha") ? complex_from_json(j.at("alpha")) : cplx{}};
}

json to_json(const CMatrix2& m) {
  json a = json::array();
  for (cplx c : m.e) a.push_back(to_json(c));
  return a;
}

CMatrix2 matrix_from_json(const json& j) {
  // four complex entries row-major, or nested rows [[a, b], [c, d]]
  if (j.is_array() && j.size() == 2 && j[0].is_array() && j[1].is_array() && j[0].size() == 2 && j[1].size() == 2)
    return {complex_from_json(j[0][0]), complex_from_json(j[0][1]), complex_from_json(j[1][0]),
            complex_from_json(j[1][1])};
  const auto e = complex_list(j);
  if (e.size() != 4) bad("matrices have four entries");
  return {e[0], e[1], e[2], e[3]};
}

json to_json(const PointND& x) {
  json a = json::array();
  for (cplx c : x.coords) a.push_back(to_json(c));
  return a;
}

PointND point_from_json(const json& j) { return {complex_list(j)}; }

json to_json(const AutR2& chain) {
  json steps = json::array();
  for (const auto& s : chain.steps) {
    if (const auto* phi = std::get_if<PhiStep>(&s))
      steps.push_back({{"phi", to_json(phi->a)}});
    else
      steps.push_back({{"lu", to_json(std::get<LuStep>(s).u)}});
  }
  return {{"steps", steps}};
}

AutR2 chain_from_json(const json& j) {
  AutR2 chain;
  const json& steps = field(j, "steps");
  if (!steps.is_array()) bad("'steps' must be an array");
  for (const auto& s : steps) {
    if (s.contains("phi"))
      chain.steps.emplace_back(PhiStep{matrix_from_json(s.at("phi"))});
    else if (s.contains("lu"))
      chain.steps.emplace_back(LuStep{matrix_from_json(s.at("lu"))});
    else
      bad("chain steps are {\"phi\": matrix} or {\"lu\": matrix}");
  }
  return chain;
}

json to_json(const Disc& f) {
  json comps = json::array();
  for (const auto& c : f.components()) comps.push_back(to_json(c));
  return {{"target", f.target().name()}, {"components", comps}};
}

Disc disc_from_json(const json& j) {
  const json& target = field(j, "target");
  if (!target.is_string()) bad("'target' must be a domain tag");
  const json& comps = field(j, "components");
  if (!comps.is_array()) bad("'components' must be an array");
  std::vector<RationalMap> maps;
  for (const auto& c : comps) maps.push_back(rational_from_json(c));
  return Disc(std::move(maps), DomainId::parse(target.get<std::string>()));
}

json to_json(const PickCertificate& c) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < c.matrix.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index k = 0; k < c.matrix.cols(); ++k) row.push_back(to_json(c.matrix(i, k)));
    rows.push_back(row);
  }
  json j = {{"verdict", to_string(c.verdict)},
            {"rank", c.rank},
            {"tolerance", c.tolerance},
            {"eigenvalues", c.eigenvalues},
            {"matrix", rows}};
  if (!c.scope.empty()) j["scope"] = c.scope;
  if (c.interpolant) j["interpolant"] = to_json(*c.interpolant);
  return j;
}

PickCertificate certificate_from_json(const json& j) {
  PickCertificate c;
  const json& verdict = field(j, "verdict");
  if (!verdict.is_string()) bad("'verdict' must be a string");
  c.verdict = parse_verdict(verdict.get<std::string>());
  c.rank = field(j, "rank").get<int>();
  c.tolerance = number(field(j, "tolerance"));
  for (const auto& e : field(j, "eigenvalues")) c.eigenvalues.push_back(number(e));
  const json& rows = field(j, "matrix");
  const auto n = static_cast<Eigen::Index>(rows.size());
  c.matrix.resize(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    if (!rows[i].is_array() || static_cast<Eigen::Index>(rows[i].size()) != n) bad("Pick matrix must be square");
    for (Eigen::Index k = 0; k < n; ++k) c.matrix(i, k) = complex_from_json(rows[i][k]);
  }
  if (j.contains("scope")) c.scope = j.at("scope").get<std::string>();
  if (j.contains("interpolant")) c.interpolant = blaschke_from_json(j.at("interpolant"));
  return c;
}

json to_json(const Family& f) {
  return {{"family", f.name},
          {"order", f.order},
          {"candidate", f.candidate},
          {"claim", f.claim},
          {"disc", to_json(f.disc)}};
}

json to_json(const ShapeReport& r) {
  return {{"degree", r.degree},
          {"degree_ok", r.degree_ok},
          {"inner", r.inner},
          {"royal_intersections", r.royal_intersections},
          {"identically_royal", r.identically_royal}};
}

json load_json_arg(const std::string& literal_or_path) {
  std::string text = literal_or_path;
  std::error_code ec;
  if (!text.empty() && text.front() != '[' && text.front() != '{' && std::filesystem::is_regular_file(text, ec)) {
    std::ifstream in(literal_or_path);
    if (!in) throw Error(Errc::IoError, "cannot read " + literal_or_path);
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    const bool path_like = text.find('/') != std::string::npos || text.ends_with(".json");
    if (text == literal_or_path && path_like && !std::filesystem::exists(text, ec))
      throw Error(Errc::IoError, "no such file: " + literal_or_path);
    throw Error(Errc::ParseError, std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace xdisc
