#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "xdisc/domains.hpp"
#include "xdisc/json_io.hpp"

using namespace xdisc;

namespace {

struct Run {
  int status;
  std::string out;
};

std::string quote(const std::string& s) {
  std::string q = "'";
  for (char c : s) q += c == '\'' ? std::string("'\\''") : std::string(1, c);
  return q + "'";
}

Run run_cli(const std::vector<std::string>& args) {
  std::string cmd = quote(XDISC_CLI_PATH);
  for (const auto& a : args) cmd += " " + quote(a);
  cmd += " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::vector<double>> csv_rows(const std::string& text, std::string* header) {
  std::istringstream in(text);
  std::string line;
  std::getline(in, *header);
  std::vector<std::vector<double>> rows;
  while (std::getline(in, line)) {
    std::vector<double> row;
    std::istringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) row.push_back(std::stod(cell));
    rows.push_back(row);
  }
  return rows;
}

std::filesystem::path tmp(const std::string& name) { return std::filesystem::temp_directory_path() / ("xdisc_cli_" + name); }

}  // namespace

TEST_CASE("verify-paper reports are byte-identical for the same seed") {
  const auto a = tmp("report_a.json"), b = tmp("report_b.json");
  const Run r1 = run_cli({"--seed", "4242", "--out", a.string(), "verify-paper"});
  const Run r2 = run_cli({"--seed", "4242", "--out", b.string(), "verify-paper"});
  CHECK(r1.status == r2.status);
  CHECK((r1.status == 0 || r1.status == 1));
  const std::string ja = slurp(a);
  REQUIRE_FALSE(ja.empty());
  CHECK(ja == slurp(b));
  const json report = json::parse(ja);
  CHECK(report.at("seed") == 4242);
  CHECK(report.at("summary").at("total") == 10);
  CHECK(report.at("checks").size() == 10);
  std::vector<std::string> ids;
  for (const auto& c : report.at("checks")) ids.push_back(c.at("id"));
  CHECK(std::is_sorted(ids.begin(), ids.end()));
  CHECK(r1.status == (report.at("summary").at("failed") == 0 ? 0 : 1));
  std::filesystem::remove(a);
  std::filesystem::remove(b);
}

TEST_CASE("verify-paper with a crushed tolerance fails with exit code 1") {
  const Run r = run_cli({"verify-paper", "--tol-scale", "1e-20", "--json"});
  CHECK(r.status == 1);
  const json report = json::parse(r.out);
  CHECK(report.at("summary").at("failed").get<int>() > 0);
}

TEST_CASE("usage and parse errors exit with code 2") {
  CHECK(run_cli({}).status == 2);
  CHECK(run_cli({"no-such-command"}).status == 2);
  CHECK(run_cli({"check", "--domain", "Tetrablock"}).status == 2);
  CHECK(run_cli({"check", "--domain", "moon", "--point", "[0]"}).status == 2);
  CHECK(run_cli({"check", "--domain", "Disc", "--point", "{oops"}).status == 2);
  CHECK(run_cli({"--help"}).status == 0);
}

TEST_CASE("check prints a verdict") {
  const Run r = run_cli({"check", "--domain", "SymBidisc", "--point", "[1, 0.25]"});
  REQUIRE(r.status == 0);
  const json j = json::parse(r.out);
  CHECK(j.at("member") == true);
  CHECK(j.at("defect").get<double>() == doctest::Approx(0.8125));
  CHECK(j.contains("tolerance"));
}

TEST_CASE("construct, lift and certify outputs parse back to equal values") {
  const Run c = run_cli({"construct", "--family", "thlb", "--params", R"({"b1": {"zeros": [0]}, "b2": {"zeros": [0.5]}})"});
  REQUIRE(c.status == 0);
  const json fam = json::parse(c.out);
  const Disc phi = disc_from_json(fam.at("disc"));
  CHECK(to_json(phi) == fam.at("disc"));

  const Run l = run_cli({"lift", "--disc", fam.at("disc").dump()});
  REQUIRE(l.status == 0);
  const json lifted = json::parse(l.out);
  CHECK(to_json(disc_from_json(lifted.at("disc"))) == lifted.at("disc"));

  const Run v = run_cli({"verify-shape", "--disc", fam.at("disc").dump()});
  CHECK(v.status == 0);
  CHECK(json::parse(v.out).at("degree") == 2);

  const Run k = run_cli({"certify", "--disc", R"({"target": "Disc", "components": [[0, 0, 1]]})", "--nodes", "[0, 0.3, [0, -0.5]]"});
  REQUIRE(k.status == 0);
  const json cert = json::parse(k.out);
  CHECK(cert.at("verdict") == "ExtremallySolvable");
  CHECK(to_json(certificate_from_json(cert)) == cert);

  const Run a = run_cli({"aut", "--chain", R"({"steps": [{"phi": [0.1, 0.2, 0.2, 0]}]})", "--point", "[0, 0, 0, 0]"});
  REQUIRE(a.status == 0);
  const json aj = json::parse(a.out);
  CHECK(to_json(matrix_from_json(aj.at("point"))) == aj.at("point"));
}

TEST_CASE("trace shilov-g2 emits a full grid on the Shilov boundary") {
  const Run r = run_cli({"trace", "shilov-g2", "--grid", "64"});
  REQUIRE(r.status == 0);
  std::string header;
  const auto rows = csv_rows(r.out, &header);
  CHECK(header == "theta1,theta2,re_s,im_s,re_p,im_p");
  CHECK(rows.size() == 4096);
  for (const auto& row : rows) {
    REQUIRE(row.size() == 6);
    CHECK(shilov_test(DomainId::sym_bidisc(), {{cplx{row[2], row[3]}, cplx{row[4], row[5]}}}));
  }
}

TEST_CASE("trace family-orbit of a thlb disc stays on the Shilov boundary") {
  const Run r = run_cli({"trace", "family-orbit", "--family", "thlb", "--params",
                       R"({"b1": {"zeros": [0]}, "b2": {"zeros": [0.5]}})", "--samples", "360"});
  REQUIRE(r.status == 0);
  std::string header;
  const auto rows = csv_rows(r.out, &header);
  CHECK(rows.size() == 360);
  for (const auto& row : rows) {
    REQUIRE(row.size() == 5);
    CHECK(shilov_test(DomainId::sym_bidisc(), {{cplx{row[1], row[2]}, cplx{row[3], row[4]}}}));
  }
}

TEST_CASE("trace with an empty grid writes only the header") {
  const auto path = tmp("empty.csv");
  const Run r = run_cli({"--out", path.string(), "trace", "shilov-g2", "--grid", "0"});
  CHECK(r.status == 0);
  CHECK(slurp(path) == "theta1,theta2,re_s,im_s,re_p,im_p\n");
  std::filesystem::remove(path);
}

TEST_CASE("trace tetra-boundary rows are images of unitaries") {
  const Run r = run_cli({"trace", "tetra-boundary", "--grid", "8"});
  REQUIRE(r.status == 0);
  std::string header;
  const auto rows = csv_rows(r.out, &header);
  REQUIRE_FALSE(rows.empty());
  for (const auto& row : rows) {
    const std::size_t n = row.size();
    REQUIRE(n >= 6);
    const PointND x{{cplx{row[n - 6], row[n - 5]}, cplx{row[n - 4], row[n - 3]}, cplx{row[n - 2], row[n - 1]}}};
    CHECK(shilov_test(DomainId::tetrablock(), x, 1e-9));
  }
}

TEST_CASE("scan-four-extremal reports the grid minimum") {
  const Run r = run_cli({"scan-four-extremal", "--grid", "a1=0.1:0.9:65", "gamma=0:0.95:64"});
  REQUIRE(r.status == 0);
  const json j = json::parse(r.out);
  CHECK(j.at("min").get<double>() == doctest::Approx(1e-4).epsilon(1e-10));
  CHECK(j.at("argmin").at("a1").get<double>() == doctest::Approx(0.1));
}
