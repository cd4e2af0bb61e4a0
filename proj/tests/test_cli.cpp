#include "doctest.h"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "mqlandau/cli.hpp"

using namespace mqlandau;
using namespace mqlandau::cli;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run invoke(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

struct Csv {
  std::map<std::string, std::string> meta;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  [[nodiscard]] std::size_t col(const std::string& name) const {
    for (std::size_t i = 0; i < columns.size(); ++i) {
      if (columns[i] == name) return i;
    }
    FAIL("missing column " << name);
    return 0;
  }
  [[nodiscard]] double num(std::size_t row, const std::string& name) const {
    return std::strtod(rows[row][col(name)].c_str(), nullptr);
  }
};

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) {
    out.push_back(cell);
  }
  return out;
}

Csv parse_csv(const std::string& text) {
  Csv csv;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind("# ", 0) == 0) {
      const auto colon = line.find(": ");
      csv.meta[line.substr(2, colon - 2)] = line.substr(colon + 2);
    } else if (csv.columns.empty()) {
      csv.columns = split(line);
    } else if (!line.empty()) {
      csv.rows.push_back(split(line));
    }
  }
  return csv;
}

}  // namespace

TEST_CASE("spectrum command") {
  SUBCASE("six rows with the degenerate branch") {
    const auto r = invoke({"spectrum", "--n-max", "1", "--l-min", "-1", "--l-max", "1"});
    REQUIRE(r.code == kSuccess);
    const auto csv = parse_csv(r.out);
    CHECK(csv.columns == std::vector<std::string>{"n", "l", "energy", "page_werner_term", "delta"});
    REQUIRE(csv.rows.size() == 6);
    std::map<std::pair<int, int>, double> e;
    for (std::size_t i = 0; i < csv.rows.size(); ++i) {
      e[{static_cast<int>(csv.num(i, "n")), static_cast<int>(csv.num(i, "l"))}] = csv.num(i, "energy");
    }
    CHECK(e[{0, 0}] == e[{0, -1}]);
    CHECK(e[{1, 0}] == e[{1, -1}]);
    CHECK(e[{0, 1}] == 3.0);
    CHECK(csv.meta.at("units") == "hbar=c=1");
  }
  SUBCASE("out of domain") {
    const auto r = invoke({"spectrum", "--omega-rot", "-1.0"});
    CHECK(r.code == kDomainError);
    CHECK(r.err.find("radicand") != std::string::npos);
    CHECK(r.err.find("-omega/4") != std::string::npos);
  }
  SUBCASE("minimal run") {
    const auto r = invoke({"spectrum", "--n-max", "0", "--l-min", "0", "--l-max", "0"});
    REQUIRE(r.code == kSuccess);
    const auto csv = parse_csv(r.out);
    REQUIRE(csv.rows.size() == 1);
    CHECK(csv.num(0, "energy") == 1.0);
  }
  SUBCASE("inverted l range") {
    CHECK(invoke({"spectrum", "--l-min", "2", "--l-max", "1"}).code == kDomainError);
  }
}

TEST_CASE("sweep command") {
  SUBCASE("rotation splits levels") {
    const auto r = invoke({"sweep", "--sweep", "0:1:6"});
    REQUIRE(r.code == kSuccess);
    const auto csv = parse_csv(r.out);
    std::map<double, double> groups;
    for (std::size_t i = 0; i < csv.rows.size(); ++i) {
      CHECK(csv.rows[i][csv.col("status")] == "ok");
      groups[csv.num(i, "omega_rot")] = csv.num(i, "groups");
    }
    REQUIRE(groups.size() == 6);
    const double at_rest = groups.at(0.0);
    for (const auto& [omega_rot, count] : groups) {
      if (omega_rot > 0.0) {
        CHECK(count > at_rest);
      }
    }
  }
  SUBCASE("points below -omega/4 are skipped") {
    const auto r = invoke({"sweep", "--sweep", "-1:0:5"});
    REQUIRE(r.code == kSuccess);
    const auto csv = parse_csv(r.out);
    int skipped = 0;
    for (std::size_t i = 0; i < csv.rows.size(); ++i) {
      const bool is_skipped = csv.rows[i][csv.col("status")] != "ok";
      skipped += is_skipped;
      CHECK(is_skipped == (csv.num(i, "omega_rot") <= -0.5));
    }
    CHECK(skipped == 3);  // -1, -0.75, -0.5
  }
  SUBCASE("nothing computable") {
    const auto r = invoke({"sweep", "--sweep", "-2:-1:3"});
    CHECK(r.code == kEmptyResult);
  }
  SUBCASE("malformed sweep") {
    CHECK(invoke({"sweep", "--sweep", "0:1"}).code == kDomainError);
    CHECK(invoke({"sweep", "--sweep", "0:1:1"}).code == kDomainError);
    CHECK(invoke({"sweep"}).code == kDomainError);
  }
}

TEST_CASE("verify command") {
  SUBCASE("defaults at Omega = 0.3 pass") {
    const auto r = invoke({"verify", "--omega-rot", "0.3"});
    REQUIRE(r.code == kSuccess);
    const auto csv = parse_csv(r.out);
    CHECK(csv.rows.size() == 28);
    for (std::size_t i = 0; i < csv.rows.size(); ++i) {
      CHECK(csv.num(i, "abs_err") < 1e-4);
    }
    CHECK(csv.meta.at("verdict") == "pass");
  }
  SUBCASE("coarse grid shows second order and misses a tight tolerance") {
    const auto r = invoke({"verify", "--omega-rot", "0.3", "--grid-points", "200", "--tol", "1e-8"});
    CHECK(r.code == kVerificationFailure);
    CHECK(r.err.find("worst offender") != std::string::npos);
    const auto csv = parse_csv(r.out);
    bool above = false;
    for (std::size_t i = 0; i < csv.rows.size(); ++i) {
      if (csv.num(i, "n") == 0.0) {
        CHECK(csv.num(i, "conv_order") == doctest::Approx(2.0).epsilon(0.15));
      }
      above = above || csv.num(i, "abs_err") >= 1e-8;
    }
    CHECK(above);
  }
  SUBCASE("zero tolerance always fails") {
    const auto r = invoke({"verify", "--n-max", "0", "--l-min", "0", "--l-max", "0", "--tol", "0"});
    CHECK(r.code == kVerificationFailure);
  }
}

TEST_CASE("wavefunction command") {
  SUBCASE("ground state") {
    const auto r = invoke({"wavefunction", "--n", "0", "--l", "0", "--samples", "50"});
    REQUIRE(r.code == kSuccess);
    const auto csv = parse_csv(r.out);
    CHECK(csv.meta.at("nodes") == "0");
    REQUIRE(csv.rows.size() == 50);
    for (std::size_t i = 1; i < csv.rows.size(); ++i) {
      CHECK(csv.num(i, "R") <= csv.num(i - 1, "R"));
    }
    CHECK(std::abs(std::strtod(csv.meta.at("normalization").c_str(), nullptr) - 1.0) < 1e-8);
  }
  SUBCASE("n = 2, l = 1") {
    const auto r = invoke({"wavefunction", "--n", "2", "--l", "1"});
    REQUIRE(r.code == kSuccess);
    const auto csv = parse_csv(r.out);
    CHECK(csv.meta.at("nodes") == "2");
    CHECK(std::abs(std::strtod(csv.meta.at("normalization").c_str(), nullptr) - 1.0) < 1e-8);
  }
  SUBCASE("domain error") {
    CHECK(invoke({"wavefunction", "--omega-rot", "-3"}).code == kDomainError);
    CHECK(invoke({"wavefunction", "--samples", "1"}).code == kDomainError);
  }
}

TEST_CASE("fields command") {
  const auto r = invoke({"fields", "--mass", "1.5", "--quad-moment", "0.7", "--lambda", "2.3",
                         "--samples", "40", "--rho-max", "12"});
  REQUIRE(r.code == kSuccess);
  const auto csv = parse_csv(r.out);
  REQUIRE(csv.rows.size() == 40);
  const double m_omega = 2.0 * 0.7 * 2.3;
  const double first = csv.num(0, "B_eff_z_numeric");
  for (std::size_t i = 0; i < csv.rows.size(); ++i) {
    CHECK(std::abs(csv.num(i, "B_eff_z_numeric") - first) < 1e-8);
    CHECK(std::abs(csv.num(i, "B_eff_z_numeric") - m_omega) < 1e-6);
  }
  CHECK(csv.meta.at("electrostatic") == "pass");
}

TEST_CASE("output round-trips at full precision") {
  RunConfig config;
  config.params = SystemParams(1.1, 0.9, 1.3, 0.37);
  const auto result = cmd_spectrum(config);
  std::ostringstream out;
  write_csv(result.table, out);
  const auto csv = parse_csv(out.str());
  REQUIRE(csv.rows.size() == result.table.rows.size());
  for (std::size_t i = 0; i < csv.rows.size(); ++i) {
    for (std::size_t j = 0; j < csv.columns.size(); ++j) {
      const auto& v = result.table.rows[i][j];
      const double parsed = std::strtod(csv.rows[i][j].c_str(), nullptr);
      if (const auto* d = std::get_if<double>(&v)) {
        CHECK(parsed == *d);
      } else {
        CHECK(parsed == static_cast<double>(std::get<long long>(v)));
      }
    }
  }
}

TEST_CASE("json output") {
  const auto r = invoke({"spectrum", "--format", "json", "--n-max", "1", "--l-min", "-1", "--l-max", "1"});
  REQUIRE(r.code == kSuccess);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc.at("meta").at("units") == "hbar=c=1");
  REQUIRE(doc.at("rows").size() == 6);
  for (const auto& row : doc.at("rows")) {
    for (const char* key : {"n", "l", "energy", "page_werner_term", "delta"}) {
      CHECK(row.contains(key));
    }
  }
  CHECK(invoke({"spectrum", "--format", "xml"}).code == kDomainError);
}

TEST_CASE("determinism and file output") {
  const auto dir = std::filesystem::temp_directory_path() / "mqlandau_cli_test";
  std::filesystem::create_directories(dir);
  const auto a = (dir / "a.csv").string();
  const auto b = (dir / "b.csv").string();
  for (const auto& path : {a, b}) {
    REQUIRE(invoke({"verify", "--n-max", "1", "--l-min", "-2", "--l-max", "2", "--grid-points",
                    "400", "--tol", "1e-3", "--out", path})
                .code == kSuccess);
  }
  auto slurp = [](const std::string& p) {
    std::ifstream in(p, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(in), {});
  };
  CHECK(!slurp(a).empty());
  CHECK(slurp(a) == slurp(b));
  std::filesystem::remove_all(dir);
}

TEST_CASE("config file with flag overrides") {
  const auto path = (std::filesystem::temp_directory_path() / "mqlandau_test.cfg").string();
  {
    std::ofstream cfg(path);
    cfg << "mass=2\nquad-moment=1\nlambda=1\nomega-rot=0.25\nn-max=0\nl-min=0\nl-max=0\n";
  }
  auto r = invoke({"spectrum", "--config", path});
  REQUIRE(r.code == kSuccess);
  auto csv = parse_csv(r.out);
  CHECK(csv.meta.at("mass") == "2");
  CHECK(csv.meta.at("omega_rot") == "0.25");
  REQUIRE(csv.rows.size() == 1);

  r = invoke({"spectrum", "--config", path, "--omega-rot", "0", "--l-max", "1"});
  REQUIRE(r.code == kSuccess);
  csv = parse_csv(r.out);
  CHECK(csv.meta.at("omega_rot") == "0");
  CHECK(csv.meta.at("mass") == "2");
  CHECK(csv.rows.size() == 2);
  std::remove(path.c_str());
}

TEST_CASE("usage") {
  const auto help = invoke({"--help"});
  CHECK(help.code == kSuccess);
  CHECK(help.out.find("hbar = c = 1") != std::string::npos);
  CHECK(invoke({}).code == kDomainError);
  CHECK(invoke({"spectrum", "--bogus"}).code == kDomainError);
  CHECK(invoke({"spectrum", "--mass", "-1"}).code == kDomainError);
}
