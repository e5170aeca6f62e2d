#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli.hpp"
#include "heatpade/disk_exact.hpp"
#include "heatpade/heat_content.hpp"
#include "heatpade/pade.hpp"

using namespace heatpade;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "heatpade");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

struct Csv {
  std::vector<std::string> comments;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  double num(std::size_t row, const std::string& col) const {
    for (std::size_t i = 0; i < header.size(); ++i)
      if (header[i] == col) return std::stod(rows.at(row).at(i));
    FAIL("missing column " << col);
    return 0.0;
  }
};

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> cells;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

Csv parse_csv(const std::string& text) {
  Csv csv;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      csv.comments.push_back(line);
    } else if (csv.header.empty()) {
      csv.header = split(line);
    } else {
      csv.rows.push_back(split(line));
    }
  }
  return csv;
}

std::string tmp_path(const std::string& name) {
  return (std::filesystem::path(HEATPADE_TEST_TMPDIR) / name).string();
}

std::string write_shape(const std::string& name, const json& j) {
  const auto path = tmp_path(name);
  std::ofstream(path) << j.dump();
  return path;
}

}  // namespace

TEST_CASE("table1 reproduces the first rows") {
  const auto r = run_cli({"table1", "--n-max", "4"});
  REQUIRE(r.code == 0);
  const auto csv = parse_csv(r.out);
  REQUIRE(csv.rows.size() == 5);
  CHECK(csv.rows[0][0] == "[1/3]");
  CHECK(csv.num(0, "d0") == doctest::Approx(0.1743).epsilon(0.01));
  CHECK(csv.num(0, "d2") == doctest::Approx(-0.07472).epsilon(0.01));
  CHECK(csv.num(0, "d4") == doctest::Approx(0.008383).epsilon(0.01));
  CHECK(csv.num(0, "d6") == doctest::Approx(-0.00004709).epsilon(0.01));
  CHECK(csv.num(0, "im") == doctest::Approx(1.756).epsilon(0.01));
  CHECK(csv.num(3, "im") == doctest::Approx(2.178).epsilon(0.01));
  CHECK(csv.rows[4][0] == "exact");
  CHECK(csv.num(4, "d0") == 0.125);
  CHECK(csv.num(4, "im") == doctest::Approx(2.404826).epsilon(1e-6));

  CHECK(csv.comments.front().rfind("# heatpade ", 0) == 0);
  CHECK(std::find(csv.comments.begin(), csv.comments.end(), "# subcommand: table1") != csv.comments.end());
  CHECK(run_cli({"table1", "--n-max", "4"}).out == r.out);
}

TEST_CASE("sweep at zero eccentricity equals the disk") {
  const auto sweep = run_cli({"sweep", "--eps", "0", "--n", "4"});
  REQUIRE(sweep.code == 0);
  const auto csv = parse_csv(sweep.out);
  REQUIRE(csv.rows.size() == 1);

  const auto disk = run_cli({"lambda1", "--shape", R"({"kind":"disk","R":1})", "--n-max", "4"});
  REQUIRE(disk.code == 0);
  const auto dcsv = parse_csv(disk.out);
  CHECK(csv.num(0, "lambda1") == doctest::Approx(dcsv.num(3, "lambda1")).epsilon(1e-10));
  CHECK(dcsv.num(3, "lambda1") == doctest::Approx(2.178 * 2.178).epsilon(2e-3));
}

TEST_CASE("sweep modes agree at moderate eccentricity") {
  const auto cur = parse_csv(run_cli({"sweep", "--eps", "0.5", "--n", "3,4", "--mode", "curvature"}).out);
  const auto sav = parse_csv(run_cli({"sweep", "--eps", "0.5", "--n", "3,4", "--mode", "savo"}).out);
  REQUIRE(cur.rows.size() == 2);
  REQUIRE(sav.rows.size() == 2);
  for (std::size_t i = 0; i < 2; ++i) {
    CHECK(cur.num(i, "n") == sav.num(i, "n"));
    CHECK(std::abs(cur.num(i, "lambda1") - sav.num(i, "lambda1")) < 0.01 * cur.num(i, "lambda1"));
  }
}

TEST_CASE("sweep rows are sorted and decrease with eccentricity") {
  const auto csv = parse_csv(run_cli({"sweep", "--eps", "0.6,0.2,0.4", "--n", "4,3"}).out);
  REQUIRE(csv.rows.size() == 6);
  CHECK(csv.num(0, "eps") == 0.2);
  CHECK(csv.num(0, "n") == 3);
  CHECK(csv.num(1, "n") == 4);
  for (std::size_t i = 3; i < 6; i += 2) CHECK(csv.num(i, "lambda1") < csv.num(i - 2, "lambda1"));
}

TEST_CASE("pade writes a solution record") {
  const auto shape = write_shape("disk.json", {{"kind", "disk"}, {"R", 1.0}});
  const auto out = tmp_path("sol.json");
  const auto r = run_cli({"pade", "--shape", shape, "--n", "4", "--seed", "42", "--out", out});
  REQUIRE(r.code == 0);
  CHECK(r.out.empty());
  json j;
  std::ifstream(out) >> j;
  CHECK(j["n"] == 4);
  CHECK(j["p"].size() == 4);
  CHECK(j["q"].size() == 6);
  CHECK(j["residual_norm"].get<double>() < 1e-10);
  CHECK(j["poles"].size() == 6);
  CHECK(j["closest_pole"][1].get<double>() == doctest::Approx(2.178).epsilon(0.01));
  CHECK(j["lambda1"].get<double>() == doctest::Approx(std::pow(j["closest_pole"][1].get<double>(), 2)));
  CHECK(j["d"].size() == 4);
  CHECK(j["physical"] == true);
  CHECK(j["manifest"]["subcommand"] == "pade");
  CHECK(j["manifest"]["shape_file"] == shape);
  CHECK(j["manifest"]["seed"] == "42");
  CHECK(j["manifest"].contains("version"));
}

TEST_CASE("coefficient, survival and transform tables") {
  const std::string disk = R"({"kind":"disk","R":1})";
  const auto coeffs = parse_csv(run_cli({"coeffs", "--shape", disk, "--order", "7"}).out);
  REQUIRE(coeffs.rows.size() == 7);
  CHECK(coeffs.num(0, "sigma_curvature") == doctest::Approx(-4.0 / std::sqrt(M_PI)).epsilon(1e-13));
  CHECK(coeffs.num(1, "c_curvature") == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(coeffs.num(5, "sigma_exact") == doctest::Approx(coeffs.num(5, "sigma_curvature")).epsilon(1e-12));
  CHECK(coeffs.rows[6][2].empty());

  const auto surv = parse_csv(run_cli({"survival", "--shape", disk, "--times", "0,0.1"}).out);
  CHECK(surv.num(0, "S") == 1.0);
  CHECK(surv.num(1, "S") == doctest::Approx(survival_disk(0.1, 1.0)).epsilon(1e-13));

  const auto ell = R"({"kind":"ellipse","b":1,"eps":0.3})";
  const auto exp = parse_csv(run_cli({"survival", "--shape", ell, "--times", "0.01", "--order", "3"}).out);
  const auto e = small_time_expansion(BoundaryCurve::ellipse(1.0, 0.3), 3, SeriesMode::CurvatureApprox);
  CHECK(exp.num(0, "S") == doctest::Approx(small_time_survival(e, 0.01, 3)).epsilon(1e-13));

  const auto tau = parse_csv(run_cli({"tau", "--shape", disk, "--s", "0.5,3"}).out);
  CHECK(tau.num(1, "tau") == doctest::Approx(tau_disk(3.0, 1.0)).epsilon(1e-13));
  const auto tser = parse_csv(run_cli({"tau", "--shape", disk, "--method", "series", "--s", "40"}).out);
  CHECK(tser.num(0, "tau") == doctest::Approx(tau_disk(40.0, 1.0)).epsilon(1e-9));

  const auto lam = parse_csv(run_cli({"lambda1", "--shape", disk, "--n-max", "3"}).out);
  REQUIRE(lam.rows.size() == 3);
  CHECK(lam.num(2, "im") == doctest::Approx(2.074).epsilon(0.01));
  CHECK(lam.num(2, "re") < 0.0);
}

TEST_CASE("mc output is reproducible") {
  const std::vector<std::string> args{"mc", "--shape", R"({"kind":"disk","R":1})", "--walkers", "500",
                                      "--dt", "1e-3", "--times", "0,0.05,0.1", "--seed", "7"};
  const auto a = run_cli(args);
  REQUIRE(a.code == 0);
  CHECK(a.out == run_cli(args).out);
  const auto csv = parse_csv(a.out);
  REQUIRE(csv.rows.size() == 3);
  CHECK(csv.num(0, "S") == 1.0);
  CHECK(csv.num(2, "S") <= csv.num(1, "S"));
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run_cli({}).code == 2);
  CHECK(run_cli({"frobnicate"}).code == 2);
  CHECK(run_cli({"pade"}).code == 2);
  CHECK(run_cli({"pade", "--shape", "x.json", "--mode", "exotic"}).code == 2);
  CHECK(run_cli({"table1", "--n-max", "zero"}).code == 2);
  CHECK(run_cli({"table1", "--n-max", "-1"}).code == 2);
  CHECK(run_cli({"--help"}).code == 0);
}

TEST_CASE("numeric failures exit with 1 and a JSON record") {
  const auto record = [](const Result& r) {
    REQUIRE(r.code == 1);
    return json::parse(r.err);
  };
  CHECK(record(run_cli({"coeffs", "--shape", tmp_path("missing.json")}))["error"] == "InvalidArgument");
  CHECK(record(run_cli({"coeffs", "--shape", R"({"kind":"disk","R":-1})"}))["error"] == "InvalidShape");
  CHECK(record(run_cli({"coeffs", "--shape", "{not json"}))["error"] == "InvalidShape");
  CHECK(record(run_cli({"pade", "--shape", R"({"kind":"disk","R":1})", "--n", "6", "--mode", "savo"}))["error"] ==
        "UnsupportedOrder");
  const auto none = record(run_cli({"pade", "--shape", R"({"kind":"disk","R":1})", "--n", "1", "--multistarts", "0"}));
  CHECK(none["error"] == "NoSolutionFound");
  CHECK(none.contains("message"));
  CHECK(record(run_cli({"survival", "--shape", R"({"kind":"ellipse","b":1,"eps":0.2})", "--method", "exact"}))["error"] ==
        "InvalidArgument");
}
