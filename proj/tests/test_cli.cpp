#include <doctest.h>

#include <json.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cnt/cli.hpp"

using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cnt::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> row;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) row.push_back(cell);
    rows.push_back(row);
  }
  return rows;
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("cntube_test_" + name);
}

}  // namespace

TEST_CASE("classify") {
  const auto r = run({"classify", "--c", "4,-2,-2"});
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j["class"] == "armchair");
  CHECK(j["n"] == 2);
  CHECK(j["R"] == 6);
  CHECK(j["q"] == 4);
  CHECK(j["q_prime"] == 2);
  CHECK(j["b"] == json::array({0, -1, 1}));
  CHECK(j["omega"] == json::array({-1, 0, 1}));
  CHECK(j["c_prime"] == json::array({2, -1, -1}));
  CHECK(j["metallic"] == true);
  CHECK(j["diameter_angstrom"].get<double>() == doctest::Approx(2.7502).epsilon(1e-4));
  for (const char* key : {"c", "delta"}) CHECK(j.contains(key));

  const auto z = json::parse(run({"classify", "--c", "5,0,-5"}).out);
  CHECK(z["class"] == "zigzag");
  CHECK(z["metallic"] == false);
  CHECK(json::parse(run({"classify", "--c", "4,-1,-3"}).out)["class"] == "chiral");

  const auto csv = csv_rows(run({"--format", "csv", "classify", "--c", "5,0,-5"}).out);
  REQUIRE(csv.size() == 2);
  CHECK(csv[0].size() == csv[1].size());
}

TEST_CASE("invalid chirality exits 2 with a hint") {
  const auto r = run({"classify", "--c", "1,1,-2"});
  CHECK(r.code == 2);
  CHECK(r.err.find("2,-1,-1") != std::string::npos);
  CHECK(run({"classify", "--c", "0,0,0"}).code == 2);
  CHECK(run({"classify", "--c", "2,0,-1"}).code == 2);
  CHECK(run({"classify", "--c", "a,b,c"}).code == 2);
  CHECK(run({"classify"}).code == 2);
  CHECK(run({"--gamma", "-1", "gap", "--c", "5,0,-5"}).code == 2);
  CHECK(run({"--resolution", "10", "gap", "--c", "5,0,-5"}).code == 2);
  CHECK(run({"nonsense"}).code == 2);
}

TEST_CASE("bands table") {
  const auto r = run({"--resolution", "64", "bands", "--c", "4,-2,-2"});
  REQUIRE(r.code == 0);
  const auto rows = csv_rows(r.out);
  REQUIRE(rows.size() > 1);
  CHECK(rows[0] == std::vector<std::string>{"m", "kappa", "E_minus", "E_plus"});
  CHECK(rows.size() - 1 >= 2 * 64);
  bool zero = false;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const double em = std::stod(rows[i][2]), ep = std::stod(rows[i][3]);
    CHECK(em == doctest::Approx(-ep));
    CHECK(std::abs(ep) <= 3.0 + 1e-12);
    zero = zero || std::abs(ep) < 1e-12;
  }
  CHECK(zero);

  const auto zz = csv_rows(run({"--resolution", "64", "bands", "--c", "5,0,-5"}).out);
  CHECK(zz.size() == 1 + 5 * 64);
  const auto js = json::parse(run({"--resolution", "64", "--format", "json", "bands", "--c", "5,0,-5"}).out);
  CHECK(js.is_array());
}

TEST_CASE("gap") {
  const auto z = json::parse(run({"gap", "--c", "5,0,-5"}).out);
  CHECK(z["gap"].get<double>() == doctest::Approx(0.7639320225002102).epsilon(1e-6));
  CHECK(z["metallic_by_theorem"] == false);
  const auto a = json::parse(run({"gap", "--c", "4,-2,-2"}).out);
  CHECK(a["gap"].get<double>() < 1e-9);
  const auto g2 = json::parse(run({"--gamma", "2", "gap", "--c", "5,0,-5"}).out);
  CHECK(g2["gap"].get<double>() == doctest::Approx(2 * 0.7639320225002102).epsilon(1e-6));
  const auto mag = json::parse(run({"--beta", "0.01", "gap", "--c", "4,-2,-2"}).out);
  CHECK(mag["gap"].get<double>() > 1e-3);
  CHECK(mag["beta"].get<double>() == 0.01);
}

TEST_CASE("magsweep") {
  const auto r = run({"--resolution", "256", "magsweep", "--c", "4,-2,-2", "--samples", "9"});
  REQUIRE(r.code == 0);
  const auto rows = csv_rows(r.out);
  REQUIRE(rows.size() == 1 + 9);
  CHECK(rows[0] == std::vector<std::string>{"beta", "gap"});
  CHECK(std::stod(rows[1][1]) == doctest::Approx(std::stod(rows.back()[1])).scale(1.0).epsilon(1e-8));
  for (std::size_t i = 1; i < rows.size(); ++i) CHECK(std::stod(rows[i][1]) >= 0.0);
  CHECK(std::stod(rows[5][1]) > 1e-3);

  const auto two = csv_rows(run({"--resolution", "64", "magsweep", "--c", "4,-2,-2", "--samples", "5",
                                 "--periods", "2"})
                                .out);
  CHECK(two.size() == 1 + 9);
}

TEST_CASE("graphene path") {
  const auto r = run({"graphene-path", "--samples", "31"});
  REQUIRE(r.code == 0);
  const auto rows = csv_rows(r.out);
  REQUIRE(rows.size() == 32);
  CHECK(rows[0] == std::vector<std::string>{"arclength", "k0", "k1", "k2", "E_minus", "E_plus"});
  CHECK(std::stod(rows[1][5]) == doctest::Approx(3.0));
  CHECK(std::stod(rows.back()[5]) == doctest::Approx(3.0));
  double prev = -1;
  bool hit_zero = false, hit_one = false;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const double s = std::stod(rows[i][0]);
    CHECK(s > prev);
    prev = s;
    const double e = std::stod(rows[i][5]);
    hit_zero = hit_zero || std::abs(e) < 1e-12;
    hit_one = hit_one || std::abs(e - 1.0) < 1e-12;
  }
  CHECK(hit_zero);
  CHECK(hit_one);
  CHECK(run({"graphene-path", "--path", "G-X"}).code == 2);
}

TEST_CASE("verify") {
  const auto r = run({"verify", "--c", "4,-2,-2", "--periods", "6"});
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j["dimension"] == 48);
  CHECK(j["pass"] == true);
  CHECK(j["max_deviation"].get<double>() < 1e-8);

  const auto ch = json::parse(run({"verify", "--c", "4,-1,-3", "--periods", "4"}).out);
  CHECK(ch["dimension"] == 208);
  CHECK(ch["pass"] == true);

  const auto mag = run({"--beta", "0.02", "verify", "--c", "5,0,-5", "--periods", "2", "--spectra"});
  CHECK(mag.code == 0);
  const auto mj = json::parse(mag.out);
  CHECK(mj["finite"].size() == 40);
  CHECK(mj["analytic"].size() == 40);
}

TEST_CASE("neighbors") {
  const auto j = json::parse(run({"neighbors", "--v", "0,1,0"}).out);
  CHECK(j["nu"] == -1);
  CHECK(j["nearest"] == json::array({json::array({-1, 1, 0}), json::array({0, 0, 0}), json::array({0, 1, -1})}));
  CHECK(j["next_nearest"].size() == 6);
  const auto t = json::parse(run({"neighbors", "--v", "5,-2,-2", "--c", "4,-2,-2"}).out);
  CHECK(t["class_rep"] == json::array({1, 0, 0}));
  CHECK(run({"neighbors", "--v", "1,1,0"}).code == 2);
}

TEST_CASE("config file, overrides and output file") {
  const auto cfg = temp_path("config.json");
  {
    std::ofstream f(cfg);
    f << R"({"gamma": 2.0, "resolution": 128})";
  }
  const auto from_file = json::parse(run({"--config", cfg.string(), "gap", "--c", "5,0,-5"}).out);
  CHECK(from_file["gap"].get<double>() == doctest::Approx(2 * 0.7639320225002102).epsilon(1e-6));
  const auto overridden =
      json::parse(run({"--config", cfg.string(), "--gamma", "1", "gap", "--c", "5,0,-5"}).out);
  CHECK(overridden["gap"].get<double>() == doctest::Approx(0.7639320225002102).epsilon(1e-6));

  {
    std::ofstream f(cfg);
    f << R"({"gama": 2.0})";
  }
  CHECK(run({"--config", cfg.string(), "gap", "--c", "5,0,-5"}).code == 2);
  CHECK(run({"--config", temp_path("missing.json").string(), "gap", "--c", "5,0,-5"}).code == 2);

  const auto out = temp_path("out.json");
  CHECK(run({"--out", out.string(), "classify", "--c", "5,0,-5"}).code == 0);
  std::ifstream in(out);
  CHECK(json::parse(in)["n"] == 5);
  std::filesystem::remove(cfg);
  std::filesystem::remove(out);

  CHECK(run({"--out", "/nonexistent-dir/x.csv", "classify", "--c", "5,0,-5"}).code == 3);
}

TEST_CASE("output is deterministic") {
  const std::vector<std::string> args{"--resolution", "200", "bands", "--c", "7,-2,-5"};
  CHECK(run(args).out == run(args).out);
  const std::vector<std::string> gap{"gap", "--c", "7,-2,-5"};
  CHECK(run(gap).out == run(gap).out);
}
