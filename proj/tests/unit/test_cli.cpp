#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <doctest.h>
#include <json.hpp>

#include "cesaro/cli.hpp"

using namespace cesaro;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "cesaro");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> fields;
    std::istringstream ls(line);
    std::string f;
    while (std::getline(ls, f, ',')) fields.push_back(f);
    rows.push_back(fields);
  }
  return rows;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("cesaro_cli_test_" + name);
  std::filesystem::remove_all(dir);
  return dir;
}

const std::string kData = CESARO_TEST_DATA;

}  // namespace

TEST_CASE("moments command") {
  const Run leb = run({"moments", "--measure", "lebesgue", "--n-max", "8"});
  REQUIRE(leb.code == 0);
  const auto rows = csv_rows(leb.out);
  REQUIRE(rows.size() == 5);
  CHECK(rows[0] == std::vector<std::string>{"n", "moment", "moment_by_parts", "abs_diff"});
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const double n = std::stod(rows[i][0]);
    CHECK(n == std::ldexp(1.0, static_cast<int>(i) - 1));
    CHECK(std::stod(rows[i][1]) == doctest::Approx(1.0 / (n + 1.0)).epsilon(1e-13));
  }

  const Run atom = run({"moments", "--measure", "atom(0.5,1.0)", "--n-max", "1024"});
  REQUIRE(atom.code == 0);
  for (const auto& row : csv_rows(atom.out)) {
    if (row[0] == "n") continue;
    const double n = std::stod(row[0]);
    // strtod, unlike stod, accepts the subnormal moments near n = 1024
    CHECK(std::strtod(row[1].c_str(), nullptr) == doctest::Approx(std::pow(0.5, n)).epsilon(1e-14));
    CHECK(std::strtod(row[3].c_str(), nullptr) < 1e-7);
  }

  const Run mix = run({"moments", "--measure", "atom(0.9,0.5) + powlaw(c=2,gamma=0.2,delta=0.5)", "--n-max", "65536"});
  REQUIRE(mix.code == 0);
  for (const auto& row : csv_rows(mix.out))
    if (row[0] != "n") CHECK(std::stod(row[3]) < 1e-7);
}

TEST_CASE("parse errors exit with code 2") {
  const Run bad = run({"moments", "--measure", "atom(1.0,1.0)"});
  CHECK(bad.code == 2);
  CHECK(bad.out.empty());
  CHECK(bad.err.find("atom location") != std::string::npos);
  CHECK(run({"moments", "--measure", "atom(0.5"}).code == 2);
  CHECK(run({"moments"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"norm-growth", "--measure", "lebesgue", "--format", "xml"}).code == 2);
  CHECK(run({"norm-growth", "--measure", "lebesgue", "--sizes", "64,32"}).code == 2);
  CHECK(run({"norm-growth", "--measure", "lebesgue", "--tol", "abc"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("norm-growth command") {
  const Run leb = run({"norm-growth", "--measure", "lebesgue", "--alpha", "1", "--beta", "1", "--sizes",
                       "64,128,256,512,1024,2048,4096", "--tol", "1e-12"});
  REQUIRE(leb.code == 0);
  auto rows = csv_rows(leb.out);
  REQUIRE(rows.size() == 8);
  CHECK(rows[0] == std::vector<std::string>{"N", "norm", "method", "iterations", "residual"});
  CHECK(std::stod(rows.back()[1]) <= std::sqrt(6.0));
  CHECK(rows[4][2] == "dense_svd");
  CHECK(rows[5][2] == "power_iteration");

  const Run grow = run({"norm-growth", "--measure", "lebesgue", "--alpha", "1.5", "--beta", "0.5", "--sizes",
                        "64,128,256,512,1024,2048,4096"});
  rows = csv_rows(grow.out);
  for (std::size_t i = 2; i < rows.size(); ++i) CHECK(std::stod(rows[i][1]) > std::stod(rows[i - 1][1]));

  const Run flat = run({"norm-growth", "--measure", "atom(0.5,1)", "--sizes", "1024,2048,4096"});
  rows = csv_rows(flat.out);
  CHECK(std::stod(rows[3][1]) == doctest::Approx(std::stod(rows[2][1])).epsilon(1e-10));

  const Run js = run({"norm-growth", "--measure", "lebesgue", "--sizes", "4,8", "--format", "json"});
  REQUIRE(js.code == 0);
  const auto doc = nlohmann::json::parse(js.out);
  CHECK(doc["profile"].size() == 2);
  CHECK(doc["profile"][1]["N"] == 8);
  CHECK(doc["measure"] == "powlaw(c=1,gamma=0,delta=0)");
}

TEST_CASE("norm-growth writes files byte-identically") {
  const auto dir = scratch("growth");
  std::filesystem::create_directories(dir);
  const auto a = (dir / "a.csv").string();
  const auto b = (dir / "b.csv").string();
  const std::vector<std::string> common = {"norm-growth", "--measure", "atom(0.9,0.5) + lebesgue", "--alpha", "0.8",
                                           "--beta", "1.2", "--sizes", "100,1000,5000"};
  auto args_a = common;
  args_a.insert(args_a.end(), {"--out", a});
  auto args_b = common;
  args_b.insert(args_b.end(), {"--out", b});
  REQUIRE(run(args_a).code == 0);
  REQUIRE(run(args_b).code == 0);
  CHECK(slurp(a) == slurp(b));
  CHECK_FALSE(slurp(a).empty());
}

TEST_CASE("verify exit codes") {
  const auto bad_dir = scratch("bad");
  const Run bad = run({"verify", "--config", kData + "/bad_pair.ini", "--out", bad_dir.string()});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("(2.5, 1)") != std::string::npos);
  CHECK(run({"verify", "--config", kData + "/missing.ini", "--out", bad_dir.string()}).code == 2);

  const auto fake_dir = scratch("fake");
  const Run fake = run({"verify", "--config", kData + "/mismatched_tables.ini", "--out", fake_dir.string()});
  CHECK(fake.code == 1);
  CHECK(fake.err.find("disagreement: mismatched") != std::string::npos);
  const auto doc = nlohmann::json::parse(slurp(fake_dir / "report.json"));
  CHECK(doc["summary"]["all_agree"] == false);
  CHECK(doc["entries"][0]["agreement"]["boundedness"] == false);

  const auto small_dir = scratch("small");
  const Run small = run({"verify", "--config", kData + "/small_panel.ini", "--out", small_dir.string()});
  CHECK(small.code == 0);
  const std::string first = slurp(small_dir / "report.json");
  const std::string first_csv = slurp(small_dir / "report.csv");
  REQUIRE(run({"verify", "--config", kData + "/small_panel.ini", "--out", small_dir.string()}).code == 0);
  CHECK(slurp(small_dir / "report.json") == first);
  CHECK(slurp(small_dir / "report.csv") == first_csv);
}

TEST_CASE("classify and estimates commands") {
  const Run c = run({"classify", "--measure", "lebesgue", "--alpha", "1", "--beta", "1"});
  REQUIRE(c.code == 0);
  const auto doc = nlohmann::json::parse(c.out);
  CHECK(doc["entries"][0]["verdicts"]["norm"] == "bounded");

  const Run e = run({"estimates", "--size", "512"});
  REQUIRE(e.code == 0);
  for (const auto& row : csv_rows(e.out))
    if (row[0].find("violations") != std::string::npos) CHECK(row[3] == "0");
}
