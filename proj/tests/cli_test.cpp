#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "piradiance/cli_runner.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = piradiance::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path temp_file(const std::string& name, const std::string& contents) {
  const fs::path p = fs::temp_directory_path() / ("piradiance_cli_test_" + name);
  std::ofstream(p, std::ios::binary) << contents;
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

int tool_exit_code(const std::string& args) {
  const std::string cmd = std::string(PIRADIANCE_TOOL_PATH) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

}  // namespace

TEST(CliDerive, RayleighJeansText) {
  const Result r = run({"derive", "--preset", "rayleigh-jeans"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("rank = 4, p = 1"), std::string::npos);
  EXPECT_NE(r.out.find("π₁ = U c³ / (ν² T k)"), std::string::npos);
  EXPECT_NE(r.out.find("(1, -2, -1, 3, -1)"), std::string::npos);
}

TEST(CliDerive, GeneralizedJson) {
  const Result r = run({"derive", "--preset", "generalized", "--N=-1", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = nlohmann::ordered_json::parse(r.out);
  EXPECT_EQ(doc.begin().key(), "schema");
  EXPECT_EQ(doc["schema"], 1);
  EXPECT_EQ(doc["num_invariants"], 2);
  EXPECT_EQ(doc["invariants"][0]["powers"], nlohmann::ordered_json({"1", "-3", "0", "3", "0", "-1"}));
  EXPECT_EQ(doc["invariants"][1]["formula"], "ν η / (T k)");
}

TEST(CliDerive, JeansIncludesFailureNote) {
  const Result r = run({"derive", "--preset", "jeans", "--json"});
  ASSERT_EQ(r.code, 0);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["rank"], 5);
  EXPECT_EQ(doc["jeans_check"]["functional_vanishes"], true);
  EXPECT_EQ(doc["jeans_check"]["forced_lambda_exponent"], "2");
  EXPECT_EQ(doc["jeans_check"]["displacement_law_reachable"], false);
  const Result text = run({"derive", "--preset", "jeans"});
  EXPECT_NE(text.out.find("No choice of invariants"), std::string::npos);
}

TEST(CliDerive, ScenarioFileWithAndWithoutPins) {
  const std::string base = R"({"basis":["L","Θ","T","M"],"quantities":[
    {"name":"U","dim":"L^-1 T^-1 M"},{"name":"nu","dim":"T^-1","symbol":"ν"},
    {"name":"T","dim":"Θ"},{"name":"c","dim":"L T^-1"},{"name":"k","dim":"L^2 Θ^-1 T^-2 M"}])";
  const auto pinned = temp_file("pinned.json", base + R"(,"pins":[{"invariant":1,"quantity":"U","value":"2"}]})");
  const Result a = run({"derive", "--input", pinned.string(), "--json"});
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(nlohmann::json::parse(a.out)["invariants"][0]["powers"],
            nlohmann::json({"2", "-4", "-2", "6", "-2"}));
  const auto bare = temp_file("bare.json", base + "}");
  const Result b = run({"derive", "--input", bare.string(), "--json"});
  ASSERT_EQ(b.code, 0) << b.err;
  EXPECT_EQ(nlohmann::json::parse(b.out)["invariants"][0]["powers"], nlohmann::json({"-1", "2", "1", "-3", "1"}));
}

TEST(CliDerive, ExitCodes) {
  EXPECT_EQ(run({"derive", "--preset", "nope"}).code, 2);
  EXPECT_EQ(run({"derive", "--preset", "generalized", "--N", "x/y"}).code, 2);
  EXPECT_EQ(run({"derive", "--bogus"}).code, 2);
  const auto broken = temp_file("broken.json", "{\"basis\": [");
  EXPECT_EQ(run({"derive", "--input", broken.string()}).code, 2);
  const auto bad_dim = temp_file("bad_dim.json", R"({"basis":["L"],"quantities":[{"name":"a","dim":"Q"}]})");
  EXPECT_EQ(run({"derive", "--input", bad_dim.string()}).code, 2);
  // Pinning T and k leaves no unpinned column carrying temperature.
  const auto singular = temp_file("singular.json", R"({"basis":["L","Θ","T","M"],"quantities":[
    {"name":"U","dim":"L^-1 T^-1 M"},{"name":"nu","dim":"T^-1"},{"name":"T","dim":"Θ"},
    {"name":"c","dim":"L T^-1"},{"name":"k","dim":"L^2 Θ^-1 T^-2 M"},{"name":"eta","dim":"L^2 T^-1 M"}],
    "pins":[{"invariant":1,"quantity":"T","value":1},{"invariant":1,"quantity":"k","value":0},
            {"invariant":2,"quantity":"U","value":1},{"invariant":2,"quantity":"eta","value":0}]})");
  EXPECT_EQ(run({"derive", "--input", singular.string()}).code, 3);
  EXPECT_EQ(run({}).code, 2);
}

TEST(CliSpectrum, DefaultGridCsv) {
  const Result r = run({"spectrum", "--preset", "planck"});
  ASSERT_EQ(r.code, 0);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "nu_over_T,U_over_T3");
  int rows = 0;
  double best = -1.0, best_x = 0.0;
  while (std::getline(in, line)) {
    ++rows;
    const auto comma = line.find(',');
    const double x = std::stod(line.substr(0, comma));
    const double u = std::stod(line.substr(comma + 1));
    EXPECT_TRUE(std::isfinite(u));
    if (u > best) {
      best = u;
      best_x = x;
    }
  }
  EXPECT_EQ(rows, 512);
  EXPECT_NEAR(best_x / 5.8787e10, 1.0, 0.01);
  EXPECT_EQ(r.out.find('\r'), std::string::npos);
}

TEST(CliSpectrum, GridAndOutputFile) {
  const fs::path out = fs::temp_directory_path() / "piradiance_cli_test_spectrum.csv";
  const Result r = run({"spectrum", "--preset", "rayleigh-jeans", "--grid", "1e9:1e11:7", "--output", out.string()});
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  const std::string csv = slurp(out);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 8);
}

TEST(CliSpectrum, LawScenarioFile) {
  const auto file = temp_file("law.json", R"({"law":"wien-paschen","k":1.3806e-23,"eta":6.6262e-34,"grid":"1e10:1e11:3"})");
  const Result r = run({"spectrum", "--input", file.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 4);
}

TEST(CliSpectrum, ExitCodes) {
  EXPECT_EQ(run({"spectrum", "--preset", "wien"}).code, 4);
  EXPECT_EQ(run({"spectrum", "--grid", "1:2"}).code, 2);
  EXPECT_EQ(run({"spectrum", "--grid", "2:1:5"}).code, 2);
  const auto bad = temp_file("badlaw.json", R"({"law":"nobody"})");
  EXPECT_EQ(run({"spectrum", "--input", bad.string()}).code, 4);
}

TEST(CliCriteria, Matrix) {
  const auto get = [](const char* law) {
    const Result r = run({"criteria", "--preset", law, "--json"});
    EXPECT_EQ(r.code, 0);
    return nlohmann::json::parse(r.out);
  };
  const auto planck = get("planck");
  EXPECT_EQ(planck["red"]["pass"], true);
  EXPECT_EQ(planck["strengthened_violet"]["pass"], true);
  EXPECT_EQ(planck["extreme"]["kind"], "maximum");
  EXPECT_EQ(get("wien-paschen")["red"]["pass"], false);
  const auto rj = get("rayleigh-jeans");
  EXPECT_EQ(rj["violet"]["pass"], false);
  EXPECT_EQ(rj["energy_integral"]["classification"], "divergent");
  EXPECT_TRUE(rj["energy_integral"]["value"].is_null());
}

TEST(CliCriteria, ToleranceFromEnvironment) {
  ::setenv("PIRADIANCE_TOL", "garbage", 1);
  EXPECT_EQ(run({"criteria", "--preset", "planck"}).code, 2);
  ::setenv("PIRADIANCE_TOL", "1e-6", 1);
  EXPECT_EQ(run({"criteria", "--preset", "planck"}).code, 0);
  ::unsetenv("PIRADIANCE_TOL");
}

TEST(CliTable1, PassesAndReportsJson) {
  const Result r = run({"table1", "--json"});
  ASSERT_EQ(r.code, 0);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["pass"], true);
  EXPECT_EQ(doc["rows"].size(), 4u);
  const Result text = run({"table1"});
  EXPECT_NE(text.out.find("overall: pass"), std::string::npos);
}

TEST(CliTable1, PerturbedInputsFail) {
  const auto file = temp_file("fit.json", R"({"sigma": 5.95308e-8})");
  const Result r = run({"table1", "--input", file.string(), "--json"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(nlohmann::json::parse(r.out)["pass"], false);
}

TEST(CliJeansCheck, Text) {
  const Result r = run({"jeans-check"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("rank = 5, p = 3"), std::string::npos);
  EXPECT_NE(r.out.find("forced to 2"), std::string::npos);
}

TEST(CliDeterminism, RepeatedRunsAreByteIdentical) {
  const std::vector<std::vector<std::string>> commands = {
      {"derive", "--preset", "jeans", "--json"},
      {"spectrum", "--preset", "thiesen"},
      {"criteria", "--preset", "planck", "--json"},
      {"table1", "--json"},
  };
  for (const auto& cmd : commands) {
    EXPECT_EQ(run(cmd).out, run(cmd).out);
  }
}

TEST(CliBinary, ExitCodeContract) {
  EXPECT_EQ(tool_exit_code("derive --preset rayleigh-jeans"), 0);
  EXPECT_EQ(tool_exit_code("derive --preset missing"), 2);
  EXPECT_EQ(tool_exit_code("spectrum --preset missing"), 4);
  EXPECT_EQ(tool_exit_code("--help"), 0);
}
