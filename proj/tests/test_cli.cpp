#include <doctest.h>

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include <sys/wait.h>

// QES_CLI_PATH is injected by the build as the absolute path of the binary.

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run(const std::string& args) {
  RunResult result;
  const std::string command = std::string(QES_CLI_PATH) + " " + args;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return result;
  char buf[4096];
  size_t got = 0;
  while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) result.output.append(buf, got);
  const int status = pclose(pipe);
  if (WIFEXITED(status)) result.exit_code = WEXITSTATUS(status);
  return result;
}

RunResult run_with_prefix(const std::string& prefix, const std::string& args) {
  RunResult result;
  const std::string command = prefix + " " + std::string(QES_CLI_PATH) + " " + args;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return result;
  char buf[4096];
  size_t got = 0;
  while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) result.output.append(buf, got);
  const int status = pclose(pipe);
  if (WIFEXITED(status)) result.exit_code = WEXITSTATUS(status);
  return result;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  size_t start = 0;
  while (start < text.size()) {
    size_t end = text.find('\n', start);
    if (end == std::string::npos) end = text.size();
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return lines;
}

}  // namespace

TEST_CASE("solve emits well-formed json") {
  auto res = run("solve --N 2 --parity even 2>/dev/null");
  REQUIRE(res.exit_code == 0);
  const auto doc = nlohmann::json::parse(res.output);
  CHECK(doc.at("tool") == "qes");
  CHECK(doc.at("command") == "solve");
  CHECK(doc.at("energy") == 5);
  CHECK(doc.at("digits") == 12);
  REQUIRE(doc.at("solution_count") == 2);
  const auto& sols = doc.at("solutions");
  const double d1 = sols.at(1).at("d").get<double>();
  CHECK(std::abs(d1 - 1.5811388300841897) < 1e-11);
  CHECK(sols.at(0).at("well_type") == "single_well");
  CHECK(sols.at(1).at("well_type") == "double_well");
  CHECK(sols.at(0).at("nodes") == 0);
  CHECK(sols.at(1).at("nodes") == 4);
  REQUIRE(sols.at(1).at("coefficients").size() == 3);
  // the printed bracket encloses the printed value
  const double lo = std::stod(sols.at(1).at("bracket").at(0).get<std::string>());
  const double hi = std::stod(sols.at(1).at("bracket").at(1).get<std::string>());
  CHECK(lo <= d1);
  CHECK(d1 <= hi);
}

TEST_CASE("solve output is byte-identical across runs") {
  auto first = run("solve --N 5 --parity odd 2>/dev/null");
  auto second = run("solve --N 5 --parity odd 2>/dev/null");
  REQUIRE(first.exit_code == 0);
  REQUIRE(second.exit_code == 0);
  CHECK(first.output == second.output);
}

TEST_CASE("solve csv carries one row per shift") {
  auto res = run("solve --N 2 --parity even --format csv 2>/dev/null");
  REQUIRE(res.exit_code == 0);
  const auto lines = lines_of(res.output);
  REQUIRE(lines.size() == 3);
  CHECK(lines[0] ==
        "N,parity,energy,d,bracket_lo,bracket_hi,well_type,nodes,coefficients");
  CHECK(lines[1].substr(0, 15) == "2,even,5,-1.581");
  CHECK(lines[2].find("double_well") != std::string::npos);
  // coefficients ride in one ';'-joined field
  CHECK(lines[1].find(';') != std::string::npos);
}

TEST_CASE("solve with verification embeds the numeric check") {
  auto res = run("solve --N 1 --parity even --verify 2>/dev/null");
  REQUIRE(res.exit_code == 0);
  const auto doc = nlohmann::json::parse(res.output);
  const auto& check = doc.at("solutions").at(0).at("numeric_check");
  CHECK(check.at("index_matches_nodes") == true);
  CHECK(check.at("eigenindex") == 0);
  CHECK(check.at("node_count") == 0);
  CHECK(std::abs(check.at("nearest_eigenvalue").get<double>() - 3.0) < 5e-3);
  CHECK(check.at("gap").get<double>() < 5e-3);
}

TEST_CASE("tables passes its golden rows") {
  auto res = run("tables --N-max 5 2>/dev/null");
  REQUIRE(res.exit_code == 0);
  CHECK(res.output.find("2d^2 - 5") != std::string::npos);
  CHECK(res.output.find("4d^6 - 40d^4 + 75d^2 - 15") != std::string::npos);
  CHECK(res.output.find("golden rows checked: 8, mismatches: 0") != std::string::npos);
}

TEST_CASE("tables fails on a corrupted golden file") {
  {
    std::ofstream out("/tmp/qes_cli_corrupt_golden.json");
    out << "{ this is not json";
  }
  auto res = run("tables --golden /tmp/qes_cli_corrupt_golden.json 2>/dev/null");
  CHECK(res.exit_code == 1);
}

TEST_CASE("tables fails on golden rows that contradict the computation") {
  {
    std::ofstream out("/tmp/qes_cli_wrong_golden.json");
    out << R"({"tables":[{"N":2,"parity":"even","variable":"d",)"
        << R"("coefficients":[-7,0,2],"stripped_power":1}]})";
  }
  auto res = run("tables --N-max 3 --golden /tmp/qes_cli_wrong_golden.json 2>/dev/null");
  CHECK(res.exit_code == 1);
}

TEST_CASE("wavefunction emits the sample grid") {
  auto res = run("wavefunction --N 1 --parity even --points 21 2>/dev/null");
  REQUIRE(res.exit_code == 0);
  const auto lines = lines_of(res.output);
  REQUIRE(lines.size() == 4 + 21);
  CHECK(lines[3] == "x,psi_normalized,potential");
  // odd count puts x = 0 on the middle sample; d = -1 makes V(0) = 1
  const auto& middle = lines[4 + 10];
  CHECK(middle.substr(0, 2) == "0,");
  CHECK(middle.substr(middle.rfind(',') + 1) == "1");
  for (size_t i = 4; i < lines.size(); ++i)
    CHECK(std::count(lines[i].begin(), lines[i].end(), ',') == 2);
}

TEST_CASE("wavefunction rejects an out-of-range root index") {
  auto res = run("wavefunction --N 1 --parity even --root-index 7 2>/dev/null");
  CHECK(res.exit_code == 1);
}

TEST_CASE("spectrum csv approximates the harmonic ladder at d = 0") {
  auto res = run("spectrum --d 0 --k 4 --format csv 2>/dev/null");
  REQUIRE(res.exit_code == 0);
  const auto lines = lines_of(res.output);
  REQUIRE(lines.size() == 5);
  CHECK(lines[0] == "index,eigenvalue");
  for (int i = 0; i < 4; ++i) {
    const auto& line = lines[static_cast<size_t>(i) + 1];
    const double value = std::stod(line.substr(line.find(',') + 1));
    CHECK(std::abs(value - (2 * i + 1)) < 5e-3);
  }
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run("2>/dev/null").exit_code == 2);
  CHECK(run("bogus 2>/dev/null").exit_code == 2);
  CHECK(run("solve --N -3 --parity even 2>/dev/null").exit_code == 2);
  CHECK(run("solve --N 2 --parity sideways 2>/dev/null").exit_code == 2);
  CHECK(run("wavefunction --N 1 --parity even --points 10 2>/dev/null").exit_code == 2);
  CHECK(run("spectrum 2>/dev/null").exit_code == 2);
}

TEST_CASE("help exits zero") {
  CHECK(run("--help >/dev/null 2>&1").exit_code == 0);
  CHECK(run("solve --help >/dev/null 2>&1").exit_code == 0);
}

TEST_CASE("verify reports the resolved third coefficient") {
  auto res = run("verify --N-max 3 2>/dev/null");
  REQUIRE(res.exit_code == 0);
  CHECK(res.output.find("-2d/(6d^2-3)") != std::string::npos);
  CHECK(res.output.find("self-check passed") != std::string::npos);
}

TEST_CASE("digits environment override is honored") {
  auto res = run_with_prefix("QES_DIGITS=14", "solve --N 1 --parity even 2>/dev/null");
  REQUIRE(res.exit_code == 0);
  const auto doc = nlohmann::json::parse(res.output);
  CHECK(doc.at("digits") == 14);
}

TEST_CASE("numeric output does not depend on the locale") {
  auto plain = run("solve --N 3 --parity even --format csv 2>/dev/null");
  auto localized =
      run_with_prefix("LC_ALL=de_DE.UTF-8", "solve --N 3 --parity even --format csv 2>/dev/null");
  REQUIRE(plain.exit_code == 0);
  REQUIRE(localized.exit_code == 0);
  CHECK(plain.output == localized.output);
}
