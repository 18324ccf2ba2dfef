#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "kappa/cli.hpp"
#include "kappa/element_json.hpp"
#include "kappa/quadratic_form.hpp"

using namespace kappa;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = run_cli(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_CASE("markdown table matches the golden file") {
  const Run r = run({"table", "--lambda", "1", "--format", "markdown"});
  CHECK(r.code == 0);
  CHECK(r.out == read_file(KAPPA_GOLDEN_DIR "/table_markdown.md"));
  CHECK(r.out.rfind("| * | 1 | λ e_x e_y |", 0) == 0);
}

TEST_CASE("both orientations share the result index grid") {
  const auto p = nlohmann::json::parse(run({"table", "--lambda", "1", "--format", "json"}).out);
  const auto m = nlohmann::json::parse(run({"table", "--lambda", "-1", "--format", "json"}).out);
  CHECK(m["lambda"] == -1);
  for (int r = 0; r < 8; ++r) {
    for (int c = 0; c < 8; ++c) CHECK(p["cells"][r][c]["index"] == m["cells"][r][c]["index"]);
  }
}

TEST_CASE("csv and text tables") {
  const Run csv = run({"table", "--format", "csv"});
  CHECK(csv.code == 0);
  CHECK(std::count(csv.out.begin(), csv.out.end(), '\n') == 9);
  CHECK(csv.out.rfind("*,1,λ e_x e_y,", 0) == 0);
  const Run text = run({"table"});
  CHECK(text.code == 0);
  CHECK(text.out.find("I₃ e_∞") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({"table", "--format", "html"}).code == 2);
  CHECK(run({"table", "--lambda", "0"}).code == 2);
  CHECK(run({"table", "--bogus"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"sample", "--rho", "0"}).code == 2);
  CHECK(run({"verify", "--suite", "nope"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("small verify run is deterministic") {
  const std::vector<std::string> args = {"verify", "--trials", "10", "--seed", "42", "--format", "json"};
  const Run a = run(args), b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  std::istringstream lines(a.out);
  std::string line;
  int n = 0;
  while (std::getline(lines, line)) {
    const auto j = nlohmann::json::parse(line);
    CHECK(j["passed"] == true);
    ++n;
  }
  CHECK(n == 21);
}

TEST_CASE("zero-divisor walkthrough is printed") {
  const Run r = run({"verify", "--suite", "zero-divisor", "--field", "rational"});
  CHECK(r.code == 0);
  CHECK(r.out.find("1/2, -1/2") != std::string::npos);
  CHECK(r.out.find("||XY|| [λ=+1]") != std::string::npos);
  CHECK(r.out.find("all suites passed") != std::string::npos);
}

TEST_CASE("samples satisfy the sphere postconditions when read back") {
  const Run a = run({"sample", "-n", "3", "--rho", "1", "--seed", "7"});
  const Run b = run({"sample", "-n", "3", "--rho", "1", "--seed", "7"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  std::istringstream lines(a.out);
  std::string line;
  int n = 0;
  while (std::getline(lines, line)) {
    const auto x = parse_element<double>(line);
    CHECK(std::fabs(constraint_f(x)) <= 1e-14);
    const Run e = run({"eval", "--field", "float", "--format", "json"}, line);
    REQUIRE(e.code == 0);
    const auto j = nlohmann::json::parse(e.out);
    CHECK(j["split_residual"].is_null());
    CHECK(std::fabs(std::stod(j["norm_b"].get<std::string>()) - 1.0) <= 1e-12);
    ++n;
  }
  CHECK(n == 3);

  const Run two = run({"sample", "-n", "5", "--rho", "2", "--seed", "1", "--lambda", "-1"});
  std::istringstream l2(two.out);
  while (std::getline(l2, line)) CHECK(std::fabs(norm_a(parse_element<double>(line)) - 2.0) <= 1e-14);
}

TEST_CASE("eval reports norms, constraint and dual-quaternion parts") {
  const Run id = run({"eval", "--format", "json", "--element", R"({"lambda":1,"coeffs":[1,0,0,0,0,0,0,0]})"});
  REQUIRE(id.code == 0);
  const auto j = nlohmann::json::parse(id.out);
  CHECK(j["norm_a"] == "1");
  CHECK(j["norm_b"] == "1");
  CHECK(j["f_K"] == "0");
  CHECK(j["q_r"] == nlohmann::json::array({"1", "0", "0", "0"}));

  const Run x = run({"eval", "--field", "float"},
                    R"({"lambda":1,"coeffs":["0.7071067811865476",0,0,0,0,0,0,"-0.7071067811865476"]})");
  REQUIRE(x.code == 0);
  CHECK(x.out.find("norm_a   : 1") != std::string::npos);
  CHECK(x.out.find("norm_b   : error") != std::string::npos);
  CHECK(x.out.find("f_K      : 0.5") != std::string::npos);

  CHECK(run({"eval"}, R"({"lambda":1,"coeffs":[1]})").code == 2);
  const Run bad = run({"eval"}, R"({"lambda":)");
  CHECK(bad.code == 2);
  CHECK(bad.err.find("byte") != std::string::npos);
}

TEST_CASE("report file mirrors json output") {
  const std::string path = "cli_report_test.jsonl";
  const Run r = run({"verify", "--trials", "5", "--suite", "tower", "--format", "json", "--report", path});
  CHECK(r.code == 0);
  CHECK(read_file(path) == r.out);
  std::remove(path.c_str());
}
