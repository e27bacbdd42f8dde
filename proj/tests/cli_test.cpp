#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include <nlohmann/json.hpp>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  const std::string command = std::string(SUBWORDS_CLI_PATH) + " " + args + " 2>&1";
  RunResult result;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buffer{};
  std::size_t got = 0;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
    result.output.append(buffer.data(), got);
  }
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

}  // namespace

TEST_CASE("cli: sequence values") {
  const auto r = run_cli("sb --base 3 16");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "7\n");

  const auto prefix = run_cli("sb --base 3 0..32");
  CHECK(prefix.exit_code == 0);
  CHECK(prefix.output ==
        "1 2 2 3 3 4 3 4 3 4 5 6 5 4 6 7 7 6 4 6 5 7 6 7 5 6 4 5 7 8 8 7 10\n");
}

TEST_CASE("cli: summatory values") {
  const auto r = run_cli("ab --base 3 0 1 2 3");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "0 1 3 5\n");

  const auto single = run_cli("ab --base 3 150");
  CHECK(single.exit_code == 0);
  CHECK(single.output == "1665\n");
}

TEST_CASE("cli: decomposition output") {
  const auto r = run_cli("decompose --base 3 150");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "4 32 73 0\n");

  const auto json = run_cli("decompose --base 3 150 --format json");
  CHECK(json.exit_code == 0);
  const auto parsed = nlohmann::json::parse(json.output);
  CHECK(parsed["base"] == 3);
  CHECK(parsed["ell"] == 3);

  const auto too_small = run_cli("decompose --base 3 2");
  CHECK(too_small.exit_code == 2);
}

TEST_CASE("cli: coefficient and matrix export") {
  const auto r = run_cli("coeffs --base 3");
  CHECK(r.exit_code == 0);
  const auto parsed = nlohmann::json::parse(r.output);
  CHECK(parsed["a"][2] == "3");
  CHECK(parsed["mu"][2][0][0] == "5");

  const auto m = run_cli("matrices --base 2");
  CHECK(m.exit_code == 0);
  const auto parsed2 = nlohmann::json::parse(m.output);
  CHECK(parsed2["mu"][1][0][0] == "3");
}

TEST_CASE("cli: trie inspection") {
  const auto r = run_cli("trie --base 3 --word 121");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "nodes 7\nlevels 1 2 3 1\n");

  const auto dot = run_cli("trie --base 3 --word 121 --format dot");
  CHECK(dot.exit_code == 0);
  CHECK(dot.output.find("digraph") != std::string::npos);
}

TEST_CASE("cli: triangle and profile files") {
  const std::string path = "cli_test_triangle.pgm";
  const auto r = run_cli("triangle --base 3 --rows 27 --out " + path);
  CHECK(r.exit_code == 0);
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::string contents((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(contents.rfind("P5\n27 27\n255\n", 0) == 0);
  CHECK(contents.size() == 13 + 27 * 27);
  std::remove(path.c_str());

  const auto p = run_cli("profile --base 3 --rows 4");
  CHECK(p.exit_code == 0);
  CHECK(p.output == "m,count\n0,1\n1,2\n2,2\n3,3\n");
}

TEST_CASE("cli: fluctuation sample") {
  const auto r = run_cli("hb-sample --base 3 --n 6 --res 16");
  CHECK(r.exit_code == 0);
  CHECK(r.output.rfind("x,value\n", 0) == 0);
  CHECK(std::count(r.output.begin(), r.output.end(), '\n') == 17);
}

TEST_CASE("cli: deterministic output") {
  const auto a = run_cli("hb-sample --base 3 --n 8 --res 32");
  const auto b = run_cli("hb-sample --base 3 --n 8 --res 32");
  CHECK(a.output == b.output);
  const auto c1 = run_cli("coeffs --base 4");
  const auto c2 = run_cli("coeffs --base 4");
  CHECK(c1.output == c2.output);
}

TEST_CASE("cli: usage errors") {
  CHECK(run_cli("unknown-command").exit_code == 2);
  CHECK(run_cli("sb 16").exit_code == 2);           // missing --base
  CHECK(run_cli("sb --base 1 16").exit_code == 2);  // invalid base
  CHECK(run_cli("sb --base 3").exit_code == 2);     // missing numbers
  CHECK(run_cli("trie --base 3 --word 131").exit_code == 2);  // digit out of range
}
