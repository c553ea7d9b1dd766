#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <sstream>
#include <vector>

#include "skein/cli/run.hpp"

using namespace skein;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "skein");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string temp(const std::string& name) { return (std::filesystem::temp_directory_path() / name).string(); }

}  // namespace

TEST_CASE("poly and phi") {
  const std::string table = temp("skein_cli_table.json");
  std::filesystem::remove(table);
  const Result p = run({"--table", table, "poly", "--k", "2"});
  CHECK(p.code == 0);
  CHECK(p.out.find("P_2 = w^2 - z*w + z^2 + 1/2*w + 1/2*z\n") != std::string::npos);
  CHECK(std::filesystem::exists(table));
  std::filesystem::remove(table);
  const Result phi = run({"phi", "--j", "0", "--i", "3"});
  CHECK(phi.code == 0);
  CHECK(phi.out == "-8\n");
  CHECK(run({"phi", "--j", "1", "--i", "1"}).out == "-4\n");
}

TEST_CASE("gen then expand") {
  const std::string file = temp("skein_cli_kink.json");
  CHECK(run({"gen", "kink", "--i", "2", "-o", file}).code == 0);
  const std::string table = temp("skein_cli_table2.json");
  const Result e = run({"--table", table, "expand", file, "--order", "2"});
  CHECK(e.code == 0);
  CHECK(e.out.find("EQUAL") != std::string::npos);
  const Result b = run({"bracket", file});
  CHECK(b.code == 0);
  CHECK(b.out.find("∅") != std::string::npos);
  std::filesystem::remove(file);
  std::filesystem::remove(table);
}

TEST_CASE("star prints one line per order") {
  const Result s = run({"star", "--surface", "torus", "--alpha", "1,0", "--beta", "0,1", "--order", "1"});
  CHECK(s.code == 0);
  CHECK(s.out == "lambda_0: (-1)*(1,-1) + (-1)*(1,1)\nlambda_1: (-1)*(1,-1) + (1)*(1,1)\n");
}

TEST_CASE("malformed input exits 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"phi", "--j", "x", "--i", "1"}).code == 2);
  CHECK(run({"bracket", temp("skein_missing_file.json")}).code == 2);
  CHECK(run({"gen", "braid", "--strands", "2", "--word", "3"}).code == 2);
  CHECK(run({"star", "--alpha", "1", "--beta", "0,1", "--order", "1"}).code == 2);
  CHECK(run({"verify", "nonexistent"}).code == 2);
}

TEST_CASE("verify exit codes") {
  CHECK(run({"verify", "phi"}).code == 0);
  const Result poly = run({"verify", "poly"});
  CHECK(poly.code == 1);
  CHECK(poly.out.find("criterion 2 [poly] FAIL") != std::string::npos);
}
