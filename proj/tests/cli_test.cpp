#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "flipeq/emit.hpp"

namespace {

struct cli_result {
  int exit_code = -1;
  std::string out;
};

const char* cli_path() {
  const char* p = std::getenv("FLIPEQ_CLI");
  REQUIRE(p != nullptr);
  return p;
}

cli_result run_cli(const std::string& args) {
  cli_result r;
  const std::string cmd = std::string(cli_path()) + " " + args + " 2>/dev/null";
  FILE* pipe = ::popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = ::pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::vector<std::string> lines_of(const std::string& s) {
  std::vector<std::string> out;
  size_t start = 0;
  while (start < s.size()) {
    size_t end = s.find('\n', start);
    if (end == std::string::npos) end = s.size();
    out.push_back(s.substr(start, end - start));
    start = end + 1;
  }
  return out;
}

}  // namespace

TEST_CASE("sequence output in plain format", "[cli]") {
  auto r = run_cli("seq wedderburn --nmax 15");
  REQUIRE(r.exit_code == 0);
  auto ls = lines_of(r.out);
  REQUIRE(ls.size() == 16);
  CHECK(ls.back() == "15 10905");

  auto r0 = run_cli("seq catalan --nmax 0");
  REQUIRE(r0.exit_code == 0);
  CHECK(r0.out == "0 1\n");
}

TEST_CASE("json output round-trips through the csv emitter", "[cli]") {
  auto json = run_cli("seq catalan --nmax 12 --format json");
  auto csv = run_cli("seq catalan --nmax 12 --format csv");
  REQUIRE(json.exit_code == 0);
  REQUIRE(csv.exit_code == 0);
  auto parsed = flipeq::parse_json_table(json.out);
  CHECK(parsed.kind == "catalan");
  CHECK(flipeq::emit_csv(parsed) == csv.out);
}

TEST_CASE("coefficient records from the solved equations", "[cli]") {
  auto s = run_cli("gf S_gen3 --order 5 --format csv");
  REQUIRE(s.exit_code == 0);
  CHECK(s.out.find("\n5,3,2,27\n") != std::string::npos);

  auto f = run_cli("gf F_gfe0 --order 3 --format csv");
  REQUIRE(f.exit_code == 0);
  CHECK(f.out == "x,value\n0,1\n1,1\n2,2\n3,5\n");

  // the one-variable solution enumerates the same numbers as the sequence
  auto g = run_cli("gf G_gfe --order 15 --format csv");
  auto w = run_cli("seq wedderburn --nmax 15 --format csv");
  REQUIRE(g.exit_code == 0);
  auto gl = lines_of(g.out), wl = lines_of(w.out);
  REQUIRE(gl.size() == wl.size());
  for (size_t i = 1; i < gl.size(); ++i) {
    CHECK(gl[i] == wl[i]);  // identical n,value rows
  }
}

TEST_CASE("tables render in all formats with published cells", "[cli]") {
  auto csv = run_cli("table bcolor --nmax 10 --format csv");
  REQUIRE(csv.exit_code == 0);
  CHECK(csv.out.find("\n10,5,41788\n") != std::string::npos);

  auto plain = run_cli("table bcolor --nmax 7");
  REQUIRE(plain.exit_code == 0);
  CHECK(plain.out.find("23 142 404 656 656 404 142 23") != std::string::npos);

  auto k3csv = run_cli("table k3 --nmax 5 --format csv");
  REQUIRE(k3csv.exit_code == 0);
  CHECK(lines_of(k3csv.out).front() == "n,c,l,value");
  CHECK(k3csv.out.find("\n5,2,3,27\n") != std::string::npos);
}

TEST_CASE("identical invocations are byte-identical", "[cli]") {
  auto a = run_cli("table k3 --nmax 5 --format json");
  auto b = run_cli("table k3 --nmax 5 --format json");
  REQUIRE(a.exit_code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("output lands in a file with --out", "[cli]") {
  const std::string path = "cli_test_out.tmp";
  auto direct = run_cli("seq catalan --nmax 5 --format csv");
  auto filed = run_cli("seq catalan --nmax 5 --format csv --out " + path);
  REQUIRE(filed.exit_code == 0);
  CHECK(filed.out.empty());
  std::ifstream f(path, std::ios::binary);
  std::string content((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
  CHECK(content == direct.out);
  std::remove(path.c_str());
}

TEST_CASE("verification suites succeed end to end", "[cli]") {
  auto r = run_cli("verify systems --nmax 6");
  REQUIRE(r.exit_code == 0);
  for (const auto& line : lines_of(r.out)) CHECK(line.rfind("PASS ", 0) == 0);

  auto ident = run_cli("verify identities --nmax 10 --format json");
  REQUIRE(ident.exit_code == 0);
  auto doc = nlohmann::json::parse(ident.out);
  for (const auto& c : doc.at("checks")) CHECK(c.at("passed") == true);
}

TEST_CASE("usage errors exit with code 2", "[cli]") {
  CHECK(run_cli("").exit_code == 2);
  CHECK(run_cli("frobnicate").exit_code == 2);
  CHECK(run_cli("seq catalan").exit_code == 2);           // missing --nmax
  CHECK(run_cli("seq fibonacci --nmax 3").exit_code == 2);
  CHECK(run_cli("seq catalan --nmax -4").exit_code == 2);
  CHECK(run_cli("table k2 --nmax 101").exit_code == 2);   // over the default cap
  CHECK(run_cli("gf G_gfe --order 3 --format xml").exit_code == 2);
  CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("the force flag lifts a default cap", "[cli]") {
  auto r = run_cli("table k2 --nmax 101 --force --format csv");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.find("101,") != std::string::npos);
}
