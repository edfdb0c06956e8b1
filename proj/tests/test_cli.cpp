#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + (env.empty() ? "" : " ") + "'" FFGOLD_BIN "' " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::vector<std::vector<std::string>> csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

}  // namespace

TEST_CASE("spec prints L, genus, point counts and JSON") {
  const Run r = run("spec --elliptic -q 2 --curve y2+y=x3");
  CHECK(r.code == 0);
  CHECK(r.out ==
        "L_coeffs 1,0,2\ngenus 1\nk,N_k\n1,3\n2,9\n3,9\n4,9\n5,33\n6,81\n7,129\n8,225\n"
        "{\"p\":2,\"r\":1,\"genus\":1,\"L_coeffs\":[1,0,2],\"source\":\"elliptic\",\"curve\":\"0,0,1,0,0\"}\n");
  const Run rat = run("spec --rational -q 3");
  CHECK(rat.code == 0);
  CHECK(rat.out.find("k,N_k\n1,4\n2,10\n3,28\n") != std::string::npos);
  CHECK(run("spec --elliptic -q 2 --curve y2=x3").code == 2);  // singular
  CHECK(run("spec --rational -q 6").code == 2);
}

TEST_CASE("gold tabulates G_2") {
  const Run r = run("gold --q1 2 --q2 2 --n-max 8");
  CHECK(r.code == 0);
  const auto rows = csv(r.out);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0] == std::vector<std::string>{"n", "reps_count", "value"});
  const double l2 = std::log(2.0) * std::log(2.0);
  CHECK(rows[1][0] == "4");
  CHECK(std::stod(rows[1][2]) == doctest::Approx(9 * l2).epsilon(1e-15));
  CHECK(rows[2][0] == "6");
  CHECK(rows[2][1] == "2");
  CHECK(std::stod(rows[2][2]) == doctest::Approx(30 * l2).epsilon(1e-15));
  CHECK(run("gold --q1 2 --q2 2 --n-max 8 --dense").out.find("\n5,0,0\n") != std::string::npos);
}

TEST_CASE("eval agrees across methods and reports failures per point") {
  const Run r = run("eval --q1 2 --q2 3 --s 2.5 --s 2.3+1.5i --check");
  CHECK(r.code == 0);
  const auto rows = csv(r.out);
  REQUIRE(rows.size() == 3);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    CHECK(rows[i].back() == "ok");
    CHECK(std::stod(rows[i][6]) < 1e-9);
  }
  const Run d = run("eval --q1 2 --q2 3 --s 1.5 --direct");
  CHECK(d.code == 0);
  CHECK(d.out.find("nan,nan,nan,DomainError") != std::string::npos);
  CHECK(run("eval --q1 2 --q2 3 --s 1.5 --direct --continued").code == 2);
  CHECK(run("eval --q1 2 --q2 3 --s notanumber").code == 2);
  CHECK(run("eval --q1 2 --q2 3 --s 1.5", "FFGOLD_THREADS=zero").code == 2);
}

TEST_CASE("poles, density and boundary") {
  const Run p = run("poles --q1 2 --q2 3 --families b+b --bound 10");
  CHECK(p.code == 0);
  std::size_t count = 0;
  for (std::size_t at = p.out.find("\"family\""); at != std::string::npos; at = p.out.find("\"family\"", at + 1)) ++count;
  CHECK(count == 441);
  CHECK(run("poles --q1 2 --q2 3 --families nope").code == 2);

  const Run d = run("density --q1 2 --q2 3 --B 100");
  CHECK(d.code == 0);
  CHECK(d.out.find("verdict,at most 3 distinct gap lengths,,1,,") != std::string::npos);
  CHECK(run("density --q1 2 --q2 4 --B 100").code == 2);
  CHECK(run("density --q1 2 --q2 3 --B 10000 --gelfond").out.find("row,record_minimizer,1054,") != std::string::npos);

  const Run b = run("boundary --q1 2 --q2 3 --b1 0 --b2 1");
  CHECK(b.code == 0);
  CHECK(b.out.find("verdict,blow-up factor >= 1e3,,1,,") != std::string::npos);
}

TEST_CASE("selftest and usage errors") {
  const Run s = run("selftest");
  CHECK(s.code == 0);
  CHECK(s.out.find("FAIL") == std::string::npos);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("gold --q1 2").code == 2);
}

TEST_CASE("output is deterministic and independent of the thread count") {
  const std::string args = "eval --q1 2 --q2 3 --L2 1,1,3 --grid 0.5,2.5,-3,3,0.5 --continued";
  const Run a = run(args, "FFGOLD_THREADS=1");
  const Run b = run(args, "FFGOLD_THREADS=4");
  const Run c = run(args, "FFGOLD_THREADS=4");
  CHECK(a.code == 0);
  CHECK(csv(a.out).size() == 1 + 5 * 13);
  CHECK(a.out == b.out);
  CHECK(b.out == c.out);

  const auto file = std::filesystem::temp_directory_path() / "ffgold_cli_test.csv";
  CHECK(run(args + " -o '" + file.string() + "'", "FFGOLD_THREADS=2").code == 0);
  std::ifstream in(file);
  std::stringstream written;
  written << in.rdbuf();
  CHECK(written.str() == a.out);
  std::filesystem::remove(file);
}
