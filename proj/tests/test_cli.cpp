// Copyright 2026 The thermoent Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Runs the CLI binary and checks exit codes and outputs.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sys/wait.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "thermoent/state_io.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
  std::string err;
};

fs::path scratch() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("thermoent_cli_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Run run(const std::string& args) {
  const fs::path out = scratch() / "stdout.txt";
  const fs::path err = scratch() / "stderr.txt";
  const std::string cmd = std::string(THERMOENT_CLI) + " " + args + " >" + out.string() +
                          " 2>" + err.string();
  const int status = std::system(cmd.c_str());
  Run r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out);
  r.err = slurp(err);
  return r;
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

std::vector<double> row(const std::string& line) {
  std::vector<double> out;
  std::stringstream ss(line);
  for (std::string cell; std::getline(ss, cell, ',');) out.push_back(std::stod(cell));
  return out;
}

// Value following "<key>: " in a report.
double field(const std::string& text, const std::string& key) {
  for (const auto& l : lines(text))
    if (l.rfind(key + ": ", 0) == 0) return std::stod(l.substr(key.size() + 2));
  FAIL("missing field " << key);
  return 0.0;
}

std::string write(const std::string& name, const std::string& text) {
  const fs::path p = scratch() / name;
  std::ofstream(p) << text;
  return p.string();
}

std::string make_state(const std::string& name, const std::string& args) {
  const std::string p = (scratch() / name).string();
  REQUIRE(run("state " + args + " -o " + p).code == 0);
  return p;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("sweep csv layout") {
  const Run r = run("sweep -x 1 -y 1 -z 1 --beta 0:2:201 -q C,N");
  REQUIRE(r.code == 0);
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 202);
  CHECK(ls[0] == "beta,C,N,dC_dbeta,dN_dbeta");
  CHECK(ls[1].rfind("0.0,0.0,0.0,", 0) == 0);
  const auto mid = row(ls[51]);
  CHECK(mid[0] == 0.5);
  CHECK(std::abs(mid[1] - 0.422469188455188) < 1e-11);
  CHECK(mid[1] == mid[2]);
  CHECK(row(ls.back())[0] == 2.0);
}

TEST_CASE("sweep crossing for (3,1,1)") {
  const Run r = run("sweep -x 3 -y 1 -z 1 --beta 0:0.4:401 -q C");
  REQUIRE(r.code == 0);
  const auto ls = lines(r.out);
  double first_positive = -1.0;
  for (std::size_t i = 1; i < ls.size() && first_positive < 0; ++i) {
    const auto v = row(ls[i]);
    if (v[1] > 0.0) first_positive = v[0];
  }
  CHECK(first_positive == doctest::Approx(0.174));  // first grid point past ln(2)/4
}

TEST_CASE("sweep output is deterministic across job counts") {
  const std::string a = (scratch() / "a.csv").string();
  const std::string b = (scratch() / "b.csv").string();
  REQUIRE(run("sweep -x 3 -y 2 -z 1 --beta 0:3:300 --jobs 1 -o " + a).code == 0);
  REQUIRE(run("sweep -x 3 -y 2 -z 1 --beta 0:3:300 --jobs 3 -o " + b).code == 0);
  CHECK(slurp(a) == slurp(b));
  CHECK(slurp(a).find("dEf_dbeta") != std::string::npos);
}

TEST_CASE("sweep errors") {
  CHECK(run("sweep -o /nonexistent/dir/out.csv").code == 2);
  CHECK(run("sweep --beta 0:2").code == 4);
  CHECK(run("sweep --beta 2:0:10").code == 4);
  CHECK(run("sweep -q C,XX").code == 4);
  CHECK(run("sweep --no-such-flag").code == 4);
  CHECK(run("frobnicate").code == 4);
  CHECK(run("").code == 4);
  CHECK(run("--help").code == 0);
}

TEST_CASE("critical report") {
  const Run r = run("critical -x 1 -y 1 -z 1");
  REQUIRE(r.code == 0);
  CHECK(field(r.out, "beta_c") == doctest::Approx(0.274653072).epsilon(1e-8));
  CHECK(field(r.out, "T_c") == doctest::Approx(1.0 / 0.274653072167027).epsilon(1e-8));
  const std::string expected[][2] = {{"IM", "0"}, {"C", "1"}, {"N", "1"}, {"EN", "1"},
                                     {"Ef", "2"}};
  const auto ls = lines(r.out);
  for (const auto& e : expected) {
    bool seen = false;
    for (std::size_t i = 0; i + 1 < ls.size(); ++i)
      if (ls[i] == e[0] + ":") {
        seen = true;
        CHECK(ls[i + 1] == "  order: " + e[1]);
      }
    CHECK(seen);
  }

  const Run r2 = run("critical -x 3 -y 1 -z 1");
  REQUIRE(r2.code == 0);
  CHECK(std::abs(field(r2.out, "beta_c") - 0.173286795139986) < 1e-8);
}

TEST_CASE("ferromagnet has no transition") {
  const Run r = run("critical -x -1 -y -1 -z -1 --bracket 1e-6:10");
  CHECK(r.code == 3);
  CHECK(r.out.find("no transition") != std::string::npos);
  CHECK(run("critical --bracket 1:x").code == 4);
}

TEST_CASE("ew on bell, mixed and ghz states") {
  const std::string bell = make_state("bell.txt", "--kind bell --bell phi+");
  const Run r = run("ew " + bell);
  REQUIRE(r.code == 0);
  CHECK(std::abs(field(r.out, "value") - 1.0) <= 1e-6);
  CHECK(field(r.out, "duality_gap") <= 1e-6);
  CHECK(r.out.find("witness:") != std::string::npos);

  const std::string wfile = (scratch() / "w.txt").string();
  REQUIRE(run("ew " + bell + " --witness-out " + wfile).code == 0);
  CHECK(lines(slurp(wfile)).size() == 2 + 16);

  const std::string mixed = make_state("mm.txt", "--kind mixed --qubits 2");
  const Run m = run("ew " + mixed);
  REQUIRE(m.code == 0);
  CHECK(field(m.out, "value") == 0.0);

  const std::string ghz = make_state("ghz.txt", "--kind ghz --qubits 3");
  const Run g = run("ew " + ghz + " --cuts all");
  REQUIRE(g.code == 0);
  int cuts = 0;
  for (const auto& l : lines(g.out)) {
    if (l.rfind("cut ", 0) != 0) continue;
    ++cuts;
    const auto pos = l.find("value ");
    CHECK(std::abs(std::stod(l.substr(pos + 6)) - 1.0) <= 1e-6);
  }
  CHECK(cuts == 3);
  CHECK(run("ew " + ghz + " --cuts 3").code == 0);
  CHECK(run("ew " + ghz + " --cuts 4").code == 4);
}

TEST_CASE("ew input errors") {
  CHECK(run("ew /nonexistent/state.txt").code == 2);
  const Run parse = run("ew " + write("bad.txt", "dims: 2\n0 0 1 0\n0 1 zero 0\n"));
  CHECK(parse.code == 4);
  CHECK(parse.err.find("line 3") != std::string::npos);
  CHECK(parse.err.find("field 3") != std::string::npos);
  CHECK(run("ew " + write("short.txt", "dims: 2 2\n0 0 1 0\n")).code == 4);
  CHECK(run("ew " + write("neg.txt",
                          "dims: 2 2\n"
                          "0 0 1.5 0\n0 1 0 0\n0 2 0 0\n0 3 0 0\n"
                          "1 0 0 0\n1 1 -0.5 0\n1 2 0 0\n1 3 0 0\n"
                          "2 0 0 0\n2 1 0 0\n2 2 0 0\n2 3 0 0\n"
                          "3 0 0 0\n3 1 0 0\n3 2 0 0\n3 3 0 0\n"))
            .code == 5);
  CHECK(run("ew " + write("herm.txt",
                          "dims: 2 2\n"
                          "0 0 0.25 0\n0 1 0.1 0\n0 2 0 0\n0 3 0 0\n"
                          "1 0 0 0\n1 1 0.25 0\n1 2 0 0\n1 3 0 0\n"
                          "2 0 0 0\n2 1 0 0\n2 2 0.25 0\n2 3 0 0\n"
                          "3 0 0 0\n3 1 0 0\n3 2 0 0\n3 3 0.25 0\n"))
            .code == 5);
}

TEST_CASE("state files written by the cli round-trip") {
  const std::string p = make_state("gibbs.txt", "--kind gibbs -x 3 -y 2 -z 1 --beta 0.8");
  const thermoent::DensityMatrix back = thermoent::load_state(p);
  const thermoent::DensityMatrix ref = thermoent::gibbs_state(
      thermoent::build_xyz({3, 2, 1}), thermoent::InverseTemperature(0.8));
  CHECK((back.matrix() - ref.matrix()).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("geoscan corner-crossing path") {
  const std::string a = make_state("na.txt", "--kind bell --bell phi+ --noise 0.2");
  const std::string b = make_state("nb.txt", "--kind bell --bell psi- --noise 0.2");
  const Run r = run("geoscan --family mix --a " + a + " --b " + b + " --t 0:1:101");
  REQUIRE(r.code == 0);
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 102);
  CHECK(ls[0] == "t,Ew,gap,witness_jump");
  CHECK(r.err.find("flags: 1\n") != std::string::npos);
  CHECK(r.err.find("flag t=0.57 ") != std::string::npos);
}

TEST_CASE("geoscan gibbs path and constant separable path") {
  const std::string csv = (scratch() / "g.csv").string();
  const Run g = run("geoscan --family gibbs-beta -x 1 -y 1 -z 1 --t 0.05:2:101 -o " + csv);
  REQUIRE(g.code == 0);
  CHECK(g.out.find("flags: 0\n") != std::string::npos);
  CHECK(g.out.find("kinks: 1\n") != std::string::npos);

  const std::string mm = make_state("mm2.txt", "--kind mixed --qubits 2");
  const Run c = run("geoscan --family mix --a " + mm + " --b " + mm + " --t 0:1:11");
  REQUIRE(c.code == 0);
  const auto ls = lines(c.out);
  for (std::size_t i = 1; i < ls.size(); ++i) {
    const auto v = row(ls[i]);
    CHECK(v[1] == 0.0);
    CHECK(v[3] == 0.0);
  }
  CHECK(c.err.find("flags: 0\n") != std::string::npos);
  CHECK(run("geoscan --family mix --a " + mm).code == 4);
  CHECK(run("geoscan --family spiral").code == 4);
}

}  // TEST_SUITE
