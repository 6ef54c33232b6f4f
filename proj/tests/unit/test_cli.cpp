#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "doctest.h"
#include "frobsat/cli.hpp"

using namespace frobsat;
namespace fs = std::filesystem;

namespace {

const std::vector<std::string> kSessions = {
    "char 2\nvars x:1 y:1\nideal I = x^2, x*y\n",
    "char 5\nvars x:1 y:1 z:1\nrel x^3+y^3+z^3\nideal I = x, y\n",
    "char 3\nvars x:2\nideal I = x^2\n",
    "char 7\nvars x:1 y:1 z:1\nrel x^3+y^3+z^3\nideal I = x, y\nelem f = z^2\nelem c = x^2\nassert domain\n",
    "# comment line\nchar 2\nvars x:1 y:1 z:1   # trailing comment\nideal I = x*y, x*z\nassert cm\n",
    "char 5\nvars a:1 b:3\nideal J = a^3 - b, a*b\n",
    "char 11\nvars x:1 y:1\nideal I = 3*x - 5*y, x^2\nelem g = -x*y\n",
    "char 2\nvars x:1 y:1 z:1\nrel x*y\nrel x*z\nideal I = y\nelem z0 = z\nassert equidim\n",
    "char 3\nvars x:1 y:1\nqlist 3,9\ncap 12\nseed 7\nideal I = x^2\n",
    "char 13\nvars u:1 v:1 w:1\nideal P = u*v - w^2, u^2 + v^2\nideal Q = u\n",
    "char 5\nvars x:1 y:1 z:1\nelem a = x + y + z\nideal I = x\nelem b = x*y*z\n",
    "char 2\nvars x:1\nideal Z =\n",
    "char 3\nvars x:1 y:2 z:3\nideal I = x^3 + x*y + z, y^3 - z^2\n",
    "char 101\nvars p0:1 p1:1\nideal I = 100*p0 + p1\n",
    "char 2\nvars x:1 y:1 z:1 w:1\nrel x*w - y*z\nideal I = x, y\nassert cm\nassert domain\nassert equidim\n",
    "char 5\nvars x:1 y:1\nideal I = x^5, y^5\nelem f = x^2*y^2\nqlist 5\n",
    "char 3\nvars x:1 y:1 z:1\nrel x^2 + y^2 + z^2\nideal I = x + y, z\nseed 123\n",
    "char 7\nvars x:1 y:1\nideal A = x\nideal B = y\nideal C = x*y\n",
    "\n\nchar 2\n\nvars x:1 y:1\n\nideal I = x+y\n\n",
    "char 31\nvars x:1 y:1 z:1\nideal I = 30*x*y + 2*z^2\ncap 5\n",
    "char 2\nvars x_1:1 x_2:1\nideal I = x_1*x_2\nelem t = x_1\n",
    "char 3\nvars s:1 t:1\nelem e = s\nideal I = s^2, t^2\nassert cm\nqlist 3,9,27\n",
};

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct TempDir {
  fs::path dir;
  TempDir() {
    dir = fs::temp_directory_path() / ("frobsat_cli_" + std::to_string(::getpid()));
    fs::create_directories(dir);
  }
  ~TempDir() { fs::remove_all(dir); }
  fs::path write(const std::string& name, const std::string& text) const {
    std::ofstream(dir / name, std::ios::binary) << text;
    return dir / name;
  }
};

int run(std::vector<std::string> args) {
  args.insert(args.begin(), "frobsat");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  return cli_main(static_cast<int>(argv.size()), argv.data());
}

}  // namespace

TEST_CASE("session parse/print round trip") {
  CHECK(kSessions.size() >= 20);
  for (const auto& text : kSessions) {
    CAPTURE(text);
    Session s = parse_session(text);
    std::string printed = print_session(s);
    Session again = parse_session(printed);
    CHECK(again == s);
    CHECK(print_session(again) == printed);
  }
}

TEST_CASE("session examples and errors") {
  Session s = parse_session("char 5\nvars x:1 y:1 z:1\nrel x^3+y^3+z^3\nideal I = x, y");
  CHECK(s.characteristic == 5);
  CHECK(s.ring->relations().size() == 1);
  CHECK(s.ideal_generators("I").size() == 2);
  CHECK_THROWS_AS(s.element("I"), Error);

  auto kind_of = [](const std::string& text) {
    try {
      parse_session(text);
    } catch (const Error& e) {
      return std::make_pair(e.kind(), std::string(e.what()));
    }
    return std::make_pair(ErrorKind::Io, std::string("no error"));
  };
  auto [k1, m1] = kind_of("char 4\nvars x:1\n");
  CHECK(k1 == ErrorKind::InvalidArgument);
  CHECK(m1.find("prime") != std::string::npos);
  auto [k2, m2] = kind_of("char 2\nvars x:1 y:1\nideal I = x + y^2\n");
  CHECK(k2 == ErrorKind::Inhomogeneous);
  CHECK(m2.find("{1,2}") != std::string::npos);
  CHECK(m2.find("line 3") != std::string::npos);
  auto [k3, m3] = kind_of("char 2\nvars x:1 y:1\nideal I = x + *y\n");
  CHECK(k3 == ErrorKind::Syntax);
  CHECK(m3.find("line 3, column 15") != std::string::npos);
  CHECK(kind_of("char 2\nvars x:1\nideal I = x\nelem I = x\n").first == ErrorKind::InvalidArgument);
  CHECK(kind_of("char 2\nvars x:1\nfoo bar\n").first == ErrorKind::Syntax);
  CHECK(kind_of("vars x:1\n").first == ErrorKind::Syntax);
  CHECK(kind_of("char 2\nvars x:1 y:1\nrel x+y^2\n").first == ErrorKind::Inhomogeneous);
  CHECK(kind_of("char 2\nvars x:1\nassert smooth\n").first == ErrorKind::Syntax);
  CHECK(kind_of("char 2\nvars x:1\nideal I = z\n").first == ErrorKind::Syntax);
}

TEST_CASE("run_command examples") {
  Session s = parse_session("char 2\nvars x:1 y:1\nideal I = x^2, x*y\n");
  CommandFlags f;
  f.ideal = "I";
  f.q = std::vector<std::uint64_t>{2, 4, 8};
  auto rep = run_command(s, "lc-scan", f);
  const auto& rows = rep["result"]["rows"];
  REQUIRE(rows.size() == 3);
  CHECK(rows[0]["gap"]["nu"] == 3);
  CHECK(rows[1]["gap"]["nu"] == 7);
  CHECK(rows[2]["gap"]["nu"] == 15);
  CHECK(rep["result"]["verdict"] == "consistent-with-LC");
  CHECK(rep["seed"] == 0);
  CHECK_FALSE(rep.contains("timings_ms"));

  f.q = std::vector<std::uint64_t>{3};
  try {
    run_command(s, "nu", f);
    FAIL("expected invalid q");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidQ);
  }

  Session c = parse_session("char 5\nvars x:1 y:1 z:1\nideal I = x*y, x*z\n");
  CommandFlags cf;
  cf.ideal = "I";
  cf.seed = 42;
  auto chain = run_command(c, "chain", cf);
  CHECK(chain["result"]["steps"].size() == 1);
  CHECK(chain["result"]["terminal_dimension"] == 1);
  CHECK(chain["seed"] == 42);
  CHECK(serialize_report(chain) == serialize_report(run_command(c, "chain", cf)));

  // lemma34 refuses to run without the Cohen–Macaulay assertion
  try {
    run_command(c, "lemma34", cf);
    FAIL("expected a missing assertion");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::MissingAssertion);
  }
}

TEST_CASE("every command produces a report") {
  Session s = parse_session(
      "char 5\nvars x:1 y:1 z:1\nrel x^3+y^3+z^3\nideal I = x\nideal M = x, y\nelem y0 = y\nelem f = z^2\nelem c = x^2\n"
      "assert equidim\nassert cm\nassert domain\nqlist 5\ncap 8\n");
  for (const auto& cmd : command_names()) {
    CAPTURE(cmd);
    CommandFlags f;
    f.ideal = cmd == "tc" || cmd == "fc" ? "M" : "I";
    f.elem = cmd == "tc" || cmd == "fc" ? "f" : "y0";
    if (cmd == "lemma21") f.cap = 12;
    if (cmd == "tc" || cmd == "lcstar") f.c = "c";
    auto rep = run_command(s, cmd, f);
    CHECK(rep["command"] == cmd);
    CHECK(rep.contains("result"));
    CHECK(rep["assertions"].size() == 3);
  }
}

TEST_CASE("reports print ideals through their reduced basis") {
  Session a = parse_session("char 3\nvars x:1 y:1\nideal I = y, x\n");
  Session b = parse_session("char 3\nvars x:1 y:1\nideal I = x+y, x\n");
  CommandFlags f;
  f.ideal = "I";
  f.q = std::vector<std::uint64_t>{3, 9};
  auto ra = run_command(a, "lc-scan", f), rb = run_command(b, "lc-scan", f);
  CHECK(ra["inputs"]["ideal"]["value"] == "(x, y)");
  CHECK(serialize_report(ra) == serialize_report(rb));
  CHECK(ra["result"]["rows"][0]["q"] == 3);
  CHECK(ra["result"]["rows"][1]["q"] == 9);
}

TEST_CASE("cli exit codes and byte-identical output") {
  TempDir tmp;
  auto session = tmp.write("s.fs", "char 2\nvars x:1 y:1\nideal I = x^2, x*y\nelem f = y\n");
  auto out1 = (tmp.dir / "r1.json").string(), out2 = (tmp.dir / "r2.json").string();
  CHECK(run({"lc-scan", session.string(), "--ideal", "I", "--q", "2,4,8", "--out", out1}) == 0);
  CHECK(run({"lc-scan", session.string(), "--ideal", "I", "--q", "2,4,8", "--out", out2}) == 0);
  CHECK(read_file(out1) == read_file(out2));
  CHECK(read_file(out1).find("\"verdict\": \"consistent-with-LC\"") != std::string::npos);
  CHECK_FALSE(fs::exists(out1 + ".tmp"));

  CHECK(run({"nu", session.string(), "--ideal", "I", "--q", "3"}) != 0);
  CHECK(run({"nu", session.string(), "--ideal", "J", "--q", "2"}) != 0);
  CHECK(run({"nu", (tmp.dir / "missing.fs").string(), "--ideal", "I"}) != 0);
  CHECK(run({"frobnicate", session.string()}) != 0);
  CHECK(run({"lemma34", session.string(), "--ideal", "I"}) != 0);
  CHECK(run({"nu", session.string(), "--ideal", "I", "--q", "2", "--out", (tmp.dir / "no/such/dir.json").string()}) != 0);
  // an inconclusive verdict is still a result
  CHECK(run({"fc", session.string(), "--ideal", "I", "--elem", "f", "--emax", "2", "--out", out1}) == 0);
  CHECK(read_file(out1).find("Inconclusive") != std::string::npos);

  auto timed = (tmp.dir / "t.json").string();
  CHECK(run({"nu", session.string(), "--ideal", "I", "--q", "2", "--timings", "--out", timed}) == 0);
  CHECK(read_file(timed).find("timings_ms") != std::string::npos);
}
