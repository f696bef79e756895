#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "fixtures.hpp"
#include "toricapolar/cli.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  for (auto& a : args)
    if (a.size() > 4 && a.find(".fan") != std::string::npos && a.find('/') == std::string::npos) a = fixtures::path(a);
  std::ostringstream out, err;
  int code = toricapolar::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

bool has(const std::string& s, const std::string& needle) { return s.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("classgroup tables") {
  auto r = run({"classgroup", "fake_plane.fan"});
  CHECK(r.code == 0);
  CHECK(r.out.substr(0, r.out.find('\n')) == "Cl = Z x Z/3; deg a0=(1,0) a1=(1,1) a2=(1,2)");
  CHECK(has(run({"classgroup", "f1.fan"}).out, "Cl = Z^2; deg a0=(1,0) a1=(1,0) b0=(1,1) b1=(0,1)"));
  CHECK(has(run({"classgroup", "p114.fan"}).out, "Cl = Z; deg a=1 b=1 c=4"));
}

TEST_CASE("basis listing") {
  auto r = run({"basis", "p114.fan", "--degree", "4"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "dim S_4 = 6"));
  CHECK(has(r.out, "a^2*b^2\n"));
}

TEST_CASE("hilbert grid with symmetry") {
  auto r = run({"hilbert", "f1.fan", "--form", "x0*x1*y0*y1", "--box", "0..3,0..2"});
  CHECK(r.code == 0);
  CHECK(r.out == "j=0: 1 2 1 0\nj=1: 1 3 3 1\nj=2: 0 1 2 1\nsymmetry: PASS\n");
}

TEST_CASE("catalecticant with the Cartier gate") {
  auto r = run({"cat", "p114.fan", "--form", "x^2*y^2", "--beta", "2"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "border rank >= 3"));
  CHECK(has(r.out, "cactus bound: suppressed"));
  auto s = run({"cat", "f1.fan", "--form", "x0*x1*y0*y1", "--beta", "2,1"});
  CHECK(has(s.out, "cactus rank >= 3"));
}

TEST_CASE("bounds sweep") {
  auto r = run({"bounds", "f1.fan", "--form", "x0^2*x1^2*y0*y1", "--box", "0..5,0..2"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "border rank >= 5 at (2,1)"));
}

TEST_CASE("containment verdicts") {
  auto ok = run({"contains", "f1.fan", "--form", "x0*x1*y0*y1", "--ideal", "a0^2-a1^2, b0^2-a1^2*b1^2"});
  CHECK(ok.code == 0);
  CHECK(has(ok.out, "I in F^perp: true"));
  auto no = run({"contains", "f1.fan", "--form", "x0*x1*y0*y1", "--ideal", "a0"});
  CHECK(no.code == 0);
  CHECK(has(no.out, "I in F^perp: false"));
}

TEST_CASE("length and cactus certificates") {
  auto l = run({"length", "fake_plane.fan", "--ideal", "a0^5-a1^4*a2, a1^3-a2^3", "--ample", "3;0"});
  CHECK(l.code == 0);
  CHECK(has(l.out, "length = 5 (heuristic-stabilized"));
  auto c = run({"cactus-cert", "p114.fan", "--form", "x^2*y^2", "--ideal", "a^3, b^3", "--ample", "4"});
  CHECK(c.code == 0);
  CHECK(has(c.out, "cr(F) <= 2"));
  auto short_run = run({"length", "f1.fan", "--ideal", "a0^3-a1^3, b0^2-b1^2*a1^2", "--ample", "1,1", "--max-k", "3"});
  CHECK(has(short_run.out, "not stabilized"));
}

TEST_CASE("refusals exit with 1 and name the error") {
  auto r = run({"cactus-cert", "p114.fan", "--form", "x^2*y^2", "--ideal", "a^2", "--ample", "4"});
  CHECK(r.code == 1);
  CHECK(has(r.err, "ContainmentFailed"));
  auto wild = std::filesystem::temp_directory_path() / "toricapolar_wild.family";
  std::ofstream(wild) << "params: l\n1 | 1, l^-1, 0, 1\n";
  auto n = run({"limit-cert", "f1.fan", "--form", "x0^3*y1^2", "--family", wild.string()});
  std::filesystem::remove(wild);
  CHECK(n.code == 1);
  CHECK(has(n.err, "NegativeExponentResidue"));
}

TEST_CASE("input errors exit with 2") {
  CHECK(run({"basis", "f1.fan", "--degree", "1"}).code == 2);
  CHECK(run({"basis", "missing.fan", "--degree", "1"}).code == 2);
  CHECK(run({"hilbert", "f1.fan", "--form", "x0 +", "--box", "0..1,0..1"}).code == 2);
  CHECK(run({"nonsense"}).code == 2);
  CHECK(run({}).code == 2);
  auto bad = run({"det-check", "f1.fan", "--degree", "3,2", "-r", "2", "--at", "1,2,3,4"});
  CHECK(bad.code == 2);
  CHECK(has(bad.err, "NonSquare"));
  CHECK(has(run({"terracini", "f1.fan", "--degree", "3,2", "-r", "3", "--prime", "100"}).err, "BadPrime"));
}

TEST_CASE("help exits cleanly") {
  auto r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "terracini"));
}

TEST_CASE("decomposition and limit files") {
  auto d = run({"decompose-check", "f1.fan", "--form", "x0*x1*y0*y1", "--terms", fixtures::path("f1_four_points.terms")});
  CHECK(d.code == 0);
  CHECK(has(d.out, "equal: true"));
  auto l = run({"limit-cert", "f1.fan", "--form", "x0*x1*y0*y1", "--family", fixtures::path("f1_three_term.family")});
  CHECK(l.code == 0);
  CHECK(has(l.out, "VALID\n"));
  CHECK(has(l.out, "border rank <= 3"));
  auto f = run({"limit-cert", "f1.fan", "--form", "x0*x1*y0*y1", "--family", fixtures::path("f1_three_term_flipped.family")});
  CHECK(f.code == 0);
  CHECK(has(f.out, "INVALID"));
}

TEST_CASE("secant probes") {
  auto t = run({"terracini", "f1.fan", "--degree", "3,2", "-r", "3", "--seed", "1"});
  CHECK(t.code == 0);
  CHECK(has(t.out, "rank 9 over Z/101"));
  CHECK(has(t.out, "fills space: yes"));
  auto d = run({"det-check", "f1.fan", "--degree", "5,2", "-r", "5", "--at", "1,2,3,4,5,6,7,9,0,2", "--prime", "101"});
  CHECK(d.code == 0);
  CHECK(has(d.out, "det = 34"));
  auto e = run({"det-check", "f1.fan", "--degree", "3,2", "-r", "3", "--at", "1,2,3,4,5,7"});
  CHECK(has(e.out, "det = -256 (exact over Q)"));
}

TEST_CASE("records are self-contained and reproducible") {
  std::vector<std::string> args{"--format", "records", "terracini", "f1.fan", "--degree", "5,2", "-r", "5", "--seed", "9"};
  auto a = run(args);
  auto b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(has(a.out, "\"provenance\":\"mod-p lower bound\""));
  CHECK(has(a.out, "\"seed\":9"));
  auto h = run({"--format", "records", "hilbert", "p114.fan", "--form", "x^2*y^2", "--box", "0..4"});
  std::istringstream lines(h.out);
  std::string line;
  int n = 0;
  while (std::getline(lines, line)) {
    ++n;
    CHECK(has(line, "\"provenance\":"));
    CHECK(has(line, "\"command\":\"hilbert\""));
  }
  CHECK(n == 6);
  auto l = run({"--format", "records", "length", "p114.fan", "--ideal", "a^3, b^3", "--ample", "4"});
  CHECK(has(l.out, "\"provenance\":\"heuristic-stabilized\""));
  auto e = run({"--format", "records", "cactus-cert", "p114.fan", "--form", "x^2*y^2", "--ideal", "a^2", "--ample", "4"});
  CHECK(has(e.out, "\"error\":\"ContainmentFailed\""));
}
