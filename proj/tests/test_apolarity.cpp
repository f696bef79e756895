#include <doctest.h>

#include "fixtures.hpp"
#include "toricapolar/apolarity.hpp"
#include "toricapolar/error.hpp"

using namespace toricapolar;

namespace {

std::vector<std::size_t> grid_row(const CoxRing& ring, const ApolarForm& f, std::int64_t j, std::int64_t imax) {
  std::vector<std::size_t> row;
  for (std::int64_t i = 0; i <= imax; ++i) row.push_back(hilbert_value(ring, f, DegreeClass{{i, j}, {}}));
  return row;
}

using Row = std::vector<std::size_t>;

}  // namespace

TEST_CASE("contraction drops exponents without constants") {
  auto ring = fixtures::f1();
  auto f = ring.parse("x0*x1*y0*y1", Side::Dual);
  CHECK(ring.format(contract(ring.parse("a0*a1*b0*b1", Side::Primal), f)) == "1");
  CHECK(ring.format(contract(ring.parse("2*a0 + 3*a1", Side::Primal), f)) == "3*x0*y0*y1 + 2*x1*y0*y1");
  CHECK(ring.format(contract(ring.parse("a0*a1*b1", Side::Primal), f)) == "y0");
  CHECK(contract(ring.parse("1", Side::Primal), f) == f);
  CHECK(contract(ring.parse("a0^2", Side::Primal), f).is_zero());
  CHECK(ring.format(contract(ring.parse("a0", Side::Primal), ring.parse("x0^3", Side::Dual))) == "x0^2");
  CHECK_THROWS_AS(contract(f, f), Error);
}

TEST_CASE("forms must be nonzero, dual and homogeneous") {
  auto ring = fixtures::f1();
  CHECK_THROWS_AS(make_form(ring, "0"), Error);
  CHECK_THROWS_AS(make_form(ring, "x0 + y1"), Error);
  CHECK_THROWS_AS(make_form(ring, MultiPoly::monomial(Side::Primal, {1, 0, 0, 0})), Error);
  CHECK(make_form(ring, "x0*x1*y0*y1").degree == fixtures::deg(ring, "3,2"));
}

TEST_CASE("annihilator pieces") {
  auto ring = fixtures::f1();
  auto f = make_form(ring, "x0*x1*y0*y1");
  CHECK(annihilator_in_degree(ring, f, fixtures::deg(ring, "1,0")).empty());
  auto k = annihilator_in_degree(ring, f, fixtures::deg(ring, "2,1"));
  REQUIRE(k.size() == 2);
  // basis order a0^2*b1, a0*a1*b1, a0*b0, a1^2*b1, a1*b0: kernel is spanned by the first and fourth
  for (const auto& v : k) {
    CHECK(v[1] == 0);
    CHECK(v[2] == 0);
    CHECK(v[4] == 0);
  }
  CHECK(annihilator_in_degree(ring, f, f.degree).size() == 8);
  CHECK(annihilator_in_degree(ring, f, fixtures::deg(ring, "4,0")).size() == 5);
}

TEST_CASE("Hilbert grids of the Hirzebruch examples") {
  auto ring = fixtures::f1();
  auto f = make_form(ring, "x0*x1*y0*y1");
  CHECK(grid_row(ring, f, 0, 3) == Row{1, 2, 1, 0});
  CHECK(grid_row(ring, f, 1, 3) == Row{1, 3, 3, 1});
  CHECK(grid_row(ring, f, 2, 3) == Row{0, 1, 2, 1});
  auto g = make_form(ring, "x0^2*x1^2*y0*y1");
  CHECK(grid_row(ring, g, 0, 5) == Row{1, 2, 3, 2, 1, 0});
  CHECK(grid_row(ring, g, 1, 5) == Row{1, 3, 5, 5, 3, 1});
  CHECK(grid_row(ring, g, 2, 5) == Row{0, 1, 2, 3, 2, 1});
}

TEST_CASE("Hilbert function on P(1,1,4) and the fake plane") {
  auto p = fixtures::p114();
  auto f = make_form(p, "x^2*y^2");
  auto grid = hilbert_grid(p, f, parse_box(p.group(), "0..4"));
  Row values;
  for (const auto& d : grid.degrees) values.push_back(grid.at(d));
  CHECK(values == Row{1, 2, 3, 2, 1});

  auto fp = fixtures::fake_plane();
  auto g = make_form(fp, "x0^2*x1^2*x2^2");
  CHECK(hilbert_value(fp, g, fixtures::deg(fp, "3;1")) == 3);
  CHECK(hilbert_value(fp, g, fixtures::deg(fp, "0;0")) == 1);
  CHECK(hilbert_value(fp, g, fixtures::deg(fp, "6;0")) == 1);
  CHECK(hilbert_value(fp, g, fixtures::deg(fp, "0;1")) == 0);
}

TEST_CASE("values outside the support rectangle are computed and vanish") {
  auto ring = fixtures::f1();
  auto f = make_form(ring, "x0*x1*y0*y1");
  auto grid = hilbert_grid(ring, f, parse_box(ring.group(), "-1..5,-1..3"));
  for (const auto& d : grid.degrees) {
    const bool inside = d.free_part[0] >= 0 && d.free_part[0] <= 3 && d.free_part[1] >= 0 && d.free_part[1] <= 2;
    if (!inside) CHECK(grid.at(d) == 0);
  }
}

TEST_CASE("symmetry verdicts") {
  auto ring = fixtures::f1();
  for (const char* text : {"x0*x1*y0*y1", "x0^2*x1^2*y0*y1", "x0*y0^2", "x1^3*y1^2 - 2*x0*x1^2*y1^2 + x0*y0^2"}) {
    auto f = make_form(ring, text);
    auto v = check_symmetry(ring, f, parse_box(ring.group(), "0..5,0..3"));
    CHECK(v.symmetric);
  }
  auto p = fixtures::p114();
  CHECK(check_symmetry(p, make_form(p, "x^2*y^2"), parse_box(p.group(), "0..4")).symmetric);
  auto fp = fixtures::fake_plane();
  CHECK(check_symmetry(fp, make_form(fp, "x0^2*x1^2*x2^2"), parse_box(fp.group(), "0..6")).symmetric);
  CHECK(check_symmetry(fp, make_form(fp, "x0^4*x1*x2"), parse_box(fp.group(), "0..6;0..2")).symmetric);
}

TEST_CASE("apolarity containment") {
  auto ring = fixtures::f1();
  auto f = make_form(ring, "x0*x1*y0*y1");
  CHECK(apolar_contains(ring, make_ideal(ring, std::vector<std::string>{"a0^2 - a1^2", "b0^2 - a1^2*b1^2"}), f));
  CHECK_FALSE(apolar_contains(ring, make_ideal(ring, std::vector<std::string>{"a0"}), f));
  auto g = make_form(ring, "x0^2*x1^2*y0*y1");
  CHECK(apolar_contains(ring, make_ideal(ring, std::vector<std::string>{"a0^3", "a1^3", "b0^2", "b1^2"}), g));

  auto p = fixtures::p114();
  CHECK(apolar_contains(p, make_ideal(p, std::vector<std::string>{"a^3 - b^3", "c"}), make_form(p, "x^2*y^2")));

  IdealGens bad{{ring.parse("a0 + b1", Side::Primal)}, {fixtures::deg(ring, "1,0")}};
  try {
    apolar_contains(ring, bad, f);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonHomogeneousGenerator);
  }
}

TEST_CASE("degree boxes") {
  auto fp = fixtures::fake_plane();
  CHECK(parse_box(fp.group(), "0..2").degrees().size() == 9);
  CHECK(parse_box(fp.group(), "0..2;1").degrees().size() == 3);
  auto f1 = fixtures::f1();
  auto box = parse_box(f1.group(), "0..1,2");
  CHECK(box.degrees() == std::vector<DegreeClass>{{{0, 2}, {}}, {{1, 2}, {}}});
  CHECK_THROWS_AS(parse_box(f1.group(), "0..1"), Error);
  CHECK_THROWS_AS(parse_box(f1.group(), "2..1,0"), Error);
  CHECK_THROWS_AS(parse_box(f1.group(), "a..1,0"), Error);
}
