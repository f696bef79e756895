#include <doctest.h>

#include <algorithm>
#include <random>

#include "fixtures.hpp"
#include "toricapolar/rank_bounds.hpp"

using namespace toricapolar;

TEST_CASE("catalecticant of the four-point example") {
  auto ring = fixtures::f1();
  auto f = make_form(ring, "x0*x1*y0*y1");
  auto m = catalecticant(ring, f, fixtures::deg(ring, "2,1"));
  CHECK(m.rows.size() == 5);
  CHECK(m.cols.size() == 3);
  CHECK(m.rank == 3);
  // entry(r, c) is the coefficient of the column monomial in row _| F
  for (std::size_t r = 0; r < m.rows.size(); ++r) {
    auto g = contract(MultiPoly::monomial(Side::Primal, m.rows[r]), f.form);
    for (std::size_t c = 0; c < m.cols.size(); ++c) CHECK(m.entries[r][c] == g.coefficient(m.cols[c]));
  }
}

TEST_CASE("catalecticant at zero and at the degree of F") {
  auto ring = fixtures::f1();
  auto f = make_form(ring, "x0*x1*y0*y1 + 2*x0*y0^2");
  auto zero = catalecticant(ring, f, fixtures::deg(ring, "0,0"));
  CHECK(zero.rows.size() == 1);
  CHECK(zero.cols.size() == 9);
  CHECK(zero.rank == 1);
  CHECK(catalecticant(ring, f, f.degree).rank == 1);
  auto empty = catalecticant(ring, f, fixtures::deg(ring, "4,0"));
  CHECK(empty.cols.empty());
  CHECK(empty.rank == 0);
}

TEST_CASE("prescreen agrees with exact rank") {
  auto ring = fixtures::f1();
  auto f = make_form(ring, "x0^2*x1^2*y0*y1 - 3*x0^4*y0*y1 + 1/7*x1^3*y0^2");
  for (const char* d : {"1,0", "2,1", "3,1", "2,0", "1,1"}) {
    auto a = catalecticant(ring, f, fixtures::deg(ring, d), 101);
    auto b = catalecticant(ring, f, fixtures::deg(ring, d), 0);
    CHECK(a.rank == b.rank);
    CHECK_FALSE(b.rank_from_prescreen);
  }
  // 7 divides a denominator: prescreen mod 7 must not be trusted
  auto c = catalecticant(ring, f, fixtures::deg(ring, "2,1"), 7);
  CHECK_FALSE(c.rank_from_prescreen);
}

TEST_CASE("bound reports and the Cartier gate") {
  auto f1 = fixtures::f1();
  auto b = bound_report(f1, make_form(f1, "x0*x1*y0*y1"), fixtures::deg(f1, "2,1"));
  CHECK(b.border_bound == 3);
  CHECK(b.rank_bound == 3);
  REQUIRE(b.cactus_bound);
  CHECK(*b.cactus_bound == 3);

  auto p = fixtures::p114();
  auto q = bound_report(p, make_form(p, "x^2*y^2"), fixtures::deg(p, "2"));
  CHECK(q.border_bound == 3);
  CHECK_FALSE(q.cartier);
  CHECK_FALSE(q.cactus_bound);

  auto fp = fixtures::fake_plane();
  auto g = make_form(fp, "x0^2*x1^2*x2^2");
  CHECK(bound_report(fp, g, fixtures::deg(fp, "3;1")).border_bound == 3);
  auto at30 = bound_report(fp, g, fixtures::deg(fp, "3;0"));
  CHECK(at30.cartier);
  CHECK(at30.cactus_bound);
}

TEST_CASE("best bounds over a box") {
  auto f1 = fixtures::f1();
  auto best = best_bounds(f1, make_form(f1, "x0^2*x1^2*y0*y1"), parse_box(f1.group(), "0..5,0..2"));
  REQUIRE(best.border);
  CHECK(best.border->value == 5);
  CHECK(best.border->beta == fixtures::deg(f1, "2,1"));
  REQUIRE(best.cactus);
  CHECK(best.cactus->value == 5);

  auto p = fixtures::p114();
  auto pb = best_bounds(p, make_form(p, "x^2*y^2"), parse_box(p.group(), "0..4"));
  CHECK(pb.border->value == 3);
  CHECK(pb.border->beta == fixtures::deg(p, "2"));
  REQUIRE(pb.cactus);
  CHECK(pb.cactus->value == 1);
  CHECK(pb.cactus->beta == fixtures::deg(p, "0"));
  for (const auto& r : pb.sweep) CHECK(r.cactus_bound.has_value() == (r.beta.free_part[0] % 4 == 0));
}

TEST_CASE("a torus-fixed point has rank-one catalecticants") {
  auto f1 = fixtures::f1();
  // the image of [1, 0; 1, 0]
  auto f = make_form(f1, "x0*y0^2");
  auto best = best_bounds(f1, f, parse_box(f1.group(), "0..4,0..2"));
  CHECK(best.border->value == 1);
  for (const auto& r : best.sweep) CHECK(r.cat_rank <= 1);
}

TEST_CASE("rank is invariant under shuffling rows and columns") {
  auto f1 = fixtures::f1();
  auto f = make_form(f1, "x0^2*x1^2*y0*y1 + x1^5*y1^2 - x0^3*y0^2");
  std::mt19937 rng(5);
  for (const char* d : {"2,1", "3,1", "1,1"}) {
    auto m = catalecticant(f1, f, fixtures::deg(f1, d), 0);
    auto e = m.entries;
    std::shuffle(e.begin(), e.end(), rng);
    std::vector<std::size_t> perm(m.cols.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    RationalMatrix s(e.size(), std::vector<Rational>(perm.size()));
    for (std::size_t r = 0; r < e.size(); ++r)
      for (std::size_t c = 0; c < perm.size(); ++c) s[r][c] = e[r][perm[c]];
    CHECK(rank_with_prescreen(s, perm.size(), 0).rank == m.rank);
  }
}
