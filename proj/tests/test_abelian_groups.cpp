#include <doctest.h>

#include "toricapolar/abelian_groups.hpp"
#include "toricapolar/error.hpp"

using namespace toricapolar;

namespace {

IntMatrix diag_matrix(const SmithDecomposition& s, std::size_t rows, std::size_t cols) {
  IntMatrix d(rows, cols);
  for (std::size_t i = 0; i < s.diag.size(); ++i) d(i, i) = s.diag[i];
  return d;
}

}  // namespace

TEST_CASE("smith normal form reproduces the diagonal") {
  IntMatrix m{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}};
  auto s = smith_normal_form(m);
  CHECK(s.left * m * s.right == diag_matrix(s, 3, 3));
  REQUIRE(s.diag.size() == 3);
  CHECK(s.diag[0] == 2);
  CHECK(s.diag[1] == 6);
  CHECK(s.diag[2] == 12);
  CHECK(abs(s.left.determinant()) == 1);
  CHECK(abs(s.right.determinant()) == 1);
}

TEST_CASE("smith normal form of a tall matrix") {
  IntMatrix m{{1, 0}, {-1, -1}, {0, 1}, {0, -1}};
  auto s = smith_normal_form(m);
  CHECK(s.left * m * s.right == diag_matrix(s, 4, 2));
  CHECK(s.diag[0] == 1);
  CHECK(s.diag[1] == 1);
}

TEST_CASE("determinant and unimodular inverse") {
  IntMatrix m{{2, 1}, {1, 1}};
  CHECK(m.determinant() == 1);
  CHECK(m * unimodular_inverse(m) == IntMatrix::identity(2));
  CHECK_THROWS_AS(unimodular_inverse(IntMatrix{{2, 0}, {0, 1}}), Error);
}

TEST_CASE("graded group arithmetic and syntax") {
  GradedGroup g(1, {3});
  auto a = g.parse("6;2");
  CHECK(a.free_part == std::vector<std::int64_t>{6});
  CHECK(g.format(g.add(a, g.parse("1;2"))) == "7;1");
  CHECK(g.format(g.negate(g.parse("1;1"))) == "-1;2");
  CHECK(g.format(g.scale(g.parse("1;1"), 3)) == "3;0");
  CHECK(g.describe() == "Z x Z/3");
  CHECK(GradedGroup(2, {}).describe() == "Z^2");
  CHECK(GradedGroup(0, {}).describe() == "0");
  CHECK_THROWS_AS(g.parse("1,2"), Error);
  CHECK_THROWS_AS(g.parse("x;1"), Error);
  CHECK(g.parse("0;5") == g.parse("0;2"));
}

TEST_CASE("cokernel of a rank-deficient map is rejected") {
  IntMatrix m{{1, 2}, {2, 4}};
  try {
    cokernel(m);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotFullRank);
  }
}

TEST_CASE("cokernel with torsion") {
  // Z^2 -> Z^3 for the rays of the fake plane
  IntMatrix m{{-1, -1}, {2, -1}, {-1, 2}};
  auto c = cokernel(m);
  CHECK(c.group().free_rank() == 1);
  CHECK(c.group().torsion_orders() == std::vector<std::int64_t>{3});
  // image of M maps to zero
  for (std::size_t j = 0; j < 2; ++j) {
    std::vector<std::int64_t> col{m(0, j).get_si(), m(1, j).get_si(), m(2, j).get_si()};
    CHECK(c.project(std::span<const std::int64_t>(col)) == c.group().zero());
  }
  auto d = c.group().parse("4;1");
  auto lifted = c.lift(d);
  CHECK(c.project(std::span<const Integer>(lifted)) == d);
}

TEST_CASE("rebasing makes the chosen generators unit vectors") {
  IntMatrix m{{1, 0}, {-1, -1}, {0, 1}, {0, -1}};
  auto c = cokernel(m);
  std::vector<std::size_t> gens{0, 3};
  auto r = c.rebased(gens);
  REQUIRE(r);
  CHECK(r->project_unit(0).free_part == std::vector<std::int64_t>{1, 0});
  CHECK(r->project_unit(3).free_part == std::vector<std::int64_t>{0, 1});
  CHECK(r->project_unit(2).free_part == std::vector<std::int64_t>{1, 1});
  std::vector<std::size_t> bad{0, 1};
  CHECK_FALSE(c.rebased(bad));
}
