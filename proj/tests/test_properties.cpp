#include <doctest.h>

#include <array>
#include <random>

#include "fixtures.hpp"
#include "toricapolar/rank_bounds.hpp"
#include "toricapolar/scheme_ideals.hpp"

using namespace toricapolar;

namespace {

const std::array<CoxRing, 3>& all_rings() {
  static const std::array<CoxRing, 3> rings{fixtures::f1(), fixtures::p114(), fixtures::fake_plane()};
  return rings;
}

// Every degree of a small box, for each ring.
std::vector<DegreeClass> small_degrees(const CoxRing& ring) {
  if (ring.group().free_rank() == 2) return parse_box(ring.group(), "0..3,0..2").degrees();
  return parse_box(ring.group(), "0..5").degrees();
}

MultiPoly random_poly(const CoxRing& ring, Side side, const DegreeClass& d, std::mt19937& rng) {
  std::uniform_int_distribution<int> coeff(-4, 4);
  MultiPoly p(side);
  for (const auto& m : ring.basis(d)) p.add_term(m, coeff(rng));
  return p;
}

std::size_t span_rank(RationalMatrix a, const RationalMatrix& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a.empty() ? 0 : rank(a);
}

}  // namespace

TEST_CASE("the monomial pairing is the identity") {
  for (const auto& ring : all_rings()) {
    for (const auto& d : small_degrees(ring)) {
      const auto& basis = ring.basis(d);
      for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < basis.size(); ++j) {
          auto c = contract(MultiPoly::monomial(Side::Primal, basis[i]), MultiPoly::monomial(Side::Dual, basis[j]));
          CHECK(c.coefficient(Monomial(ring.nvars(), 0)) == (i == j ? 1 : 0));
          CHECK(c.terms.size() <= 1);
        }
    }
  }
}

TEST_CASE("contraction is a module action") {
  std::mt19937 rng(11);
  const auto& rings = all_rings();
  int checked = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto& ring = rings[trial % rings.size()];
    auto degs = small_degrees(ring);
    std::uniform_int_distribution<std::size_t> pick(0, degs.size() - 1);
    auto g = random_poly(ring, Side::Primal, degs[pick(rng)], rng);
    auto h = random_poly(ring, Side::Primal, degs[pick(rng)], rng);
    auto top = ring.group().add(ring.group().add(degs[pick(rng)], degs[pick(rng)]), degs[pick(rng)]);
    auto f = random_poly(ring, Side::Dual, top, rng);
    CHECK(contract(g * h, f) == contract(g, contract(h, f)));
    CHECK(contract(h * g, f) == contract(g * h, f));
    ++checked;
  }
  CHECK(checked == 100);
}

TEST_CASE("catalecticant ranks are symmetric") {
  std::mt19937 rng(3);
  struct Case {
    CoxRing ring;
    const char* alpha;
    const char* box;
  };
  const Case cases[] = {{fixtures::f1(), "4,2", "0..4,0..2"},
                        {fixtures::p114(), "8", "0..8"},
                        {fixtures::fake_plane(), "4;1", "0..4"}};
  for (const auto& c : cases) {
    const auto alpha = fixtures::deg(c.ring, c.alpha);
    for (int trial = 0; trial < 3; ++trial) {
      auto f = make_form(c.ring, random_poly(c.ring, Side::Dual, alpha, rng));
      auto box = parse_box(c.ring.group(), c.box);
      for (const auto& beta : box.degrees()) {
        const auto mirror = c.ring.group().sub(alpha, beta);
        CHECK(catalecticant(c.ring, f, beta, 0).rank == catalecticant(c.ring, f, mirror, 0).rank);
      }
      CHECK(check_symmetry(c.ring, f, box).symmetric);
    }
  }
}

TEST_CASE("monomial bases do not depend on the positivity certificate") {
  auto f1 = fixtures::f1();
  for (std::vector<std::int64_t> w : {std::vector<std::int64_t>{2, 1}, {1, 3}}) {
    PositivityCertificate cert{w};
    REQUIRE(is_valid_certificate(f1.fan(), cert));
    CoxRing other(f1.fan(), {}, {}, cert);
    for (const auto& d : small_degrees(f1)) CHECK(other.basis(d) == f1.basis(d));
  }
  auto p = fixtures::p114();
  CoxRing other(p.fan(), {}, {}, PositivityCertificate{{2}});
  for (const auto& d : small_degrees(p)) CHECK(other.basis(d) == p.basis(d));
  auto fp = fixtures::fake_plane();
  CoxRing scaled(fp.fan(), {}, {}, PositivityCertificate{{5}});
  for (const auto& d : small_degrees(fp)) CHECK(scaled.basis(d) == fp.basis(d));
}

TEST_CASE("the colon contains the ideal") {
  std::mt19937 rng(8);
  for (const auto& ring : all_rings()) {
    const auto b = ring.fan().irrelevant_ideal();
    auto degs = small_degrees(ring);
    std::uniform_int_distribution<std::size_t> pick(1, degs.size() - 1);
    for (int trial = 0; trial < 4; ++trial) {
      std::vector<MultiPoly> gens;
      for (int k = 0; k < 2; ++k) {
        auto g = random_poly(ring, Side::Primal, degs[pick(rng)], rng);
        if (!g.is_zero()) gens.push_back(g);
      }
      if (gens.empty()) continue;
      auto ideal = make_ideal(ring, gens);
      for (const auto& d : degs) {
        auto colon = colon_piece(ring, ideal, b, d);
        auto piece = ideal_piece(ring, ideal, d);
        CHECK(span_rank(colon, piece) == colon.size());
        CHECK(saturation_gap(ring, ideal, b, d) >= 0);
      }
    }
  }
}

TEST_CASE("parametrization is equivariant under the torus of the class group") {
  std::mt19937 rng(21);
  std::uniform_int_distribution<int> coord(1, 6);
  // nonzero, so no point lands in the irrelevant locus
  auto nonzero = [&] { return Rational(coord(rng) - 7 * (coord(rng) % 2)); };
  const std::vector<const char*> alphas{"3,2", "4", "3;1"};
  const auto& rings = all_rings();
  for (std::size_t which = 0; which < rings.size(); ++which) {
    const auto& ring = rings[which];
    const auto alpha = fixtures::deg(ring, alphas[which]);
    const auto fr = ring.group().free_rank();
    for (int trial = 0; trial < 5; ++trial) {
      ParamPoint p(ring.nvars());
      for (auto& x : p) x = nonzero();
      std::vector<Rational> t(fr);
      for (auto& x : t) x = nonzero() / (1 + trial);
      Rational factor = 1;
      ParamPoint scaled = p;
      for (std::size_t i = 0; i < ring.nvars(); ++i) {
        const auto& d = ring.fan().var_degrees()[i];
        for (std::size_t k = 0; k < fr; ++k)
          for (std::int64_t e = 0; e < d.free_part[k]; ++e) scaled[i] *= t[k];
      }
      for (std::size_t k = 0; k < fr; ++k)
        for (std::int64_t e = 0; e < alpha.free_part[k]; ++e) factor *= t[k];
      CHECK(parametrize(ring, alpha, scaled) == factor * parametrize(ring, alpha, p));
    }
  }
}
