#include "toricapolar/scheme_ideals.hpp"

#include <algorithm>
#include <map>

#include "toricapolar/error.hpp"

namespace toricapolar {

namespace {

std::map<Monomial, std::size_t> index_of(const std::vector<Monomial>& basis) {
  std::map<Monomial, std::size_t> idx;
  for (std::size_t i = 0; i < basis.size(); ++i) idx.emplace(basis[i], i);
  return idx;
}

// Coordinates of m * g over the basis with index map idx.
std::vector<Rational> product_row(const Monomial& m, const MultiPoly& g, const std::map<Monomial, std::size_t>& idx,
                                  std::size_t width) {
  std::vector<Rational> row(width);
  Monomial e(m.size());
  for (const auto& [gm, c] : g.terms) {
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = m[i] + gm[i];
    auto it = idx.find(e);
    if (it == idx.end()) throw Error(ErrorKind::InvalidInput, "product left its graded piece");
    row[it->second] += c;
  }
  return row;
}

}  // namespace

EchelonBasis ideal_echelon(const CoxRing& ring, const IdealGens& ideal, const DegreeClass& delta) {
  const auto& basis = ring.basis(delta);
  const auto idx = index_of(basis);
  EchelonBasis eb(basis.size());
  for (std::size_t j = 0; j < ideal.generators.size(); ++j) {
    const auto& mults = ring.basis(ring.group().sub(delta, ideal.degrees[j]));
    for (const auto& m : mults) {
      if (eb.rank() == basis.size()) return eb;
      eb.insert(product_row(m, ideal.generators[j], idx, basis.size()));
    }
  }
  return eb;
}

RationalMatrix ideal_piece(const CoxRing& ring, const IdealGens& ideal, const DegreeClass& delta) {
  return ideal_echelon(ring, ideal, delta).reduced_rows();
}

RationalMatrix colon_piece(const CoxRing& ring, const IdealGens& ideal, const IrrelevantIdeal& b,
                           const DegreeClass& delta) {
  const auto& basis = ring.basis(delta);
  // row m: concatenation over b of the residual of m*b modulo I_{delta + deg b}
  RationalMatrix m(basis.size());
  std::size_t width = 0;
  for (const auto& gen : b.generators) {
    const auto shifted = ring.group().add(delta, ring.degree(gen));
    const auto& target = ring.basis(shifted);
    const auto idx = index_of(target);
    const auto eb = ideal_echelon(ring, ideal, shifted);
    auto bpoly = MultiPoly::monomial(Side::Primal, gen);
    for (std::size_t r = 0; r < basis.size(); ++r) {
      auto res = eb.residual(product_row(basis[r], bpoly, idx, target.size()));
      m[r].insert(m[r].end(), res.begin(), res.end());
    }
    width += target.size();
  }
  if (width == 0) {
    RationalMatrix id(basis.size(), std::vector<Rational>(basis.size()));
    for (std::size_t i = 0; i < basis.size(); ++i) id[i][i] = 1;
    return id;
  }
  return left_nullspace(m, width);
}

std::int64_t saturation_gap(const CoxRing& ring, const IdealGens& ideal, const IrrelevantIdeal& b,
                            const DegreeClass& delta) {
  auto colon = colon_piece(ring, ideal, b, delta);
  auto piece = ideal_echelon(ring, ideal, delta);
  return static_cast<std::int64_t>(colon.size()) - static_cast<std::int64_t>(piece.rank());
}

LengthEstimate length_estimate(const CoxRing& ring, const IdealGens& ideal, const DegreeClass& ample,
                               std::size_t window, std::size_t max_k) {
  if (window == 0 || max_k == 0) throw Error(ErrorKind::InvalidInput, "window and max_k must be positive");
  LengthEstimate est;
  for (std::size_t k = 1; k <= max_k; ++k) {
    auto delta = ring.group().scale(ample, static_cast<std::int64_t>(k));
    auto dim = static_cast<std::int64_t>(ring.basis(delta).size());
    auto in_ideal = static_cast<std::int64_t>(ideal_echelon(ring, ideal, delta).rank());
    est.samples.emplace_back(static_cast<std::int64_t>(k), dim - in_ideal);
  }
  est.value = est.samples.back().second;
  if (est.samples.size() >= window) {
    est.stabilized = std::all_of(est.samples.end() - static_cast<std::ptrdiff_t>(window), est.samples.end(),
                                 [&](const auto& s) { return s.second == est.value; });
  }
  return est;
}

CactusCertificate cactus_certificate(const CoxRing& ring, const ApolarForm& f, const IdealGens& ideal,
                                     const DegreeClass& ample, std::size_t window, std::size_t max_k) {
  if (!apolar_contains(ring, ideal, f))
    throw Error(ErrorKind::ContainmentFailed, "the ideal does not annihilate " + ring.format(f.form));
  CactusCertificate c;
  c.contained = true;
  c.length = length_estimate(ring, ideal, ample, window, max_k);
  c.claimed = c.length.stabilized;
  return c;
}

}  // namespace toricapolar
