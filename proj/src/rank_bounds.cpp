#include "toricapolar/rank_bounds.hpp"

#include <algorithm>

namespace toricapolar {

CatMatrix catalecticant(const CoxRing& ring, const ApolarForm& f, const DegreeClass& beta,
                        std::uint64_t prescreen_prime) {
  CatMatrix m;
  m.beta = ring.group().normalize(beta);
  m.rows = ring.basis(m.beta);
  m.cols = ring.basis(ring.group().sub(f.degree, m.beta));
  m.entries = catalecticant_entries(ring, f, m.beta);
  auto r = rank_with_prescreen(m.entries, m.cols.size(), prescreen_prime);
  m.rank = r.rank;
  m.rank_from_prescreen = r.from_prescreen;
  return m;
}

BoundReport bound_report(const CoxRing& ring, const ApolarForm& f, const DegreeClass& beta) {
  auto m = catalecticant(ring, f, beta);
  BoundReport b;
  b.beta = m.beta;
  b.rows = m.rows.size();
  b.cols = m.cols.size();
  b.cat_rank = m.rank;
  b.cartier = is_cartier(ring.fan(), m.beta);
  b.border_bound = m.rank;
  b.rank_bound = m.rank;
  if (b.cartier) b.cactus_bound = m.rank;
  return b;
}

BestBounds best_bounds(const CoxRing& ring, const ApolarForm& f, const DegreeBox& box) {
  BestBounds out;
  for (const auto& d : box.degrees()) out.sweep.push_back(bound_report(ring, f, d));

  auto before = [&](const DegreeClass& a, const DegreeClass& b) {
    auto ga = grade(ring.certificate(), a), gb = grade(ring.certificate(), b);
    if (ga != gb) return ga < gb;
    return a < b;
  };
  auto offer = [&](std::optional<BestBound>& best, std::size_t value, const DegreeClass& beta) {
    if (!best || value > best->value || (value == best->value && before(beta, best->beta)))
      best = BestBound{value, beta};
  };
  for (const auto& r : out.sweep) {
    offer(out.border, r.border_bound, r.beta);
    offer(out.rank, r.rank_bound, r.beta);
    if (r.cactus_bound) offer(out.cactus, *r.cactus_bound, r.beta);
  }
  return out;
}

}  // namespace toricapolar
