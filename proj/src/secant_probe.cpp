#include "toricapolar/secant_probe.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "toricapolar/error.hpp"

namespace toricapolar {

void check_point(const FanModel& fan, const ParamPoint& p) {
  if (p.size() != fan.ray_count())
    throw Error(ErrorKind::InvalidInput, "point needs " + std::to_string(fan.ray_count()) + " coordinates");
  for (const auto& gen : fan.irrelevant_ideal().generators) {
    bool nonzero = true;
    for (std::size_t i = 0; i < gen.size() && nonzero; ++i)
      if (gen[i] && p[i] == 0) nonzero = false;
    if (nonzero) return;
  }
  throw Error(ErrorKind::PointInIrrelevantLocus, "the point lies in the vanishing set of the irrelevant ideal");
}

namespace {

Rational power(const Rational& v, int e) {
  Rational out = 1;
  for (int i = 0; i < e; ++i) out *= v;
  return out;
}

}  // namespace

MultiPoly parametrize(const CoxRing& ring, const DegreeClass& alpha, const ParamPoint& p) {
  check_point(ring.fan(), p);
  MultiPoly out(Side::Dual);
  for (const auto& b : ring.basis(alpha)) {
    Rational c = 1;
    for (std::size_t i = 0; i < b.size() && c != 0; ++i) c *= power(p[i], b[i]);
    out.add_term(b, c);
  }
  return out;
}

DecompositionCheck verify_decomposition(const CoxRing& ring, const ApolarForm& f,
                                        const std::vector<DecompositionTerm>& terms) {
  MultiPoly sum(Side::Dual);
  for (const auto& t : terms) sum = sum + t.coefficient * parametrize(ring, f.degree, t.point);
  DecompositionCheck out;
  out.residual = sum - f.form;
  out.equal = out.residual.is_zero();
  return out;
}

// ---------------------------------------------------------------- charts

Chart default_chart(const FanModel& fan) {
  if (fan.max_cones().empty()) throw Error(ErrorKind::InvalidInput, "fan has no maximal cones");
  return Chart{fan.max_cones()[fan.reference_cone()]};
}

Chart make_chart(const FanModel& fan, std::vector<std::size_t> free_vars) {
  std::sort(free_vars.begin(), free_vars.end());
  if (std::adjacent_find(free_vars.begin(), free_vars.end()) != free_vars.end())
    throw Error(ErrorKind::InvalidInput, "repeated chart variable");
  for (auto v : free_vars)
    if (v >= fan.ray_count()) throw Error(ErrorKind::InvalidInput, "chart variable out of range");
  return Chart{std::move(free_vars)};
}

std::vector<Monomial> chart_basis(const CoxRing& ring, const DegreeClass& alpha, const Chart& chart) {
  auto basis = ring.basis(alpha);
  auto key = [&](const Monomial& m) {
    std::vector<int> k;
    for (auto it = chart.free_vars.rbegin(); it != chart.free_vars.rend(); ++it) k.push_back(m[*it]);
    return k;
  };
  std::stable_sort(basis.begin(), basis.end(), [&](const Monomial& a, const Monomial& b) { return key(a) < key(b); });
  return basis;
}

// ---------------------------------------------------------------- limits

namespace {

LaurentPoly laurent_one(std::size_t nparams) { return LaurentPoly{{std::vector<int>(nparams, 0), Rational(1)}}; }

LaurentPoly laurent_mul(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      std::vector<int> e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      auto& slot = out[e];
      slot += ca * cb;
      if (slot == 0) out.erase(e);
    }
  return out;
}

}  // namespace

LimitCertificate limit_certificate(const CoxRing& ring, const ApolarForm& f, const LaurentFamily& family) {
  const std::size_t k = family.params.size();
  const std::size_t n = ring.nvars();
  const auto order = chart_basis(ring, f.degree, default_chart(ring.fan()));
  std::map<Monomial, std::size_t> position;
  for (std::size_t i = 0; i < order.size(); ++i) position.emplace(order[i], i);

  // (chart position, param exponents) -> coefficient
  std::map<std::pair<std::size_t, std::vector<int>>, Rational> acc;
  auto add = [&](std::size_t pos, const std::vector<int>& e, const Rational& c) {
    auto key = std::make_pair(pos, e);
    auto& slot = acc[key];
    slot += c;
    if (slot == 0) acc.erase(key);
  };

  for (const auto& term : family.terms) {
    if (term.point.size() != n) throw Error(ErrorKind::InvalidInput, "family point needs " + std::to_string(n) + " coordinates");
    // powers of each coordinate up to the largest exponent needed
    std::vector<std::vector<LaurentPoly>> powers(n);
    for (std::size_t i = 0; i < n; ++i) {
      int top = 0;
      for (const auto& b : order) top = std::max(top, b[i]);
      powers[i].push_back(laurent_one(k));
      for (int e = 1; e <= top; ++e) powers[i].push_back(laurent_mul(powers[i].back(), term.point[i]));
    }
    for (std::size_t pos = 0; pos < order.size(); ++pos) {
      LaurentPoly v = term.coefficient;
      for (std::size_t i = 0; i < n && !v.empty(); ++i) v = laurent_mul(v, powers[i][static_cast<std::size_t>(order[pos][i])]);
      for (const auto& [e, c] : v) add(pos, e, c);
    }
  }
  for (const auto& [m, c] : f.form.terms) add(position.at(m), std::vector<int>(k, 0), -c);

  LimitCertificate out;
  out.border_rank_bound = family.terms.size();
  bool constant_part = false, negative = false;
  for (const auto& [key, c] : acc) {
    const auto& e = key.second;
    if (std::all_of(e.begin(), e.end(), [](int x) { return x == 0; })) constant_part = true;
    if (std::any_of(e.begin(), e.end(), [](int x) { return x < 0; })) negative = true;
    out.residue.push_back(ResidueTerm{e, order[key.first], c});
  }
  std::stable_sort(out.residue.begin(), out.residue.end(), [&](const ResidueTerm& a, const ResidueTerm& b) {
    auto pa = position.at(a.dual), pb = position.at(b.dual);
    if (pa != pb) return pa < pb;
    return a.param_exponents > b.param_exponents;
  });
  if (constant_part) return out;
  if (negative)
    throw Error(ErrorKind::NegativeExponentResidue,
                "the family diverges: " + format_residue(ring, family, out.residue));
  out.valid = true;
  return out;
}

std::string format_residue(const CoxRing& ring, const LaurentFamily& family, const std::vector<ResidueTerm>& residue) {
  std::vector<std::string> names = family.params;
  const auto& dual = ring.names(Side::Dual);
  names.insert(names.end(), dual.begin(), dual.end());
  std::vector<ParsedTerm> terms;
  for (const auto& t : residue) {
    std::vector<int> e = t.param_exponents;
    e.insert(e.end(), t.dual.begin(), t.dual.end());
    terms.push_back({t.coefficient, std::move(e)});
  }
  return format_terms(terms, names);
}

// ---------------------------------------------------------------- Terracini

namespace {

void check_prime(std::uint64_t p, const std::vector<Monomial>& basis) {
  if (p >= (std::uint64_t{1} << 32) || !is_prime(p))
    throw Error(ErrorKind::BadPrime, std::to_string(p) + " is not a prime below 2^32");
  int top = 0;
  for (const auto& b : basis)
    for (int e : b) top = std::max(top, e);
  if (p <= static_cast<std::uint64_t>(top))
    throw Error(ErrorKind::BadPrime, "p = " + std::to_string(p) + " divides a derivative coefficient");
}

Chart resolve_chart(const FanModel& fan, const std::optional<Chart>& chart) {
  return chart ? make_chart(fan, chart->free_vars) : default_chart(fan);
}

}  // namespace

RationalMatrix terracini_matrix(const CoxRing& ring, const DegreeClass& alpha, const Chart& chart,
                                const std::vector<Rational>& assignment, std::size_t r) {
  const std::size_t n = chart.free_vars.size();
  if (assignment.size() != r * n)
    throw Error(ErrorKind::InvalidInput, "expected " + std::to_string(r * n) + " chart coordinates, got " +
                                             std::to_string(assignment.size()));
  const auto basis = chart_basis(ring, alpha, chart);
  RationalMatrix m;
  for (std::size_t pt = 0; pt < r; ++pt) {
    const Rational* v = assignment.data() + pt * n;
    std::vector<Rational> value(basis.size());
    for (std::size_t c = 0; c < basis.size(); ++c) {
      Rational x = 1;
      for (std::size_t j = 0; j < n; ++j) x *= power(v[j], basis[c][chart.free_vars[j]]);
      value[c] = x;
    }
    m.push_back(std::move(value));
    for (std::size_t d = 0; d < n; ++d) {
      std::vector<Rational> row(basis.size());
      for (std::size_t c = 0; c < basis.size(); ++c) {
        const int e = basis[c][chart.free_vars[d]];
        if (e == 0) continue;
        Rational x = e;
        for (std::size_t j = 0; j < n; ++j) x *= power(v[j], basis[c][chart.free_vars[j]] - (j == d ? 1 : 0));
        row[c] = x;
      }
      m.push_back(std::move(row));
    }
  }
  return m;
}

TerraciniResult terracini_probe(const CoxRing& ring, const DegreeClass& alpha, const TerraciniOptions& opts) {
  if (opts.r == 0 || opts.trials == 0) throw Error(ErrorKind::InvalidInput, "r and trials must be positive");
  const Chart chart = resolve_chart(ring.fan(), opts.chart);
  const auto basis = chart_basis(ring, alpha, chart);
  const std::uint64_t p = opts.prime;
  check_prime(p, basis);
  const std::size_t n = chart.free_vars.size();

  TerraciniResult res;
  res.space_dim = basis.size();
  res.rows = opts.r * (n + 1);
  res.expected_rank = std::min(res.space_dim, res.rows);

  for (std::size_t t = 0; t < opts.trials; ++t) {
    std::mt19937_64 rng(opts.seed + t);
    std::uniform_int_distribution<std::uint64_t> dist(1, p - 1);
    ModMatrix m;
    for (std::size_t pt = 0; pt < opts.r; ++pt) {
      std::vector<std::uint64_t> v(n);
      for (auto& x : v) x = dist(rng);
      std::vector<std::uint64_t> value(basis.size());
      for (std::size_t c = 0; c < basis.size(); ++c) {
        std::uint64_t x = 1;
        for (std::size_t j = 0; j < n; ++j) x = x * pow_mod(v[j], static_cast<std::uint64_t>(basis[c][chart.free_vars[j]]), p) % p;
        value[c] = x;
      }
      m.push_back(std::move(value));
      for (std::size_t d = 0; d < n; ++d) {
        std::vector<std::uint64_t> row(basis.size(), 0);
        for (std::size_t c = 0; c < basis.size(); ++c) {
          const int e = basis[c][chart.free_vars[d]];
          if (e == 0) continue;
          std::uint64_t x = static_cast<std::uint64_t>(e) % p;
          for (std::size_t j = 0; j < n; ++j) {
            auto ej = static_cast<std::uint64_t>(basis[c][chart.free_vars[j]] - (j == d ? 1 : 0));
            x = x * pow_mod(v[j], ej, p) % p;
          }
          row[c] = x;
        }
        m.push_back(std::move(row));
      }
    }
    res.trial_ranks.push_back(rank_mod(std::move(m), p));
  }
  res.rank = *std::max_element(res.trial_ranks.begin(), res.trial_ranks.end());
  res.estimated_dim = static_cast<std::int64_t>(res.rank) - 1;
  res.fills_space = res.rank == res.space_dim;
  res.degenerate = res.rank < res.expected_rank;
  return res;
}

Rational terracini_determinant(const CoxRing& ring, const DegreeClass& alpha, std::size_t r,
                               const std::vector<Rational>& assignment, const std::optional<Chart>& chart) {
  const Chart c = resolve_chart(ring.fan(), chart);
  const std::size_t dim = ring.basis(alpha).size();
  if (r * (c.free_vars.size() + 1) != dim)
    throw Error(ErrorKind::NonSquare, std::to_string(r * (c.free_vars.size() + 1)) + " rows against " +
                                          std::to_string(dim) + " columns");
  return determinant(terracini_matrix(ring, alpha, c, assignment, r));
}

std::uint64_t terracini_determinant_mod(const CoxRing& ring, const DegreeClass& alpha, std::size_t r,
                                        const std::vector<Rational>& assignment, std::uint64_t p,
                                        const std::optional<Chart>& chart) {
  const Chart c = resolve_chart(ring.fan(), chart);
  const std::size_t dim = ring.basis(alpha).size();
  if (r * (c.free_vars.size() + 1) != dim)
    throw Error(ErrorKind::NonSquare, std::to_string(r * (c.free_vars.size() + 1)) + " rows against " +
                                          std::to_string(dim) + " columns");
  check_prime(p, ring.basis(alpha));
  auto m = terracini_matrix(ring, alpha, c, assignment, r);
  ModMatrix mm;
  for (const auto& row : m) {
    std::vector<std::uint64_t> out;
    for (const auto& v : row) {
      auto x = reduce_mod(v, p);
      if (!x) throw Error(ErrorKind::BadPrime, std::to_string(p) + " divides a denominator of the assignment");
      out.push_back(*x);
    }
    mm.push_back(std::move(out));
  }
  return determinant_mod(std::move(mm), p);
}

}  // namespace toricapolar
