#include "toricapolar/apolarity.hpp"

#include <algorithm>
#include <charconv>

#include "toricapolar/error.hpp"

namespace toricapolar {

ApolarForm make_form(const CoxRing& ring, MultiPoly f) {
  if (f.side != Side::Dual) throw Error(ErrorKind::SideMismatch, "a form must live in the dual module");
  if (f.is_zero()) throw Error(ErrorKind::InvalidInput, "the form is zero");
  auto d = ring.degree(f);
  if (!d) throw Error(ErrorKind::InvalidInput, "the form " + ring.format(f) + " is not homogeneous");
  return ApolarForm{std::move(f), std::move(*d)};
}

ApolarForm make_form(const CoxRing& ring, std::string_view text) { return make_form(ring, ring.parse(text, Side::Dual)); }

MultiPoly contract(const MultiPoly& g, const MultiPoly& f) {
  if (g.side != Side::Primal || f.side != Side::Dual)
    throw Error(ErrorKind::SideMismatch, "contraction takes a primal and a dual argument");
  MultiPoly out(Side::Dual);
  for (const auto& [a, ca] : g.terms)
    for (const auto& [b, cb] : f.terms) {
      if (a.size() != b.size()) throw Error(ErrorKind::InvalidInput, "monomials of different length");
      Monomial d(b.size());
      bool divides = true;
      for (std::size_t i = 0; i < b.size() && divides; ++i) {
        d[i] = b[i] - a[i];
        divides = d[i] >= 0;
      }
      if (divides) out.add_term(d, ca * cb);
    }
  return out;
}

// ---------------------------------------------------------------- boxes

namespace {

std::int64_t parse_int(std::string_view s, const std::string& whole) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw Error(ErrorKind::ParseError, "bad integer '" + std::string(s) + "' in box '" + whole + "'");
  return v;
}

std::vector<std::pair<std::int64_t, std::int64_t>> parse_ranges(std::string_view part, const std::string& whole) {
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  if (part.find_first_not_of(' ') == std::string_view::npos) return out;
  std::size_t start = 0;
  for (;;) {
    std::size_t comma = part.find(',', start);
    std::string_view item = part.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    std::size_t dots = item.find("..");
    std::int64_t lo, hi;
    if (dots == std::string_view::npos) {
      lo = hi = parse_int(item, whole);
    } else {
      lo = parse_int(item.substr(0, dots), whole);
      hi = parse_int(item.substr(dots + 2), whole);
    }
    if (lo > hi) throw Error(ErrorKind::InvalidInput, "empty range in box '" + whole + "'");
    out.emplace_back(lo, hi);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

DegreeBox parse_box(const GradedGroup& group, const std::string& text) {
  DegreeBox box;
  std::string_view all(text);
  std::size_t semi = all.find(';');
  box.free_ranges = parse_ranges(all.substr(0, semi), text);
  if (box.free_ranges.size() != group.free_rank())
    throw Error(ErrorKind::GroupMismatch, "box '" + text + "' does not match " + group.describe());
  if (semi != std::string_view::npos) {
    box.torsion_ranges = parse_ranges(all.substr(semi + 1), text);
    if (box.torsion_ranges.size() != group.torsion_orders().size())
      throw Error(ErrorKind::GroupMismatch, "box '" + text + "' does not match " + group.describe());
  } else {
    for (auto t : group.torsion_orders()) box.torsion_ranges.emplace_back(0, t - 1);
  }
  return box;
}

std::vector<DegreeClass> DegreeBox::degrees() const {
  std::vector<std::pair<std::int64_t, std::int64_t>> ranges = free_ranges;
  ranges.insert(ranges.end(), torsion_ranges.begin(), torsion_ranges.end());
  std::vector<DegreeClass> out;
  std::vector<std::int64_t> cur(ranges.size());
  for (std::size_t i = 0; i < ranges.size(); ++i) cur[i] = ranges[i].first;
  for (;;) {
    DegreeClass d;
    d.free_part.assign(cur.begin(), cur.begin() + static_cast<std::ptrdiff_t>(free_ranges.size()));
    d.torsion_part.assign(cur.begin() + static_cast<std::ptrdiff_t>(free_ranges.size()), cur.end());
    out.push_back(std::move(d));
    std::size_t i = ranges.size();
    while (i > 0 && cur[i - 1] == ranges[i - 1].second) {
      cur[i - 1] = ranges[i - 1].first;
      --i;
    }
    if (i == 0) break;
    ++cur[i - 1];
  }
  return out;
}

// ---------------------------------------------------------------- catalecticants

RationalMatrix catalecticant_entries(const CoxRing& ring, const ApolarForm& f, const DegreeClass& beta) {
  const auto& rows = ring.basis(beta);
  const auto& cols = ring.basis(ring.group().sub(f.degree, beta));
  RationalMatrix m(rows.size(), std::vector<Rational>(cols.size()));
  Monomial sum(ring.nvars());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols.size(); ++c) {
      for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = rows[r][i] + cols[c][i];
      auto it = f.form.terms.find(sum);
      if (it != f.form.terms.end()) m[r][c] = it->second;
    }
  return m;
}

RationalMatrix annihilator_in_degree(const CoxRing& ring, const ApolarForm& f, const DegreeClass& beta) {
  auto m = catalecticant_entries(ring, f, beta);
  const std::size_t cols = ring.basis(ring.group().sub(f.degree, beta)).size();
  if (cols == 0) {
    // everything annihilates F
    RationalMatrix id(m.size(), std::vector<Rational>(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i) id[i][i] = 1;
    return id;
  }
  return left_nullspace(m, cols);
}

std::size_t hilbert_value(const CoxRing& ring, const ApolarForm& f, const DegreeClass& beta) {
  auto m = catalecticant_entries(ring, f, beta);
  const std::size_t cols = ring.basis(ring.group().sub(f.degree, beta)).size();
  return rank_with_prescreen(m, cols, 0).rank;
}

std::size_t HilbertGrid::at(const DegreeClass& d) const {
  auto it = values.find(d);
  if (it == values.end()) throw Error(ErrorKind::InvalidInput, "degree outside the grid");
  return it->second;
}

HilbertGrid hilbert_grid(const CoxRing& ring, const ApolarForm& f, const DegreeBox& box) {
  HilbertGrid grid;
  for (auto& d : box.degrees()) {
    auto n = ring.group().normalize(d);
    grid.values[n] = hilbert_value(ring, f, n);
    grid.degrees.push_back(std::move(n));
  }
  return grid;
}

SymmetryVerdict check_symmetry(const CoxRing& ring, const ApolarForm& f, const DegreeBox& box) {
  SymmetryVerdict v;
  for (const auto& d : box.degrees()) {
    auto beta = ring.group().normalize(d);
    auto h = hilbert_value(ring, f, beta);
    auto hm = hilbert_value(ring, f, ring.group().sub(f.degree, beta));
    if (h != hm) {
      v.symmetric = false;
      v.witness = beta;
      v.value = h;
      v.mirror_value = hm;
      return v;
    }
  }
  return v;
}

bool apolar_contains(const CoxRing& ring, const IdealGens& ideal, const ApolarForm& f) {
  for (const auto& g : ideal.generators)
    if (!ring.degree(g)) throw Error(ErrorKind::NonHomogeneousGenerator, "generator " + ring.format(g) + " is not homogeneous");
  return std::all_of(ideal.generators.begin(), ideal.generators.end(),
                     [&](const MultiPoly& g) { return contract(g, f.form).is_zero(); });
}

}  // namespace toricapolar
