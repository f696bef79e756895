#include "toricapolar/toric_fan.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "toricapolar/error.hpp"
#include "toricapolar/linalg.hpp"

namespace toricapolar {

namespace {

std::vector<Rational> ray_as_rational(const Ray& r) {
  return std::vector<Rational>(r.begin(), r.end());
}

std::size_t rank_of_rays(const std::vector<Ray>& rays, std::span<const std::size_t> idx, std::size_t n) {
  EchelonBasis eb(n);
  for (auto i : idx) eb.insert(ray_as_rational(rays[i]));
  return eb.rank();
}

std::string cone_text(const ConeIndices& c) {
  std::string s = "{";
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
  return s + "}";
}

// Angular order for plane vectors, exact.
int half_plane(const Ray& v) { return (v[1] < 0 || (v[1] == 0 && v[0] < 0)) ? 1 : 0; }

std::int64_t cross(const Ray& a, const Ray& b) { return a[0] * b[1] - a[1] * b[0]; }

Completeness check_complete_plane(const FanModel& fan) {
  const auto& rays = fan.rays();
  std::set<std::pair<std::size_t, std::size_t>> cones;
  for (const auto& c : fan.max_cones()) {
    if (c.size() != 2) return Completeness::NotComplete;
    cones.insert({std::min(c[0], c[1]), std::max(c[0], c[1])});
  }
  std::vector<std::size_t> order(rays.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    int ha = half_plane(rays[a]), hb = half_plane(rays[b]);
    if (ha != hb) return ha < hb;
    return cross(rays[a], rays[b]) > 0;
  });
  const std::size_t k = order.size();
  if (k < 3) return Completeness::NotComplete;
  std::set<std::pair<std::size_t, std::size_t>> expected;
  for (std::size_t i = 0; i < k; ++i) {
    std::size_t a = order[i], b = order[(i + 1) % k];
    if (cross(rays[a], rays[b]) <= 0) return Completeness::NotComplete;
    expected.insert({std::min(a, b), std::max(a, b)});
  }
  return expected == cones ? Completeness::Complete : Completeness::NotComplete;
}

Completeness check_complete_line(const FanModel& fan) {
  bool pos = false, neg = false;
  for (const auto& c : fan.max_cones()) {
    for (auto i : c) {
      if (fan.rays()[i][0] > 0) pos = true;
      if (fan.rays()[i][0] < 0) neg = true;
    }
  }
  return pos && neg ? Completeness::Complete : Completeness::NotComplete;
}

// Does <m, u_rho> = rhs_rho (rho in cone) have a solution m in Z^n?
bool integral_solution_exists(const FanModel& fan, const ConeIndices& cone, const std::vector<Integer>& rhs) {
  const std::size_t n = fan.ambient_rank();
  if (cone.size() == n) {
    RationalMatrix a;
    std::vector<Rational> b;
    for (auto rho : cone) {
      a.push_back(ray_as_rational(fan.rays()[rho]));
      b.emplace_back(rhs[rho]);
    }
    auto x = solve(a, b);
    if (!x) throw Error(ErrorKind::NonSimplicialCone, "singular cone " + cone_text(cone));
    return std::all_of(x->begin(), x->end(), [](const Rational& q) { return q.get_den() == 1; });
  }
  // Lower-dimensional cone: L U R = D, U m = b solvable iff d_i | (L b)_i and (L b)_i = 0 past the rank.
  IntMatrix u(cone.size(), n);
  for (std::size_t i = 0; i < cone.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) u(i, j) = fan.rays()[cone[i]][j];
  auto snf = smith_normal_form(u);
  for (std::size_t i = 0; i < cone.size(); ++i) {
    Integer c = 0;
    for (std::size_t k = 0; k < cone.size(); ++k) c += snf.left(i, k) * rhs[cone[k]];
    const Integer d = i < snf.diag.size() ? snf.diag[i] : Integer(0);
    if (d == 0) {
      if (c != 0) return false;
    } else if (!mpz_divisible_p(c.get_mpz_t(), d.get_mpz_t())) {
      return false;
    }
  }
  return true;
}

}  // namespace

const char* completeness_name(Completeness c) {
  switch (c) {
    case Completeness::Complete: return "Complete";
    case Completeness::NotComplete: return "NotComplete";
    case Completeness::CompleteLikely: return "CompleteLikely";
    case Completeness::Unverified: return "Unverified";
  }
  return "Unverified";
}

FanModel FanModel::build(std::size_t ambient_rank, std::vector<Ray> rays, std::vector<ConeIndices> max_cones,
                         bool assert_complete) {
  if (ambient_rank == 0) throw Error(ErrorKind::InvalidInput, "ambient rank must be positive");
  if (rays.empty()) throw Error(ErrorKind::InvalidInput, "fan has no rays");
  for (std::size_t i = 0; i < rays.size(); ++i) {
    const auto& r = rays[i];
    if (r.size() != ambient_rank)
      throw Error(ErrorKind::InvalidInput, "ray " + std::to_string(i) + " has wrong length");
    std::int64_t g = 0;
    for (auto v : r) g = std::gcd(g, v);
    if (g != 1) throw Error(ErrorKind::NonPrimitiveRay, "ray " + std::to_string(i) + " is not primitive");
  }
  for (auto& cone : max_cones) {
    if (cone.empty()) throw Error(ErrorKind::InvalidInput, "empty maximal cone");
    std::sort(cone.begin(), cone.end());
    if (std::adjacent_find(cone.begin(), cone.end()) != cone.end())
      throw Error(ErrorKind::InvalidInput, "repeated ray in cone " + cone_text(cone));
    for (auto i : cone)
      if (i >= rays.size()) throw Error(ErrorKind::InvalidInput, "ray index out of range in cone " + cone_text(cone));
    if (rank_of_rays(rays, cone, ambient_rank) != cone.size())
      throw Error(ErrorKind::NonSimplicialCone, "cone " + cone_text(cone) + " is not simplicial");
  }
  std::vector<std::size_t> all(rays.size());
  std::iota(all.begin(), all.end(), 0);
  if (rank_of_rays(rays, all, ambient_rank) != ambient_rank)
    throw Error(ErrorKind::TorusFactor, "rays do not span the ambient space");

  FanModel fan;
  fan.ambient_rank_ = ambient_rank;
  fan.rays_ = std::move(rays);
  fan.max_cones_ = std::move(max_cones);
  fan.assert_complete_ = assert_complete;

  // The matrix of M -> Z^{rays}, m |-> (<m, u_rho>)_rho.
  IntMatrix m(fan.rays_.size(), ambient_rank);
  for (std::size_t i = 0; i < fan.rays_.size(); ++i)
    for (std::size_t j = 0; j < ambient_rank; ++j) m(i, j) = fan.rays_[i][j];
  Cokernel raw;
  try {
    raw = cokernel(m);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NotFullRank) throw Error(ErrorKind::TorusFactor, e.what());
    throw;
  }

  fan.projection_ = raw;
  for (std::size_t c = 0; c < fan.max_cones_.size(); ++c) {
    std::vector<std::size_t> complement;
    for (std::size_t i = 0; i < fan.rays_.size(); ++i)
      if (!std::binary_search(fan.max_cones_[c].begin(), fan.max_cones_[c].end(), i)) complement.push_back(i);
    if (auto rebased = raw.rebased(complement)) {
      fan.projection_ = std::move(*rebased);
      fan.reference_cone_ = c;
      break;
    }
  }
  for (std::size_t i = 0; i < fan.rays_.size(); ++i) fan.var_degrees_.push_back(fan.projection_.project_unit(i));
  return fan;
}

IrrelevantIdeal FanModel::irrelevant_ideal() const {
  IrrelevantIdeal b;
  for (const auto& cone : max_cones_) {
    std::vector<int> e(rays_.size(), 1);
    for (auto i : cone) e[i] = 0;
    b.generators.push_back(std::move(e));
  }
  return b;
}

DegreeClass FanModel::degree_of(std::span<const int> exponents) const {
  if (exponents.size() != rays_.size()) throw Error(ErrorKind::InvalidInput, "exponent vector has wrong length");
  std::vector<std::int64_t> v(exponents.begin(), exponents.end());
  return projection_.project(std::span<const std::int64_t>(v));
}

Completeness check_complete(const FanModel& fan) {
  const std::size_t n = fan.ambient_rank();
  if (n == 1) return check_complete_line(fan);
  if (n == 2) return check_complete_plane(fan);
  std::map<std::vector<std::size_t>, int> faces;
  for (const auto& cone : fan.max_cones()) {
    if (cone.size() != n) return Completeness::Unverified;
    for (std::size_t skip = 0; skip < n; ++skip) {
      std::vector<std::size_t> face;
      for (std::size_t i = 0; i < n; ++i)
        if (i != skip) face.push_back(cone[i]);
      ++faces[face];
    }
  }
  for (const auto& [face, count] : faces)
    if (count != 2) return Completeness::Unverified;
  return Completeness::CompleteLikely;
}

WeilRepresentative weil_representative(const FanModel& fan, const DegreeClass& alpha) {
  return WeilRepresentative{fan.projection().lift(alpha)};
}

bool is_cartier(const FanModel& fan, const DegreeClass& alpha) {
  auto rep = weil_representative(fan, alpha);
  std::vector<Integer> rhs(rep.coefficients.size());
  for (std::size_t i = 0; i < rhs.size(); ++i) rhs[i] = -rep.coefficients[i];
  for (const auto& cone : fan.max_cones())
    if (!integral_solution_exists(fan, cone, rhs)) return false;
  return true;
}

}  // namespace toricapolar
