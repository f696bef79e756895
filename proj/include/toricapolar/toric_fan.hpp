#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "toricapolar/abelian_groups.hpp"

namespace toricapolar {

using Ray = std::vector<std::int64_t>;
using ConeIndices = std::vector<std::size_t>;

/// Square-free monomial generators x^(sigma hat), one per maximal cone, as 0/1 exponent vectors.
struct IrrelevantIdeal {
  std::vector<std::vector<int>> generators;
};

/// Integer coefficients a_rho of a torus-invariant divisor sum a_rho D_rho.
struct WeilRepresentative {
  std::vector<Integer> coefficients;
};

enum class Completeness { Complete, NotComplete, CompleteLikely, Unverified };

const char* completeness_name(Completeness c);

/// Simplicial fan with no torus factors, together with its class group and the grading of
/// the Cox ring. Immutable after construction.
class FanModel {
 public:
  /// Validates rays and cones and computes Cl as the cokernel of M -> Z^{rays}.
  /// Throws NonPrimitiveRay, NonSimplicialCone, TorusFactor or InvalidInput.
  static FanModel build(std::size_t ambient_rank, std::vector<Ray> rays, std::vector<ConeIndices> max_cones,
                        bool assert_complete = false);

  std::size_t ambient_rank() const noexcept { return ambient_rank_; }
  std::size_t ray_count() const noexcept { return rays_.size(); }
  const std::vector<Ray>& rays() const noexcept { return rays_; }
  const std::vector<ConeIndices>& max_cones() const noexcept { return max_cones_; }
  bool asserted_complete() const noexcept { return assert_complete_; }

  const GradedGroup& class_group() const noexcept { return projection_.group(); }
  const Cokernel& projection() const noexcept { return projection_; }
  const std::vector<DegreeClass>& var_degrees() const noexcept { return var_degrees_; }

  /// Index into max_cones() of the cone whose complementary variables give the free basis
  /// of Cl (their degrees are the unit vectors); also the default affine chart.
  std::size_t reference_cone() const noexcept { return reference_cone_; }

  IrrelevantIdeal irrelevant_ideal() const;

  DegreeClass degree_of(std::span<const int> exponents) const;

 private:
  std::size_t ambient_rank_ = 0;
  std::vector<Ray> rays_;
  std::vector<ConeIndices> max_cones_;
  bool assert_complete_ = false;
  Cokernel projection_;
  std::vector<DegreeClass> var_degrees_;
  std::size_t reference_cone_ = 0;
};

/// Exact for ambient rank <= 2; for higher rank a facet-pairing heuristic.
Completeness check_complete(const FanModel& fan);

WeilRepresentative weil_representative(const FanModel& fan, const DegreeClass& alpha);

/// True iff on every maximal cone the system <m, u_rho> = -a_rho has an integral solution.
bool is_cartier(const FanModel& fan, const DegreeClass& alpha);

}  // namespace toricapolar
