#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "toricapolar/apolarity.hpp"
#include "toricapolar/linalg.hpp"

namespace toricapolar {

/// Echelon form of I_delta over ring.basis(delta).
EchelonBasis ideal_echelon(const CoxRing& ring, const IdealGens& ideal, const DegreeClass& delta);

/// Basis of I_delta, rows over ring.basis(delta) in reduced echelon form.
RationalMatrix ideal_piece(const CoxRing& ring, const IdealGens& ideal, const DegreeClass& delta);

/// Basis of (I : B)_delta = {x in S_delta : x b in I for every generator b of B}.
RationalMatrix colon_piece(const CoxRing& ring, const IdealGens& ideal, const IrrelevantIdeal& b,
                           const DegreeClass& delta);

/// dim (I : B)_delta - dim I_delta.
std::int64_t saturation_gap(const CoxRing& ring, const IdealGens& ideal, const IrrelevantIdeal& b,
                            const DegreeClass& delta);

struct LengthEstimate {
  std::int64_t value = 0;
  bool stabilized = false;
  std::vector<std::pair<std::int64_t, std::int64_t>> samples;  // (k, dim (S/I)_{k alpha0})
};

/// Samples dim (S/I)_{k alpha0} for k = 1..max_k; stabilized when the last `window` agree.
LengthEstimate length_estimate(const CoxRing& ring, const IdealGens& ideal, const DegreeClass& ample,
                               std::size_t window = 3, std::size_t max_k = 12);

struct CactusCertificate {
  bool contained = false;
  LengthEstimate length;
  bool claimed = false;  // cr(F) <= length.value
};

/// Throws ContainmentFailed unless I annihilates F.
CactusCertificate cactus_certificate(const CoxRing& ring, const ApolarForm& f, const IdealGens& ideal,
                                     const DegreeClass& ample, std::size_t window = 3, std::size_t max_k = 12);

}  // namespace toricapolar
