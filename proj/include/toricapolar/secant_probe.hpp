#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "toricapolar/apolarity.hpp"
#include "toricapolar/linalg.hpp"

namespace toricapolar {

/// Cox coordinates of a point.
using ParamPoint = std::vector<Rational>;

/// Throws PointInIrrelevantLocus if every generator of B vanishes at p.
void check_point(const FanModel& fan, const ParamPoint& p);

/// phi(p) = sum over the monomial basis of T_alpha of p^b y^b.
MultiPoly parametrize(const CoxRing& ring, const DegreeClass& alpha, const ParamPoint& p);

struct DecompositionTerm {
  Rational coefficient;
  ParamPoint point;
};

struct DecompositionCheck {
  bool equal = false;
  MultiPoly residual;  // sum c_i phi(p_i) - F
};

DecompositionCheck verify_decomposition(const CoxRing& ring, const ApolarForm& f,
                                        const std::vector<DecompositionTerm>& terms);

/// Free coordinates of an affine chart; every other coordinate is pinned to 1.
struct Chart {
  std::vector<std::size_t> free_vars;
};

/// The rays of the fan's reference cone, in index order.
Chart default_chart(const FanModel& fan);
Chart make_chart(const FanModel& fan, std::vector<std::size_t> free_vars);

/// Basis of T_alpha sorted by the exponents of the free chart variables, the last one most significant.
std::vector<Monomial> chart_basis(const CoxRing& ring, const DegreeClass& alpha, const Chart& chart);

/// Laurent polynomial in the family parameters, exponents -> coefficient.
using LaurentPoly = std::map<std::vector<int>, Rational, std::greater<>>;

struct LaurentFamily {
  std::vector<std::string> params;
  struct Term {
    LaurentPoly coefficient;
    std::vector<LaurentPoly> point;
  };
  std::vector<Term> terms;
};

struct ResidueTerm {
  std::vector<int> param_exponents;
  Monomial dual;
  Rational coefficient;
};

struct LimitCertificate {
  bool valid = false;
  std::vector<ResidueTerm> residue;  // sum c_i phi(p_i) - F, chart order
  std::size_t border_rank_bound = 0;  // number of family terms, meaningful when valid
};

/// VALID iff the parameter-degree-zero part of the residue vanishes and no exponent is negative.
/// Throws NegativeExponentResidue if the constant part vanishes but some term diverges.
LimitCertificate limit_certificate(const CoxRing& ring, const ApolarForm& f, const LaurentFamily& family);

std::string format_residue(const CoxRing& ring, const LaurentFamily& family, const std::vector<ResidueTerm>& residue);

struct TerraciniOptions {
  std::size_t r = 1;
  std::uint64_t prime = 101;
  std::size_t trials = 5;
  std::uint64_t seed = 0;
  std::optional<Chart> chart;
};

struct TerraciniResult {
  std::size_t space_dim = 0;      // dim T_alpha
  std::size_t rows = 0;           // r (free vars + 1)
  std::size_t expected_rank = 0;  // min(space_dim, rows)
  std::size_t rank = 0;           // max over trials, lower bound for the rank over Q
  std::vector<std::size_t> trial_ranks;
  std::int64_t estimated_dim = 0;  // rank - 1
  bool fills_space = false;
  bool degenerate = false;         // every trial stayed below expected_rank
};

/// Throws BadPrime if p is not a prime below 2^32 exceeding every exponent.
TerraciniResult terracini_probe(const CoxRing& ring, const DegreeClass& alpha, const TerraciniOptions& opts);

/// Stacked value and derivative rows at the given chart coordinates, r consecutive groups.
RationalMatrix terracini_matrix(const CoxRing& ring, const DegreeClass& alpha, const Chart& chart,
                                const std::vector<Rational>& assignment, std::size_t r);

/// Throws NonSquare unless r (free vars + 1) = dim T_alpha.
Rational terracini_determinant(const CoxRing& ring, const DegreeClass& alpha, std::size_t r,
                               const std::vector<Rational>& assignment, const std::optional<Chart>& chart = {});
std::uint64_t terracini_determinant_mod(const CoxRing& ring, const DegreeClass& alpha, std::size_t r,
                                        const std::vector<Rational>& assignment, std::uint64_t p,
                                        const std::optional<Chart>& chart = {});

}  // namespace toricapolar
