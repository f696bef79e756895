#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "toricapolar/apolarity.hpp"

namespace toricapolar {

struct CatMatrix {
  DegreeClass beta;
  std::vector<Monomial> rows;  // basis of S_beta
  std::vector<Monomial> cols;  // basis of T_(alpha - beta)
  RationalMatrix entries;
  std::size_t rank = 0;
  bool rank_from_prescreen = false;
};

/// Exact rank; a mod-p rank equal to min(rows, cols) is accepted as is (p = 0 disables).
CatMatrix catalecticant(const CoxRing& ring, const ApolarForm& f, const DegreeClass& beta,
                        std::uint64_t prescreen_prime = 101);

struct BoundReport {
  DegreeClass beta;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::size_t cat_rank = 0;
  bool cartier = false;
  std::size_t border_bound = 0;
  std::size_t rank_bound = 0;
  std::optional<std::size_t> cactus_bound;  // only for Cartier beta
};

BoundReport bound_report(const CoxRing& ring, const ApolarForm& f, const DegreeClass& beta);

struct BestBound {
  std::size_t value = 0;
  DegreeClass beta;
};

struct BestBounds {
  std::vector<BoundReport> sweep;
  std::optional<BestBound> border;
  std::optional<BestBound> rank;
  std::optional<BestBound> cactus;
};

/// Maxima over the box; ties go to the smallest beta by certificate grade, then lex.
BestBounds best_bounds(const CoxRing& ring, const ApolarForm& f, const DegreeBox& box);

}  // namespace toricapolar
