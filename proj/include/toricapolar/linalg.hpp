#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "toricapolar/abelian_groups.hpp"

namespace toricapolar {

using RationalMatrix = std::vector<std::vector<Rational>>;
using ModMatrix = std::vector<std::vector<std::uint64_t>>;

/// Sparse integer row: (column, nonzero value) pairs sorted by column.
using SparseRow = std::vector<std::pair<std::size_t, Integer>>;

/// Incrementally built reduced row echelon form over Q, stored fraction-free:
/// every row is a primitive integer vector, and each pivot column is zero in all other rows.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t cols) : cols_(cols), row_of_pivot_(cols) {}

  std::size_t cols() const noexcept { return cols_; }
  std::size_t rank() const noexcept { return rows_.size(); }

  // Returns true if the row was independent of the rows inserted so far.
  bool insert(SparseRow row);
  bool insert(const std::vector<Rational>& row);

  const std::vector<SparseRow>& rows() const noexcept { return rows_; }
  std::vector<std::size_t> pivot_columns() const;

  // Rows rescaled so that each pivot entry is 1; sorted by pivot column.
  RationalMatrix reduced_rows() const;

  // Basis of {x : row . x = 0 for all rows}, one vector per non-pivot column, as primitive
  // integer vectors with positive entry in the free column.
  RationalMatrix nullspace() const;

  // v minus its projection along the pivot rows (coordinates on pivot columns become 0).
  std::vector<Rational> residual(const std::vector<Rational>& v) const;

 private:
  std::size_t cols_;
  std::vector<SparseRow> rows_;
  std::vector<std::size_t> pivot_col_of_row_;
  std::vector<std::optional<std::size_t>> row_of_pivot_;
};

SparseRow to_sparse_integer_row(const std::vector<Rational>& row);

std::size_t rank(const RationalMatrix& m);
// Right kernel {x : m x = 0}.
RationalMatrix nullspace(const RationalMatrix& m, std::size_t cols);
// Left kernel {c : c^T m = 0}.
RationalMatrix left_nullspace(const RationalMatrix& m, std::size_t cols);
RationalMatrix transpose(const RationalMatrix& m, std::size_t cols);
Rational determinant(const RationalMatrix& m);
// Unique solution of a square nonsingular system, or nullopt if singular.
std::optional<std::vector<Rational>> solve(const RationalMatrix& a, const std::vector<Rational>& b);

// ---- prime field Z/p, p < 2^32

bool is_prime(std::uint64_t p);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p);
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p);
// Reduces a rational into Z/p; nullopt if p divides the denominator.
std::optional<std::uint64_t> reduce_mod(const Rational& q, std::uint64_t p);

std::size_t rank_mod(ModMatrix m, std::uint64_t p);
std::uint64_t determinant_mod(ModMatrix m, std::uint64_t p);

struct RankResult {
  std::size_t rank = 0;
  bool from_prescreen = false;
};

/// Exact rank over Q. The mod-p rank is accepted only when it is already min(rows, cols)
/// and p divides no denominator; p = 0 skips the prescreen.
RankResult rank_with_prescreen(const RationalMatrix& m, std::size_t cols, std::uint64_t p);

}  // namespace toricapolar
