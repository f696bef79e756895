#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace toricapolar {

using Integer = mpz_class;
using Rational = mpq_class;

/// Dense matrix of arbitrary-precision integers, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntMatrix operator*(const IntMatrix& other) const;
  bool operator==(const IntMatrix& other) const = default;

  IntMatrix transposed() const;

  // Exact determinant of a square matrix (Bareiss).
  Integer determinant() const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  // row[target] += factor * row[source]
  void add_row_multiple(std::size_t target, std::size_t source, const Integer& factor);
  // col[target] += factor * col[source]
  void add_col_multiple(std::size_t target, std::size_t source, const Integer& factor);
  void negate_row(std::size_t r);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

struct SmithDecomposition {
  IntMatrix left;               // unimodular, rows x rows
  std::vector<Integer> diag;    // min(rows, cols) entries, d_i | d_{i+1}, nonnegative
  IntMatrix right;              // unimodular, cols x cols
};

/// left * m * right == diag(diag), with each diagonal entry dividing the next.
SmithDecomposition smith_normal_form(const IntMatrix& m);

/// Inverse of a unimodular matrix; throws InvalidInput if |det| != 1.
IntMatrix unimodular_inverse(const IntMatrix& m);

/// Element of Z^l (+) Z/d_1 (+) ... (+) Z/d_k with residues kept in [0, d_i).
struct DegreeClass {
  std::vector<std::int64_t> free_part;
  std::vector<std::int64_t> torsion_part;

  bool operator==(const DegreeClass&) const = default;
  auto operator<=>(const DegreeClass&) const = default;
};

/// Z^free_rank (+) (+)_i Z/torsion_orders[i]; orders are >= 2 and sorted.
class GradedGroup {
 public:
  GradedGroup() = default;
  GradedGroup(std::size_t free_rank, std::vector<std::int64_t> torsion_orders);

  std::size_t free_rank() const noexcept { return free_rank_; }
  const std::vector<std::int64_t>& torsion_orders() const noexcept { return torsion_orders_; }
  std::size_t components() const noexcept { return free_rank_ + torsion_orders_.size(); }

  DegreeClass zero() const;
  // Reduces residues into canonical range; throws GroupMismatch on shape mismatch.
  DegreeClass normalize(DegreeClass d) const;
  bool contains(const DegreeClass& d) const;

  DegreeClass add(const DegreeClass& a, const DegreeClass& b) const;
  DegreeClass sub(const DegreeClass& a, const DegreeClass& b) const;
  DegreeClass scale(const DegreeClass& a, std::int64_t k) const;
  DegreeClass negate(const DegreeClass& a) const { return scale(a, -1); }

  // "3,0" or "6;0"
  std::string format(const DegreeClass& d) const;
  DegreeClass parse(const std::string& text) const;
  // "Z^2", "Z x Z/3", "0"
  std::string describe() const;

  bool operator==(const GradedGroup&) const = default;

 private:
  void check(const DegreeClass& d) const;

  std::size_t free_rank_ = 0;
  std::vector<std::int64_t> torsion_orders_;
};

/// Surjection Z^n -> G given by an integer matrix (one row per component of G) plus
/// residue reduction, together with a fixed section used to lift classes back.
class Cokernel {
 public:
  Cokernel() = default;
  Cokernel(GradedGroup group, IntMatrix projection, IntMatrix lift);

  const GradedGroup& group() const noexcept { return group_; }
  const IntMatrix& projection_matrix() const noexcept { return projection_; }
  std::size_t ambient_rank() const noexcept { return projection_.cols(); }

  DegreeClass project(std::span<const Integer> v) const;
  DegreeClass project(std::span<const std::int64_t> v) const;
  DegreeClass project_unit(std::size_t i) const;
  // Deterministic preimage: project(lift(d)) == d.
  std::vector<Integer> lift(const DegreeClass& d) const;

  /// Re-coordinatize G so that the images of the given basis vectors become the unit
  /// free vectors with zero torsion. Requires generators.size() == free_rank and their
  /// free parts to form a Z-basis; returns nullopt otherwise. Torsion components are then
  /// rescaled by a unit so that the first ambient vector with unit residue maps to 1.
  std::optional<Cokernel> rebased(std::span<const std::size_t> generators) const;

 private:
  GradedGroup group_;
  IntMatrix projection_;  // components x ambient
  IntMatrix lift_;        // ambient x components
};

/// Cokernel of m : Z^cols -> Z^rows. Throws NotFullRank if m has column-rank deficiency.
Cokernel cokernel(const IntMatrix& m);

}  // namespace toricapolar
