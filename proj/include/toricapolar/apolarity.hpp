#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "toricapolar/graded_ring.hpp"
#include "toricapolar/linalg.hpp"

namespace toricapolar {

/// A nonzero homogeneous element F of T_alpha.
struct ApolarForm {
  MultiPoly form;
  DegreeClass degree;
};

/// Throws SideMismatch for primal input, InvalidInput for zero or inhomogeneous F.
ApolarForm make_form(const CoxRing& ring, MultiPoly f);
ApolarForm make_form(const CoxRing& ring, std::string_view text);

/// x^a _| y^b = y^(b-a) when b >= a, else 0. No multiplicity constants.
MultiPoly contract(const MultiPoly& g, const MultiPoly& f);

/// Finite box of degrees: an inclusive range per free coordinate, and per torsion
/// coordinate (all residues if the torsion ranges were omitted).
struct DegreeBox {
  std::vector<std::pair<std::int64_t, std::int64_t>> free_ranges;
  std::vector<std::pair<std::int64_t, std::int64_t>> torsion_ranges;

  /// All classes in the box, first coordinate varying slowest.
  std::vector<DegreeClass> degrees() const;
};

/// "0..3,0..2", "0..4", "2,1" or with torsion "0..6;0..2".
DegreeBox parse_box(const GradedGroup& group, const std::string& text);

/// Matrix of g _| F for g over basis(beta) (rows) against basis(alpha - beta) (columns).
RationalMatrix catalecticant_entries(const CoxRing& ring, const ApolarForm& f, const DegreeClass& beta);

/// Basis of (F^perp)_beta as coefficient vectors over ring.basis(beta).
RationalMatrix annihilator_in_degree(const CoxRing& ring, const ApolarForm& f, const DegreeClass& beta);

std::size_t hilbert_value(const CoxRing& ring, const ApolarForm& f, const DegreeClass& beta);

struct HilbertGrid {
  std::vector<DegreeClass> degrees;  // box order
  std::map<DegreeClass, std::size_t> values;

  std::size_t at(const DegreeClass& d) const;
};

HilbertGrid hilbert_grid(const CoxRing& ring, const ApolarForm& f, const DegreeBox& box);

struct SymmetryVerdict {
  bool symmetric = true;
  std::optional<DegreeClass> witness;  // first beta with h(beta) != h(alpha - beta)
  std::size_t value = 0;
  std::size_t mirror_value = 0;
};

SymmetryVerdict check_symmetry(const CoxRing& ring, const ApolarForm& f, const DegreeBox& box);

/// True iff every generator annihilates F. Generators must be homogeneous.
bool apolar_contains(const CoxRing& ring, const IdealGens& ideal, const ApolarForm& f);

}  // namespace toricapolar
