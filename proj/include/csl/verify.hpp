#pragma once

// Self-check of one lattice: every enumerated rotation and reflection with
// Σ <= max_sigma is re-derived through independent routes.

#include <set>
#include <string>
#include <vector>

#include "csl/coincidence.hpp"

namespace csl {

struct VerifyReport {
  LatticeParams lattice;
  std::size_t rotations = 0;
  std::size_t reflections = 0;
  std::set<Integer> sigma_values;  ///< Σ values of the rotations.
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
};

/// Lattices checked by `verify` when none is given.
std::vector<LatticeParams> default_lattice_grid();

/// Checks, for each entry: structural Σ == oracle Σ, Gram-orthogonality,
/// mirror-pair recomposition, the closed-form rotation, and that the matrix
/// rewritten in the diagonal basis {d1, d2} is orthogonal for the diagonal
/// sublattice with finite Σ. Also re-runs the enumeration with a doubled
/// search bound and requires the same result.
VerifyReport verify_lattice(const LatticeParams& lattice, const Integer& max_sigma, const Integer& coord_bound);

/// S⁻¹ M S for S = [[1,1],[1,-1]], the diagonal-basis form of m.
Mat2Q to_diagonal_basis(const Mat2Q& m);

}  // namespace csl
