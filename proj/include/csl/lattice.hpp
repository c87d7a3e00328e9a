#pragma once

// Planar lattices Γ = Z e1 ⊕ Z (σa) described by their exact shape
// invariants. With a = (cos ω, sin ω) the Gram matrix of the ordered basis
// B = {e1, σa} is
//
//   P = [[1,       σ cos ω],
//        [σ cos ω, σ²     ]]
//
// σ and ω themselves are generally irrational; only σ², σ cos ω and
// σ² sin² ω = σ² - (σ cos ω)² are carried. A lattice whose invariants are
// irrational has only the trivial coincidence isometries ±1, so such
// lattices are simply not constructible here.
//
// Hexagonal is taken as the 60°/120° rhombus: σ² = 1, |σ cos ω| = 1/2.

#include <string_view>

#include "csl/mat2.hpp"

namespace csl {

using LatticeVector = Vec2Z;

class LatticeParams {
 public:
  /// DomainError("degenerate lattice") unless sigma2 > 0 and
  /// sigma2 - sigma_cos^2 > 0.
  LatticeParams(Rational sigma2, Rational sigma_cos);

  const Rational& sigma2() const { return sigma2_; }
  const Rational& sigma_cos() const { return sigma_cos_; }

  /// σ² sin² ω, the squared area of the fundamental cell.
  Rational sigma2_sin2() const { return sigma2_ - sigma_cos_ * sigma_cos_; }

  friend bool operator==(const LatticeParams&, const LatticeParams&) = default;

 private:
  Rational sigma2_;
  Rational sigma_cos_;
};

inline LatticeParams make_lattice(Rational sigma2, Rational sigma_cos) {
  return LatticeParams(std::move(sigma2), std::move(sigma_cos));
}

enum class LatticeClass { square, rectangular, rhombic, hexagonal, oblique };

std::string_view to_string(LatticeClass c);

Mat2Q gram(const LatticeParams& lattice);

/// xᵀ P y.
Rational inner(const LatticeParams& lattice, const Vec2Q& x, const Vec2Q& y);
Rational norm2(const LatticeParams& lattice, const LatticeVector& v);

LatticeClass classify(const LatticeParams& lattice);

/// The index-2 sublattice spanned by the diagonals d1 = a1 + a2, d2 = a1 - a2.
struct DiagonalSublattice {
  LatticeVector d1;
  LatticeVector d2;
  Integer index;

  /// Basis matrix S with columns d1, d2.
  Mat2Z basis() const { return Mat2Z::from_columns(d1, d2); }
};

DiagonalSublattice diagonal_sublattice(const LatticeParams& lattice);

/// x = c1*d1 + c2*d2 + k*a1 with k in {0, 1}.
struct DiagonalDecomposition {
  Integer c1;
  Integer c2;
  int k;
};

DiagonalDecomposition decompose_diagonal(const LatticeVector& x);
LatticeVector recompose_diagonal(const DiagonalDecomposition& d);

/// Shape of the diagonal sublattice in the ordered basis {d1, d2}, rescaled
/// so that |d1|² = 1.
LatticeParams dual_shape(const LatticeParams& lattice);

}  // namespace csl
