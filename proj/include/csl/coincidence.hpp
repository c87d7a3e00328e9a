#pragma once

// Coincidence site lattices Γ ∩ TΓ, written in the lattice basis B.
//
// With d the denominator of M = [T]_B and A = dM integral,
//   Γ ∩ TΓ = { x ∈ Z² : M⁻¹x ∈ Z² } = (1/d) (A Z² ∩ d Z²),
// and Σ(T) = [Z² : Γ ∩ TΓ] is the absolute determinant of its basis.

#include <optional>
#include <vector>

#include "csl/isometry.hpp"

namespace csl {

struct CoincidenceReport {
  Integer denominator;
  Mat2Z csl_basis;  ///< Normal-form basis of Γ ∩ TΓ.
  Integer sigma;
  std::optional<Integer> oracle_sigma;
};

/// Structural Σ via lattice intersection. Set with_oracle to also fill
/// oracle_sigma by coset counting. DomainError when m is not orthogonal.
CoincidenceReport csl_basis(const LatticeParams& lattice, const Mat2Q& m, bool with_oracle = false);

/// Order of T(Γ) / (Γ ∩ TΓ) by brute force: with k_i the least m > 0 such
/// that m T(a_i) ∈ Γ, enumerate r1 T(a1) + r2 T(a2) for 0 <= r_i < k_i and
/// count distinct classes. Two images differ by an element of Γ ∩ TΓ exactly
/// when their coordinates agree modulo Z², so the class key is the
/// fractional part of M r. Cost is O(k1 k2).
Integer oracle_order(const LatticeParams& lattice, const Mat2Q& m);

/// Least k >= 1 with k T(x) ∈ Γ ∩ TΓ.
Integer element_order(const LatticeParams& lattice, const Mat2Q& m, const LatticeVector& x);

struct EnumerationEntry {
  Integer p;
  Integer q;
  double theta_degrees;  ///< Display only.
  Integer sigma;
  Mat2Q matrix;
};

struct ReflectionEntry {
  LatticeVector c;
  Mat2Q matrix;
  Integer sigma;
};

/// Largest cᵀGc, with G the integral rescaling of the Gram matrix, that a
/// mirror c of a rotation with Σ <= sigma_max can have. Σ M is integral, so
/// den(φ_c) <= Σ den(φ_b); and den(φ_c) >= cᵀGc / (2 |det G|).
Integer rotation_norm_bound(const LatticeParams& lattice, const Integer& sigma_max);

/// All coincidence rotations with Σ <= sigma_max, one per mirror direction c
/// (so (p,q) and (-p,-q) are identified), sorted by (sigma, p, q).
/// search_scale multiplies the mirror-norm bound. UsageError when
/// sigma_max == 0.
std::vector<EnumerationEntry> enumerate_rotations(const LatticeParams& lattice, const Integer& sigma_max,
                                                  unsigned search_scale = 1);

/// Reflections for every primitive c, up to sign, with |c_i| <= coord_bound,
/// sorted by (sigma, c). UsageError when coord_bound == 0.
std::vector<ReflectionEntry> enumerate_reflections(const LatticeParams& lattice, const Integer& coord_bound);

/// Primitive vectors up to sign (first nonzero coordinate positive) with
/// |coordinates| <= bound.
std::vector<LatticeVector> primitive_vectors(const Integer& bound);

}  // namespace csl
