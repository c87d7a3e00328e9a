#pragma once

// Hermite normal form and intersection of full-rank sublattices of Z^2.
//
// Convention: column-style lower triangular,
//   H = [[h11, 0], [h21, h22]],  h11 > 0, h22 > 0, 0 <= h21 < h22.
// The columns of H generate the same lattice as the columns of the input.

#include <vector>

#include "csl/mat2.hpp"

namespace csl {

struct HnfResult {
  Mat2Z h;  ///< Normal form.
  Mat2Z u;  ///< Unimodular transform with m * u == h.
};

/// Normal form of a nonsingular basis. DomainError when det(m) == 0.
HnfResult hnf2(const Mat2Z& m);

/// Normal form of the lattice spanned by an arbitrary list of generators.
/// DomainError unless the generators span a rank-2 lattice.
Mat2Z hnf_of_generators(const std::vector<Vec2Z>& generators);

/// Normal-form basis of (a Z^2) ∩ (b Z^2). DomainError on a singular input.
Mat2Z intersect_integer_lattices(const Mat2Z& a, const Mat2Z& b);

/// Whether v lies in the lattice spanned by the columns of basis.
bool contains(const Mat2Z& basis, const Vec2Z& v);

}  // namespace csl
