#pragma once

// Exact matrices of orthogonal maps of the plane written in a lattice basis.
//
// A reflection in the line orthogonal to c acts as
//   φ_c(x) = x - 2 (xᵀPc / cᵀPc) c,
// which only involves the Gram matrix P, so it is rational for every lattice
// vector c. Each rotation T of a lattice with rational invariants factors as
// T = φ_c φ_b with b the primitive lattice vector along e2 and c a lattice
// vector; the rotation angle is twice the angle from b to c.

#include <variant>

#include "csl/lattice.hpp"

namespace csl {

struct ReflectionOrigin {
  LatticeVector c;
  friend bool operator==(const ReflectionOrigin&, const ReflectionOrigin&) = default;
};

struct RotationOrigin {
  Integer p;
  Integer q;
  friend bool operator==(const RotationOrigin&, const RotationOrigin&) = default;
};

struct RawOrigin {
  friend bool operator==(const RawOrigin&, const RawOrigin&) = default;
};

using Provenance = std::variant<ReflectionOrigin, RotationOrigin, RawOrigin>;

struct IsometryMatrix {
  Mat2Q m;
  Provenance provenance = RawOrigin{};
};

/// MᵀPM == P exactly.
bool is_gram_orthogonal(const LatticeParams& lattice, const Mat2Q& m);

/// DomainError when c == 0.
IsometryMatrix reflection_matrix(const LatticeParams& lattice, const LatticeVector& c);

/// Executable form of the rationality test on the two reflection
/// coefficients (e_j·c)/(c·c). True for every constructible lattice.
bool is_coincidence_reflection_condition(const LatticeParams& lattice, const LatticeVector& c);

/// Closed-form rotation for sigma_cos == 0. UsageError unless gcd(p, q) == 1,
/// DomainError on an oblique lattice.
IsometryMatrix rotation_rect(const LatticeParams& lattice, const Integer& p, const Integer& q);

/// Primitive (α1, α2) with α2 > 0 and α1 + α2 σcosω == 0, i.e. the lattice
/// direction along e2.
LatticeVector axis_e2_vector(const LatticeParams& lattice);

/// φ_c φ_b with b = axis_e2_vector(lattice). DomainError when c == 0.
IsometryMatrix rotation_general(const LatticeParams& lattice, const LatticeVector& c);

/// Closed-form entries of φ_c φ_b for an arbitrary lattice, written in the
/// invariants D = α1² + σ²α2² + 2σcosω α1α2. Used to cross-check
/// rotation_general.
Mat2Q closed_form_rotation(const LatticeParams& lattice, const LatticeVector& c);

struct CartanPair {
  LatticeVector c;  ///< First mirror normal (primitive, first nonzero coordinate positive).
  LatticeVector b;  ///< Second mirror normal, always axis_e2_vector.
};

/// Finds c with reflection(c) * reflection(b) == m; c == b for the identity. DomainError unless m is a
/// Gram-orthogonal rotation (det +1).
CartanPair cartan_decompose(const LatticeParams& lattice, const Mat2Q& m);

/// cos θ of a rotation, trace / 2.
Rational rotation_cos(const Mat2Q& m);

/// tan²(θ/2) for θ the angle of φ_c φ_b:
///   (α1 + α2 σcosω)² / (α2² σ² sin² ω).
/// DomainError when α2 == 0 (θ = π).
Rational half_angle_tan2(const LatticeParams& lattice, const LatticeVector& c);

/// Display-only rotation angle in degrees in (-180, 180], from cos θ = tr/2
/// and sin θ = σ sin ω · m21.
double rotation_degrees(const LatticeParams& lattice, const Mat2Q& m);

}  // namespace csl
