#include "csl/lattice.hpp"

#include "csl/errors.hpp"
#include "csl/hnf.hpp"

namespace csl {

LatticeParams::LatticeParams(Rational sigma2, Rational sigma_cos)
    : sigma2_(std::move(sigma2)), sigma_cos_(std::move(sigma_cos)) {
  if (sigma2_.sign() <= 0 || sigma2_sin2().sign() <= 0) {
    throw DomainError("degenerate lattice: need sigma2 > 0 and sigma2 - sigma_cos^2 > 0 (got sigma2=" +
                      sigma2_.to_string() + ", sigma_cos=" + sigma_cos_.to_string() + ")");
  }
}

std::string_view to_string(LatticeClass c) {
  switch (c) {
    case LatticeClass::square: return "square";
    case LatticeClass::rectangular: return "rectangular";
    case LatticeClass::rhombic: return "rhombic";
    case LatticeClass::hexagonal: return "hexagonal";
    case LatticeClass::oblique: return "oblique";
  }
  return "oblique";
}

Mat2Q gram(const LatticeParams& lattice) {
  return {Rational(1), lattice.sigma_cos(), lattice.sigma_cos(), lattice.sigma2()};
}

Rational inner(const LatticeParams& lattice, const Vec2Q& x, const Vec2Q& y) {
  const Vec2Q py = gram(lattice) * y;
  return x.x * py.x + x.y * py.y;
}

Rational norm2(const LatticeParams& lattice, const LatticeVector& v) {
  const Vec2Q q = to_rational(v);
  return inner(lattice, q, q);
}

LatticeClass classify(const LatticeParams& lattice) {
  const Rational& s = lattice.sigma_cos();
  const bool unit = lattice.sigma2() == Rational(1);
  if (s.is_zero()) return unit ? LatticeClass::square : LatticeClass::rectangular;
  if (unit) return abs(s) == Rational(1, 2) ? LatticeClass::hexagonal : LatticeClass::rhombic;
  return LatticeClass::oblique;
}

DiagonalSublattice diagonal_sublattice(const LatticeParams& /*lattice*/) {
  DiagonalSublattice d{{1, 1}, {1, -1}, 0};
  d.index = abs(hnf2(d.basis()).h.det());
  return d;
}

DiagonalDecomposition decompose_diagonal(const LatticeVector& x) {
  // x = (b1+b2)/2 d1 + (b1-b2)/2 d2; with mixed parity peel off a1 first.
  Integer parity;
  mpz_fdiv_r_ui(parity.get_mpz_t(), Integer(x.x + x.y).get_mpz_t(), 2);
  const int k = parity == 0 ? 0 : 1;
  const Integer b1 = x.x - k;
  return {Integer((b1 + x.y) / 2), Integer((b1 - x.y) / 2), k};
}

LatticeVector recompose_diagonal(const DiagonalDecomposition& d) {
  return {Integer(d.c1 + d.c2 + d.k), Integer(d.c1 - d.c2)};
}

LatticeParams dual_shape(const LatticeParams& lattice) {
  const DiagonalSublattice diag = diagonal_sublattice(lattice);
  const Vec2Q d1 = to_rational(diag.d1);
  const Vec2Q d2 = to_rational(diag.d2);
  const Rational n1 = inner(lattice, d1, d1);
  return LatticeParams(inner(lattice, d2, d2) / n1, inner(lattice, d1, d2) / n1);
}

}  // namespace csl
