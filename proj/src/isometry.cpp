#include "csl/isometry.hpp"

#include <cmath>
#include <numbers>

#include "csl/errors.hpp"

namespace csl {
namespace {

void require_nonzero(const LatticeVector& c, const char* what) {
  if (c.x == 0 && c.y == 0) throw DomainError(std::string(what) + ": zero vector");
}

void require_rotation(const LatticeParams& lattice, const Mat2Q& m) {
  if (!is_gram_orthogonal(lattice, m)) throw DomainError("matrix is not orthogonal for this lattice");
  if (m.det() != Rational(1)) throw DomainError("matrix is not a rotation (det != 1)");
}

}  // namespace

bool is_gram_orthogonal(const LatticeParams& lattice, const Mat2Q& m) {
  const Mat2Q p = gram(lattice);
  return m.transpose() * p * m == p;
}

IsometryMatrix reflection_matrix(const LatticeParams& lattice, const LatticeVector& c) {
  require_nonzero(c, "reflection");
  const Vec2Q cq = to_rational(c);
  const Vec2Q pc = gram(lattice) * cq;
  const Rational scale = Rational(2) / (cq.x * pc.x + cq.y * pc.y);
  // I - 2 c (Pc)ᵀ / cᵀPc
  Mat2Q m{Rational(1) - scale * cq.x * pc.x, -scale * cq.x * pc.y,
          -scale * cq.y * pc.x, Rational(1) - scale * cq.y * pc.y};
  return {m, ReflectionOrigin{c}};
}

bool is_coincidence_reflection_condition(const LatticeParams& lattice, const LatticeVector& c) {
  require_nonzero(c, "reflection condition");
  const Vec2Q cq = to_rational(c);
  const Rational n = norm2(lattice, c);
  // Both quotients are formed in Q, so they are rational whenever the
  // invariants are; evaluate them to keep the witness executable.
  const Rational first = inner(lattice, {Rational(1), Rational(0)}, cq) / n;
  const Rational second = inner(lattice, {Rational(0), Rational(1)}, cq) / n;
  return first.den() >= 1 && second.den() >= 1;
}

IsometryMatrix rotation_rect(const LatticeParams& lattice, const Integer& p, const Integer& q) {
  if (!lattice.sigma_cos().is_zero()) throw DomainError("rotation_rect: lattice is not rectangular");
  if (gcd(p, q) != 1) throw UsageError("rotation_rect: (p, q) must be coprime");
  const Rational& s2 = lattice.sigma2();
  const Rational pp(Integer(p * p));
  const Rational qq(Integer(q * q));
  const Rational pq(Integer(p * q));
  const Rational d = pp + s2 * qq;
  const Rational diag = (s2 * qq - pp) / d;
  Mat2Q m{diag, Rational(2) * s2 * pq / d, Rational(-2) * pq / d, diag};
  return {m, RotationOrigin{p, q}};
}

LatticeVector axis_e2_vector(const LatticeParams& lattice) {
  const Rational& s = lattice.sigma_cos();
  return {Integer(-s.num()), s.den()};
}

IsometryMatrix rotation_general(const LatticeParams& lattice, const LatticeVector& c) {
  require_nonzero(c, "rotation");
  const Mat2Q m = reflection_matrix(lattice, c).m * reflection_matrix(lattice, axis_e2_vector(lattice)).m;
  return {m, RotationOrigin{c.x, c.y}};
}

Mat2Q closed_form_rotation(const LatticeParams& lattice, const LatticeVector& c) {
  require_nonzero(c, "rotation");
  const Rational& t = lattice.sigma2();
  const Rational& s = lattice.sigma_cos();
  const Rational a1(c.x);
  const Rational a2(c.y);
  const Rational d = a1 * a1 + t * a2 * a2 + Rational(2) * s * a1 * a2;
  const Rational mixed = a1 + a2 * s;
  const Rational shifted = a1 + Rational(2) * a2 * s;
  return {(t * a2 * a2 - a1 * a1) / d, Rational(2) * t * a2 * mixed / d,
          Rational(-2) * a2 * mixed / d, -(shifted * shifted - t * a2 * a2) / d};
}

CartanPair cartan_decompose(const LatticeParams& lattice, const Mat2Q& m) {
  require_rotation(lattice, m);
  const LatticeVector b = axis_e2_vector(lattice);
  if (m == Mat2Q::identity()) return {b, b};
  // φ_c = M φ_b is a reflection; every nonzero column of φ_c - I is a
  // multiple of c. For a rectangular lattice column 1 is M e1 - e1.
  const Mat2Q shift = m * reflection_matrix(lattice, b).m - Mat2Q::identity();
  const Vec2Q col = shift.col1() == Vec2Q{} ? shift.col2() : shift.col1();
  if (col == Vec2Q{}) throw ConsistencyError("cartan_decompose: M φ_b is the identity");
  CartanPair pair{primitive(col), b};
  const Mat2Q back = reflection_matrix(lattice, pair.c).m * reflection_matrix(lattice, b).m;
  if (!(back == m)) throw ConsistencyError("cartan_decompose: recomposition mismatch");
  return pair;
}

Rational rotation_cos(const Mat2Q& m) { return m.trace() / Rational(2); }

Rational half_angle_tan2(const LatticeParams& lattice, const LatticeVector& c) {
  require_nonzero(c, "half angle");
  if (c.y == 0) throw DomainError("half angle: tangent undefined for a half turn");
  const Rational a2(c.y);
  const Rational mixed = Rational(c.x) + a2 * lattice.sigma_cos();
  return mixed * mixed / (a2 * a2 * lattice.sigma2_sin2());
}

double rotation_degrees(const LatticeParams& lattice, const Mat2Q& m) {
  const double cos_theta = rotation_cos(m).to_double();
  const double sin_theta = std::sqrt(lattice.sigma2_sin2().to_double()) * m.m21.to_double();
  return std::atan2(sin_theta, cos_theta) * 180.0 / std::numbers::pi;
}

}  // namespace csl
