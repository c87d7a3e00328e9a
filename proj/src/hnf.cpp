#include "csl/hnf.hpp"

#include "csl/errors.hpp"

namespace csl {
namespace {

struct ExtGcd {
  Integer g, s, t;  // s*a + t*b == g >= 0
};

ExtGcd ext_gcd(const Integer& a, const Integer& b) {
  ExtGcd r;
  mpz_gcdext(r.g.get_mpz_t(), r.s.get_mpz_t(), r.t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

// Column operation on (a, b) that leaves gcd(a.x, b.x) in the first column and
// zero in b.x. Returns the 2x2 unimodular transform applied.
Mat2Z clear_top_row(Vec2Z& a, Vec2Z& b) {
  const ExtGcd e = ext_gcd(a.x, b.x);
  const Integer ax = a.x / e.g;
  const Integer bx = b.x / e.g;
  Vec2Z na{Integer(e.s * a.x + e.t * b.x), Integer(e.s * a.y + e.t * b.y)};
  Vec2Z nb{Integer(bx * a.x - ax * b.x), Integer(bx * a.y - ax * b.y)};
  a = na;
  b = nb;
  return {e.s, bx, e.t, Integer(-ax)};
}

}  // namespace

HnfResult hnf2(const Mat2Z& m) {
  if (m.det() == 0) throw DomainError("hnf2: singular basis");
  Vec2Z a = m.col1();
  Vec2Z b = m.col2();
  Mat2Z u = clear_top_row(a, b);
  if (b.y < 0) {
    b.y = -b.y;
    u.m12 = -u.m12;
    u.m22 = -u.m22;
  }
  // a.x > 0 by the gcd convention; reduce a.y into [0, b.y).
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.y.get_mpz_t(), b.y.get_mpz_t());
  a.y -= q * b.y;
  u.m11 -= q * u.m12;
  u.m21 -= q * u.m22;
  return {Mat2Z::from_columns(a, b), u};
}

Mat2Z hnf_of_generators(const std::vector<Vec2Z>& generators) {
  if (generators.empty()) throw DomainError("hnf: no generators");
  Vec2Z head = generators.front();
  Integer bottom = 0;
  for (std::size_t i = 1; i < generators.size(); ++i) {
    Vec2Z v = generators[i];
    clear_top_row(head, v);
    bottom = gcd(bottom, v.y);
  }
  if (head.x == 0 || bottom == 0) throw DomainError("hnf: generators do not span rank 2");
  if (head.x < 0) {
    head.x = -head.x;
    head.y = -head.y;
  }
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), head.y.get_mpz_t(), bottom.get_mpz_t());
  return {head.x, Integer(0), r, bottom};
}

Mat2Z intersect_integer_lattices(const Mat2Z& a, const Mat2Z& b) {
  const Integer da = a.det();
  const Integer db = b.det();
  if (da == 0 || db == 0) throw DomainError("intersect: singular basis");
  // (A Z^2 ∩ B Z^2)^* = A^-T Z^2 + B^-T Z^2. Scale the dual sum by
  // m = lcm(|det A|, |det B|) so it is integral, normalize, dualize back.
  const Integer m = lcm(da, db);
  const Mat2Z adj_a_t = a.adjugate().transpose();
  const Mat2Z adj_b_t = b.adjugate().transpose();
  const Integer fa = m / da;
  const Integer fb = m / db;
  const Mat2Z sa = fa * adj_a_t;
  const Mat2Z sb = fb * adj_b_t;
  const Mat2Z dual_sum = hnf_of_generators({sa.col1(), sa.col2(), sb.col1(), sb.col2()});
  // Lattice dual to (dual_sum Z^2) / m is m * dual_sum^-T Z^2.
  const Mat2Z adj_t = dual_sum.adjugate().transpose();
  const Integer dh = dual_sum.det();
  Mat2Q back = Rational(m, dh) * to_rational(adj_t);
  return hnf2(to_integer(back)).h;
}

bool contains(const Mat2Z& basis, const Vec2Z& v) {
  const Integer d = basis.det();
  if (d == 0) throw DomainError("contains: singular basis");
  const Vec2Z w = basis.adjugate() * v;
  return w.x % d == 0 && w.y % d == 0;
}

}  // namespace csl
