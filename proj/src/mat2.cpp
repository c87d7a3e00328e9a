#include "csl/mat2.hpp"

#include "csl/errors.hpp"

namespace csl {

Mat2Q inverse(const Mat2Q& m) {
  const Rational d = m.det();
  if (d.is_zero()) throw DomainError("singular matrix has no inverse");
  const Rational inv = Rational(1) / d;
  return inv * m.adjugate();
}

Integer denominator(const Mat2Q& m) {
  Integer d = lcm(m.m11.den(), m.m12.den());
  d = lcm(d, m.m21.den());
  return lcm(d, m.m22.den());
}

Integer denominator(const Vec2Q& v) { return lcm(v.x.den(), v.y.den()); }

bool is_integral(const Mat2Q& m) {
  return m.m11.is_integer() && m.m12.is_integer() && m.m21.is_integer() && m.m22.is_integer();
}

bool is_integral(const Vec2Q& v) { return v.x.is_integer() && v.y.is_integer(); }

Mat2Z to_integer(const Mat2Q& m) {
  if (!is_integral(m)) throw ConsistencyError("matrix expected to be integral");
  return {m.m11.num(), m.m12.num(), m.m21.num(), m.m22.num()};
}

Vec2Z to_integer(const Vec2Q& v) {
  if (!is_integral(v)) throw ConsistencyError("vector expected to be integral");
  return {v.x.num(), v.y.num()};
}

Vec2Z primitive(const Vec2Z& v) {
  const Integer g = gcd(v.x, v.y);
  if (g == 0) throw DomainError("zero vector has no primitive direction");
  Vec2Z r{Integer(v.x / g), Integer(v.y / g)};
  if (r.x < 0 || (r.x == 0 && r.y < 0)) {
    r.x = -r.x;
    r.y = -r.y;
  }
  return r;
}

Vec2Z primitive(const Vec2Q& v) {
  const Integer d = denominator(v);
  return primitive(to_integer(Vec2Q{v.x * Rational(d), v.y * Rational(d)}));
}

bool is_primitive(const Vec2Z& v) { return gcd(v.x, v.y) == 1; }

}  // namespace csl
