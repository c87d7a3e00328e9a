#pragma once

// 2x2 matrices and 2-vectors over Integer and Rational. Column j of a matrix
// is the image of basis vector j, so M * v applies the map to coordinates v.

#include <ostream>

#include "csl/rational.hpp"

namespace csl {

template <class T>
struct Vec2 {
  T x{};
  T y{};

  friend bool operator==(const Vec2&, const Vec2&) = default;
};

template <class T>
struct Mat2 {
  T m11{}, m12{};
  T m21{}, m22{};

  static Mat2 identity() { return {T(1), T(0), T(0), T(1)}; }

  /// Builds a matrix whose columns are the given vectors.
  static Mat2 from_columns(const Vec2<T>& c1, const Vec2<T>& c2) {
    return {c1.x, c2.x, c1.y, c2.y};
  }

  Vec2<T> col1() const { return {m11, m21}; }
  Vec2<T> col2() const { return {m12, m22}; }

  T det() const { return T(m11 * m22 - m12 * m21); }
  T trace() const { return T(m11 + m22); }
  Mat2 transpose() const { return {m11, m21, m12, m22}; }
  Mat2 adjugate() const { return {m22, T(-m12), T(-m21), m11}; }

  friend bool operator==(const Mat2&, const Mat2&) = default;

  friend Mat2 operator*(const Mat2& a, const Mat2& b) {
    return {T(a.m11 * b.m11 + a.m12 * b.m21), T(a.m11 * b.m12 + a.m12 * b.m22),
            T(a.m21 * b.m11 + a.m22 * b.m21), T(a.m21 * b.m12 + a.m22 * b.m22)};
  }
  friend Vec2<T> operator*(const Mat2& a, const Vec2<T>& v) {
    return {T(a.m11 * v.x + a.m12 * v.y), T(a.m21 * v.x + a.m22 * v.y)};
  }
  friend Mat2 operator*(const T& s, const Mat2& a) {
    return {T(s * a.m11), T(s * a.m12), T(s * a.m21), T(s * a.m22)};
  }
  friend Mat2 operator+(const Mat2& a, const Mat2& b) {
    return {T(a.m11 + b.m11), T(a.m12 + b.m12), T(a.m21 + b.m21), T(a.m22 + b.m22)};
  }
  friend Mat2 operator-(const Mat2& a, const Mat2& b) {
    return {T(a.m11 - b.m11), T(a.m12 - b.m12), T(a.m21 - b.m21), T(a.m22 - b.m22)};
  }

  friend std::ostream& operator<<(std::ostream& os, const Mat2& a) {
    return os << "[[" << a.m11 << "," << a.m12 << "],[" << a.m21 << "," << a.m22 << "]]";
  }
};

template <class T>
std::ostream& operator<<(std::ostream& os, const Vec2<T>& v) {
  return os << "(" << v.x << "," << v.y << ")";
}

using Vec2Z = Vec2<Integer>;
using Vec2Q = Vec2<Rational>;
using Mat2Z = Mat2<Integer>;
using Mat2Q = Mat2<Rational>;

inline Vec2Q to_rational(const Vec2Z& v) { return {Rational(v.x), Rational(v.y)}; }
inline Mat2Q to_rational(const Mat2Z& m) {
  return {Rational(m.m11), Rational(m.m12), Rational(m.m21), Rational(m.m22)};
}

/// Inverse of a rational matrix; DomainError when singular.
Mat2Q inverse(const Mat2Q& m);

/// Least d > 0 such that d*m is integral (lcm of the entry denominators).
Integer denominator(const Mat2Q& m);
Integer denominator(const Vec2Q& v);

bool is_integral(const Mat2Q& m);
bool is_integral(const Vec2Q& v);

/// Entrywise conversion; ConsistencyError if an entry is not an integer.
Mat2Z to_integer(const Mat2Q& m);
Vec2Z to_integer(const Vec2Q& v);

/// Divides by the gcd of the coordinates and makes the first nonzero
/// coordinate positive. DomainError for the zero vector.
Vec2Z primitive(const Vec2Z& v);

/// Primitive integer vector on the same line as a nonzero rational vector.
Vec2Z primitive(const Vec2Q& v);

bool is_primitive(const Vec2Z& v);

}  // namespace csl
