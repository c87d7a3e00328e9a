#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "csl/errors.hpp"
#include "csl/hnf.hpp"

using namespace csl;

namespace {

Mat2Z mz(long a, long b, long c, long d) { return {a, b, c, d}; }

// Membership oracle: solve basis * u = v over Q and test integrality.
bool in_span(const Mat2Z& basis, const Vec2Z& v) {
  const Vec2Q u = inverse(to_rational(basis)) * to_rational(v);
  return is_integral(u);
}

bool same_lattice_on_box(const Mat2Z& a, const Mat2Z& b, long box) {
  for (long x = -box; x <= box; ++x) {
    for (long y = -box; y <= box; ++y) {
      if (in_span(a, {x, y}) != in_span(b, {x, y})) return false;
    }
  }
  return true;
}

bool in_hnf_form(const Mat2Z& h) {
  return h.m12 == 0 && h.m11 > 0 && h.m22 > 0 && h.m21 >= 0 && h.m21 < h.m22;
}

Mat2Z random_nonsingular(std::mt19937_64& rng, long range) {
  std::uniform_int_distribution<long> dist(-range, range);
  for (;;) {
    Mat2Z m = mz(dist(rng), dist(rng), dist(rng), dist(rng));
    if (m.det() != 0) return m;
  }
}

}  // namespace

TEST_CASE("rational values stay reduced") {
  const Rational r(Integer(6), Integer(-4));
  CHECK(r.num() == -3);
  CHECK(r.den() == 2);
  CHECK(Rational(Integer(0), Integer(7)).den() == 1);
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK((Rational(-7, 2)).floor() == -4);
  CHECK(Rational(-3, 4).to_string() == "-3/4");
  CHECK(Rational(5).to_string() == "5");
  CHECK_THROWS_AS(Rational(Integer(1), Integer(0)), DomainError);
  CHECK_THROWS_AS(Rational(1) / Rational(0), DomainError);
}

TEST_CASE("fraction parsing") {
  CHECK(Rational::parse("3/6") == Rational(1, 2));
  CHECK(Rational::parse("-2") == Rational(-2));
  CHECK(Rational::parse("+4/3") == Rational(4, 3));
  CHECK(Rational::parse("123456789012345678901234567890/2").num().get_str() == "61728394506172839450617283945");
  for (const char* bad : {"", "/", "1/", "a", "1/0", "1/-2", "1.5", "2/3/4", "--1"}) {
    CHECK_THROWS_AS(Rational::parse(bad), UsageError);
  }
}

TEST_CASE("hnf2 examples") {
  CHECK(hnf2(mz(1, 0, 0, 1)).h == mz(1, 0, 0, 1));
  CHECK(hnf2(mz(2, 0, 0, 3)).h == mz(2, 0, 0, 3));
  const auto r = hnf2(mz(2, 1, 0, 1));
  CHECK(r.h == mz(1, 0, 1, 2));
  CHECK(same_lattice_on_box(mz(2, 1, 0, 1), r.h, 6));
  CHECK(mz(2, 1, 0, 1) * r.u == r.h);
  CHECK_THROWS_AS(hnf2(mz(1, 2, 2, 4)), DomainError);
}

TEST_CASE("hnf2 properties on random bases") {
  std::mt19937_64 rng(20240611);
  for (int i = 0; i < 300; ++i) {
    const Mat2Z m = random_nonsingular(rng, 30);
    const auto r = hnf2(m);
    REQUIRE(in_hnf_form(r.h));
    CHECK(abs(r.u.det()) == 1);
    CHECK(m * r.u == r.h);
    CHECK(abs(r.h.det()) == abs(m.det()));
    CHECK(hnf2(r.h).h == r.h);
  }
}

TEST_CASE("hnf of a generating set") {
  CHECK(hnf_of_generators({{4, 0}, {0, 6}, {2, 3}}) == mz(2, 0, 3, 6));
  CHECK_THROWS_AS(hnf_of_generators({{1, 2}, {2, 4}}), DomainError);
}

TEST_CASE("lattice intersection examples") {
  const Mat2Z id = mz(1, 0, 0, 1);
  CHECK(intersect_integer_lattices(id, id) == id);
  CHECK(intersect_integer_lattices(id, mz(2, 0, 0, 2)) == mz(2, 0, 0, 2));
  const Mat2Z diag = mz(1, 1, 1, -1);
  const Mat2Z c = intersect_integer_lattices(id, diag);
  CHECK(c == mz(1, 0, 1, 2));
  // Brute force: the intersection is {(m, n) : m + n even}.
  for (long x = -4; x <= 4; ++x) {
    for (long y = -4; y <= 4; ++y) CHECK(in_span(c, {x, y}) == ((x + y) % 2 == 0));
  }
  CHECK_THROWS_AS(intersect_integer_lattices(id, mz(1, 1, 1, 1)), DomainError);
}

TEST_CASE("lattice intersection properties") {
  std::mt19937_64 rng(77);
  for (int i = 0; i < 150; ++i) {
    const Mat2Z a = random_nonsingular(rng, 8);
    const Mat2Z b = random_nonsingular(rng, 8);
    const Mat2Z c = intersect_integer_lattices(a, b);
    REQUIRE(in_hnf_form(c));
    CHECK(c == intersect_integer_lattices(b, a));
    CHECK(abs(c.det()) % lcm(abs(a.det()), abs(b.det())) == 0);
    // Membership agrees with both-lattice membership on a box.
    for (long x = -12; x <= 12; x += 1) {
      for (long y = -12; y <= 12; y += 1) {
        const Vec2Z v{x, y};
        CHECK(in_span(c, v) == (in_span(a, v) && in_span(b, v)));
      }
    }
    CHECK(contains(c, c.col1()));
  }
}

TEST_CASE("denominator") {
  CHECK(denominator(Mat2Q::identity()) == 1);
  CHECK(denominator(Mat2Q{Rational(3, 5), Rational(4, 5), Rational(-4, 5), Rational(3, 5)}) == 5);
  CHECK(denominator(Mat2Q{Rational(1, 3), Rational(4, 3), Rational(-2, 3), Rational(1, 3)}) == 3);

  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> entry(-50, 50);
  std::uniform_int_distribution<long> den(1, 40);
  for (int i = 0; i < 200; ++i) {
    const Mat2Z m = mz(entry(rng), entry(rng), entry(rng), entry(rng));
    const long d = den(rng);
    const Mat2Q q = Rational(1, d) * to_rational(m);
    // Recovering d exactly requires gcd(entries, d) == 1.
    Integer g = gcd(gcd(m.m11, m.m12), gcd(m.m21, m.m22));
    const Integer expected = Integer(d) / gcd(g, Integer(d));
    CHECK(denominator(q) == expected);
    CHECK(is_integral(Rational(denominator(q)) * q));
  }
}

TEST_CASE("primitive vectors") {
  CHECK(primitive(Vec2Z{-4, 6}) == Vec2Z{2, -3});
  CHECK(primitive(Vec2Z{0, -5}) == Vec2Z{0, 1});
  CHECK(primitive(Vec2Q{Rational(-2, 5), Rational(-4, 5)}) == Vec2Z{1, 2});
  CHECK_THROWS_AS(primitive(Vec2Z{0, 0}), DomainError);
}
