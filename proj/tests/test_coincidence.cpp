#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "csl/coincidence.hpp"
#include "csl/errors.hpp"
#include "csl/hnf.hpp"
#include "csl/verify.hpp"

using namespace csl;

namespace {
const Rational half(1, 2);
const LatticeParams square{1, 0};
const LatticeParams rect2{2, 0};

Mat2Q q4(Rational a, Rational b, Rational c, Rational d) { return {a, b, c, d}; }

const Mat2Q sigma5 = q4(Rational(3, 5), Rational(4, 5), Rational(-4, 5), Rational(3, 5));
const Mat2Q rect_sigma3 = q4(Rational(1, 3), Rational(4, 3), Rational(-2, 3), Rational(1, 3));

// Density oracle: with D such that D Z² lies in Γ ∩ TΓ, the index is D² over
// the number of points of [0, D)² that lie in Γ ∩ TΓ.
long density_sigma(const Mat2Q& m) {
  const Mat2Q inv = inverse(m);
  const long d = lcm(denominator(m), denominator(inv)).get_si();
  long hits = 0;
  for (long x = 0; x < d; ++x) {
    for (long y = 0; y < d; ++y) {
      if (is_integral(inv * Vec2Q{x, y})) ++hits;
    }
  }
  return d * d / hits;
}

std::vector<LatticeParams> grid() { return default_lattice_grid(); }
}  // namespace

TEST_CASE("csl_basis examples") {
  auto r = csl_basis(square, Mat2Q::identity());
  CHECK(r.sigma == 1);
  CHECK(r.csl_basis == Mat2Z::identity());
  r = csl_basis(square, sigma5, true);
  CHECK(r.denominator == 5);
  CHECK(r.sigma == 5);
  CHECK(r.csl_basis == Mat2Z{1, 0, 2, 5});
  CHECK(r.oracle_sigma == Integer(5));
  CHECK(density_sigma(sigma5) == 5);
  r = csl_basis(rect2, rect_sigma3);
  CHECK(r.sigma == 3);
  CHECK(density_sigma(rect_sigma3) == 3);
  CHECK_THROWS_AS(csl_basis(square, q4(1, 1, 0, 1)), DomainError);
}

TEST_CASE("oracle_order examples") {
  for (const auto& l : grid()) CHECK(oracle_order(l, Mat2Q::identity()) == 1);
  CHECK(oracle_order(square, sigma5) == 5);
  CHECK(oracle_order(rect2, rotation_general(rect2, {1, 1}).m) == 3);
  CHECK_THROWS_AS(oracle_order(square, q4(2, 0, 0, 1)), DomainError);
}

TEST_CASE("element_order examples") {
  for (long x = -3; x <= 3; ++x) CHECK(element_order(square, Mat2Q::identity(), {x, 2}) == 1);
  CHECK(element_order(square, sigma5, {1, 0}) == 5);
  CHECK(element_order(rect2, rect_sigma3, {1, 0}) == 3);
  CHECK(element_order(square, sigma5, {0, 0}) == 1);
  CHECK_THROWS_AS(element_order(square, q4(1, 1, 0, 1), {1, 0}), DomainError);
}

TEST_CASE("structural sigma matches both oracles") {
  for (const auto& l : grid()) {
    for (const auto& c : primitive_vectors(6)) {
      for (const Mat2Q& m : {rotation_general(l, c).m, reflection_matrix(l, c).m}) {
        const auto r = csl_basis(l, m);
        if (r.denominator > 40) continue;
        REQUIRE(r.sigma == oracle_order(l, m));
        CHECK(r.sigma.get_si() == density_sigma(m));
        // Σ(M) = Σ(M⁻¹).
        CHECK(csl_basis(l, inverse(m)).sigma == r.sigma);
        // Both memberships for each basis column.
        const Mat2Q inv = inverse(m);
        for (const Vec2Z& v : {r.csl_basis.col1(), r.csl_basis.col2()}) {
          CHECK(is_integral(inv * to_rational(v)));
        }
        for (long x = -3; x <= 3; ++x) {
          for (long y = -3; y <= 3; ++y) CHECK(r.sigma % element_order(l, m, {x, y}) == 0);
        }
      }
    }
  }
}

TEST_CASE("trivial rotations have index one") {
  for (const auto& l : grid()) {
    CHECK(csl_basis(l, Mat2Q::identity()).sigma == 1);
    CHECK(csl_basis(l, q4(-1, 0, 0, -1)).sigma == 1);
  }
}

TEST_CASE("products and inverses stay rational coincidences") {
  for (const auto& l : grid()) {
    const auto a = rotation_general(l, {1, 2}).m;
    const auto b = reflection_matrix(l, {2, -1}).m;
    for (const Mat2Q& m : {Mat2Q(a * b), Mat2Q(b * a), inverse(a), Mat2Q(a * a * b)}) {
      CHECK(is_gram_orthogonal(l, m));
      CHECK(csl_basis(l, m).sigma > 0);
    }
  }
}

TEST_CASE("diagonal-basis form of coincidence rotations") {
  for (const auto& l : grid()) {
    const LatticeParams diag = dual_shape(l);
    for (const auto& e : enumerate_rotations(l, 25)) {
      const Mat2Q conj = to_diagonal_basis(e.matrix);
      CHECK(is_gram_orthogonal(diag, conj));
      CHECK(csl_basis(diag, conj).sigma > 0);
      // And back.
      const Mat2Q s{1, 1, 1, -1};
      CHECK(s * conj * inverse(s) == e.matrix);
    }
  }
}

TEST_CASE("enumerate_rotations examples") {
  auto entries = enumerate_rotations(square, 1);
  REQUIRE(entries.size() == 4);
  const std::vector<LatticeVector> expected{{0, 1}, {1, -1}, {1, 0}, {1, 1}};
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(entries[i].sigma == 1);
    CHECK(LatticeVector{entries[i].p, entries[i].q} == expected[i]);
  }
  CHECK(entries[0].matrix == Mat2Q::identity());
  CHECK(entries[3].matrix == q4(0, 1, -1, 0));

  std::set<Integer> sigmas;
  for (const auto& e : enumerate_rotations(square, 13)) sigmas.insert(e.sigma);
  CHECK(sigmas == std::set<Integer>{1, 5, 13});
  CHECK(enumerate_rotations(square, 13).size() == 20);

  bool found = false;
  for (const auto& e : enumerate_rotations(rect2, 3)) {
    if (e.p == 1 && e.q == 1) found = e.sigma == 3;
  }
  CHECK(found);
  CHECK_THROWS_AS(enumerate_rotations(square, 0), UsageError);
}

TEST_CASE("enumeration is sorted, unique, and complete against exhaustive search") {
  for (const auto& l : grid()) {
    const auto entries = enumerate_rotations(l, 30);
    for (std::size_t i = 1; i < entries.size(); ++i) {
      const auto& a = entries[i - 1];
      const auto& b = entries[i];
      CHECK(std::tie(a.sigma, a.p, a.q) < std::tie(b.sigma, b.p, b.q));
      CHECK(gcd(b.p, b.q) == 1);
    }
    // Exhaustive over a larger box: nothing with Σ <= 30 is missing.
    std::size_t count = 0;
    for (const auto& c : primitive_vectors(40)) {
      const Mat2Q m = rotation_general(l, c).m;
      if (denominator(m) > 30) continue;
      if (csl_basis(l, m).sigma <= 30) ++count;
    }
    CHECK(count == entries.size());
    CHECK(enumerate_rotations(l, 30, 3).size() == entries.size());
  }
}

TEST_CASE("the mirror-norm bound holds on every rotation") {
  for (const auto& l : grid()) {
    const Integer g = lcm(l.sigma2().den(), l.sigma_cos().den());
    for (const auto& c : primitive_vectors(30)) {
      const Mat2Q m = rotation_general(l, c).m;
      const Integer d = denominator(m);
      if (d > 60) continue;
      const Integer sigma = csl_basis(l, m).sigma;
      const Rational norm = Rational(g) * norm2(l, c);
      CHECK(norm <= Rational(rotation_norm_bound(l, sigma)));
    }
  }
}

TEST_CASE("enumerate_reflections") {
  const auto refl = enumerate_reflections(square, 1);
  REQUIRE(refl.size() == 4);
  std::set<std::pair<long, long>> cs;
  for (const auto& r : refl) {
    CHECK(r.sigma == 1);
    cs.emplace(r.c.x.get_si(), r.c.y.get_si());
  }
  CHECK(cs == std::set<std::pair<long, long>>{{1, 0}, {0, 1}, {1, 1}, {1, -1}});
  for (const auto& r : enumerate_reflections(square, 2)) {
    if (r.c == LatticeVector{1, 2}) CHECK(r.sigma == 5);
  }
  for (const auto& r : enumerate_reflections(rect2, 1)) {
    if (r.c == LatticeVector{0, 1}) CHECK(r.sigma == 1);
  }
  CHECK_THROWS_AS(enumerate_reflections(square, 0), UsageError);
}

TEST_CASE("verify_lattice passes on the default grid") {
  for (const auto& l : grid()) {
    const auto report = verify_lattice(l, 30, 4);
    CHECK(report.passed());
    CHECK(report.rotations > 0);
  }
}
