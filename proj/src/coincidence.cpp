#include "csl/coincidence.hpp"

#include <algorithm>
#include <set>
#include <tuple>
#include <utility>

#include "csl/errors.hpp"
#include "csl/hnf.hpp"

namespace csl {
namespace {

void require_orthogonal(const LatticeParams& lattice, const Mat2Q& m) {
  if (!is_gram_orthogonal(lattice, m)) throw DomainError("matrix is not orthogonal for this lattice");
}

Integer least_integral_multiple(const Vec2Q& v) { return denominator(v); }

Integer mod(const Integer& a, const Integer& n) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), n.get_mpz_t());
  return r;
}

}  // namespace

CoincidenceReport csl_basis(const LatticeParams& lattice, const Mat2Q& m, bool with_oracle) {
  require_orthogonal(lattice, m);
  CoincidenceReport report;
  report.denominator = denominator(m);
  const Integer& d = report.denominator;
  const Mat2Z a = to_integer(Rational(d) * m);
  const Mat2Z scaled = to_integer(Rational(d) * Mat2Q::identity());
  const Mat2Z both = intersect_integer_lattices(a, scaled);
  const Mat2Z basis = to_integer(Rational(1, d) * to_rational(both));
  report.csl_basis = hnf2(basis).h;
  report.sigma = abs(report.csl_basis.det());
  if (with_oracle) report.oracle_sigma = oracle_order(lattice, m);
  return report;
}

Integer oracle_order(const LatticeParams& lattice, const Mat2Q& m) {
  require_orthogonal(lattice, m);
  const Integer k1 = least_integral_multiple(m.col1());
  const Integer k2 = least_integral_multiple(m.col2());
  // Work in units of 1/d so the class key is a pair of residues mod d.
  const Integer d = denominator(m);
  const Mat2Z a = to_integer(Rational(d) * m);
  std::set<std::pair<Integer, Integer>> classes;
  for (Integer r1 = 0; r1 < k1; ++r1) {
    for (Integer r2 = 0; r2 < k2; ++r2) {
      const Vec2Z image = a * Vec2Z{r1, r2};
      classes.emplace(mod(image.x, d), mod(image.y, d));
    }
  }
  return Integer(static_cast<unsigned long>(classes.size()));
}

Integer element_order(const LatticeParams& lattice, const Mat2Q& m, const LatticeVector& x) {
  require_orthogonal(lattice, m);
  const Mat2Q inv = inverse(m);
  const Vec2Q image = m * to_rational(x);
  const Integer bound = denominator(m);
  for (Integer k = 1; k <= bound; ++k) {
    const Vec2Q scaled{Rational(k) * image.x, Rational(k) * image.y};
    if (is_integral(scaled) && is_integral(inv * scaled)) return k;
  }
  throw ConsistencyError("element_order: exceeded denominator bound");
}

Integer rotation_norm_bound(const LatticeParams& lattice, const Integer& sigma_max) {
  const Integer g = lcm(lattice.sigma2().den(), lattice.sigma_cos().den());
  const Mat2Z integral_gram = to_integer(Rational(g) * gram(lattice));
  const Integer det_g = abs(integral_gram.det());
  const Integer den_b = denominator(reflection_matrix(lattice, axis_e2_vector(lattice)).m);
  return Integer(2 * det_g * sigma_max * den_b);
}

std::vector<EnumerationEntry> enumerate_rotations(const LatticeParams& lattice, const Integer& sigma_max,
                                                  unsigned search_scale) {
  if (sigma_max <= 0) throw UsageError("enumerate: max sigma must be positive");
  if (search_scale == 0) throw UsageError("enumerate: search scale must be positive");

  const Integer g = lcm(lattice.sigma2().den(), lattice.sigma_cos().den());
  const Integer n_max = rotation_norm_bound(lattice, sigma_max) * search_scale;
  // cᵀGc = g [(c1 + s c2)² + (t - s²) c2²] <= n_max
  const Rational budget = Rational(n_max, g);
  const Rational area = lattice.sigma2_sin2();
  const Integer c2_max = isqrt((budget / area).floor());

  std::vector<EnumerationEntry> entries;
  for (Integer c2 = -c2_max; c2 <= c2_max; ++c2) {
    const Rational rest = budget - area * Rational(Integer(c2 * c2));
    if (rest.sign() < 0) continue;
    const Rational center = -lattice.sigma_cos() * Rational(c2);
    const Integer reach = isqrt(rest.floor()) + 1;
    const Integer lo = center.floor() - reach;
    const Integer hi = center.floor() + reach + 1;
    for (Integer c1 = lo; c1 <= hi; ++c1) {
      const LatticeVector c{c1, c2};
      if (!is_primitive(c) || !(primitive(c) == c)) continue;
      const Rational off = Rational(c1) - center;
      if (off * off > rest) continue;
      const Mat2Q m = rotation_general(lattice, c).m;
      if (denominator(m) > sigma_max) continue;
      const CoincidenceReport report = csl_basis(lattice, m);
      if (report.sigma > sigma_max) continue;
      entries.push_back({c1, c2, rotation_degrees(lattice, m), report.sigma, m});
    }
  }
  std::sort(entries.begin(), entries.end(), [](const EnumerationEntry& a, const EnumerationEntry& b) {
    return std::tie(a.sigma, a.p, a.q) < std::tie(b.sigma, b.p, b.q);
  });
  // Distinct mirror directions give distinct rotations; keep the guard anyway
  // since deduplication is part of the contract.
  std::vector<EnumerationEntry> unique;
  for (auto& e : entries) {
    const bool seen = std::any_of(unique.begin(), unique.end(),
                                  [&](const EnumerationEntry& u) { return u.matrix == e.matrix; });
    if (!seen) unique.push_back(std::move(e));
  }
  return unique;
}

std::vector<LatticeVector> primitive_vectors(const Integer& bound) {
  std::vector<LatticeVector> out;
  for (Integer x = 0; x <= bound; ++x) {
    for (Integer y = -bound; y <= bound; ++y) {
      const LatticeVector v{x, y};
      if (is_primitive(v) && primitive(v) == v) out.push_back(v);
    }
  }
  return out;
}

std::vector<ReflectionEntry> enumerate_reflections(const LatticeParams& lattice, const Integer& coord_bound) {
  if (coord_bound <= 0) throw UsageError("enumerate: coordinate bound must be positive");
  std::vector<ReflectionEntry> out;
  for (const LatticeVector& c : primitive_vectors(coord_bound)) {
    const Mat2Q m = reflection_matrix(lattice, c).m;
    out.push_back({c, m, csl_basis(lattice, m).sigma});
  }
  std::sort(out.begin(), out.end(), [](const ReflectionEntry& a, const ReflectionEntry& b) {
    return std::tie(a.sigma, a.c.x, a.c.y) < std::tie(b.sigma, b.c.x, b.c.y);
  });
  return out;
}

}  // namespace csl
