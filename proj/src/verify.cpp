#include "csl/verify.hpp"

#include <sstream>

#include "csl/errors.hpp"

namespace csl {
namespace {

template <class... Parts>
std::string describe(const Parts&... parts) {
  std::ostringstream os;
  (os << ... << parts);
  return os.str();
}

void check_diagonal_form(const LatticeParams& diag, const Mat2Q& m, const std::string& label,
                         std::vector<std::string>& failures) {
  const Mat2Q conj = to_diagonal_basis(m);
  if (!is_gram_orthogonal(diag, conj)) {
    failures.push_back(describe(label, ": diagonal-basis form not orthogonal"));
    return;
  }
  if (csl_basis(diag, conj).sigma <= 0) failures.push_back(describe(label, ": diagonal-basis sigma not finite"));
}

}  // namespace

std::vector<LatticeParams> default_lattice_grid() {
  return {
      {1, 0},
      {2, 0},
      {3, 0},
      {Rational(1, 2), 0},
      {5, 0},
      {1, Rational(1, 2)},
      {1, Rational(1, 3)},
      {2, Rational(1, 2)},
      {3, 1},
  };
}

Mat2Q to_diagonal_basis(const Mat2Q& m) {
  const Mat2Q s{1, 1, 1, -1};
  return inverse(s) * m * s;
}

VerifyReport verify_lattice(const LatticeParams& lattice, const Integer& max_sigma, const Integer& coord_bound) {
  VerifyReport report{lattice, 0, 0, {}, {}};
  const LatticeParams diag = dual_shape(lattice);

  const auto rotations = enumerate_rotations(lattice, max_sigma);
  report.rotations = rotations.size();
  for (const auto& e : rotations) {
    const std::string label = describe("rotation (", e.p, ",", e.q, ")");
    report.sigma_values.insert(e.sigma);
    if (!is_gram_orthogonal(lattice, e.matrix)) report.failures.push_back(label + ": not orthogonal");
    if (e.matrix.det() != Rational(1)) report.failures.push_back(label + ": det != 1");
    const Integer oracle = oracle_order(lattice, e.matrix);
    if (oracle != e.sigma) {
      report.failures.push_back(describe(label, ": structural sigma ", e.sigma, " != oracle ", oracle));
    }
    if (!(closed_form_rotation(lattice, {e.p, e.q}) == e.matrix)) {
      report.failures.push_back(label + ": closed form disagrees");
    }
    try {
      const CartanPair pair = cartan_decompose(lattice, e.matrix);
      if (!(primitive(pair.c) == LatticeVector{e.p, e.q})) report.failures.push_back(label + ": mirror pair differs");
    } catch (const ConsistencyError& ex) {
      report.failures.push_back(label + ": " + ex.what());
    }
    check_diagonal_form(diag, e.matrix, label, report.failures);
  }

  const auto widened = enumerate_rotations(lattice, max_sigma, 2);
  if (widened.size() != rotations.size()) {
    report.failures.push_back(describe("widened search found ", widened.size(), " rotations, expected ",
                                       rotations.size()));
  }

  for (const auto& r : enumerate_reflections(lattice, coord_bound)) {
    if (r.sigma > max_sigma) continue;
    ++report.reflections;
    const std::string label = describe("reflection ", r.c);
    if (!is_gram_orthogonal(lattice, r.matrix)) report.failures.push_back(label + ": not orthogonal");
    if (r.matrix.det() != Rational(-1)) report.failures.push_back(label + ": det != -1");
    if (!(r.matrix * r.matrix == Mat2Q::identity())) report.failures.push_back(label + ": not an involution");
    const Integer oracle = oracle_order(lattice, r.matrix);
    if (oracle != r.sigma) {
      report.failures.push_back(describe(label, ": structural sigma ", r.sigma, " != oracle ", oracle));
    }
    check_diagonal_form(diag, r.matrix, label, report.failures);
  }
  return report;
}

}  // namespace csl
