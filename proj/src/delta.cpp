#include "chernflop/delta.hpp"

#include "chernflop/errors.hpp"
#include "chernflop/jacobi.hpp"

namespace chernflop {

namespace {

long weighted_monomials(int d) {
  if (d < 0) return 0;
  long count = 0;
  for (int a4 = 0; 4 * a4 <= d; ++a4) {
    for (int a3 = 0; 4 * a4 + 3 * a3 <= d; ++a3) {
      for (int a2 = 0; 4 * a4 + 3 * a3 + 2 * a2 <= d; ++a2) ++count;  // a1 absorbs the rest
    }
  }
  return count;
}

}  // namespace

GeneratorSet generator_set() { return {k3_vector(), s6_vector(), x4_vector()}; }

bool verify_generators(const GeneratorSet& g, int q_prec) {
  const std::pair<const BordismVector*, JacobiName> pairs[] = {
      {&g.x2, JacobiName::x2}, {&g.x3, JacobiName::x3}, {&g.x4, JacobiName::x4}};
  for (const auto& [vec, name] : pairs) {
    const YWindow w = default_window(vec->dim(), q_prec);
    if (!agree_through(elliptic_genus(*vec, q_prec, w), jacobi_series(name, q_prec, w), w.hi)) return false;
  }
  return true;
}

BordismVector delta_vector() {
  const GeneratorSet g = generator_set();
  const BordismVector x3sq = bordism_product(g.x3, g.x3);
  BordismVector out = bordism_product(bordism_power(g.x2, 3), x3sq) * make_rational(-1, 32);
  out += bordism_product(bordism_power(g.x2, 2), bordism_power(g.x4, 2)) * make_rational(1, 16);
  out += bordism_product(bordism_product(g.x2, x3sq), g.x4) * make_rational(9, 2);
  out -= bordism_product(x3sq, x3sq) * Rational(27);
  out -= bordism_power(g.x4, 3) * Rational(8);
  return out;
}

DeltaVerification verify_delta_vector(int q_prec) {
  const BordismVector d = delta_vector();
  DeltaVerification out;
  const YWindow w = default_window(d.dim(), q_prec);
  const GSeries phi = elliptic_genus(d, q_prec, w);
  out.elliptic_matches = agree_through(phi, jacobi_series(JacobiName::delta_modular, q_prec, w), w.hi);
  out.cusp = phi.coefficient_of(Var::q, 0).is_zero();
  out.chi_y_zero = chi_y(d).is_zero();
  out.chi_yz_zero = chi_yz(d).is_zero();
  return out;
}

std::vector<QuotientRow> quotient_dimension_report(int max_dim) {
  if (max_dim > 16) throw ModelError("quotient report supports degrees up to 16");
  std::vector<QuotientRow> rows;
  for (int d = 0; d <= max_dim; ++d) {
    QuotientRow r;
    r.degree = d;
    r.monomials = weighted_monomials(d);
    r.relations = weighted_monomials(d - 12);
    r.dimension = r.monomials - r.relations;
    r.partitions = static_cast<long>(partitions(d).size());
    rows.push_back(r);
  }
  return rows;
}

}  // namespace chernflop
