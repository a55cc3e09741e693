#include "doctest.h"

#include "chernflop/errors.hpp"
#include "chernflop/genera.hpp"

using namespace chernflop;

namespace {

// Value of a genus that is a single rational number, graded or not.
Rational scalar(const GSeries& s) {
  REQUIRE(s.terms().size() <= 1);
  return s.terms().empty() ? Rational(0) : s.terms().begin()->second.coeff(0);
}

}  // namespace

TEST_CASE("classical genera of projective spaces") {
  for (int n = 1; n <= 6; ++n) {
    const Manifold p = projective_space(n);
    CHECK(scalar(genus_eval(p, todd_spec(n))) == 1);
    CHECK(scalar(genus_eval(p, euler_spec(n))) == n + 1);
    const Rational sig = scalar(genus_eval(p, signature_spec(n)));
    CHECK(sig == (n % 2 == 0 ? 1 : 0));
  }
}

TEST_CASE("chi_y of P(n) from its Hodge numbers") {
  for (int n = 1; n <= 6; ++n) {
    const GSeries v = chi_y(projective_space(n));
    const std::vector<Rational> p = y_polynomial(v, n);
    for (int i = 0; i <= n; ++i) CHECK(p[static_cast<std::size_t>(i)] == (i % 2 == 0 ? 1 : -1));
  }
}

TEST_CASE("chi_y of K3 from Hodge numbers") {
  // h^{0,0}=h^{0,2}=1, h^{1,1}=20
  CHECK(to_pretty_text(chi_y(k3_vector())) == "t^2*(2 - 20y + 2y^2)");
}

TEST_CASE("route agreement and multiplicativity") {
  const Manifold m = product(projective_space(1), projective_space(2));
  CHECK(chi_y(m).agrees_with(chi_y(chern_numbers(m))));
  CHECK(chi_yz(m).agrees_with(chi_yz(chern_numbers(m))));
  CHECK(chi_yz(m).agrees_with(chi_yz(projective_space(1)) * chi_yz(projective_space(2))));
  CHECK(unscaled_genus(m, 3).agrees_with(unscaled_genus(chern_numbers(m), 3)));
}

TEST_CASE("elliptic genus of K3 is 24 wp") {
  const int qp = 3;
  const YWindow w = default_window(2, qp);
  CHECK(w.hi == qp * 2 + 2);
  const GSeries phi = elliptic_genus(k3_vector(), qp, w);
  const GSeries wp = jacobi_series(JacobiName::wp, qp, w) * Rational(24);
  CHECK(agree_through(phi, wp, w.hi));
}

TEST_CASE("elliptic genus is multiplicative") {
  const int qp = 3;
  const YWindow w{-4, 4};
  // the factors need room above w.hi: negative y-powers at higher q eat into it
  const YWindow wide{-4, 4 + 4 * qp};
  const GSeries a = elliptic_genus(projective_space(1), qp, wide);
  const GSeries b = elliptic_genus(projective_space(2), qp, wide);
  const GSeries ab = elliptic_genus(product(projective_space(1), projective_space(2)), qp, w);
  CHECK(agree_through(ab, (a * b).clip_y(w.hi), w.hi));
}

TEST_CASE("Hodge components of chi_y") {
  // chi(P(2), Omega^p) = (-1)^p
  const Manifold p2 = projective_space(2);
  for (int p = 0; p <= 2; ++p) CHECK(chi_p_class(p2, p, 0).integrate() == (p % 2 == 0 ? 1 : -1));
}

TEST_CASE("specializations and the SU residual") {
  const Specializations s = classical_specializations(chi_y(projective_space(4)), 4);
  CHECK(s.todd == 1);
  CHECK(s.euler == 5);
  CHECK(s.signature == 1);
  CHECK(libgober_wood_check(k3_vector()) == 0);
  CHECK_THROWS_AS(libgober_wood_check(chern_numbers(projective_space(2))), NotSU);
}

TEST_CASE("polynomial genus with constant term 1") {
  // Q(x) = 1 + x gives the total Chern class, so the top Chern number
  const GenusSpec g = polynomial_spec("chern", {1, 1, 0, 0});
  CHECK(scalar(genus_eval(projective_space(3), g)) == 4);
}
