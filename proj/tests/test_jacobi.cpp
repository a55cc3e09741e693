#include "doctest.h"

#include "chernflop/jacobi.hpp"

using namespace chernflop;

namespace {

Rational q_coeff(const GSeries& s, int j) { return s.coeff({j, 0, 0, 0}).coeff(0); }

// q prod (1 - q^n)^24 with plain integers.
std::vector<Integer> tau_product(int n) {
  std::vector<Integer> p(static_cast<std::size_t>(n), 0);
  p[0] = 1;
  for (int m = 1; m < n; ++m) {
    for (int rep = 0; rep < 24; ++rep) {
      for (int i = n - 1; i >= m; --i) p[static_cast<std::size_t>(i)] -= p[static_cast<std::size_t>(i - m)];
    }
  }
  std::vector<Integer> out(static_cast<std::size_t>(n), 0);
  for (int i = 1; i < n; ++i) out[static_cast<std::size_t>(i)] = p[static_cast<std::size_t>(i - 1)];
  return out;
}

}  // namespace

TEST_CASE("g2 and g3 are E4/12 and -E6/216") {
  const long e4[] = {1, 240, 2160, 6720, 17520, 30240};
  const long e6[] = {1, -504, -16632, -122976, -532728, -1575504};
  const GSeries g2 = jacobi_series(JacobiName::g2, 6, {});
  const GSeries g3 = jacobi_series(JacobiName::g3, 6, {});
  for (int j = 0; j < 6; ++j) {
    CHECK(q_coeff(g2, j) == make_rational(e4[j], 12));
    CHECK(q_coeff(g3, j) == make_rational(-e6[j], 216));
  }
}

TEST_CASE("discriminant matches the eta product") {
  const int qp = 7;
  const GSeries d = jacobi_series(JacobiName::delta_modular, qp, {});
  const auto tau = tau_product(qp);
  for (int j = 0; j < qp; ++j) CHECK(q_coeff(d, j) == Rational(tau[static_cast<std::size_t>(j)]));
}

TEST_CASE("Weierstrass equation holds and detects a perturbation") {
  CHECK(verify_weierstrass(5, {-6, 6}).is_zero());
  CHECK_FALSE(verify_weierstrass(3, {-4, 4}, make_rational(1, 1000)).is_zero());
}

TEST_CASE("Delta polynomial needs the cube of x4") {
  const DeltaCheck ok = verify_delta(4, {-5, 5});
  CHECK(ok.residual.is_zero());
  CHECK(ok.cusp_value.is_zero());
  CHECK_FALSE(verify_delta(3, {-5, 5}, 2).residual.is_zero());
}

TEST_CASE("q^0 parts of the Weierstrass functions") {
  // wp = 1/12 + y/(1-y)^2, wp' = y(1+y)/(1-y)^3 around y = 0
  const GSeries wp = jacobi_series(JacobiName::wp, 2, {-3, 8});
  const GSeries dwp = jacobi_series(JacobiName::wp_prime, 2, {-3, 8});
  const YLaurent a = wp.coeff({});
  const YLaurent b = dwp.coeff({});
  CHECK(a.coeff(0) == make_rational(1, 12));
  for (int n = 1; n <= 8; ++n) {
    CHECK(a.coeff(n) == n);
    CHECK(b.coeff(n) == n * n);
  }
}

TEST_CASE("wp is even and wp' odd under y -> 1/y at positive q-order") {
  const GSeries wp = jacobi_series(JacobiName::wp, 4, {-6, 6});
  const GSeries dwp = jacobi_series(JacobiName::wp_prime, 4, {-6, 6});
  for (int j = 1; j < 4; ++j) {
    const YLaurent a = wp.coeff({j, 0, 0, 0});
    const YLaurent b = dwp.coeff({j, 0, 0, 0});
    for (int e = 1; e <= 6; ++e) {
      CHECK(a.coeff(e) == a.coeff(-e));
      CHECK(b.coeff(e) == -b.coeff(-e));
    }
  }
}

TEST_CASE("Phi is an exact product with Phi(q, 1) = 0") {
  const GSeries phi = phi_series(5);
  CHECK(phi.is_exact());
  for (int j = 0; j < 5; ++j) CHECK(phi.coeff({j, 0, 0, 0}).evaluate(1) == 0);
  CHECK(phi.coeff({}).coeff(-1) == -1);
  CHECK(phi.coeff({}).coeff(0) == 1);
}

TEST_CASE("names") {
  CHECK(parse_jacobi_name("wp_prime") == JacobiName::wp_prime);
  CHECK(to_string(JacobiName::delta_poly) == "delta_poly");
  CHECK_THROWS_AS(parse_jacobi_name("theta"), UnknownName);
}

TEST_CASE("agree_through refuses a window it cannot see") {
  const GSeries a = jacobi_series(JacobiName::wp, 2, {-2, 4});
  CHECK(agree_through(a, a, 4));
  CHECK_THROWS_AS(agree_through(a, a, 50), PrecisionError);
}
