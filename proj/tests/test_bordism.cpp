#include "doctest.h"

#include "chernflop/bordism.hpp"
#include "chernflop/errors.hpp"

using namespace chernflop;

TEST_CASE("Chern numbers of small manifolds") {
  const BordismVector p2 = chern_numbers(projective_space(2));
  CHECK(p2.at({1, 1}) == 9);
  CHECK(p2.at({2}) == 3);
  const BordismVector q = chern_numbers(product(projective_space(1), projective_space(1)));
  CHECK(q.at({1, 1}) == 8);
  CHECK(q.at({2}) == 4);
  // P(3): c(T) = (1+h)^4
  const BordismVector p3 = chern_numbers(projective_space(3));
  CHECK(p3.at({1, 1, 1}) == 64);
  CHECK(p3.at({2, 1}) == 24);
  CHECK(p3.at({3}) == 4);
}

TEST_CASE("products of vectors agree with products of models") {
  const Manifold a = projective_space(1);
  const Manifold b = projective_space(2);
  const Manifold c = projective_space(3);
  CHECK(bordism_product(chern_numbers(a), chern_numbers(b)) == chern_numbers(product(a, b)));
  CHECK(bordism_product(chern_numbers(b), chern_numbers(c)) == chern_numbers(product(b, c)));
  CHECK(bordism_power(chern_numbers(a), 3) == chern_numbers(power(a, 3)));
  CHECK(bordism_product(BordismVector::point(), chern_numbers(b)) == chern_numbers(b));
}

TEST_CASE("s-numbers") {
  for (int n = 1; n <= 8; ++n) {
    const Manifold p = projective_space(n);
    CHECK(s_number(chern_numbers(p)) == n + 1);
    CHECK(power_sum_integral(p, n) == n + 1);
  }
  // s vanishes on decomposables
  CHECK(s_number(chern_numbers(product(projective_space(2), projective_space(2)))) == 0);
}

TEST_CASE("named vectors") {
  CHECK(k3_vector().is_su());
  CHECK(s6_vector().is_su());
  CHECK(x4_vector().is_su());
  CHECK(k3_vector().at({2}) == 24);
  CHECK(x4_vector().at({2, 2}) == 2);
  CHECK_FALSE(chern_numbers(projective_space(2)).is_su());
  CHECK(builtin_vector("S6") == s6_vector());
  CHECK_THROWS_AS(builtin_vector("K4"), UnknownName);
}

TEST_CASE("vector arithmetic") {
  const BordismVector k = k3_vector();
  CHECK((k - k).is_zero());
  CHECK((k * Rational(2)).at({2}) == 48);
  CHECK_THROWS(k + chern_numbers(projective_space(3)));
  CHECK(pair(ChernPoly{{{2}, 1}, {{1, 1}, 3}}, chern_numbers(projective_space(2))) == 30);
}

TEST_CASE("model validation") {
  Manifold m = projective_space(2);
  CHECK_NOTHROW(validate(m));
  m.tangent_neg.clear();
  CHECK_THROWS_AS(validate(m), ModelError);
  CHECK(first_chern_class(projective_space(2)).integrate() == 0);
  CHECK(total_chern_class(projective_space(2)).integrate() == 3);
}
