#include "doctest.h"

#include "chernflop/errors.hpp"
#include "chernflop/flops.hpp"

using namespace chernflop;

TEST_CASE("alternating binomial partial sums") {
  for (int n = 1; n <= 30; ++n) {
    for (int i = 0; i < n; ++i) {
      Integer sum = 0;
      for (int j = 0; j <= i; ++j) {
        const Integer c = binomial(n, j);
        sum += j % 2 == 0 ? c : Integer(-c);
      }
      const Integer rhs = binomial(n - 1, i);
      CHECK(sum == (i % 2 == 0 ? rhs : Integer(-rhs)));
    }
  }
}

TEST_CASE("the fiber over a point has all Chern numbers zero") {
  // P(3) with stable tangent O(1)^2 + O(-1)^2: c = (1 - u^2)^2 has no odd terms and c2^... vanish
  const Manifold z = point();
  const Manifold f = twisted_bundle(make_instance(z, {CohElement(z.space), CohElement(z.space)}, {CohElement(z.space), CohElement(z.space)}));
  CHECK(f.n == 3);
  CHECK_NOTHROW(validate(f));
  CHECK(chern_numbers(f).is_zero());
}

TEST_CASE("s_n of the projective example") {
  const long expected[] = {0, 0, 5, 7, 14, 18};
  for (int n = 3; n <= 8; ++n) {
    const FlopInstance inst = cp_example(n);
    CHECK(s_n_twisted(inst, SnRoute::integration) == Rational(expected[n - 3]));
    if (n >= 5) CHECK(s_n_closed_form(n) == expected[n - 3]);
  }
  for (int n = 5; n <= 11; n += 2) CHECK(s_n_closed_form(n) == Integer(n * (n - 3) / 2));
}

TEST_CASE("bracket and integration routes agree on random instances") {
  for (const auto& inst : random_instances(3, 10, 3)) {
    CAPTURE(inst.label);
    CHECK(s_n_twisted(inst, SnRoute::integration) == s_n_twisted(inst, SnRoute::bracket));
  }
}

TEST_CASE("bracket index validation") {
  CHECK_THROWS_AS(s_n_bracket(5, 1, 1, 0, 1), BadPartition);
  CHECK_THROWS_AS(s_n_bracket(5, -1, 3, 0, 0), BadPartition);
  CHECK_NOTHROW(s_n_bracket(5, 2, 0, 0, 0));
}

TEST_CASE("odd prime powers") {
  CHECK(odd_prime_base(9) == 3);
  CHECK(odd_prime_base(7) == 7);
  CHECK(odd_prime_base(1) == 0);
  CHECK(odd_prime_base(12) == 0);
  CHECK(odd_prime_base(15) == 0);
  CHECK(odd_prime_base(125) == 5);
  CHECK(odd_prime_base(2) == 0);
}

TEST_CASE("gcd table rows") {
  const long want[][2] = {{5, 5}, {6, 7}, {7, 7}, {8, 3}};
  for (const auto& row : want) {
    const GcdProfile p = gcd_profile(static_cast<int>(row[0]));
    CHECK(p.odd_gcd == row[1]);
    CHECK(p.matches);
  }
}

TEST_CASE("c1 witness has c1^k a power of two") {
  for (int k = 1; k <= 12; ++k) {
    const UnitWitness w = c1_unit_witness(k);
    CHECK(w.odd_part == 1);
    CHECK(w.vector.at(Partition(static_cast<std::size_t>(k), 1)) == Rational(w.c1_power));
  }
}

TEST_CASE("SU flops are SU") {
  const Manifold z = projective_space(2);
  const FlopInstance inst = su_flop(z, line_class(z, {1}), line_class(z, {-2}), line_class(z, {0}));
  CHECK(inst.su);
  CHECK(chern_numbers(twisted_bundle(inst)).is_su());
  CHECK_FALSE(cp_example(5).su);
}

TEST_CASE("flop classes vanish under the genera") {
  const FlopCheck c = flop_check(cp_example(5), 3);
  CHECK(c.elliptic_zero);
  CHECK(c.chi_y_zero);
  CHECK(c.chi_yz_zero);
  // a non-flop class is not killed
  CHECK_FALSE(chi_y(projective_space(2)).is_zero());
}

TEST_CASE("random instances are deterministic") {
  const auto a = random_instances(42, 6, 4);
  const auto b = random_instances(42, 6, 4);
  REQUIRE(a.size() == 6);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].label == b[i].label);
    CHECK(a[i].z.n <= 4);
    if (i % 2 == 0) CHECK(a[i].su);
  }
}
