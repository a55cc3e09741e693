#include "doctest.h"

#include "chernflop/errors.hpp"
#include "chernflop/manifold_parser.hpp"

using namespace chernflop;

TEST_CASE("products of projective spaces stay explicit models") {
  const Value v = parse_manifold_expression("P(1) x P(1)");
  REQUIRE(std::holds_alternative<Manifold>(v));
  CHECK(dimension(v) == 2);
  CHECK(to_vector(v).at({1, 1}) == 8);
  CHECK(to_vector(parse_manifold_expression("P(1)^3")) == chern_numbers(power(projective_space(1), 3)));
  CHECK(to_vector(parse_manifold_expression("P(1) * P(2)")) == to_vector(parse_manifold_expression("P(1)xP(2)")));
}

TEST_CASE("linear combinations become bordism vectors") {
  const Value v = parse_manifold_expression("2*K3 - P(1)^2");
  REQUIRE(std::holds_alternative<BordismVector>(v));
  const BordismVector b = std::get<BordismVector>(v);
  CHECK(b.at({2}) == 44);
  CHECK(b.at({1, 1}) == -8);
  const BordismVector c = to_vector(parse_manifold_expression("1/2*(K3 + K3)"));
  CHECK(c == k3_vector());
  CHECK(to_vector(parse_manifold_expression("K3 x S6")) == bordism_product(k3_vector(), s6_vector()));
  CHECK(std::get<Rational>(parse_manifold_expression("3/6")) == make_rational(1, 2));
}

TEST_CASE("twisted bundles") {
  const Value v = parse_manifold_expression("TW(Z=P(2); A=O(1)+O(0); B=O(0)+O(0))");
  REQUIRE(std::holds_alternative<Manifold>(v));
  CHECK(dimension(v) == 5);
  CHECK(to_vector(v) == chern_numbers(twisted_bundle(cp_example(5))));
  const Value su = parse_manifold_expression("SU(Z=P(1) x P(1); L1=O(1,0); L2=O(0,-1); L3=O(2,2))");
  CHECK(to_vector(su).is_su());
  CHECK(dimension(parse_manifold_expression("TW(Z=P(0); A=O(0)+O(0); B=O(0)+O(0))")) == 3);
}

TEST_CASE("instance labels parse back to the same class") {
  for (const auto& inst : random_instances(5, 6, 3)) {
    CAPTURE(inst.label);
    CHECK(to_vector(parse_manifold_expression(inst.label)) == chern_numbers(twisted_bundle(inst)));
  }
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(parse_manifold_expression("P(1) + P(2)"), DegreeMismatch);
  CHECK_THROWS_AS(parse_manifold_expression("Q(1)"), ParseError);
  CHECK_THROWS_AS(parse_manifold_expression("P(1"), ParseError);
  CHECK_THROWS_AS(parse_manifold_expression("K3 K3"), ParseError);
  CHECK_THROWS_AS(parse_manifold_expression("TW(Z=K3; A=O(1)+O(0); B=O(0)+O(0))"), ParseError);
  CHECK_THROWS_AS(parse_manifold_expression("TW(Z=P(1); A=O(1,1)+O(0); B=O(0)+O(0))"), ParseError);
  CHECK_THROWS_AS(parse_manifold_expression("1/0"), ParseError);
}

TEST_CASE("line bundle helpers") {
  const Manifold z = projective_space(2);
  const auto pair = parse_line_pair("O(2)+O(-1)", z);
  CHECK((pair[0] * pair[1]).integrate() == -2);
  CHECK(parse_line("O(3)", z) == line_class(z, {3}));
  CHECK_THROWS_AS(parse_line("O(3) extra", z), ParseError);
}
