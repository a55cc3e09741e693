#include "doctest.h"

#include "chernflop/series.hpp"

using namespace chernflop;

namespace {

Rational r(long n, long d = 1) { return make_rational(n, d); }

}  // namespace

TEST_CASE("geometric inverse of 1 - y") {
  const YLaurent a = YLaurent::from_coefficients(0, {r(1), r(-1)});
  const YLaurent inv = a.inverse(10);
  CHECK(inv.prec() == 10);
  for (int e = 0; e < 10; ++e) CHECK(inv.coeff(e) == 1);
  const YLaurent one = a * inv;
  CHECK(one.coeff(0) == 1);
  for (int e = 1; e < one.prec(); ++e) CHECK(one.coeff(e) == 0);
}

TEST_CASE("inverse of a Laurent series with negative valuation") {
  // y^-1 (1 + 2y); inverse y (1 - 2y + 4y^2 - ...)
  const YLaurent a = YLaurent::from_coefficients(-1, {r(1), r(2)});
  const YLaurent inv = a.inverse(6);
  CHECK(inv.valuation() == 1);
  Rational expect = 1;
  for (int e = 1; e < 6; ++e) {
    CHECK(inv.coeff(e) == expect);
    expect *= -2;
  }
}

TEST_CASE("exact monomials invert exactly, other exact values need a cap") {
  const YLaurent m = YLaurent::monomial(r(3), 4);
  const YLaurent inv = m.inverse(kExact);
  CHECK(inv.is_exact());
  CHECK(inv.coeff(-4) == r(1, 3));
  const YLaurent a = YLaurent::from_coefficients(0, {r(1), r(1)});
  CHECK_THROWS_AS(a.inverse(kExact), PrecisionError);
  CHECK_THROWS_AS(YLaurent().inverse(5), NotInvertible);
}

TEST_CASE("product precision follows the valuations") {
  const YLaurent a = YLaurent::from_coefficients(0, {r(1), r(1)}, 5);
  const YLaurent b = YLaurent::from_coefficients(2, {r(1)}, 7);
  const YLaurent p = a * b;
  CHECK(p.prec() == 7);
  CHECK(p.coeff(2) == 1);
  CHECK(p.coeff(3) == 1);
}

TEST_CASE("evaluation and y -> 1/y") {
  const YLaurent a = YLaurent::from_coefficients(-1, {r(2), r(0), r(3)});
  CHECK(a.evaluate(r(2)) == 7);
  const YLaurent b = a.invert_y();
  CHECK(b.coeff(1) == 2);
  CHECK(b.coeff(-1) == 3);
  CHECK(a.negate_y().coeff(-1) == -2);
}

TEST_CASE("inverse of 1 - q in GSeries") {
  const int qp = 6;
  const GSeries one_minus_q = GSeries::constant(1, qp) - GSeries::variable(Var::q, qp);
  const GSeries inv = one_minus_q.inverse(kExact);
  CHECK(inv.q_prec() == qp);
  for (int j = 0; j < qp; ++j) CHECK(inv.coeff({j, 0, 0, 0}).coeff(0) == 1);
  CHECK((inv * one_minus_q).agrees_with(GSeries::constant(1, qp)));
}

TEST_CASE("poly cap drops high k terms in inverses") {
  const GSeries s = GSeries::constant(1) + GSeries::variable(Var::k);
  const GSeries inv = s.inverse(kExact, 3);
  CHECK(inv.max_degree(Var::k) == 3);
  CHECK(inv.coeff({0, 3, 0, 0}).coeff(0) == -1);
}

TEST_CASE("canonical text") {
  GSeries s(3);
  s.add_term({1, 0, 0, 0}, YLaurent::monomial(r(1, 2), -1));
  s.add_term({0, 0, 0, 2}, YLaurent::monomial(r(-3), 0));
  CHECK(to_canonical_text(s) == "-3/1 * q^0 k^0 z^0 t^2 y^0 + 1/2 * q^1 k^0 z^0 t^0 y^-1");
  CHECK(to_canonical_text(GSeries(4)) == "0");
}

TEST_CASE("pretty text of a t-graded y polynomial") {
  GSeries s;
  s.add_term({0, 0, 0, 2}, YLaurent::from_coefficients(0, {r(2), r(-20), r(2)}));
  CHECK(to_pretty_text(s) == "t^2*(2 - 20y + 2y^2)");
}

TEST_CASE("JSON round trip keeps coefficients and precision") {
  GSeries s(4);
  s.add_term({0, 1, 0, 0}, YLaurent::from_coefficients(-2, {r(1, 3), r(0), r(-7)}, 5));
  s.add_term({3, 0, 2, 1}, YLaurent::monomial(r(5), 2));
  const nlohmann::json j = to_json(s);
  CHECK(j["q_prec"] == "4");
  const GSeries back = gseries_from_json(j);
  CHECK(back.q_prec() == 4);
  CHECK(back.agrees_with(s));
  CHECK(back.coeff({0, 1, 0, 0}).prec() == 5);
  CHECK(to_json(back) == j);
}
