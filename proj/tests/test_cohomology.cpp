#include "doctest.h"

#include "chernflop/cohomology.hpp"

using namespace chernflop;

TEST_CASE("projective space relations") {
  const SpacePtr p2 = make_base({2});
  const CohElement h = CohElement::generator(p2, 0);
  CHECK(h.pow(2).integrate() == 1);
  CHECK(h.pow(3).is_zero());
  CHECK(h.integrate() == 0);
  CHECK((h * 3 + CohElement::constant(p2, 1)).pow(2).integrate() == 9);
}

TEST_CASE("product of projective spaces") {
  const SpacePtr s = make_base({1, 2});
  const CohElement a = CohElement::generator(s, 0);
  const CohElement b = CohElement::generator(s, 1);
  CHECK((a * b * b).integrate() == 1);
  CHECK((a + b).pow(3).integrate() == 3);
  const ProductSpace ps = product_space(make_base({1}), make_base({1}));
  CHECK(ps.space->dim() == 2);
  const CohElement x = pull(CohElement::generator(make_base({1}), 0), ps.space, ps.map_a);
  const CohElement y = pull(CohElement::generator(make_base({1}), 0), ps.space, ps.map_b);
  CHECK((x * y).integrate() == 1);
  CHECK((x * x).is_zero());
}

TEST_CASE("projective bundle satisfies the Grothendieck relation") {
  // V = O(a) + O(b) + O(c) over P(2); prod (u + v_j) = 0 in the ring of P(V)
  const SpacePtr base = make_base({2});
  const CohElement h = CohElement::generator(base, 0);
  const int deg[3] = {1, -2, 3};
  std::vector<CohElement> roots;
  for (int d : deg) roots.push_back(h * Rational(d));
  const SpacePtr bundle = add_projective_bundle(base, roots);
  CHECK(bundle->dim() == 4);
  const CohElement u = CohElement::generator(bundle, bundle->fiber_generator());
  const CohElement hb = CohElement::generator(bundle, 0);
  CohElement rel = CohElement::constant(bundle, 1);
  for (int d : deg) rel = rel * (u + hb * Rational(d));
  CHECK((rel * u).integrate() == 0);
  CHECK((rel * hb).integrate() == 0);
  // u^2 integrated against a point class of the base is the fiber degree
  CHECK((u.pow(2) * hb.pow(2)).integrate() == 1);
  CHECK(pushforward_power(bundle, 2).integrate() == 0);
  CHECK(pushforward_power(bundle, 2) == CohElement::constant(base, 1));
}

TEST_CASE("Hirzebruch surface intersection numbers") {
  const SpacePtr base = make_base({1});
  const CohElement h = CohElement::generator(base, 0);
  const SpacePtr f1 = add_projective_bundle(base, {CohElement(base), h});
  const CohElement u = CohElement::generator(f1, 1);
  const CohElement f = CohElement::generator(f1, 0);
  CHECK((u * f).integrate() == 1);
  CHECK((u * u).integrate() == -1);
  CHECK((f * f).integrate() == 0);
}

TEST_CASE("characteristic classes of P(n)") {
  for (int n = 1; n <= 5; ++n) {
    const SpacePtr s = make_base({n});
    const CohElement h = CohElement::generator(s, 0);
    std::vector<CohElement> pos(static_cast<std::size_t>(n + 1), h);
    std::vector<CohElement> neg{CohElement(s)};
    CHECK(char_class(pos, neg, ClassKind::todd, n).integrate() == 1);
    // top Chern class is the Euler characteristic
    CHECK(char_class(pos, neg, ClassKind::chern_total, n).integrate() == n + 1);
    // ch = (n+1) e^h - 1, top part (n+1)/n!
    CHECK(char_class(pos, neg, ClassKind::chern_character, n).integrate() == Rational(n + 1) / Rational(factorial(n)));
  }
}

TEST_CASE("apply_series truncates at the ambient dimension") {
  const SpacePtr s = make_base({3});
  const CohElement h = CohElement::generator(s, 0);
  const CohElement e = apply_series(h, xseries::exp(2, 6));
  CHECK(e.integrate() == make_rational(8, 6));
  CHECK(e.coeff(Exponents{}) == 1);
}

TEST_CASE("todd series coefficients") {
  const auto t = xseries::todd(4);
  CHECK(t[0] == 1);
  CHECK(t[1] == make_rational(1, 2));
  CHECK(t[2] == make_rational(1, 12));
  CHECK(t[3] == 0);
  CHECK(t[4] == make_rational(-1, 720));
}
