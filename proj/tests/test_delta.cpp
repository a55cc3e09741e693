#include "doctest.h"

#include "chernflop/delta.hpp"
#include "chernflop/errors.hpp"

using namespace chernflop;

namespace {

long weighted_count(int d) {
  long count = 0;
  for (int a = 0; 4 * a <= d; ++a)
    for (int b = 0; 4 * a + 3 * b <= d; ++b)
      for (int c = 0; 4 * a + 3 * b + 2 * c <= d; ++c) ++count;  // x1 fills the rest
  return count;
}

}  // namespace

TEST_CASE("delta vector is an SU class of dimension 12") {
  const BordismVector d = delta_vector();
  CHECK(d.dim() == 12);
  CHECK(d.is_su());
  CHECK_FALSE(d.is_zero());
}

TEST_CASE("chi_y and chi_yz kill the delta vector") {
  CHECK(chi_y(delta_vector()).is_zero());
  CHECK(chi_yz(delta_vector()).is_zero());
}

TEST_CASE("generators map to the Jacobi generators") {
  const GeneratorSet g = generator_set();
  CHECK(g.x2 == k3_vector());
  CHECK(verify_generators(g, 3));
}

TEST_CASE("elliptic genus is multiplicative on generator products") {
  const int qp = 3;
  const YWindow w{-6, 6};
  const YWindow wide{-6, 6 + 6 * qp};
  const GSeries a = elliptic_genus(k3_vector(), qp, wide);
  const GSeries b = elliptic_genus(s6_vector(), qp, wide);
  const GSeries ab = elliptic_genus(bordism_product(k3_vector(), s6_vector()), qp, w);
  CHECK(agree_through(ab, (a * b).clip_y(w.hi), w.hi));
}

TEST_CASE("quotient dimensions") {
  const auto rows = quotient_dimension_report(16);
  REQUIRE(rows.size() == 17);
  for (const auto& r : rows) {
    CHECK(r.monomials == weighted_count(r.degree));
    CHECK(r.relations == (r.degree >= 12 ? weighted_count(r.degree - 12) : 0));
  }
  CHECK(rows[4].dimension == 5);
  CHECK(rows[4].partitions == 5);
  CHECK(rows[5].dimension == 6);
  CHECK(rows[5].partitions == 7);
  CHECK(rows[12].dimension == weighted_count(12) - 1);
  CHECK_THROWS(quotient_dimension_report(17));
}
