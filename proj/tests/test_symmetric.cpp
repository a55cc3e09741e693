#include "doctest.h"

#include <algorithm>
#include <random>

#include "chernflop/errors.hpp"
#include "chernflop/symmetric.hpp"

using namespace chernflop;

namespace {

// Elementary symmetric values of explicit roots.
std::vector<Rational> elementary(const std::vector<Rational>& roots) {
  std::vector<Rational> e(roots.size() + 1, Rational(0));
  e[0] = 1;
  for (const auto& x : roots) {
    for (std::size_t k = roots.size(); k >= 1; --k) e[k] += e[k - 1] * x;
  }
  return e;
}

Rational eval_chern(const ChernPoly& p, const std::vector<Rational>& e) {
  Rational out = 0;
  for (const auto& [key, c] : p) {
    Rational term = c;
    for (int l : key) term *= static_cast<std::size_t>(l) < e.size() ? e[static_cast<std::size_t>(l)] : Rational(0);
    out += term;
  }
  return out;
}

// m_mu of explicit roots by summing over distinct permutations of the exponent vector.
Rational eval_monomial(const Partition& mu, const std::vector<Rational>& roots) {
  std::vector<int> ex(roots.size(), 0);
  if (mu.size() > roots.size()) return 0;
  std::copy(mu.begin(), mu.end(), ex.begin());
  std::sort(ex.begin(), ex.end());
  Rational out = 0;
  do {
    Rational term = 1;
    for (std::size_t i = 0; i < roots.size(); ++i) {
      for (int k = 0; k < ex[i]; ++k) term *= roots[i];
    }
    out += term;
  } while (std::next_permutation(ex.begin(), ex.end()));
  return out;
}

}  // namespace

TEST_CASE("small conversions") {
  const ChernPoly p2 = newton_power_sum(2, 3);
  CHECK(p2 == ChernPoly{{{1, 1}, 1}, {{2}, -2}});
  const ChernPoly p3 = newton_power_sum(3, 3);
  CHECK(p3 == ChernPoly{{{1, 1, 1}, 1}, {{2, 1}, -3}, {{3}, 3}});
  CHECK(monomial_to_chern({{{2, 1}, 1}}, 3) == ChernPoly{{{2, 1}, 1}, {{3}, -3}});
}

TEST_CASE("Pieri rule") {
  const MonomialSym out = pieri_e({1}, 1, 2);
  CHECK(out == MonomialSym{{{2}, 1}, {{1, 1}, 2}});
  // m_(2,1) e_2 in 3 variables
  const MonomialSym b = pieri_e({2, 1}, 2, 3);
  CHECK(b == MonomialSym{{{3, 2}, 1}, {{3, 1, 1}, 2}, {{2, 2, 1}, 2}});
}

TEST_CASE("monomial basis against evaluation at integer roots") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> dist(-4, 4);
  for (int n = 1; n <= 6; ++n) {
    for (const auto& mu : partitions(n)) {
      const ChernPoly p = monomial_to_chern({{mu, 1}}, n);
      for (int trial = 0; trial < 3; ++trial) {
        std::vector<Rational> roots;
        for (int i = 0; i < n; ++i) roots.emplace_back(dist(rng));
        CHECK(eval_chern(p, elementary(roots)) == eval_monomial(mu, roots));
      }
    }
  }
}

TEST_CASE("Newton power sums against evaluation") {
  const std::vector<Rational> roots{Rational(2), Rational(-1), Rational(3), make_rational(1, 2)};
  for (int k = 1; k <= 7; ++k) {
    Rational direct = 0;
    for (const auto& x : roots) {
      Rational t = 1;
      for (int i = 0; i < k; ++i) t *= x;
      direct += t;
    }
    CHECK(eval_chern(newton_power_sum(k, 4), elementary(roots)) == direct);
  }
}

TEST_CASE("explicit symmetric polynomials") {
  // x1^2 x2 + x1 x2^2 + x1^2 x3 + ... = m_(2,1) in 3 variables
  ExplicitPoly p;
  std::vector<int> ex{2, 1, 0};
  std::sort(ex.begin(), ex.end());
  do p[ex] = 1;
  while (std::next_permutation(ex.begin(), ex.end()));
  p[{1, 1, 1}] = 5;
  CHECK(symmetric_to_chern(p, 3) == ChernPoly{{{2, 1}, 1}, {{3}, 2}});
  CHECK_THROWS_AS(symmetric_to_chern({{{1, 0}, 1}}, 2), NotSymmetric);
}

TEST_CASE("chern_mul is commutative polynomial multiplication") {
  const ChernPoly a{{{1}, 1}, {{}, 2}};
  const ChernPoly b{{{2}, 3}};
  CHECK(chern_mul(a, b) == ChernPoly{{{2, 1}, 3}, {{2}, 6}});
  CHECK(chern_mul(a, b) == chern_mul(b, a));
}

TEST_CASE("partitions") {
  const int counts[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  for (int n = 0; n <= 10; ++n) CHECK(partitions(n).size() == static_cast<std::size_t>(counts[n]));
  CHECK(partitions(3) == std::vector<Partition>{{1, 1, 1}, {2, 1}, {3}});
  CHECK(conjugate({3, 1}) == Partition{2, 1, 1});
  CHECK(to_string(Partition{2, 1}) == "(2,1)");
  CHECK(parse_partition("(3,2,2)") == Partition{3, 2, 2});
  CHECK_THROWS_AS(validate_partition({1, 2}), BadPartition);
  int seen = 0;
  for_each_composition(3, 3, [&](const std::vector<int>&) { ++seen; });
  CHECK(seen == 10);
}
