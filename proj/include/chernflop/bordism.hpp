#pragma once

#include <map>
#include <string>
#include <vector>

#include "chernflop/cohomology.hpp"
#include "chernflop/partitions.hpp"
#include "chernflop/symmetric.hpp"

namespace chernflop {

/// Stably complex manifold model: a cohomology ring plus the Chern roots of
/// the virtual tangent bundle sum(pos) - sum(neg), of virtual rank n.
struct Manifold {
  int n = 0;
  SpacePtr space;
  std::vector<CohElement> tangent_pos;
  std::vector<CohElement> tangent_neg;
  std::string label;
};

// Throws ModelError if ranks, degrees or dimensions are inconsistent.
void validate(const Manifold& m);

Manifold point();
Manifold projective_space(int n);
Manifold product(const Manifold& a, const Manifold& b);
Manifold power(const Manifold& m, int e);

CohElement first_chern_class(const Manifold& m);
CohElement total_chern_class(const Manifold& m);
// Integral of sum(pos^k) - sum(neg^k).
Rational power_sum_integral(const Manifold& m, int k);

/// Rational bordism class of dimension n, given by all Chern numbers c_lambda.
class BordismVector {
 public:
  BordismVector() : BordismVector(0) {}
  explicit BordismVector(int n);
  static BordismVector point();

  int dim() const { return n_; }
  const std::map<Partition, Rational>& numbers() const { return numbers_; }
  const Rational& at(const Partition& lambda) const;
  void set(const Partition& lambda, const Rational& value);

  bool is_zero() const;
  // All c_1-containing numbers vanish.
  bool is_su() const;

  BordismVector operator-() const;
  BordismVector& operator+=(const BordismVector& other);
  BordismVector& operator-=(const BordismVector& other);
  BordismVector& operator*=(const Rational& c);
  friend BordismVector operator+(BordismVector a, const BordismVector& b) { return a += b; }
  friend BordismVector operator-(BordismVector a, const BordismVector& b) { return a -= b; }
  friend BordismVector operator*(BordismVector a, const Rational& c) { return a *= c; }
  friend BordismVector operator*(const Rational& c, BordismVector a) { return a *= c; }
  friend bool operator==(const BordismVector&, const BordismVector&) = default;

 private:
  int n_;
  std::map<Partition, Rational> numbers_;
};

BordismVector chern_numbers(const Manifold& m);
BordismVector bordism_product(const BordismVector& a, const BordismVector& b);
BordismVector bordism_power(const BordismVector& b, int e);

/// Pairs the degree-n part of a Chern polynomial with the numbers of b.
Rational pair(const ChernPoly& p, const BordismVector& b);

/// s_n = x_1^n + ... + x_n^n evaluated on b.
Rational s_number(const BordismVector& b);

// Named vectors: K3 (c1^2 = 0, c2 = 24), S6 (c3 = 2), X4 (c4 = 6, c2^2 = 2).
BordismVector k3_vector();
BordismVector s6_vector();
BordismVector x4_vector();
BordismVector builtin_vector(const std::string& name);

std::string to_string(const BordismVector& b);

}  // namespace chernflop
