#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "chernflop/bordism.hpp"
#include "chernflop/genera.hpp"

namespace chernflop {

/// Data of a classical flop: base Z (a product of projective spaces) and two
/// split rank-2 bundles A = La1 + La2, B = Lb1 + Lb2 given by first Chern classes.
struct FlopInstance {
  Manifold z;
  std::array<CohElement, 2> a;
  std::array<CohElement, 2> b;
  bool su = false;  // c1(Z) + c1(A) + c1(B) = 0
  std::string label;
};

FlopInstance make_instance(const Manifold& z, std::array<CohElement, 2> a, std::array<CohElement, 2> b);

/// c1 of a line bundle with the given multidegree on a product of projective spaces.
CohElement line_class(const Manifold& z, const std::vector<int>& degrees);

/// CP~(A + B): the projective bundle P(A + B*) over Z with stable tangent
/// bundle A(1) + B(-1) + TZ.
Manifold twisted_bundle(const FlopInstance& inst);

/// A = L1 + L2, B = L3 + (K_Z L1* L2* L3*).
FlopInstance su_flop(const Manifold& z, const CohElement& l1, const CohElement& l2, const CohElement& l3);

Integer s_n_bracket(int n, int i1, int i2, int i3, int i4);

enum class SnRoute { integration, bracket };
Rational s_n_twisted(const FlopInstance& inst, SnRoute route);

/// Z = P(n-3), A = O(1) + O, B = O + O.
FlopInstance cp_example(int n);
Integer s_n_closed_form(int n);

struct GcdProfile {
  int n = 0;
  Integer odd_gcd;
  Integer expected;
  bool matches = false;
};
GcdProfile gcd_profile(int n);
// p if v = p^a for an odd prime p, else 0.
long odd_prime_base(long v);

struct FlopCheck {
  bool elliptic_zero = false;
  bool chi_y_zero = false;
  bool chi_yz_zero = false;
  bool ok() const { return elliptic_zero && chi_y_zero && chi_yz_zero; }
};
FlopCheck flop_check(const FlopInstance& inst, int q_prec);
bool flop_vanishing(const FlopInstance& inst, int q_prec);

struct UnitWitness {
  int k = 0;
  Integer coeff_cpk;        // multiplies CP^k
  Integer coeff_p1_cpk1;    // multiplies CP^1 x CP^{k-1}
  Integer c1_power;         // c_1^k of the combination
  Integer odd_part;         // odd part of c1_power; 1 for every k
  BordismVector vector;
};
UnitWitness c1_unit_witness(int k);

/// Deterministic random instances: bases P(n1) x ... with total dimension in
/// [0, max_base_dim], line degrees in [-3, 3], alternating SU and general.
std::vector<FlopInstance> random_instances(std::uint64_t seed, int count, int max_base_dim);

}  // namespace chernflop
