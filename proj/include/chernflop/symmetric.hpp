#pragma once

#include <map>
#include <vector>

#include "chernflop/partitions.hpp"
#include "chernflop/rational.hpp"

namespace chernflop {

/// Polynomial in Chern classes: key (l1,...,lr) stands for c_l1 ... c_lr,
/// the empty key for the constant 1.
using ChernPoly = std::map<Partition, Rational>;

/// Symmetric function in the monomial basis: key mu stands for m_mu.
using MonomialSym = std::map<Partition, Rational>;

/// Explicit polynomial in n variables, keyed by exponent vectors of length n.
using ExplicitPoly = std::map<std::vector<int>, Rational>;

/// m_mu * e_k in nvars variables.
MonomialSym pieri_e(const Partition& mu, int k, int nvars);
MonomialSym mul_e(const MonomialSym& f, int k, int nvars);

/// e_lambda = prod e_{lambda_i} expanded in the monomial basis (cached).
const MonomialSym& e_expansion(const Partition& lambda, int nvars);

/// Rewrites a symmetric function in elementary symmetric polynomials
/// e_i -> c_i by eliminating the lexicographically leading monomial.
ChernPoly monomial_to_chern(MonomialSym f, int nvars);

/// Same for an explicit polynomial; throws NotSymmetric if it is not.
ChernPoly symmetric_to_chern(const ExplicitPoly& p, int n);

/// x_1^k + ... + x_n^k in Chern classes via Newton's identities
/// (classes c_i with i > nvars are zero).
ChernPoly newton_power_sum(int k, int nvars);

ChernPoly chern_mul(const ChernPoly& a, const ChernPoly& b);

}  // namespace chernflop
