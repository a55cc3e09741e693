#pragma once

#include <string>
#include <vector>

#include "chernflop/bordism.hpp"
#include "chernflop/genera.hpp"

namespace chernflop {

struct GeneratorSet {
  BordismVector x2;
  BordismVector x3;
  BordismVector x4;
};

GeneratorSet generator_set();

// Checks elliptic_genus(x_i) against the Jacobi generators to q_prec.
bool verify_generators(const GeneratorSet& g, int q_prec);

/// -(1/32)x2^3x3^2 + (1/16)x2^2x4^2 + (9/2)x2x3^2x4 - 27x3^4 - 8x4^3, dimension 12.
BordismVector delta_vector();

struct DeltaVerification {
  bool elliptic_matches = false;  // elliptic genus = g2^3 - 27 g3^2
  bool cusp = false;              // q^0 coefficient of the elliptic genus vanishes
  bool chi_y_zero = false;
  bool chi_yz_zero = false;
  bool ok() const { return elliptic_matches && cusp && chi_y_zero && chi_yz_zero; }
};
DeltaVerification verify_delta_vector(int q_prec);

struct QuotientRow {
  int degree = 0;
  long monomials = 0;   // weight-d monomials in x1..x4 (weights 1..4)
  long relations = 0;   // weight-(d-12) monomials times Delta
  long dimension = 0;
  long partitions = 0;  // number of Chern numbers in dimension d
};
std::vector<QuotientRow> quotient_dimension_report(int max_dim);

}  // namespace chernflop
