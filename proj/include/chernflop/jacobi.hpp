#pragma once

#include <string>

#include "chernflop/series.hpp"

namespace chernflop {

enum class JacobiName { Phi, wp, wp_prime, g2, g3, x2, x3, x4, delta_modular, delta_poly };

JacobiName parse_jacobi_name(const std::string& name);
std::string to_string(JacobiName name);

// Inclusive range of y-exponents a caller wants to see. Series are computed
// with an internal margin and every returned coefficient is known through hi;
// lo only bounds comparisons and display (negative powers are always exact).
struct YWindow {
  int lo = -10;
  int hi = 10;
};

GSeries jacobi_series(JacobiName name, int q_prec, YWindow window);

// Phi(q, y) to q_prec; every coefficient is an exact Laurent polynomial.
GSeries phi_series(int q_prec);

// -(1/32)x2^3x3^2 + (1/16)x2^2x4^2 + (9/2)x2x3^2x4 - 27x3^4 - 8x4^e.
// The weight-homogeneous form has e = 3.
GSeries delta_polynomial(const GSeries& x2, const GSeries& x3, const GSeries& x4, unsigned x4_exponent = 3);

// wp'^2 - (4wp^3 - g2 wp - g3); g3_shift perturbs g3 for sanity checks.
GSeries verify_weierstrass(int q_prec, YWindow window, const Rational& g3_shift = 0);

struct DeltaCheck {
  GSeries residual;   // delta_modular - delta_poly
  YLaurent cusp_value;  // q^0 coefficient of delta_modular
};

DeltaCheck verify_delta(int q_prec, YWindow window, unsigned x4_exponent = 3);

// True when a - b vanishes and is known for every y-exponent <= hi.
// Throws PrecisionError if the common window ends before hi.
bool agree_through(const GSeries& a, const GSeries& b, int hi);

}  // namespace chernflop
