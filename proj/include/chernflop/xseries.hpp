#pragma once

// Power series in one variable x with rational coefficients, truncated at a
// fixed degree. Used for characteristic classes of single roots.

#include <vector>

#include "chernflop/errors.hpp"
#include "chernflop/rational.hpp"

namespace chernflop::xseries {

using Coeffs = std::vector<Rational>;  // c[j] multiplies x^j

inline Coeffs mul(const Coeffs& a, const Coeffs& b, int deg) {
  Coeffs out(static_cast<std::size_t>(deg + 1), Rational(0));
  for (std::size_t i = 0; i < a.size() && static_cast<int>(i) <= deg; ++i) {
    for (std::size_t j = 0; j < b.size() && static_cast<int>(i + j) <= deg; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

inline Coeffs inverse(const Coeffs& a, int deg) {
  if (a.empty() || a[0] == 0) throw NotInvertible("power series with zero constant term");
  Coeffs out(static_cast<std::size_t>(deg + 1), Rational(0));
  out[0] = 1 / a[0];
  for (int j = 1; j <= deg; ++j) {
    Rational acc = 0;
    for (int i = 1; i <= j && i < static_cast<int>(a.size()); ++i) acc += a[static_cast<std::size_t>(i)] * out[static_cast<std::size_t>(j - i)];
    out[static_cast<std::size_t>(j)] = -acc * out[0];
  }
  return out;
}

// e^{s x}
inline Coeffs exp(const Rational& s, int deg) {
  Coeffs out(static_cast<std::size_t>(deg + 1));
  Rational term = 1;
  for (int j = 0; j <= deg; ++j) {
    out[static_cast<std::size_t>(j)] = term;
    term *= s / Rational(j + 1);
  }
  return out;
}

// x / (1 - e^{-x})
inline Coeffs todd(int deg) {
  // (1 - e^{-x}) / x = sum_j (-1)^j x^j / (j+1)!
  Coeffs d = exp(-1, deg + 1);
  Coeffs shifted(d.begin() + 1, d.end());
  for (auto& c : shifted) c = -c;
  return inverse(shifted, deg);
}

}  // namespace chernflop::xseries
