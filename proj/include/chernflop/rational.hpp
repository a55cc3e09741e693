#pragma once

#include <gmpxx.h>

#include <string>

namespace chernflop {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  Rational r{Integer(num), Integer(den)};
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

// Always "num/den", the form used by the canonical series rendering.
inline std::string to_fraction_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

// "num" when integral, otherwise "num/den".
inline std::string to_short_string(const Rational& r) {
  return is_integer(r) ? r.get_num().get_str() : to_fraction_string(r);
}

inline Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

inline Integer factorial(long n) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

inline Integer gcd(const Integer& a, const Integer& b) {
  Integer out;
  mpz_gcd(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

// Removes every factor of 2; the units of Z[1/2] are the signed powers of two.
inline Integer odd_part(Integer v) {
  if (v == 0) return 0;
  v = abs(v);
  while (mpz_even_p(v.get_mpz_t())) v /= 2;
  return v;
}

}  // namespace chernflop
