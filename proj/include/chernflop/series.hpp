#pragma once

#include <compare>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"

#include "chernflop/errors.hpp"
#include "chernflop/rational.hpp"

namespace chernflop {

/// Marker for "no truncation": the value is known exactly.
inline constexpr int kExact = std::numeric_limits<int>::max();

/// Truncated Laurent series in y with exact rational coefficients.
///
/// Coefficients are known for every exponent below prec(); prec() == kExact
/// means the stored finite Laurent polynomial is the exact value. Terms at or
/// above prec() are unknown and never stored.
class YLaurent {
 public:
  YLaurent() = default;
  explicit YLaurent(Rational c);

  static YLaurent monomial(Rational c, int exponent);
  static YLaurent zero(int prec);
  static YLaurent from_coefficients(int low, std::vector<Rational> coeffs, int prec = kExact);

  int prec() const { return prec_; }
  bool is_exact() const { return prec_ == kExact; }
  // Zero on the whole known window.
  bool is_zero() const { return coeffs_.empty(); }
  // Lowest exponent with a nonzero coefficient, or prec() for a known-zero series.
  int valuation() const;
  // Highest stored exponent; only meaningful for nonzero series.
  int max_exponent() const;
  Rational coeff(int exponent) const;
  int low() const { return low_; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  YLaurent operator-() const;
  YLaurent& operator+=(const YLaurent& other);
  YLaurent& operator-=(const YLaurent& other);
  YLaurent& operator*=(const YLaurent& other);
  YLaurent& operator*=(const Rational& c);
  friend YLaurent operator+(YLaurent a, const YLaurent& b) { return a += b; }
  friend YLaurent operator-(YLaurent a, const YLaurent& b) { return a -= b; }
  friend YLaurent operator*(const YLaurent& a, const YLaurent& b);
  friend YLaurent operator*(YLaurent a, const Rational& c) { return a *= c; }
  friend YLaurent operator*(const Rational& c, YLaurent a) { return a *= c; }

  YLaurent shifted(int s) const;
  YLaurent truncated(int prec) const;
  // Multiplicative inverse, truncated at exponent prec_cap (exclusive).
  YLaurent inverse(int prec_cap) const;
  YLaurent negate_y() const;
  // y -> 1/y; only defined for exact values.
  YLaurent invert_y() const;
  // Evaluate at a rational point; only defined for exact values.
  Rational evaluate(const Rational& y) const;
  bool agrees_with(const YLaurent& other) const { return (*this - other).is_zero(); }

 private:
  void normalize();

  int low_ = 0;
  std::vector<Rational> coeffs_;  // coeffs_[i] multiplies y^(low_ + i)
  int prec_ = kExact;
};

enum class Var { q, k, z, t, y };

struct Monomial {
  int q = 0;
  int k = 0;
  int z = 0;
  int t = 0;
  auto operator<=>(const Monomial&) const = default;
  friend Monomial operator+(const Monomial& a, const Monomial& b) {
    return {a.q + b.q, a.k + b.k, a.z + b.z, a.t + b.t};
  }
  int exponent(Var v) const;
  int poly_degree() const { return k + z + t; }
};

/// Power series in q, truncated below q_prec(), with polynomial dependence on
/// k, z, t and YLaurent coefficients.
class GSeries {
 public:
  GSeries() = default;
  explicit GSeries(int q_prec) : q_prec_(q_prec) {}

  static GSeries constant(const Rational& c, int q_prec = kExact);
  static GSeries term(const YLaurent& coeff, Monomial m, int q_prec = kExact);
  static GSeries variable(Var v, int q_prec = kExact);

  int q_prec() const { return q_prec_; }
  const std::map<Monomial, YLaurent>& terms() const { return terms_; }
  YLaurent coeff(Monomial m) const;
  void add_term(Monomial m, const YLaurent& c);

  bool is_zero() const;
  // Every coefficient is an exact finite Laurent polynomial.
  bool is_exact() const;
  int max_degree(Var v) const;
  // Smallest y-precision over all coefficients (kExact if exact).
  int min_y_prec() const;

  GSeries operator-() const;
  GSeries& operator+=(const GSeries& other);
  GSeries& operator-=(const GSeries& other);
  GSeries& operator*=(const Rational& c);
  friend GSeries operator+(GSeries a, const GSeries& b) { return a += b; }
  friend GSeries operator-(GSeries a, const GSeries& b) { return a -= b; }
  friend GSeries operator*(const GSeries& a, const GSeries& b);
  friend GSeries operator*(GSeries a, const Rational& c) { return a *= c; }
  friend GSeries operator*(const Rational& c, GSeries a) { return a *= c; }

  // Requires a nonzero q^0 k^0 z^0 t^0 coefficient. Laurent inverses are
  // truncated at y_cap; k/z/t terms of degree above poly_cap are dropped.
  GSeries inverse(int y_cap, int poly_cap = 0) const;
  GSeries pow(unsigned e) const;

  GSeries truncated_q(int q_prec) const;
  // Caps every coefficient's y-precision at hi + 1, keeping exact
  // coefficients exact when their support already lies at or below hi.
  GSeries clip_y(int hi) const;
  GSeries negate_y() const;
  GSeries invert_y() const;
  // Coefficient of v^e, as a series with the v-exponent removed.
  GSeries coefficient_of(Var v, int e) const;
  // Shift every term by v^e.
  GSeries times_power(Var v, int e) const;

  bool agrees_with(const GSeries& other) const { return (*this - other).is_zero(); }

 private:
  void erase_exact_zeros();

  int q_prec_ = kExact;
  std::map<Monomial, YLaurent> terms_;
};

/// Terms sorted by (q, k, z, t, y), each "num/den * q^a k^b z^c t^d y^e",
/// joined by " + ". The zero series renders as "0".
std::string to_canonical_text(const GSeries& s);

/// Polynomial-style rendering for q-free values such as t^2*(2 - 20y + 2y^2).
/// Falls back to the canonical text for anything else.
std::string to_pretty_text(const GSeries& s);

/// JSON mirror of the canonical rendering with string-encoded integers,
/// plus precision metadata.
nlohmann::json to_json(const GSeries& s);
GSeries gseries_from_json(const nlohmann::json& j);

}  // namespace chernflop
