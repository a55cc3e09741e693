#pragma once

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "chernflop/bordism.hpp"
#include "chernflop/jacobi.hpp"
#include "chernflop/series.hpp"

namespace chernflop {

enum class Twist { none, k, z };

/// Genus with characteristic series Q(x) = e^{v x} * sum_j coeffs[j] x^j,
/// v the twist variable (or 0). coeffs[0] must be a unit, or zero when no
/// root of the virtual tangent bundle's negative part is nonzero.
struct GenusSpec {
  std::string name;
  std::vector<GSeries> coeffs;
  Twist twist = Twist::none;
  bool graded = false;    // multiply by t^n
  int y_cap = kExact;     // y-truncation for inverses of y-series
};

GenusSpec todd_spec(int n);
GenusSpec chi_y_spec(int n);
GenusSpec chi_yz_spec(int n);
GenusSpec euler_spec(int n);
GenusSpec signature_spec(int n);
// Phi(q,1/y) * Q(x), whose x-coefficients are exact Laurent polynomials.
GenusSpec elliptic_unscaled_spec(int n, int q_prec);
// The elliptic characteristic series itself, y-truncated at y_cap.
GenusSpec elliptic_normalized_spec(int n, int q_prec, int y_cap);
GenusSpec polynomial_spec(std::string name, const std::vector<Rational>& coeffs);

/// Integrals N(j, mu, nu) = int c_1^j m_mu(pos roots) m_nu(nonzero neg roots)
/// with j + |mu| + |nu| = n; zero roots are counted separately.
struct RootNumbers {
  int n = 0;
  bool has_neg = false;
  std::map<std::tuple<int, Partition, Partition>, Rational> values;
};

RootNumbers root_numbers(const Manifold& m);
RootNumbers root_numbers(const BordismVector& b);
GSeries evaluate(const RootNumbers& r, const GenusSpec& g);

GSeries genus_eval(const Manifold& m, const GenusSpec& g);
GSeries genus_eval_vector(const BordismVector& b, const GenusSpec& g);

/// Default y-window +-(q_prec * n + n).
YWindow default_window(int n, int q_prec);

// alpha = Phi(q,1/y)^n * phi; exact at every q-order.
GSeries unscaled_genus(const Manifold& m, int q_prec);
GSeries unscaled_genus(const BordismVector& b, int q_prec);
// phi in q, y, k, known through window.hi.
GSeries normalize_elliptic(const GSeries& alpha, int n, int q_prec, YWindow window);
GSeries elliptic_genus(const Manifold& m, int q_prec);
GSeries elliptic_genus(const BordismVector& b, int q_prec);
GSeries elliptic_genus(const Manifold& m, int q_prec, YWindow window);
GSeries elliptic_genus(const BordismVector& b, int q_prec, YWindow window);

GSeries chi_y(const Manifold& m);
GSeries chi_y(const BordismVector& b);
GSeries chi_yz(const Manifold& m);
GSeries chi_yz(const BordismVector& b);

/// Degree n-k part of td(T) ch(Lambda^p T*).
CohElement chi_p_class(const Manifold& m, int p, int k);

struct Specializations {
  Rational todd;
  Rational euler;
  Rational signature;
};
// value = t^n * P(y); evaluates P at y = 0, -1, 1.
Specializations classical_specializations(const GSeries& value, int n);

/// chi''(-1) - n(3n-5)/12 chi(-1) for chi = chi_y(b) / t^n; throws NotSU.
Rational libgober_wood_check(const BordismVector& b);

// Exact polynomial P(y) for value = t^n P(y) with no other variables.
std::vector<Rational> y_polynomial(const GSeries& value, int n);

}  // namespace chernflop
