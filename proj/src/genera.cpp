#include "chernflop/genera.hpp"

#include <algorithm>
#include <functional>
#include <mutex>

#include "chernflop/errors.hpp"
#include "chernflop/xseries.hpp"

namespace chernflop {

namespace {

using XPoly = std::vector<GSeries>;  // coefficients of x^0 .. x^deg

XPoly xmul(const XPoly& a, const XPoly& b, int deg) {
  XPoly out(static_cast<std::size_t>(deg + 1), GSeries(std::min(a[0].q_prec(), b[0].q_prec())));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j + i < out.size() && j < b.size(); ++j) {
      if (b[j].is_zero()) continue;
      out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

GSeries constant_series(const Rational& c) { return GSeries::constant(c); }

// x-coefficients of td(x) (1 + y e^{-x}), or of td(x) (1 + e^{-x}) when y = 1.
XPoly hodge_coefficients(int n, bool substitute_one) {
  const xseries::Coeffs t = xseries::todd(n);
  const xseries::Coeffs e = xseries::exp(-1, n);
  const xseries::Coeffs te = xseries::mul(t, e, n);
  XPoly out;
  for (int j = 0; j <= n; ++j) {
    const auto idx = static_cast<std::size_t>(j);
    if (substitute_one) {
      out.push_back(constant_series(t[idx] + te[idx]));
    } else {
      out.push_back(GSeries::term(YLaurent(t[idx]) + YLaurent::monomial(te[idx], 1), {}));
    }
  }
  return out;
}

// Pieces of Phi(q,1/y) Q(x) as x-polynomials over GSeries at q_prec.
XPoly one_minus_exp(const GSeries& c, const Rational& s, int n, int q_prec) {
  // 1 - c e^{s x}
  const xseries::Coeffs e = xseries::exp(s, n);
  XPoly out;
  for (int j = 0; j <= n; ++j) {
    GSeries v = c * e[static_cast<std::size_t>(j)];
    out.push_back(j == 0 ? GSeries::constant(1, q_prec) - v : -v);
  }
  return out;
}

XPoly inverse_one_minus_qexp(int m, const Rational& s, int n, int q_prec) {
  // 1/(1 - q^m e^{s x}) = sum_r q^{mr} e^{r s x}
  XPoly out(static_cast<std::size_t>(n + 1), GSeries(q_prec));
  for (int r = 0; r * m < q_prec; ++r) {
    const xseries::Coeffs e = xseries::exp(s * r, n);
    for (int j = 0; j <= n; ++j) {
      out[static_cast<std::size_t>(j)].add_term({r * m, 0, 0, 0}, YLaurent(e[static_cast<std::size_t>(j)]));
    }
  }
  return out;
}

// Generating function prod_i (1 + sum_d s_d x_i^d) over nonzero roots,
// keyed by the partition of the s-monomial.
std::map<Partition, CohElement> symmetric_states(const std::vector<CohElement>& roots, const SpacePtr& space, int n) {
  std::map<Partition, CohElement> states;
  states.emplace(Partition{}, CohElement::constant(space, 1));
  for (const auto& x : roots) {
    if (x.is_zero()) continue;
    std::vector<CohElement> powers{CohElement::constant(space, 1)};
    for (int d = 1; d <= n; ++d) powers.push_back(powers.back() * x);
    auto next = states;
    for (const auto& [mu, el] : states) {
      for (int d = 1; d + weight(mu) <= n; ++d) {
        if (powers[static_cast<std::size_t>(d)].is_zero()) break;
        CohElement add = el * powers[static_cast<std::size_t>(d)];
        if (add.is_zero()) continue;
        Partition key = merge(mu, {d});
        auto it = next.find(key);
        if (it == next.end()) {
          next.emplace(std::move(key), std::move(add));
        } else {
          it->second += add;
        }
      }
    }
    states = std::move(next);
    std::erase_if(states, [](const auto& kv) { return kv.second.is_zero(); });
  }
  return states;
}

struct VectorTable {
  std::vector<std::pair<std::pair<int, Partition>, ChernPoly>> rows;  // (j, mu) -> e_1^j m_mu in c's
};

const VectorTable& vector_table(int n) {
  static std::mutex mutex;
  static std::map<int, VectorTable> cache;
  {
    std::lock_guard lock(mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  VectorTable table;
  for (const auto& mu : partitions_up_to(n)) {
    if (static_cast<int>(mu.size()) > n) continue;
    const int j = n - weight(mu);
    MonomialSym f{{mu, Rational(1)}};
    for (int i = 0; i < j; ++i) f = mul_e(f, 1, n);
    table.rows.push_back({{j, mu}, monomial_to_chern(std::move(f), n)});
  }
  std::lock_guard lock(mutex);
  return cache.emplace(n, std::move(table)).first->second;
}

GSeries both_routes(const Manifold& m, const GenusSpec& g) {
  const GSeries via_manifold = genus_eval(m, g);
  const GSeries via_vector = genus_eval_vector(chern_numbers(m), g);
  if (!via_manifold.agrees_with(via_vector)) {
    throw RouteMismatch(g.name + " of " + m.label + ": manifold and Chern-number routes disagree");
  }
  return via_manifold;
}

}  // namespace

// ---------------------------------------------------------------------------
// Specs

GenusSpec todd_spec(int n) {
  GenusSpec g{"todd", {}, Twist::none, false, kExact};
  for (const auto& c : xseries::todd(n)) g.coeffs.push_back(constant_series(c));
  return g;
}

GenusSpec chi_y_spec(int n) { return {"chi_y", hodge_coefficients(n, false), Twist::none, true, kExact}; }

GenusSpec chi_yz_spec(int n) { return {"chi_yz", hodge_coefficients(n, false), Twist::z, true, kExact}; }

GenusSpec euler_spec(int n) {
  GenusSpec g{"euler", {}, Twist::none, false, kExact};
  for (int j = 0; j <= n; ++j) g.coeffs.push_back(constant_series(j == 1 ? 1 : 0));
  return g;
}

GenusSpec signature_spec(int n) { return {"signature", hodge_coefficients(n, true), Twist::none, false, kExact}; }

GenusSpec elliptic_unscaled_spec(int n, int q_prec) {
  if (q_prec < 1) throw PrecisionError("q_prec must be at least 1");
  XPoly q;
  for (const auto& c : xseries::todd(n)) q.push_back(GSeries::constant(c, q_prec));
  for (int m = 1; m <= q_prec; ++m) {
    // (1 - y q^{m-1} e^{-x})
    q = xmul(q, one_minus_exp(GSeries::term(YLaurent::monomial(1, 1), {m - 1, 0, 0, 0}, q_prec), -1, n, q_prec), n);
    if (m >= q_prec) continue;
    // (1 - y^{-1} q^m e^{x}) / ((1 - q^m e^x)(1 - q^m e^{-x}))
    q = xmul(q, one_minus_exp(GSeries::term(YLaurent::monomial(1, -1), {m, 0, 0, 0}, q_prec), 1, n, q_prec), n);
    q = xmul(q, inverse_one_minus_qexp(m, 1, n, q_prec), n);
    q = xmul(q, inverse_one_minus_qexp(m, -1, n, q_prec), n);
  }
  return {"elliptic_unscaled", std::move(q), Twist::k, false, kExact};
}

GenusSpec elliptic_normalized_spec(int n, int q_prec, int y_cap) {
  GenusSpec g = elliptic_unscaled_spec(n, q_prec);
  const GSeries inv = phi_series(q_prec).invert_y().inverse(y_cap);
  for (auto& c : g.coeffs) c = c * inv;
  g.name = "elliptic";
  g.y_cap = y_cap;
  return g;
}

GenusSpec polynomial_spec(std::string name, const std::vector<Rational>& coeffs) {
  GenusSpec g{std::move(name), {}, Twist::none, false, kExact};
  for (const auto& c : coeffs) g.coeffs.push_back(constant_series(c));
  return g;
}

// ---------------------------------------------------------------------------
// Evaluation

RootNumbers root_numbers(const Manifold& m) {
  validate(m);
  RootNumbers out;
  out.n = m.n;
  std::vector<CohElement> neg;
  for (const auto& r : m.tangent_neg) {
    if (!r.is_zero()) neg.push_back(r);
  }
  out.has_neg = !neg.empty();
  const auto pos_states = symmetric_states(m.tangent_pos, m.space, m.n);
  const auto neg_states = symmetric_states(neg, m.space, m.n);
  const CohElement c1 = first_chern_class(m);
  std::vector<CohElement> c1_powers{CohElement::constant(m.space, 1)};
  for (int j = 1; j <= m.n; ++j) c1_powers.push_back(c1_powers.back() * c1);
  for (const auto& [mu, a] : pos_states) {
    for (const auto& [nu, b] : neg_states) {
      const int j = m.n - weight(mu) - weight(nu);
      if (j < 0) continue;
      const Rational v = (c1_powers[static_cast<std::size_t>(j)] * a * b).integrate();
      if (v != 0) out.values[{j, mu, nu}] = v;
    }
  }
  return out;
}

RootNumbers root_numbers(const BordismVector& b) {
  RootNumbers out;
  out.n = b.dim();
  for (const auto& [key, poly] : vector_table(b.dim()).rows) {
    const Rational v = pair(poly, b);
    if (v != 0) out.values[{key.first, key.second, Partition{}}] = v;
  }
  return out;
}

GSeries evaluate(const RootNumbers& r, const GenusSpec& g) {
  const int n = r.n;
  if (static_cast<int>(g.coeffs.size()) < n + 1) throw PrecisionError(g.name + ": characteristic series truncated below the dimension");
  int q_prec = kExact;
  for (const auto& c : g.coeffs) q_prec = std::min(q_prec, c.q_prec());
  const GSeries& a0 = g.coeffs[0];

  XPoly b;  // coefficients of 1/Q
  if (r.has_neg) {
    b.push_back(a0.inverse(g.y_cap));
    for (int j = 1; j <= n; ++j) {
      GSeries acc(q_prec);
      for (int i = 1; i <= j; ++i) acc += g.coeffs[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j - i)];
      b.push_back(-(acc * b[0]));
    }
  }

  std::map<Partition, GSeries> a_cache;
  std::function<const GSeries&(const Partition&)> a_mu = [&](const Partition& mu) -> const GSeries& {
    auto it = a_cache.find(mu);
    if (it != a_cache.end()) return it->second;
    GSeries v = GSeries::constant(1, q_prec);
    if (!mu.empty()) {
      Partition rest(mu.begin(), mu.end() - 1);
      v = a_mu(rest) * g.coeffs[static_cast<std::size_t>(mu.back())];
    }
    return a_cache.emplace(mu, std::move(v)).first->second;
  };
  std::vector<GSeries> a0_powers{GSeries::constant(1, q_prec)};
  auto a0_power = [&](int e) -> const GSeries& {
    while (static_cast<int>(a0_powers.size()) <= e) a0_powers.push_back(a0_powers.back() * a0);
    return a0_powers[static_cast<std::size_t>(e)];
  };

  // Group the rational weights by (mu, nu), keeping the twist power j apart.
  std::map<std::pair<Partition, Partition>, std::map<int, Rational>> grouped;
  for (const auto& [key, v] : r.values) {
    const auto& [j, mu, nu] = key;
    if (j > 0 && g.twist == Twist::none) continue;
    grouped[{mu, nu}][j] += v / Rational(factorial(j));
  }

  GSeries total(q_prec);
  for (const auto& [mn, weights] : grouped) {
    const auto& [mu, nu] = mn;
    GSeries base = a_mu(mu) * a0_power(n - static_cast<int>(mu.size()) + static_cast<int>(nu.size()));
    for (int part : nu) base = base * b[static_cast<std::size_t>(part)];
    for (const auto& [j, w] : weights) {
      GSeries term = base * w;
      if (j > 0) term = term.times_power(g.twist == Twist::k ? Var::k : Var::z, j);
      total += term;
    }
  }
  if (g.graded) total = total.times_power(Var::t, n);
  return total;
}

GSeries genus_eval(const Manifold& m, const GenusSpec& g) { return evaluate(root_numbers(m), g); }

GSeries genus_eval_vector(const BordismVector& b, const GenusSpec& g) { return evaluate(root_numbers(b), g); }

YWindow default_window(int n, int q_prec) {
  const int w = q_prec * n + n;
  return {-w, w};
}

GSeries unscaled_genus(const Manifold& m, int q_prec) {
  GSeries alpha = both_routes(m, elliptic_unscaled_spec(m.n, q_prec));
  if (!alpha.is_exact()) throw ModelError("unscaled elliptic genus has a non-polynomial y-coefficient");
  return alpha;
}

GSeries unscaled_genus(const BordismVector& b, int q_prec) {
  return genus_eval_vector(b, elliptic_unscaled_spec(b.dim(), q_prec));
}

GSeries normalize_elliptic(const GSeries& alpha, int n, int q_prec, YWindow window) {
  if (n == 0) return alpha;
  // Each q-order of the inverse and of alpha shifts the valuation by a
  // bounded amount; the margin covers the worst case.
  const int y_cap = window.hi + 1 + 4 * q_prec * (n + 1) + 4;
  const GSeries inv = phi_series(q_prec).invert_y().inverse(y_cap).pow(static_cast<unsigned>(n));
  GSeries phi = (alpha * inv).clip_y(window.hi);
  if (phi.min_y_prec() <= window.hi) throw PrecisionError("elliptic genus not known through the requested y-window");
  return phi;
}

GSeries elliptic_genus(const Manifold& m, int q_prec) { return elliptic_genus(m, q_prec, default_window(m.n, q_prec)); }

GSeries elliptic_genus(const BordismVector& b, int q_prec) {
  return elliptic_genus(b, q_prec, default_window(b.dim(), q_prec));
}

GSeries elliptic_genus(const Manifold& m, int q_prec, YWindow window) {
  return normalize_elliptic(unscaled_genus(m, q_prec), m.n, q_prec, window);
}

GSeries elliptic_genus(const BordismVector& b, int q_prec, YWindow window) {
  return normalize_elliptic(unscaled_genus(b, q_prec), b.dim(), q_prec, window);
}

GSeries chi_y(const Manifold& m) { return genus_eval(m, chi_y_spec(m.n)); }
GSeries chi_y(const BordismVector& b) { return genus_eval_vector(b, chi_y_spec(b.dim())); }
GSeries chi_yz(const Manifold& m) { return genus_eval(m, chi_yz_spec(m.n)); }
GSeries chi_yz(const BordismVector& b) { return genus_eval_vector(b, chi_yz_spec(b.dim())); }

CohElement chi_p_class(const Manifold& m, int p, int k) {
  validate(m);
  if (p < 0 || p > m.n || k < 0 || k > m.n) throw ModelError("chi_p class indices out of range");
  const CohElement td = char_class(m.tangent_pos, m.tangent_neg, ClassKind::todd, m.n);
  const xseries::Coeffs em = xseries::exp(-1, m.n);
  // lambda[i] = ch(Lambda^i T*) for i <= p
  std::vector<CohElement> lambda(static_cast<std::size_t>(p + 1), CohElement(m.space));
  lambda[0] = CohElement::constant(m.space, 1);
  for (const auto& x : m.tangent_pos) {
    const CohElement ex = x.is_zero() ? CohElement::constant(m.space, 1) : apply_series(x, em);
    for (int i = p; i >= 1; --i) lambda[static_cast<std::size_t>(i)] += lambda[static_cast<std::size_t>(i - 1)] * ex;
  }
  for (const auto& w : m.tangent_neg) {
    const CohElement ew = w.is_zero() ? CohElement::constant(m.space, 1) : apply_series(w, em);
    std::vector<CohElement> ew_powers{CohElement::constant(m.space, 1)};
    for (int r = 1; r <= p; ++r) ew_powers.push_back(ew_powers.back() * ew);
    std::vector<CohElement> next(lambda.size(), CohElement(m.space));
    for (int i = 0; i <= p; ++i) {
      for (int r = 0; r <= i; ++r) {
        CohElement add = lambda[static_cast<std::size_t>(i - r)] * ew_powers[static_cast<std::size_t>(r)];
        if (r % 2 == 1) add = -add;
        next[static_cast<std::size_t>(i)] += add;
      }
    }
    lambda = std::move(next);
  }
  return (td * lambda[static_cast<std::size_t>(p)]).homogeneous_part(m.n - k);
}

std::vector<Rational> y_polynomial(const GSeries& value, int n) {
  std::vector<Rational> out;
  for (const auto& [mono, c] : value.terms()) {
    if (c.is_zero()) continue;
    if (mono.q != 0 || mono.k != 0 || mono.z != 0 || mono.t != n || !c.is_exact() || c.low() < 0) {
      throw ModelError("value is not of the form t^n * P(y)");
    }
    out.assign(static_cast<std::size_t>(c.max_exponent() + 1), Rational(0));
    for (int e = c.low(); e <= c.max_exponent(); ++e) out[static_cast<std::size_t>(e)] = c.coeff(e);
  }
  return out;
}

Specializations classical_specializations(const GSeries& value, int n) {
  const std::vector<Rational> p = y_polynomial(value, n);
  auto at = [&p](const Rational& y) {
    Rational acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * y + *it;
    return acc;
  };
  return {at(0), at(-1), at(1)};
}

Rational libgober_wood_check(const BordismVector& b) {
  if (!b.is_su()) throw NotSU("Libgober-Wood relation needs vanishing c_1-numbers");
  const int n = b.dim();
  const std::vector<Rational> p = y_polynomial(chi_y(b), n);
  Rational second = 0;  // chi''(-1)
  Rational value = 0;   // chi(-1)
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Rational sign = (i % 2 == 0) ? 1 : -1;
    value += sign * p[i];
    if (i >= 2) second += sign * Rational(static_cast<long>(i * (i - 1))) * p[i];
  }
  return second - Rational(n * (3 * n - 5)) / 12 * value;
}

}  // namespace chernflop
