#include "chernflop/jacobi.hpp"

#include <array>
#include <utility>

namespace chernflop {

namespace {

constexpr std::array<std::pair<JacobiName, const char*>, 10> kNames{{
    {JacobiName::Phi, "Phi"},
    {JacobiName::wp, "wp"},
    {JacobiName::wp_prime, "wp_prime"},
    {JacobiName::g2, "g2"},
    {JacobiName::g3, "g3"},
    {JacobiName::x2, "x2"},
    {JacobiName::x3, "x3"},
    {JacobiName::x4, "x4"},
    {JacobiName::delta_modular, "delta_modular"},
    {JacobiName::delta_poly, "delta_poly"},
}};

Integer divisor_power_sum(int m, unsigned power) {
  Integer out = 0;
  for (int d = 1; d <= m; ++d) {
    if (m % d != 0) continue;
    Integer term;
    mpz_ui_pow_ui(term.get_mpz_t(), static_cast<unsigned long>(d), power);
    out += term;
  }
  return out;
}

// Sum_{n>=1} n^power y^n, known below y^prec.
YLaurent power_weighted_geometric(unsigned power, int prec) {
  std::vector<Rational> c;
  for (int n = 1; n < prec; ++n) {
    Integer v;
    mpz_ui_pow_ui(v.get_mpz_t(), static_cast<unsigned long>(n), power);
    c.emplace_back(v);
  }
  return YLaurent::from_coefficients(1, std::move(c), prec);
}

// Everything the generators share, at one internal y-precision.
struct Engine {
  int q_prec;
  int y_prec;

  GSeries phi() const {
    GSeries out = GSeries::constant(1, q_prec);
    for (int m = 1; m <= q_prec; ++m) {
      if (m - 1 < q_prec) {
        out = out * (GSeries::constant(1, q_prec) - GSeries::term(YLaurent::monomial(1, -1), {m - 1, 0, 0, 0}, q_prec));
      }
      if (m < q_prec) {
        out = out * (GSeries::constant(1, q_prec) - GSeries::term(YLaurent::monomial(1, 1), {m, 0, 0, 0}, q_prec));
        GSeries geometric(q_prec);
        for (int r = 0; r * m < q_prec; ++r) geometric.add_term({r * m, 0, 0, 0}, YLaurent(1));
        out = out * geometric * geometric;
      }
    }
    return out;
  }

  GSeries wp() const {
    GSeries out(q_prec);
    out.add_term({}, YLaurent(make_rational(1, 12)) + power_weighted_geometric(1, y_prec));
    for (int j = 1; j < q_prec; ++j) {
      YLaurent c;
      for (int n = 1; n <= j; ++n) {
        if (j % n != 0) continue;
        c += YLaurent::monomial(n, n) + YLaurent::monomial(n, -n) + YLaurent(-2 * n);
      }
      out.add_term({j, 0, 0, 0}, c);
    }
    return out;
  }

  GSeries wp_prime() const {
    GSeries out(q_prec);
    out.add_term({}, power_weighted_geometric(2, y_prec));
    for (int j = 1; j < q_prec; ++j) {
      YLaurent c;
      for (int n = 1; n <= j; ++n) {
        if (j % n != 0) continue;
        c += YLaurent::monomial(n * n, n) - YLaurent::monomial(n * n, -n);
      }
      out.add_term({j, 0, 0, 0}, c);
    }
    return out;
  }

  GSeries g2() const {
    GSeries out(q_prec);
    out.add_term({}, YLaurent(make_rational(1, 12)));
    for (int j = 1; j < q_prec; ++j) {
      out.add_term({j, 0, 0, 0}, YLaurent(Rational(20 * divisor_power_sum(j, 3))));
    }
    return out;
  }

  GSeries g3() const {
    GSeries out(q_prec);
    out.add_term({}, YLaurent(make_rational(-1, 216)));
    for (int j = 1; j < q_prec; ++j) {
      out.add_term({j, 0, 0, 0}, YLaurent(Rational(7 * divisor_power_sum(j, 5)) / 3));
    }
    return out;
  }

  GSeries x2() const { return wp() * Rational(24); }
  GSeries x3() const { return wp_prime(); }
  GSeries x4() const {
    const GSeries p = wp();
    return p * p * Rational(6) - g2() * make_rational(1, 2);
  }

  GSeries delta_modular() const {
    const GSeries a = g2();
    const GSeries b = g3();
    return a.pow(3) - b * b * Rational(27);
  }

  GSeries build(JacobiName name) const {
    switch (name) {
      case JacobiName::Phi: return phi();
      case JacobiName::wp: return wp();
      case JacobiName::wp_prime: return wp_prime();
      case JacobiName::g2: return g2();
      case JacobiName::g3: return g3();
      case JacobiName::x2: return x2();
      case JacobiName::x3: return x3();
      case JacobiName::x4: return x4();
      case JacobiName::delta_modular: return delta_modular();
      case JacobiName::delta_poly: return delta_polynomial(x2(), x3(), x4());
    }
    throw UnknownName("unknown Jacobi generator");
  }
};

Engine make_engine(int q_prec, YWindow window) {
  if (q_prec < 1) throw PrecisionError("q_prec must be at least 1");
  // Products of terms from q^m coefficients lose at most m y-exponents; the
  // margin keeps every coefficient through window.hi known.
  return Engine{q_prec, window.hi + 1 + 2 * q_prec + 2};
}

void require_known(const GSeries& s, int hi) {
  if (s.min_y_prec() <= hi) {
    throw PrecisionError("result is only known below y^" + std::to_string(s.min_y_prec()) +
                         ", requested through y^" + std::to_string(hi));
  }
}

}  // namespace

JacobiName parse_jacobi_name(const std::string& name) {
  for (const auto& [value, text] : kNames) {
    if (name == text) return value;
  }
  throw UnknownName("unknown Jacobi generator '" + name + "'");
}

std::string to_string(JacobiName name) {
  for (const auto& [value, text] : kNames) {
    if (value == name) return text;
  }
  return "?";
}

GSeries jacobi_series(JacobiName name, int q_prec, YWindow window) {
  const GSeries out = make_engine(q_prec, window).build(name).clip_y(window.hi);
  require_known(out, window.hi);
  return out;
}

GSeries phi_series(int q_prec) { return make_engine(q_prec, YWindow{}).phi(); }

GSeries delta_polynomial(const GSeries& x2, const GSeries& x3, const GSeries& x4, unsigned x4_exponent) {
  const GSeries x3sq = x3 * x3;
  GSeries out = x2.pow(3) * x3sq * make_rational(-1, 32);
  out += x2 * x2 * x4 * x4 * make_rational(1, 16);
  out += x2 * x3sq * x4 * make_rational(9, 2);
  out -= x3sq * x3sq * Rational(27);
  out -= x4.pow(x4_exponent) * Rational(8);
  return out;
}

GSeries verify_weierstrass(int q_prec, YWindow window, const Rational& g3_shift) {
  const Engine e = make_engine(q_prec, window);
  const GSeries p = e.wp();
  const GSeries dp = e.wp_prime();
  const GSeries g3 = e.g3() + GSeries::constant(g3_shift, q_prec);
  const GSeries residual = dp * dp - (p.pow(3) * Rational(4) - e.g2() * p - g3);
  GSeries out = residual.clip_y(window.hi);
  require_known(out, window.hi);
  return out;
}

DeltaCheck verify_delta(int q_prec, YWindow window, unsigned x4_exponent) {
  const Engine e = make_engine(q_prec, window);
  const GSeries modular = e.delta_modular();
  GSeries residual = (modular - delta_polynomial(e.x2(), e.x3(), e.x4(), x4_exponent)).clip_y(window.hi);
  require_known(residual, window.hi);
  return {std::move(residual), modular.coeff({})};
}

bool agree_through(const GSeries& a, const GSeries& b, int hi) {
  const GSeries diff = (a - b).clip_y(hi);
  require_known(diff, hi);
  return diff.is_zero();
}

}  // namespace chernflop
