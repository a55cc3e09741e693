#include "chernflop/acceptance.hpp"

#include <chrono>
#include <random>
#include <sstream>

#include "chernflop/delta.hpp"
#include "chernflop/errors.hpp"
#include "chernflop/flops.hpp"
#include "chernflop/genera.hpp"
#include "chernflop/jacobi.hpp"
#include "chernflop/manifold_parser.hpp"

namespace chernflop {

namespace {

// "to q-order N" means every coefficient of q^0 .. q^N.
constexpr int q_prec_for_order(int order) { return order + 1; }

GSeries t_poly(int n, std::vector<long> coeffs) {
  std::vector<Rational> c;
  for (long v : coeffs) c.emplace_back(v);
  return GSeries::term(YLaurent::from_coefficients(0, c), {0, 0, 0, n});
}

Manifold parse_manifold(const std::string& text) { return std::get<Manifold>(parse_manifold_expression(text)); }

std::vector<Manifold> modeled_manifolds() {
  std::vector<Manifold> out;
  for (const char* text :
       {"P(1)", "P(2)", "P(3)", "P(4)", "P(1) x P(1)", "P(1) x P(2)", "P(1) x P(3)", "P(2) x P(2)", "P(1)^3",
        "P(1) x P(1) x P(2)", "P(1)^4", "TW(Z=P(0); A=O(0)+O(0); B=O(0)+O(0))",
        "TW(Z=P(1); A=O(1)+O(0); B=O(0)+O(-1))", "SU(Z=P(1); L1=O(1); L2=O(0); L3=O(-1))"}) {
    out.push_back(parse_manifold(text));
  }
  return out;
}

std::vector<BordismVector> su_vectors() {
  const BordismVector k3 = k3_vector();
  const BordismVector s6 = s6_vector();
  const BordismVector x4 = x4_vector();
  return {k3, s6, x4, bordism_product(k3, k3), bordism_product(k3, s6), bordism_product(s6, s6),
          bordism_product(k3, x4), bordism_product(s6, x4), bordism_product(x4, x4), k3 * Rational(3)};
}

// Genera that are ring maps, evaluated exactly on a manifold or a vector.
std::vector<GenusSpec> exact_specs(int n, int q_prec) {
  return {todd_spec(n), chi_y_spec(n), chi_yz_spec(n), euler_spec(n), signature_spec(n), elliptic_unscaled_spec(n, q_prec)};
}

bool check_weierstrass(std::string& detail) {
  const GSeries r = verify_weierstrass(q_prec_for_order(8), {-10, 10});
  detail = "residual through q^8, y^-10..y^10: " + std::string(r.is_zero() ? "0" : to_canonical_text(r));
  return r.is_zero();
}

bool check_delta(std::string& detail) {
  const DeltaCheck d = verify_delta(q_prec_for_order(6), {-10, 10});
  const bool literal_nonzero = !verify_delta(q_prec_for_order(2), {-10, 10}, 2).residual.is_zero();
  detail = std::string("residual ") + (d.residual.is_zero() ? "0" : "nonzero") + ", cusp value " +
           (d.cusp_value.is_zero() ? "0" : "nonzero") + ", x4^2 variant residual " + (literal_nonzero ? "nonzero" : "0");
  return d.residual.is_zero() && d.cusp_value.is_zero() && literal_nonzero;
}

bool check_generators(std::string& detail) {
  const bool ok = verify_generators(generator_set(), q_prec_for_order(5));
  detail = "K3 -> 24 wp, S6 -> wp', X4 -> 6 wp^2 - g2/2 through q^5";
  return ok;
}

bool check_chi_y_table(std::string& detail) {
  const GSeries k3 = chi_y(k3_vector());
  const GSeries s6 = chi_y(s6_vector());
  const GSeries x4 = chi_y(x4_vector());
  detail = "K3: " + to_pretty_text(k3) + "; S6: " + to_pretty_text(s6) + "; X4: " + to_pretty_text(x4);
  return k3.agrees_with(t_poly(2, {2, -20, 2})) && s6.agrees_with(t_poly(3, {0, -1, 1})) &&
         x4.agrees_with(t_poly(4, {0, -1, 4, -1}));
}

bool check_sn(std::string& detail) {
  const std::vector<long> expected{0, 0, 5, 7, 14, 18};
  std::ostringstream os;
  bool ok = true;
  for (int n = 3; n <= 8; ++n) {
    const Rational v = s_n_twisted(cp_example(n), SnRoute::integration);
    os << "s_" << n << "=" << to_short_string(v) << " ";
    ok = ok && v == expected[static_cast<std::size_t>(n - 3)];
  }
  for (int n = 5; n <= 12; ++n) {
    const FlopInstance inst = cp_example(n);
    const Rational a = s_n_twisted(inst, SnRoute::integration);
    const Rational b = s_n_twisted(inst, SnRoute::bracket);
    const Rational c(s_n_closed_form(n));
    if (a != b || b != c) {
      ok = false;
      os << "disagreement at n=" << n << " ";
    }
  }
  os << "; routes agree for 5 <= n <= 12";
  detail = os.str();
  return ok;
}

bool check_flop_vanishing(std::string& detail) {
  const int q_prec = q_prec_for_order(4);
  std::vector<FlopInstance> instances;
  const Manifold pt = point();
  instances.push_back(make_instance(pt, {CohElement(pt.space), CohElement(pt.space)}, {CohElement(pt.space), CohElement(pt.space)}));
  instances.push_back(cp_example(5));
  for (auto& inst : random_instances(0, 20, 5)) instances.push_back(std::move(inst));
  int passed = 0;
  std::string failures;
  for (const auto& inst : instances) {
    if (flop_vanishing(inst, q_prec)) {
      ++passed;
    } else {
      failures += " " + inst.label;
    }
  }
  detail = std::to_string(passed) + "/" + std::to_string(instances.size()) + " instances vanish through q^4" +
           (failures.empty() ? "" : "; failing:" + failures);
  return passed == static_cast<int>(instances.size());
}

bool check_fiber_numbers(std::string& detail) {
  const Manifold f = parse_manifold("TW(Z=P(0); A=O(0)+O(0); B=O(0)+O(0))");
  const BordismVector v = chern_numbers(f);
  detail = to_string(v);
  return v.is_zero() && v.dim() == 3;
}

bool check_gcd(std::string& detail) {
  std::ostringstream os;
  bool ok = true;
  for (int n = 5; n <= 40; ++n) {
    const GcdProfile p = gcd_profile(n);
    if (!p.matches) {
      ok = false;
      os << "n=" << n << " odd gcd " << p.odd_gcd.get_str() << " expected " << p.expected.get_str() << "; ";
    }
  }
  detail = ok ? "odd gcd matches the prime-power classification for 5 <= n <= 40" : os.str();
  return ok;
}

bool check_delta_kernel(std::string& detail) {
  const DeltaVerification v = verify_delta_vector(q_prec_for_order(4));
  detail = std::string("elliptic genus ") + (v.elliptic_matches ? "= g2^3 - 27 g3^2" : "differs") + ", chi_y " +
           (v.chi_y_zero ? "0" : "nonzero") + ", chi_yz " + (v.chi_yz_zero ? "0" : "nonzero") + ", cusp " +
           (v.cusp ? "yes" : "no");
  return v.elliptic_matches && v.chi_y_zero && v.cusp;
}

bool check_libgober_wood(std::string& detail) {
  const BordismVector k3 = k3_vector();
  const std::vector<std::pair<std::string, BordismVector>> cases{{"K3", k3},
                                                                 {"S6", s6_vector()},
                                                                 {"X4", x4_vector()},
                                                                 {"K3^2", bordism_product(k3, k3)},
                                                                 {"K3*S6", bordism_product(k3, s6_vector())}};
  bool ok = true;
  std::ostringstream os;
  for (const auto& [name, v] : cases) {
    const Rational r = libgober_wood_check(v);
    os << name << ":" << to_short_string(r) << " ";
    ok = ok && r == 0;
  }
  detail = "residuals " + os.str();
  return ok;
}

bool check_properties(std::string& detail) {
  std::ostringstream os;
  bool ok = true;
  auto fail = [&](const std::string& what) {
    ok = false;
    os << what << "; ";
  };
  const int q_prec = 3;
  const std::vector<Manifold> models = modeled_manifolds();

  // Route agreement (manifold integration vs Chern-number evaluation).
  for (const auto& m : models) {
    const BordismVector v = chern_numbers(m);
    for (const auto& g : exact_specs(m.n, q_prec)) {
      if (!genus_eval(m, g).agrees_with(genus_eval_vector(v, g))) fail("route mismatch " + g.name + " on " + m.label);
    }
  }

  // Multiplicativity on seeded random products.
  std::mt19937_64 rng(7);
  const std::vector<std::string> factors{"P(1)", "P(2)", "P(1) x P(1)", "P(3)", "TW(Z=P(0); A=O(0)+O(0); B=O(0)+O(0))"};
  const std::vector<BordismVector> vfactors{k3_vector(), s6_vector(), x4_vector(), chern_numbers(projective_space(2))};
  for (int trial = 0; trial < 6; ++trial) {
    const Manifold a = parse_manifold(factors[rng() % factors.size()]);
    const Manifold b = parse_manifold(factors[rng() % factors.size()]);
    const Manifold ab = product(a, b);
    if (ab.n > 6) continue;
    const auto sa = exact_specs(a.n, q_prec);
    const auto sb = exact_specs(b.n, q_prec);
    const auto sab = exact_specs(ab.n, q_prec);
    for (std::size_t i = 0; i < sab.size(); ++i) {
      if (!genus_eval(ab, sab[i]).agrees_with(genus_eval(a, sa[i]) * genus_eval(b, sb[i]))) {
        fail("not multiplicative: " + sab[i].name + " on " + ab.label);
      }
    }
    const BordismVector& va = vfactors[rng() % vfactors.size()];
    const BordismVector& vb = vfactors[rng() % vfactors.size()];
    const BordismVector vab = bordism_product(va, vb);
    const auto ta = exact_specs(va.dim(), q_prec);
    const auto tb = exact_specs(vb.dim(), q_prec);
    const auto tab = exact_specs(vab.dim(), q_prec);
    for (std::size_t i = 0; i < tab.size(); ++i) {
      if (!genus_eval_vector(vab, tab[i]).agrees_with(genus_eval_vector(va, ta[i]) * genus_eval_vector(vb, tb[i]))) {
        fail("not multiplicative on vectors: " + tab[i].name);
      }
    }
  }

  // chi_y = (1+y)^n phi(0,-y) at k = 0.
  for (const auto& m : models) {
    if (m.n > 4) continue;
    const YWindow w = default_window(m.n, q_prec);
    const GSeries phi = elliptic_genus(m, q_prec, w);
    const YLaurent phi00 = phi.coeff({});
    YLaurent one_plus_y = YLaurent(1) + YLaurent::monomial(1, 1);
    YLaurent lhs(1);
    for (int i = 0; i < m.n; ++i) lhs *= one_plus_y;
    lhs *= phi00.negate_y();
    const GSeries chi = chi_y(m).coefficient_of(Var::t, m.n);
    if (!agree_through(GSeries::term(lhs, {}), chi, w.hi - m.n)) fail("chi_y specialization fails on " + m.label);
  }

  // Serre symmetry and odd-dimensional Todd vanishing on SU vectors.
  for (const auto& v : su_vectors()) {
    const int n = v.dim();
    std::vector<Rational> p = y_polynomial(chi_y(v), n);
    p.resize(static_cast<std::size_t>(n + 1), Rational(0));
    const Rational sign = n % 2 == 0 ? 1 : -1;
    for (int i = 0; i <= n; ++i) {
      if (p[static_cast<std::size_t>(i)] != sign * p[static_cast<std::size_t>(n - i)]) fail("Serre symmetry fails in dim " + std::to_string(n));
    }
    if (n % 2 == 1 && p[0] != 0) fail("odd-dimensional Todd genus nonzero");
    if (!genus_eval_vector(v, chi_yz_spec(n)).agrees_with(chi_y(v))) fail("chi_yz differs from chi_y on an SU class");
  }

  // Pushforward identities on a randomized rank-4 bundle A + B*.
  {
    const SpacePtr base = make_base({2, 2});
    auto rnd_root = [&]() {
      return CohElement::generator(base, 0, static_cast<long>(rng() % 7) - 3) + CohElement::generator(base, 1, static_cast<long>(rng() % 7) - 3);
    };
    const CohElement x1 = rnd_root(), x2 = rnd_root(), x3 = rnd_root(), x4 = rnd_root();
    const SpacePtr bundle = add_projective_bundle(base, {x1, x2, -x3, -x4});
    for (int i = 0; i <= bundle->dim(); ++i) {
      CohElement expected(base);
      if (i >= 3) {
        for_each_composition(i - 3, 4, [&](const std::vector<int>& e) {
          const Rational sign = (e[0] + e[1]) % 2 == 0 ? 1 : -1;
          expected += x1.pow(e[0]) * x2.pow(e[1]) * x3.pow(e[2]) * x4.pow(e[3]) * sign;
        });
      }
      if (!(pushforward_power(bundle, i) == expected)) fail("pushforward of u^" + std::to_string(i));
      // projection formula on h1^a h2^b u^i
      for (int a = 0; a <= 2; ++a) {
        for (int b = 0; b <= 2; ++b) {
          const CohElement beta = CohElement::generator(base, 0).pow(a) * CohElement::generator(base, 1).pow(b);
          const std::vector<int> lift{0, 1};
          const CohElement up = pull(beta, bundle, lift) * CohElement::generator(bundle, 2).pow(i);
          if (up.integrate() != (beta * pushforward_power(bundle, i)).integrate()) fail("projection formula");
        }
      }
    }
  }

  // Classical specializations.
  for (int n = 0; n <= 6; ++n) {
    const Manifold p = projective_space(n);
    if (!genus_eval(p, todd_spec(n)).agrees_with(GSeries::constant(1))) fail("Todd(P(" + std::to_string(n) + ")) != 1");
    if (!genus_eval(p, euler_spec(n)).agrees_with(GSeries::constant(n + 1))) fail("Euler(P(" + std::to_string(n) + "))");
    const Specializations s = classical_specializations(chi_y(p), n);
    if (s.todd != 1 || s.euler != n + 1) fail("chi_y specializations of P(" + std::to_string(n) + ")");
  }
  if (!genus_eval(projective_space(2), signature_spec(2)).agrees_with(GSeries::constant(1))) fail("signature(P(2)) != 1");

  detail = ok ? "route agreement, multiplicativity, chi_y/elliptic specialization, Serre symmetry, pushforward and classical values hold"
              : os.str();
  return ok;
}

bool check_chi_yz_cp1(std::string& detail) {
  const GSeries v = chi_yz(projective_space(1));
  // HRR: chi(O(2z)) + y chi(O(2z - 2)) = (1 + 2z) + y(2z - 1)
  GSeries expected(kExact);
  expected.add_term({0, 0, 0, 1}, YLaurent(1) + YLaurent::monomial(-1, 1));
  expected.add_term({0, 0, 1, 1}, YLaurent(2) + YLaurent::monomial(2, 1));
  const GSeries per_t = v.coefficient_of(Var::t, 1);
  const YLaurent z0 = per_t.coefficient_of(Var::z, 0).coeff({});
  const YLaurent z1 = per_t.coefficient_of(Var::z, 1).coeff({});
  const bool ok = v.agrees_with(expected) && z0.agrees_with(YLaurent(1) + YLaurent::monomial(-1, 1)) && z1.coeff(0) == 2;
  detail = "chi_yz(P(1)) = " + to_pretty_text(v) + " (the shorter form 1 - y + 2z drops the 2yz term)";
  return ok;
}

}  // namespace

std::vector<CriterionSpec> acceptance_criteria() {
  return {
      {1, "Weierstrass identity through q^8", 10.0, check_weierstrass},
      {2, "Delta equals its x2, x3, x4 polynomial; cusp value 0", 0, check_delta},
      {3, "generator elliptic genera K3, S6, X4", 0, check_generators},
      {4, "chi_y of K3, S6, X4", 0, check_chi_y_table},
      {5, "s_n of the projective example, three routes", 0, check_sn},
      {6, "flop vanishing of elliptic genus, chi_y, chi_yz", 120.0, check_flop_vanishing},
      {7, "Chern numbers of the fiber F vanish", 0, check_fiber_numbers},
      {8, "bracket gcd against the prime-power classification", 60.0, check_gcd},
      {9, "Delta combination: chi_y kernel and cusp form image", 0, check_delta_kernel},
      {10, "Libgober-Wood residuals", 0, check_libgober_wood},
      {11, "property suites", 0, check_properties},
      {12, "chi_yz(P(1)) follows Hirzebruch-Riemann-Roch", 0, check_chi_yz_cp1},
  };
}

CriterionResult run_criterion(const CriterionSpec& spec) {
  CriterionResult out;
  out.id = spec.id;
  out.title = spec.title;
  const auto start = std::chrono::steady_clock::now();
  try {
    out.passed = spec.check(out.detail);
  } catch (const std::exception& e) {
    out.passed = false;
    out.detail = std::string("exception: ") + e.what();
  }
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (spec.time_limit > 0 && out.seconds > spec.time_limit) {
    out.passed = false;
    out.detail += "; exceeded time limit of " + std::to_string(static_cast<int>(spec.time_limit)) + " s";
  }
  return out;
}

std::vector<CriterionResult> run_acceptance() {
  std::vector<CriterionResult> out;
  for (const auto& spec : acceptance_criteria()) out.push_back(run_criterion(spec));
  return out;
}

}  // namespace chernflop
