#include "chernflop/flops.hpp"

#include <random>
#include <sstream>

#include "chernflop/errors.hpp"

namespace chernflop {

namespace {

std::vector<int> identity_map(int m) {
  std::vector<int> out(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) out[static_cast<std::size_t>(i)] = i;
  return out;
}

Manifold base_from_dims(const std::vector<int>& dims) {
  Manifold z = point();
  bool first = true;
  for (int d : dims) {
    const Manifold p = projective_space(d);
    z = first ? p : product(z, p);
    first = false;
  }
  return z;
}

std::string degrees_text(const std::vector<int>& d) {
  std::ostringstream os;
  os << "O(";
  if (d.empty()) os << 0;
  for (std::size_t i = 0; i < d.size(); ++i) os << (i ? "," : "") << d[i];
  os << ")";
  return os.str();
}

}  // namespace

FlopInstance make_instance(const Manifold& z, std::array<CohElement, 2> a, std::array<CohElement, 2> b) {
  validate(z);
  if (z.space->layer()) throw ModelError("the flop base must be a product of projective spaces");
  for (auto* l : {&a[0], &a[1], &b[0], &b[1]}) {
    if (!l->space()) *l = CohElement(z.space);
    if (!l->is_homogeneous(1)) throw DegreeMismatch("line bundle classes must have degree 1");
  }
  FlopInstance inst{z, std::move(a), std::move(b), false, ""};
  const CohElement total = first_chern_class(z) + inst.a[0] + inst.a[1] + inst.b[0] + inst.b[1];
  inst.su = total.is_zero();
  inst.label = "TW(Z=" + z.label + ")";
  return inst;
}

CohElement line_class(const Manifold& z, const std::vector<int>& degrees) {
  const int m = static_cast<int>(z.space->base_dims().size());
  if (static_cast<int>(degrees.size()) != m) {
    throw ModelError("line bundle needs " + std::to_string(m) + " degrees, got " + std::to_string(degrees.size()));
  }
  CohElement out(z.space);
  for (int i = 0; i < m; ++i) {
    if (degrees[static_cast<std::size_t>(i)] != 0) out += CohElement::generator(z.space, i, degrees[static_cast<std::size_t>(i)]);
  }
  return out;
}

Manifold twisted_bundle(const FlopInstance& inst) {
  const Manifold& z = inst.z;
  const std::vector<CohElement> v_roots{inst.a[0], inst.a[1], -inst.b[0], -inst.b[1]};
  const SpacePtr e = add_projective_bundle(z.space, v_roots);
  const int m = static_cast<int>(z.space->base_dims().size());
  const std::vector<int> lift = identity_map(m);
  const CohElement u = CohElement::generator(e, m);
  Manifold out;
  out.n = z.n + 3;
  out.space = e;
  out.tangent_pos = {pull(inst.a[0], e, lift) + u, pull(inst.a[1], e, lift) + u, pull(inst.b[0], e, lift) - u,
                     pull(inst.b[1], e, lift) - u};
  for (const auto& r : z.tangent_pos) out.tangent_pos.push_back(pull(r, e, lift));
  for (const auto& r : z.tangent_neg) out.tangent_neg.push_back(pull(r, e, lift));
  // A(1) + B(-1) + TZ has rank n + 1; one trivial summand is split off.
  out.tangent_neg.push_back(CohElement(e));
  out.label = inst.label;
  validate(out);
  return out;
}

FlopInstance su_flop(const Manifold& z, const CohElement& l1, const CohElement& l2, const CohElement& l3) {
  // c1(K_Z L1* L2* L3*) = -c1(Z) - l1 - l2 - l3
  const CohElement last = -first_chern_class(z) - l1 - l2 - l3;
  FlopInstance inst = make_instance(z, {l1, l2}, {l3, last});
  if (!inst.su) throw ModelError("SU flop construction did not cancel c1");
  return inst;
}

Integer s_n_bracket(int n, int i1, int i2, int i3, int i4) {
  if (i1 < 0 || i2 < 0 || i3 < 0 || i4 < 0 || i1 + i2 + i3 + i4 != n - 3) {
    throw BadPartition("bracket indices must be non-negative and sum to n - 3");
  }
  auto sign = [](int e) { return e % 2 == 0 ? 1 : -1; };
  return sign(i2) * binomial(n - 1, i1) + sign(i1) * binomial(n - 1, i2) + sign(i4 + 1) * binomial(n - 1, i3) +
         sign(i3 + 1) * binomial(n - 1, i4);
}

Rational s_n_twisted(const FlopInstance& inst, SnRoute route) {
  const int n = inst.z.n + 3;
  if (route == SnRoute::integration) return power_sum_integral(twisted_bundle(inst), n);
  Rational total = 0;
  for_each_composition(n - 3, 4, [&](const std::vector<int>& i) {
    const Integer coeff = s_n_bracket(n, i[0], i[1], i[2], i[3]);
    if (coeff == 0) return;
    const CohElement mono = inst.a[0].pow(i[0]) * inst.a[1].pow(i[1]) * inst.b[0].pow(i[2]) * inst.b[1].pow(i[3]);
    total += Rational(coeff) * mono.integrate();
  });
  return total;
}

FlopInstance cp_example(int n) {
  if (n < 3) throw ModelError("the projective example needs n >= 3");
  const Manifold z = projective_space(n - 3);
  const std::vector<int> one(z.space->base_dims().size(), 1);
  const std::vector<int> zero(z.space->base_dims().size(), 0);
  FlopInstance inst = make_instance(z, {line_class(z, one), line_class(z, zero)}, {line_class(z, zero), line_class(z, zero)});
  inst.label = "TW(Z=P(" + std::to_string(n - 3) + "); A=O(1)+O(0); B=O(0)+O(0))";
  return inst;
}

Integer s_n_closed_form(int n) {
  if (n % 2 == 1) return Integer(n) * (n - 3) / 2;
  return Integer(n + 1) * (n - 4) / 2;
}

long odd_prime_base(long v) {
  if (v < 3 || v % 2 == 0) return 0;
  long p = 3;
  while (p * p <= v && v % p != 0) p += 2;
  if (v % p != 0) p = v;  // v itself is prime
  while (v % p == 0) v /= p;
  return v == 1 ? p : 0;
}

GcdProfile gcd_profile(int n) {
  if (n < 5) throw ModelError("gcd profile needs n >= 5");
  Integer g = 0;
  for_each_composition(n - 3, 4, [&](const std::vector<int>& i) { g = gcd(g, s_n_bracket(n, i[0], i[1], i[2], i[3])); });
  GcdProfile out;
  out.n = n;
  out.odd_gcd = odd_part(g);
  long p = odd_prime_base(n);
  if (p == 0) p = odd_prime_base(n + 1);
  out.expected = p == 0 ? 1 : p;
  out.matches = out.odd_gcd == out.expected;
  return out;
}

FlopCheck flop_check(const FlopInstance& inst, int q_prec) {
  const Manifold e = twisted_bundle(inst);
  FlopCheck out;
  out.elliptic_zero = unscaled_genus(e, q_prec).is_zero();
  out.chi_y_zero = chi_y(e).is_zero();
  out.chi_yz_zero = chi_yz(e).is_zero();
  return out;
}

bool flop_vanishing(const FlopInstance& inst, int q_prec) { return flop_check(inst, q_prec).ok(); }

UnitWitness c1_unit_witness(int k) {
  if (k < 1) throw ModelError("c1 witness needs k >= 1");
  Integer a;
  Integer b;
  mpz_ui_pow_ui(a.get_mpz_t(), static_cast<unsigned long>(k + 1), static_cast<unsigned long>(k));
  mpz_ui_pow_ui(b.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(k));
  b *= 2;
  Integer g;
  Integer s;
  Integer t;
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  UnitWitness out;
  out.k = k;
  out.coeff_cpk = s;
  out.coeff_p1_cpk1 = t;
  out.vector = chern_numbers(projective_space(k)) * Rational(s) +
               chern_numbers(product(projective_space(1), projective_space(k - 1))) * Rational(t);
  const Rational c1k = out.vector.at(Partition(static_cast<std::size_t>(k), 1));
  out.c1_power = c1k.get_num();
  out.odd_part = odd_part(out.c1_power);
  return out;
}

std::vector<FlopInstance> random_instances(std::uint64_t seed, int count, int max_base_dim) {
  std::mt19937_64 rng(seed);
  auto pick = [&rng](int lo, int hi) { return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1)); };
  std::vector<FlopInstance> out;
  for (int idx = 0; idx < count; ++idx) {
    int remaining = pick(0, max_base_dim);
    std::vector<int> dims;
    while (remaining > 0) {
      const int d = pick(1, remaining);
      dims.push_back(d);
      remaining -= d;
    }
    const Manifold z = base_from_dims(dims);
    const std::size_t m = z.space->base_dims().size();
    auto random_line = [&](std::vector<int>& degrees) {
      degrees.assign(m, 0);
      for (auto& d : degrees) d = pick(-3, 3);
      return line_class(z, degrees);
    };
    std::vector<std::vector<int>> degs(4);
    std::ostringstream label;
    label << (idx % 2 == 0 ? "SU" : "TW") << "(Z=" << z.label;
    FlopInstance inst;
    if (idx % 2 == 0) {
      const CohElement l1 = random_line(degs[0]);
      const CohElement l2 = random_line(degs[1]);
      const CohElement l3 = random_line(degs[2]);
      inst = su_flop(z, l1, l2, l3);
      label << "; L1=" << degrees_text(degs[0]) << "; L2=" << degrees_text(degs[1]) << "; L3=" << degrees_text(degs[2])
            << ")";
    } else {
      const CohElement a1 = random_line(degs[0]);
      const CohElement a2 = random_line(degs[1]);
      const CohElement b1 = random_line(degs[2]);
      const CohElement b2 = random_line(degs[3]);
      inst = make_instance(z, {a1, a2}, {b1, b2});
      label << "; A=" << degrees_text(degs[0]) << "+" << degrees_text(degs[1]) << "; B=" << degrees_text(degs[2]) << "+"
            << degrees_text(degs[3]) << ")";
    }
    inst.label = label.str();
    out.push_back(std::move(inst));
  }
  return out;
}

}  // namespace chernflop
