#include "chernflop/cli.hpp"

#include <cstdlib>
#include <optional>

#include "CLI11.hpp"
#include "json.hpp"

#include "chernflop/acceptance.hpp"
#include "chernflop/delta.hpp"
#include "chernflop/errors.hpp"
#include "chernflop/flops.hpp"
#include "chernflop/genera.hpp"
#include "chernflop/jacobi.hpp"
#include "chernflop/manifold_parser.hpp"

namespace chernflop {

using nlohmann::json;

int default_q_prec() {
  if (const char* env = std::getenv("CHERNFLOP_QPREC")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v < 1000) return static_cast<int>(v);
  }
  return 4;
}

namespace {

const char* kGenusNames[] = {"elliptic", "chi_y", "chi_yz", "todd", "euler", "signature"};

void require_q_prec(int q) {
  if (q < 1) throw PrecisionError("--qprec must be at least 1");
}

json window_json(YWindow w) { return json::array({w.lo, w.hi}); }

void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

struct Options {
  bool as_json = false;
  int q_prec = default_q_prec();
};

// genus compute ------------------------------------------------------------

int genus_compute(const std::string& expr, const std::string& genus, const Options& opt, std::ostream& out) {
  bool known = false;
  for (const char* g : kGenusNames) known = known || genus == g;
  if (!known) throw ParseError("unknown genus '" + genus + "' (expected elliptic, chi_y, chi_yz, todd, euler or signature)");
  require_q_prec(opt.q_prec);
  const Value v = parse_manifold_expression(expr);
  const int n = dimension(v);
  const auto* m = std::get_if<Manifold>(&v);
  const BordismVector vec = m ? BordismVector(n) : to_vector(v);

  GSeries value;
  std::string text;
  json precision = {{"q_prec", "exact"}};
  if (genus == "elliptic") {
    const YWindow w = default_window(n, opt.q_prec);
    value = m ? elliptic_genus(*m, opt.q_prec, w) : elliptic_genus(vec, opt.q_prec, w);
    text = to_canonical_text(value);
    precision = {{"q_prec", opt.q_prec}, {"y_window", window_json(w)}};
  } else if (genus == "chi_y" || genus == "chi_yz") {
    const bool z = genus == "chi_yz";
    value = m ? (z ? chi_yz(*m) : chi_y(*m)) : (z ? chi_yz(vec) : chi_y(vec));
    text = to_pretty_text(value);
  } else {
    const GenusSpec spec = genus == "todd" ? todd_spec(n) : genus == "euler" ? euler_spec(n) : signature_spec(n);
    value = m ? genus_eval(*m, spec) : genus_eval_vector(vec, spec);
    text = to_pretty_text(value);
  }
  if (opt.as_json) {
    emit(out, {{"command", "genus compute"},
               {"inputs", {{"manifold", expr}, {"genus", genus}, {"qprec", opt.q_prec}}},
               {"dimension", n},
               {"model", describe(v)},
               {"result", to_json(value)},
               {"text", text},
               {"precision", precision}});
  } else {
    out << text << "\n";
  }
  return kExitOk;
}

// jacobi expand ------------------------------------------------------------

int jacobi_expand(const std::string& name, std::optional<int> ylo, std::optional<int> yhi, const Options& opt,
                  std::ostream& out) {
  require_q_prec(opt.q_prec);
  const JacobiName id = parse_jacobi_name(name);
  YWindow w = default_window(1, opt.q_prec);
  if (ylo) w.lo = *ylo;
  if (yhi) w.hi = *yhi;
  if (w.lo > w.hi) throw ParseError("empty y-window");
  const GSeries s = jacobi_series(id, opt.q_prec, w);
  if (opt.as_json) {
    emit(out, {{"command", "jacobi expand"},
               {"inputs", {{"name", name}, {"qprec", opt.q_prec}}},
               {"result", to_json(s)},
               {"text", to_canonical_text(s)},
               {"precision", {{"q_prec", opt.q_prec}, {"y_window", window_json(w)}}}});
  } else {
    out << to_canonical_text(s) << "\n";
  }
  return kExitOk;
}

// flops ----------------------------------------------------------------------

int flops_verify(std::uint64_t seed, int count, int max_base_dim, const Options& opt, std::ostream& out) {
  require_q_prec(opt.q_prec);
  if (count < 0) throw ParseError("--count must be non-negative");
  if (max_base_dim < 0 || max_base_dim > 5) throw ParseError("--max-base-dim must lie in [0, 5]");
  json rows = json::array();
  bool all = true;
  for (const auto& inst : random_instances(seed, count, max_base_dim)) {
    const FlopCheck c = flop_check(inst, opt.q_prec);
    all = all && c.ok();
    rows.push_back({{"instance", inst.label},
                    {"dimension", inst.z.n + 3},
                    {"su", inst.su},
                    {"elliptic_zero", c.elliptic_zero},
                    {"chi_y_zero", c.chi_y_zero},
                    {"chi_yz_zero", c.chi_yz_zero},
                    {"passed", c.ok()}});
    if (!opt.as_json) {
      out << (c.ok() ? "PASS " : "FAIL ") << inst.label << " (dim " << inst.z.n + 3 << (inst.su ? ", SU" : "") << ")\n";
    }
  }
  if (opt.as_json) {
    emit(out, {{"command", "flops verify"},
               {"inputs", {{"seed", seed}, {"count", count}, {"qprec", opt.q_prec}, {"max_base_dim", max_base_dim}}},
               {"rows", rows},
               {"precision", {{"q_prec", opt.q_prec}}},
               {"passed", all}});
  } else {
    out << (all ? "all " : "not all ") << count << " instances vanish through q^" << opt.q_prec - 1 << "\n";
  }
  return all ? kExitOk : kExitFailed;
}

int flops_sn(std::optional<int> n_opt, const std::string& base, const std::string& a, const std::string& b,
             const Options& opt, std::ostream& out) {
  FlopInstance inst;
  bool example = base.empty();
  if (example) {
    if (!a.empty() || !b.empty()) throw ParseError("--A and --B need --base");
    if (!n_opt) throw ParseError("--n is required without --base");
    inst = cp_example(*n_opt);
  } else {
    const Value v = parse_manifold_expression(base);
    const auto* z = std::get_if<Manifold>(&v);
    if (!z || z->space->layer()) throw ParseError("--base must be a product of projective spaces");
    const std::vector<int> zeros(z->space->base_dims().size(), 0);
    const std::string trivial = "O(0)+O(0)";
    const auto pa = a.empty() ? std::array<CohElement, 2>{line_class(*z, zeros), line_class(*z, zeros)} : parse_line_pair(a, *z);
    const auto pb = b.empty() ? std::array<CohElement, 2>{line_class(*z, zeros), line_class(*z, zeros)} : parse_line_pair(b, *z);
    inst = make_instance(*z, pa, pb);
    if (n_opt && *n_opt != z->n + 3) {
      throw ParseError("--n must equal dim(Z) + 3 = " + std::to_string(z->n + 3));
    }
  }
  const int n = inst.z.n + 3;
  const Rational integ = s_n_twisted(inst, SnRoute::integration);
  const Rational bracket = s_n_twisted(inst, SnRoute::bracket);
  bool agree = integ == bracket;
  std::optional<Integer> closed;
  if (example) {
    closed = s_n_closed_form(n);
    agree = agree && Rational(*closed) == integ;
  }
  if (opt.as_json) {
    json j = {{"command", "flops sn"},
              {"inputs", {{"n", n}, {"base", base.empty() ? "P(" + std::to_string(n - 3) + ")" : base}, {"A", a}, {"B", b}}},
              {"integration", to_short_string(integ)},
              {"bracket", to_short_string(bracket)},
              {"su", inst.su},
              {"passed", agree}};
    if (closed) j["closed_form"] = closed->get_str();
    emit(out, j);
  } else {
    out << "s_" << n << " = " << to_short_string(integ) << " (integration " << to_short_string(integ) << ", bracket "
        << to_short_string(bracket);
    if (closed) out << ", closed form " << closed->get_str();
    out << ")" << (agree ? "" : " ROUTES DISAGREE") << "\n";
  }
  return agree ? kExitOk : kExitFailed;
}

int flops_gcd_table(int n_min, int n_max, const Options& opt, std::ostream& out) {
  if (n_min < 5 || n_max < n_min) throw ParseError("need 5 <= n-min <= n-max");
  bool all = true;
  json rows = json::array();
  if (!opt.as_json) out << "n,odd_gcd,expected,matches\n";
  for (int n = n_min; n <= n_max; ++n) {
    const GcdProfile p = gcd_profile(n);
    all = all && p.matches;
    if (opt.as_json) {
      rows.push_back({{"n", n}, {"odd_gcd", p.odd_gcd.get_str()}, {"expected", p.expected.get_str()}, {"matches", p.matches}});
    } else {
      out << n << "," << p.odd_gcd.get_str() << "," << p.expected.get_str() << "," << (p.matches ? "true" : "false") << "\n";
    }
  }
  if (opt.as_json) {
    emit(out, {{"command", "flops gcd-table"}, {"inputs", {{"n_min", n_min}, {"n_max", n_max}}}, {"rows", rows}, {"passed", all}});
  }
  return all ? kExitOk : kExitFailed;
}

int flops_witness(int k, const Options& opt, std::ostream& out) {
  const UnitWitness w = c1_unit_witness(k);
  const bool ok = w.odd_part == 1;
  if (opt.as_json) {
    emit(out, {{"command", "flops witness"},
               {"inputs", {{"k", k}}},
               {"coeff_cpk", w.coeff_cpk.get_str()},
               {"coeff_p1_cpk1", w.coeff_p1_cpk1.get_str()},
               {"c1_power", w.c1_power.get_str()},
               {"odd_part", w.odd_part.get_str()},
               {"passed", ok}});
  } else {
    out << w.coeff_cpk.get_str() << " * P(" << k << ") + " << w.coeff_p1_cpk1.get_str() << " * P(1) x P(" << k - 1
        << ") has c1^" << k << " = " << w.c1_power.get_str() << " (odd part " << w.odd_part.get_str() << ")\n";
  }
  return ok ? kExitOk : kExitFailed;
}

// delta ----------------------------------------------------------------------

int delta_verify(const Options& opt, std::ostream& out) {
  require_q_prec(opt.q_prec);
  const YWindow w{-10, 10};
  const DeltaCheck series = verify_delta(opt.q_prec, w);
  const bool generators = verify_generators(generator_set(), opt.q_prec);
  const DeltaVerification vec = verify_delta_vector(opt.q_prec);
  const bool ok = series.residual.is_zero() && series.cusp_value.is_zero() && generators && vec.ok();
  if (opt.as_json) {
    emit(out, {{"command", "delta verify"},
               {"inputs", {{"qprec", opt.q_prec}}},
               {"series_identity", series.residual.is_zero()},
               {"cusp_value_zero", series.cusp_value.is_zero()},
               {"generators_match", generators},
               {"vector_elliptic_matches", vec.elliptic_matches},
               {"vector_cusp", vec.cusp},
               {"vector_chi_y_zero", vec.chi_y_zero},
               {"vector_chi_yz_zero", vec.chi_yz_zero},
               {"precision", {{"q_prec", opt.q_prec}, {"y_window", window_json(w)}}},
               {"passed", ok}});
  } else {
    auto line = [&out](const char* what, bool v) { out << (v ? "PASS " : "FAIL ") << what << "\n"; };
    line("g2^3 - 27 g3^2 equals the x2, x3, x4 polynomial", series.residual.is_zero());
    line("Delta has zero q^0 coefficient", series.cusp_value.is_zero());
    line("elliptic genera of K3, S6, X4 are x2, x3, x4", generators);
    line("elliptic genus of the Delta combination is g2^3 - 27 g3^2", vec.elliptic_matches);
    line("its q^0 coefficient vanishes", vec.cusp);
    line("chi_y of the Delta combination is 0", vec.chi_y_zero);
    line("chi_yz of the Delta combination is 0", vec.chi_yz_zero);
  }
  return ok ? kExitOk : kExitFailed;
}

int delta_dims(int max_dim, const Options& opt, std::ostream& out) {
  if (max_dim < 0) throw ParseError("--max-dim must be non-negative");
  const auto rows = quotient_dimension_report(max_dim);
  const std::vector<std::string> notes{
      "for degree <= 4 the dimension equals the number of Chern numbers",
      "degree 5: 6 independent values against 7 Chern numbers (every Chern monomial except c3c2 is reached)"};
  if (opt.as_json) {
    json j = json::array();
    for (const auto& r : rows) {
      j.push_back({{"degree", r.degree},
                   {"monomials", r.monomials},
                   {"relations", r.relations},
                   {"dimension", r.dimension},
                   {"partitions", r.partitions}});
    }
    emit(out, {{"command", "delta dims"}, {"inputs", {{"max_dim", max_dim}}}, {"rows", j}, {"notes", notes}});
  } else {
    out << "degree,monomials,relations,dimension,partitions\n";
    for (const auto& r : rows) {
      out << r.degree << "," << r.monomials << "," << r.relations << "," << r.dimension << "," << r.partitions << "\n";
    }
    for (const auto& n : notes) out << "# " << n << "\n";
  }
  return kExitOk;
}

// verify-all -------------------------------------------------------------------

int verify_all(const Options& opt, std::ostream& out) {
  bool all = true;
  json rows = json::array();
  for (const auto& spec : acceptance_criteria()) {
    const CriterionResult r = run_criterion(spec);
    all = all && r.passed;
    if (opt.as_json) {
      rows.push_back({{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"detail", r.detail}});
    } else {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.2fs", r.seconds);
      out << "criterion " << (r.id < 10 ? "0" : "") << r.id << " " << (r.passed ? "PASS" : "FAIL") << "  " << r.title
          << "  [" << buf << "]  " << r.detail << "\n";
    }
  }
  if (opt.as_json) {
    emit(out, {{"command", "verify-all"}, {"criteria", rows}, {"passed", all}});
  } else {
    out << (all ? "all criteria pass" : "some criteria FAIL") << "\n";
  }
  return all ? kExitOk : kExitFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Chern numbers, Hirzebruch genera and flop identities"};
  app.require_subcommand(1);
  Options opt;

  auto* jacobi = app.add_subcommand("jacobi", "q-expansions of Jacobi and modular forms");
  jacobi->require_subcommand(1);
  auto* expand = jacobi->add_subcommand("expand", "print the truncated expansion of a generator");
  std::string jname;
  std::optional<int> ylo;
  std::optional<int> yhi;
  expand->add_option("--name", jname, "Phi|wp|wp_prime|g2|g3|x2|x3|x4|delta_modular|delta_poly")->required();
  expand->add_option("--qprec", opt.q_prec, "number of q-coefficients (q^0 .. q^{N-1})");
  expand->add_option("--ylo", ylo, "lowest y-exponent of interest");
  expand->add_option("--yhi", yhi, "highest y-exponent that must be known");
  expand->add_flag("--json", opt.as_json, "JSON output");

  auto* genus = app.add_subcommand("genus", "genera of manifolds and bordism classes");
  genus->require_subcommand(1);
  auto* compute = genus->add_subcommand("compute", "evaluate a genus");
  std::string manifold;
  std::string gname;
  compute->add_option("--manifold", manifold, "manifold expression, e.g. \"P(1) x P(2)\" or \"2*K3 - P(1)^2\"")->required();
  compute->add_option("--genus", gname, "elliptic|chi_y|chi_yz|todd|euler|signature")->required();
  compute->add_option("--qprec", opt.q_prec, "q-precision for the elliptic genus");
  compute->add_flag("--json", opt.as_json, "JSON output");

  auto* flops = app.add_subcommand("flops", "flop classes, s_n numbers and divisibility");
  flops->require_subcommand(1);
  auto* fverify = flops->add_subcommand("verify", "check genus vanishing on random flop classes");
  std::uint64_t seed = 0;
  int count = 20;
  int max_base_dim = 3;
  fverify->add_option("--seed", seed, "random seed");
  fverify->add_option("--count", count, "number of instances");
  fverify->add_option("--qprec", opt.q_prec, "q-precision");
  fverify->add_option("--max-base-dim", max_base_dim, "largest base dimension (<= 5)");
  fverify->add_flag("--json", opt.as_json, "JSON output");
  auto* fsn = flops->add_subcommand("sn", "s_n of a twisted projective bundle");
  std::optional<int> sn_n;
  std::string base;
  std::string la;
  std::string lb;
  fsn->add_option("--n", sn_n, "total dimension");
  fsn->add_option("--base", base, "base, a product of projective spaces such as \"P(2)\"");
  fsn->add_option("--A", la, "line bundles of A, e.g. \"O(1)+O(0)\"");
  fsn->add_option("--B", lb, "line bundles of B");
  fsn->add_flag("--json", opt.as_json, "JSON output");
  auto* fgcd = flops->add_subcommand("gcd-table", "odd part of the bracket gcd per dimension");
  int n_min = 5;
  int n_max = 40;
  fgcd->add_option("--n-min", n_min, "first dimension");
  fgcd->add_option("--n-max", n_max, "last dimension");
  fgcd->add_flag("--json", opt.as_json, "JSON output instead of CSV");
  auto* fwit = flops->add_subcommand("witness", "combination of P(k) and P(1) x P(k-1) with c1^k a power of 2");
  int wk = 1;
  fwit->add_option("--k", wk, "dimension")->required();
  fwit->add_flag("--json", opt.as_json, "JSON output");

  auto* delta = app.add_subcommand("delta", "the Delta relation among x2, x3, x4");
  delta->require_subcommand(1);
  auto* dverify = delta->add_subcommand("verify", "series and bordism checks of Delta");
  dverify->add_option("--qprec", opt.q_prec, "q-precision");
  dverify->add_flag("--json", opt.as_json, "JSON output");
  auto* ddims = delta->add_subcommand("dims", "graded dimensions of Q[x1..x4]/(Delta)");
  int max_dim = 16;
  ddims->add_option("--max-dim", max_dim, "largest degree (<= 16)");
  ddims->add_flag("--json", opt.as_json, "JSON output instead of CSV");

  auto* vall = app.add_subcommand("verify-all", "run every acceptance check");
  vall->add_flag("--json", opt.as_json, "JSON output");

  std::vector<std::string> storage{"chernflop"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (expand->parsed()) return jacobi_expand(jname, ylo, yhi, opt, out);
    if (compute->parsed()) return genus_compute(manifold, gname, opt, out);
    if (fverify->parsed()) return flops_verify(seed, count, max_base_dim, opt, out);
    if (fsn->parsed()) return flops_sn(sn_n, base, la, lb, opt, out);
    if (fgcd->parsed()) return flops_gcd_table(n_min, n_max, opt, out);
    if (fwit->parsed()) return flops_witness(wk, opt, out);
    if (dverify->parsed()) return delta_verify(opt, out);
    if (ddims->parsed()) return delta_dims(max_dim, opt, out);
    if (vall->parsed()) return verify_all(opt, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  err << "error: no command\n";
  return kExitUsage;
}

}  // namespace chernflop
