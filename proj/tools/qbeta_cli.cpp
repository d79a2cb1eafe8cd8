#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qbeta/catalan.hpp"
#include "qbeta/serialize.hpp"

namespace {

using namespace qbeta;

constexpr int kExitPass = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitEnvelope = 3;

using Clock = std::chrono::steady_clock;

/* QBETA_CACHE_DIR wins over --cache. */
std::string effective_cache(const std::string& flag) {
  const char* env = std::getenv("QBETA_CACHE_DIR");
  if (env && *env) return env;
  return flag;
}

LinearFormBundle obtain_bundle(const FormParams& p, const std::string& dir) {
  if (!dir.empty()) {
    if (auto cached = load_bundle(dir, p)) return std::move(*cached);
  }
  LinearFormBundle b = build_bundle(p);
  if (!dir.empty()) store_bundle(dir, b);
  return b;
}

mpq_class parse_unit_q(const std::string& s) {
  mpq_class q = rational_parse(s);
  if (!(q > 0 && q < 1)) throw std::domain_error("q must satisfy 0 < q < 1");
  return q;
}

void check_prec(long prec) {
  if (prec < 64 || prec > (1L << 20)) throw std::domain_error("prec must be in [64, 2^20]");
}

int emit(RunReport& rep, Clock::time_point start) {
  rep.wall_ms =
      std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  std::cout << rep.to_json().dump(1) << '\n';
  return rep.all_passed() ? kExitPass : kExitCheckFailure;
}

int cmd_verify_linear_form(long n, long A, long r, const std::string& q_str, long prec,
                           const std::string& cache) {
  auto start = Clock::now();
  FormParams p{n, A, r};
  p.validate();
  mpq_class q = parse_unit_q(q_str);
  check_prec(prec);

  RunReport rep;
  rep.command = "verify-linear-form";
  rep.params = Json{{"n", n}, {"A", A}, {"r", r}, {"q", rational_str(q)}, {"prec", prec}};
  rep.prec = prec;

  LinearFormBundle b = obtain_bundle(p, effective_cache(cache));
  IdentityReport id = verify_identity(b, q, static_cast<mpfr_prec_t>(prec));
  rep.add("identity", id.pass,
          Json{{"lhs", real_json(id.lhs)},
               {"rhs", real_json(id.rhs)},
               {"residual", real_json(id.residual, 8)},
               {"threshold", "2^-" + std::to_string(prec / 2)}});
  return emit(rep, start);
}

int cmd_check_denominator(long n, long A, long r, bool conjecture, bool force,
                          const std::string& cache) {
  auto start = Clock::now();
  FormParams p{n, A, r};
  p.validate();
  if (!force && (n > 5 || A > 7)) {
    std::cerr << "symbolic envelope is n <= 5, A <= 7; rerun with --force to exceed it "
                 "(expect long runtimes and large tables)\n";
    return kExitEnvelope;
  }

  RunReport rep;
  rep.command = "check-denominator";
  rep.params = Json{{"n", n}, {"A", A}, {"r", r}, {"conjecture", conjecture}};

  LinearFormBundle b = obtain_bundle(p, effective_cache(cache));
  if (conjecture) {
    ConjectureCell cell = conjecture_cell(b);
    rep.record("Dn_tilde_evidence", conjecture_cell_to_json(cell));
  } else {
    LaurentPoly denom = build_Dn(DenomSpec::defaults(A, r), n);
    IntegralityResult res = check_integrality(b, denom);
    rep.add("Dn_clears_phat", res.all_member(), integrality_to_json(p, "Dn", res));
  }
  return emit(rep, start);
}

int cmd_bounds(long A_max, const std::string& kind, bool table) {
  auto start = Clock::now();
  if (kind != "f" && kind != "g") throw std::domain_error("kind must be f or g");
  if (A_max < 3 || A_max % 2 == 0) throw std::domain_error("A-max must be an odd integer >= 3");

  RunReport rep;
  rep.command = "bounds";
  rep.params = Json{{"A_max", A_max}, {"kind", kind}, {"table", table}};
  rep.prec = 256;

  Json rows = Json::array();
  long first_crossing = 0;
  BoundResult last;
  for (long A = 3; A <= A_max; A += 2) {
    BoundResult b = bound_max(kind[0], A);
    if (first_crossing == 0 && b.value > Real::of(1L, 64)) first_crossing = A;
    if (table) rows.push_back(Json::array({A, b.r, b.value.str()}));
    last = b;
  }
  Json data{{"first_crossing", first_crossing == 0 ? Json() : Json(first_crossing)},
            {"at_A_max", Json{{"A", last.A}, {"r", last.r}, {"value", last.value.str()}}},
            {"max_over_sqrt_A", (last.value / Real::of(static_cast<long>(A_max), 256).sqrt()).str()}};
  if (table) data["rows"] = std::move(rows);
  bool crossing_ok = A_max >= 21 ? first_crossing == 21 : first_crossing == 0;
  rep.add("first_threshold_crossing", crossing_ok, std::move(data));

  bool g_gt_f = true;
  long bad_A = 0, bad_r = 0;
  for (long A = 5; A <= A_max && g_gt_f; A += 2)
    for (long r = 1; 2 * r < A; ++r)
      if (!(bound('g', r, A).value > bound('f', r, A).value)) {
        g_gt_f = false;
        bad_A = A;
        bad_r = r;
        break;
      }
  Json gdata = Json::object();
  if (!g_gt_f) gdata = Json{{"A", bad_A}, {"r", bad_r}};
  rep.add("g_exceeds_f", g_gt_f, std::move(gdata));
  return emit(rep, start);
}

std::vector<long> rate_grid(long n_max, bool odd_only) {
  std::vector<long> grid;
  for (int k = 1; k <= 4; ++k) {
    long n = n_max * k / 4;
    if (odd_only && n % 2 == 0) --n;
    if (n < 1) n = 1;
    if (grid.empty() || grid.back() < n) grid.push_back(n);
  }
  return grid;
}

int cmd_asymptotics(const std::string& which, const std::string& q_str, long n_max, long A,
                    long r, long prec, const std::string& csv_path) {
  auto start = Clock::now();
  bool needs_Ar = which == "Sn" || which == "Dn" || which == "Phat";
  bool plain_rate = which == "dn" || which == "Delta" || which == "varphi";
  if (!needs_Ar && !plain_rate && which != "mobius")
    throw std::domain_error("--which must be one of Sn|dn|Delta|varphi|Dn|Phat|mobius");
  if (n_max < 1) throw std::domain_error("--n-max must be a positive integer");
  if (which == "mobius" && !q_str.empty())
    throw std::domain_error("flag mismatch: --q does not apply to mobius");
  if (which != "mobius" && q_str.empty())
    throw std::domain_error("flag mismatch: --q is required for " + which);
  if (needs_Ar && (A == 0 || r == 0))
    throw std::domain_error("flag mismatch: --A and --r are required for " + which);
  if (!needs_Ar && (A != 0 || r != 0))
    throw std::domain_error("flag mismatch: --A/--r only apply to Sn, Dn, Phat");
  check_prec(prec);

  RunReport rep;
  rep.command = "asymptotics";
  rep.params = Json{{"which", which}, {"n_max", n_max}, {"prec", prec}};
  if (!q_str.empty()) rep.params["q"] = q_str;
  if (needs_Ar) {
    rep.params["A"] = A;
    rep.params["r"] = r;
  }
  rep.prec = prec;

  if (which == "mobius") {
    MobiusSums ms = mobius_partial_sums(n_max);
    Real pi2 = Real::pi(192) * Real::pi(192);
    Real odd_limit = Real::of(8L, 192) / pi2;
    Real even_limit = Real::of(-2L, 192) / pi2;
    Real tol = Real::of(1L, 64) / Real::of(10000L, 64);
    Real odd_dev = (ms.odd_sum - odd_limit).abs();
    Real even_dev = (ms.even_sum - even_limit).abs();
    rep.add("odd_sum", odd_dev < tol,
            Json{{"value", real_json(ms.odd_sum)}, {"limit", real_json(odd_limit)},
                 {"abs_deviation", real_json(odd_dev, 8)}, {"tolerance", "1e-4"}});
    rep.add("even_sum", even_dev < tol,
            Json{{"value", real_json(ms.even_sum)}, {"limit", real_json(even_limit)},
                 {"abs_deviation", real_json(even_dev, 8)}, {"tolerance", "1e-4"}});
    rep.add("prefix_bound",
            ms.max_abs_odd_prefix <= 1.0 && ms.max_abs_even_prefix <= 1.0,
            Json{{"max_abs_odd_prefix", ms.max_abs_odd_prefix},
                 {"max_abs_even_prefix", ms.max_abs_even_prefix}});
    return emit(rep, start);
  }

  mpq_class q = parse_unit_q(q_str);
  Real qr = Real::of(q, static_cast<mpfr_prec_t>(prec));
  bool odd_only = which == "Dn" || which == "Phat";
  std::vector<long> grid = rate_grid(n_max, odd_only);

  RateSeries s;
  auto mp = static_cast<mpfr_prec_t>(prec);
  if (which == "Sn") s = rate_Sn(A, r, qr, grid, mp);
  else if (which == "dn") s = rate_dn(qr, grid, mp);
  else if (which == "Delta") s = rate_delta(qr, grid, mp);
  else if (which == "varphi") s = rate_varphi(qr, grid, mp);
  else if (which == "Dn") s = rate_Dn(A, r, qr, grid, mp);
  else s = rate_phat(A, r, qr, grid, mp);

  if (!csv_path.empty()) {
    std::ofstream out(csv_path);
    if (!out) throw std::runtime_error("cannot write " + csv_path);
    out << rate_series_csv(s);
  }

  const RatePoint& lastp = s.points.back();
  Real scale = s.limit.abs();
  bool pass;
  std::string tol_desc;
  if (s.one_sided) {
    /* proven upper bound: every point must sit below limit + 5% slack */
    pass = true;
    Real cap = s.limit + scale * Real::of(5L, 64) / Real::of(100L, 64);
    for (const auto& pt : s.points) pass = pass && pt.value < cap;
    tol_desc = "one-sided, 5% slack";
  } else if (which == "Sn") {
    Real vmax = lastp.value.abs();
    if (vmax < scale) vmax = scale;
    pass = lastp.deviation.abs() < vmax * Real::of(10L, 64) / Real::of(100L, 64);
    tol_desc = "10% of max(|value|,|limit|) at n-max";
  } else {
    pass = lastp.deviation.abs() < scale * Real::of(3L, 64) / Real::of(100L, 64);
    tol_desc = "3% of |limit| at n-max";
  }
  Json data{{"tolerance", tol_desc},
            {"last_point",
             Json{{"n", lastp.n}, {"value", real_json(lastp.value)},
                  {"deviation", real_json(lastp.deviation, 8)}}},
            {"series", rate_series_json(s)}};
  if (!csv_path.empty()) data["csv"] = csv_path;
  rep.add("rate_tolerance", pass, std::move(data));
  return emit(rep, start);
}

int cmd_catalan(long n, long prec) {
  auto start = Clock::now();
  if (n < 1 || n % 2 == 0) throw std::domain_error("n must be an odd positive integer");
  check_prec(prec);

  RunReport rep;
  rep.command = "catalan";
  rep.params = Json{{"n", n}, {"prec", prec}};
  rep.prec = prec;

  AnBn ab = An_Bn(n);
  rep.add("coefficients_match_assembly", ab.matches_bundle);

  auto mp = static_cast<mpfr_prec_t>(prec);
  for (long den : {2L, 3L}) {
    IdentityReport id = verify_identity(ab.bundle, mpq_class(1, den), mp);
    rep.add("identity_at_1/" + std::to_string(den), id.pass,
            Json{{"residual", real_json(id.residual, 8)},
                 {"threshold", "2^-" + std::to_string(prec / 2)}});
  }

  CatalanForm cf = catalan_form(n, mp);
  LimitCheck al = alpha_limit_check(ab.A);
  rep.add("alpha_closed_form_vs_limit", al.exact_at_1 == cf.alpha,
          Json{{"alpha", rational_str(cf.alpha)},
               {"limit_at_1", rational_str(al.exact_at_1)},
               {"extrapolated", rational_str(al.extrapolated)}});
  rep.add("series_reduction",
          cf.coeff_matches_alpha && cf.odd_beta_coeffs_vanish && cf.leading_terms_vanish,
          Json{{"G_coefficient", rational_str(cf.series_G_coeff)},
               {"odd_beta_coeffs_vanish", cf.odd_beta_coeffs_vanish},
               {"leading_terms_vanish", cf.leading_terms_vanish}});
  LimitCheck bl = beta_limit_check(ab.B);
  rep.add("beta_exact_vs_limit", bl.exact_at_1 == cf.beta_exact,
          Json{{"beta", rational_str(cf.beta_exact)},
               {"limit_at_1", rational_str(bl.exact_at_1)}});

  CatalanForm cf2 = catalan_form(n, mp * 2);
  Real instability = (cf.beta_extracted - cf2.beta_extracted).abs();
  bool stable = instability < Real::pow2(-static_cast<long>(prec) / 2, 64);
  rep.add("extraction_stability", stable,
          Json{{"beta_extracted", real_json(cf.beta_extracted)},
               {"abs_change_at_double_prec", real_json(instability, 8)}});

  Real direct_err = (cf.direct_partial - cf.lhs).abs();
  rep.add("direct_summation_cross_check",
          direct_err < cf.direct_tail_bound * Real::of(2L, 64),
          Json{{"terms", cf.direct_terms},
               {"abs_error", real_json(direct_err, 8)},
               {"tail_bound", real_json(cf.direct_tail_bound, 8)},
               {"linear_form", real_json(cf.lhs)}});
  return emit(rep, start);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact linear forms in q-analogues of Dirichlet beta values"};
  app.require_subcommand(1);

  long n = 1, A = 3, r = 1, prec = 256;
  std::string q_str, cache;
  auto* verify = app.add_subcommand("verify-linear-form",
                                    "evaluate both sides of the linear-form identity");
  verify->add_option("--n", n, "odd order of the form");
  verify->add_option("--A", A, "odd weight, A > 2r");
  verify->add_option("--r", r, "shift parameter");
  verify->add_option("--q", q_str, "rational base, num/den in (0,1)")->required();
  verify->add_option("--prec", prec, "working precision in bits");
  verify->add_option("--cache", cache, "bundle cache directory");

  long dn_n = 1, dn_A = 3, dn_r = 1;
  bool conjecture = false, force = false;
  std::string dn_cache;
  auto* denom = app.add_subcommand("check-denominator",
                                   "test the clearing factor against the form coefficients");
  denom->add_option("--n", dn_n, "odd order of the form");
  denom->add_option("--A", dn_A, "odd weight, A > 2r");
  denom->add_option("--r", dn_r, "shift parameter");
  denom->add_flag("--conjecture", conjecture, "evidence mode for the reduced factor");
  denom->add_flag("--force", force, "override the symbolic envelope");
  denom->add_option("--cache", dn_cache, "bundle cache directory");

  long A_max = 99;
  std::string kind = "f";
  bool table = false;
  auto* bounds = app.add_subcommand("bounds", "dimension lower bounds over odd weights");
  bounds->add_option("--A-max", A_max, "largest odd weight");
  bounds->add_option("--kind", kind, "f or g");
  bounds->add_flag("--table", table, "include the full (A, r*, value) table");

  std::string which, as_q, csv_path;
  long as_n_max = 0, as_A = 0, as_r = 0, as_prec = 256;
  auto* rates = app.add_subcommand("asymptotics", "growth-rate series against proven limits");
  rates->add_option("--which", which, "Sn|dn|Delta|varphi|Dn|Phat|mobius")->required();
  rates->add_option("--q", as_q, "rational base, num/den in (0,1)");
  rates->add_option("--n-max", as_n_max, "largest index")->required();
  rates->add_option("--A", as_A, "odd weight (Sn, Dn, Phat)");
  rates->add_option("--r", as_r, "shift parameter (Sn, Dn, Phat)");
  rates->add_option("--prec", as_prec, "working precision in bits");
  rates->add_option("--csv", csv_path, "write the rate series as CSV to this path");

  long cat_n = 1, cat_prec = 256;
  auto* catalan = app.add_subcommand("catalan", "rational approximations to Catalan's constant");
  catalan->add_option("--n", cat_n, "odd order of the form");
  catalan->add_option("--prec", cat_prec, "working precision in bits");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e); /* --help */
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (verify->parsed()) return cmd_verify_linear_form(n, A, r, q_str, prec, cache);
    if (denom->parsed()) return cmd_check_denominator(dn_n, dn_A, dn_r, conjecture, force, dn_cache);
    if (bounds->parsed()) return cmd_bounds(A_max, kind, table);
    if (rates->parsed()) return cmd_asymptotics(which, as_q, as_n_max, as_A, as_r, as_prec, csv_path);
    if (catalan->parsed()) return cmd_catalan(cat_n, cat_prec);
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitCheckFailure;
  }
  return kExitUsage;
}
