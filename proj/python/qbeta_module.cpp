#include <pybind11/pybind11.h>

#include "qbeta/catalan.hpp"
#include "qbeta/cyclotomic.hpp"
#include "qbeta/serialize.hpp"

namespace py = pybind11;

namespace {

using namespace qbeta;

py::object to_py(const Json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

mpq_class unit_q(const std::string& s) {
  mpq_class q = rational_parse(s);
  if (!(q > 0 && q < 1)) throw py::value_error("q must satisfy 0 < q < 1");
  return q;
}

std::vector<long> default_grid(long n_max, bool odd_only) {
  std::vector<long> grid;
  for (int k = 1; k <= 4; ++k) {
    long n = n_max * k / 4;
    if (odd_only && n % 2 == 0) --n;
    if (n < 1) n = 1;
    if (grid.empty() || grid.back() < n) grid.push_back(n);
  }
  return grid;
}

}  // namespace

PYBIND11_MODULE(_qbeta, m) {
  m.doc() = "exact linear forms in q-analogues of Dirichlet beta values";
  m.attr("__version__") = kArtifactVersion;
  m.attr("bundle_format_version") = kBundleFormatVersion;

  m.def(
      "verify_linear_form",
      [](long n, long A, long r, const std::string& q, long prec) {
        FormParams p{n, A, r};
        p.validate();
        LinearFormBundle b = build_bundle(p);
        IdentityReport id = verify_identity(b, unit_q(q), prec);
        return to_py(Json{{"pass", id.pass},
                          {"lhs", real_json(id.lhs)},
                          {"rhs", real_json(id.rhs)},
                          {"residual", real_json(id.residual, 8)}});
      },
      py::arg("n"), py::arg("A"), py::arg("r"), py::arg("q"), py::arg("prec") = 256,
      "evaluate both sides of the linear-form identity at rational q");

  m.def(
      "bundle",
      [](long n, long A, long r) {
        FormParams p{n, A, r};
        p.validate();
        return to_py(bundle_to_json(build_bundle(p)));
      },
      py::arg("n"), py::arg("A"), py::arg("r"),
      "partial-fraction tables and form coefficients as JSON-shaped data");

  m.def(
      "phat_strings",
      [](long n, long A, long r) {
        FormParams p{n, A, r};
        p.validate();
        LinearFormBundle b = build_bundle(p);
        py::dict out;
        out[py::int_(0)] = b.phat0.str();
        for (const auto& [j, f] : b.phat) out[py::int_(j)] = f.str();
        return out;
      },
      py::arg("n"), py::arg("A"), py::arg("r"),
      "human-readable form coefficients, keyed by the beta argument");

  m.def(
      "check_denominator",
      [](long n, long A, long r, bool conjecture) {
        FormParams p{n, A, r};
        p.validate();
        LinearFormBundle b = build_bundle(p);
        if (conjecture) return to_py(conjecture_cell_to_json(conjecture_cell(b)));
        IntegralityResult res = check_integrality(b, build_Dn(DenomSpec::defaults(A, r), n));
        return to_py(integrality_to_json(p, "Dn", res));
      },
      py::arg("n"), py::arg("A"), py::arg("r"), py::arg("conjecture") = false,
      "clearing-factor membership report per coefficient");

  m.def(
      "bound",
      [](const std::string& kind, long r, long A) {
        if (kind != "f" && kind != "g") throw py::value_error("kind must be f or g");
        return bound(kind[0], r, A).value.str();
      },
      py::arg("kind"), py::arg("r"), py::arg("A"),
      "dimension lower bound for one (r, A) pair, as a decimal string");

  m.def(
      "bound_max",
      [](const std::string& kind, long A) {
        if (kind != "f" && kind != "g") throw py::value_error("kind must be f or g");
        BoundResult b = bound_max(kind[0], A);
        return py::make_tuple(b.r, b.value.str());
      },
      py::arg("kind"), py::arg("A"), "best shift parameter and value at odd weight A");

  m.def(
      "rates",
      [](const std::string& which, long n_max, const std::string& q, long A, long r,
         long prec) {
        if (n_max < 1) throw py::value_error("n_max must be positive");
        if (which == "mobius") {
          MobiusSums ms = mobius_partial_sums(n_max);
          return to_py(Json{{"odd_sum", real_json(ms.odd_sum)},
                            {"even_sum", real_json(ms.even_sum)},
                            {"max_abs_odd_prefix", ms.max_abs_odd_prefix},
                            {"max_abs_even_prefix", ms.max_abs_even_prefix}});
        }
        Real qr = Real::of(unit_q(q), prec);
        bool odd_only = which == "Dn" || which == "Phat";
        std::vector<long> grid = default_grid(n_max, odd_only);
        RateSeries s;
        if (which == "Sn") s = rate_Sn(A, r, qr, grid, prec);
        else if (which == "dn") s = rate_dn(qr, grid, prec);
        else if (which == "Delta") s = rate_delta(qr, grid, prec);
        else if (which == "varphi") s = rate_varphi(qr, grid, prec);
        else if (which == "Dn") s = rate_Dn(A, r, qr, grid, prec);
        else if (which == "Phat") s = rate_phat(A, r, qr, grid, prec);
        else throw py::value_error("which must be Sn|dn|Delta|varphi|Dn|Phat|mobius");
        return to_py(rate_series_json(s));
      },
      py::arg("which"), py::arg("n_max"), py::arg("q") = "", py::arg("A") = 0,
      py::arg("r") = 0, py::arg("prec") = 256,
      "growth-rate series along a default grid up to n_max");

  m.def(
      "catalan_form",
      [](long n, long prec) {
        if (n < 1 || n % 2 == 0) throw py::value_error("n must be an odd positive integer");
        CatalanForm cf = catalan_form(n, prec);
        return to_py(Json{{"alpha", rational_str(cf.alpha)},
                          {"beta", rational_str(cf.beta_exact)},
                          {"G_coefficient", rational_str(cf.series_G_coeff)},
                          {"linear_form", real_json(cf.lhs)},
                          {"beta_extracted", real_json(cf.beta_extracted)},
                          {"coeff_matches_alpha", cf.coeff_matches_alpha},
                          {"odd_beta_coeffs_vanish", cf.odd_beta_coeffs_vanish}});
      },
      py::arg("n"), py::arg("prec") = 256,
      "exact reduction of the alternating series to alpha*G + beta");

  m.def(
      "beta_q",
      [](long s, const std::string& q, long prec) {
        return beta_q(s, QPoint::rational(unit_q(q)), prec).str();
      },
      py::arg("s"), py::arg("q"), py::arg("prec") = 256,
      "q-analogue of Dirichlet beta at integer s >= 1, rational q");

  m.def(
      "dirichlet_beta",
      [](long s, long prec) { return dirichlet_beta(s, prec).str(); }, py::arg("s"),
      py::arg("prec") = 256, "Dirichlet beta at integer s >= 1");

  m.def(
      "theta",
      [](const std::string& q, long prec) {
        return theta(QPoint::rational(unit_q(q)), prec).str();
      },
      py::arg("q"), py::arg("prec") = 256, "third Jacobi theta value at rational q");

  m.def(
      "cyclotomic",
      [](long t) { return cyclotomic(t).str(); }, py::arg("t"),
      "cyclotomic polynomial as a string");
}
