#pragma once

#include <optional>
#include <vector>

#include "qbeta/linear_forms.hpp"

namespace qbeta {

/* The clearing factor D_n(q) = (A-1)! q^{floor(alpha n^2 + beta n + gamma)}
 * varphi_n(1/q)^{2r} d_{2n}(1/q)^{A-1} Delta_n(1/q), with the floor-exponent
 * coefficients overridable for diagnostics. */
struct DenomSpec {
  long A = 3, r = 1;
  mpq_class alpha, beta, gamma;

  static DenomSpec defaults(long A, long r);
  long floor_exponent(long n) const;
};

LaurentPoly build_Dn(const DenomSpec& spec, long n);
LaurentPoly build_Dn_tilde(const DenomSpec& spec, long n);

/* Membership of a reduced rational function in Z[1/q] or Z[q,1/q]; the three
 * conditions are reported separately so failures localize. */
struct MembershipReport {
  bool unit_denominator = false;
  bool exponents_ok = false;  /* all exponents <= 0 (true vacuously for Z[q,1/q]) */
  bool integer_coeffs = false;
  long max_exponent = 0;
  std::optional<std::pair<long, mpq_class>> first_bad_coeff;
  std::optional<LaurentPoly> witness;
  bool member() const { return unit_denominator && exponents_ok && integer_coeffs; }
};

MembershipReport membership_z_inv_q(const RatFunc& f);
MembershipReport membership_z_laurent(const RatFunc& f);

/* denom * phat_j in Z[1/q] for j = 0 and the even j; keys 0, 2, ..., A-1.
 * gamma_fix_delta is diagnostic: the smallest extra downward shift of gamma
 * in 1..A that would repair a shift-only failure, if one exists. */
struct IntegralityResult {
  std::map<long, MembershipReport> per_j;
  std::optional<long> gamma_fix_delta;
  bool all_member() const;
};
IntegralityResult check_integrality(const LinearFormBundle& b, const LaurentPoly& denom);

/* varphi_n(1/q)^{2r} d_n(1/q^2)^{A-s} c_{s,j} in Z[q,1/q] for every (s,j) */
struct CsjReport {
  long s, j;
  MembershipReport rep;
};
std::vector<CsjReport> check_csj_denominator(const PfcTable& t);

/* varphi_n(x) prod_{i=1..n} (1-x^{e+2i})/(1-x^{2i}) is a polynomial over Z */
struct WnResult {
  bool ok = false;
  LaurentPoly witness;
};
WnResult wn_lemma_check(long e, long n);

/* Conjectural smaller denominator: evidence per cell, never asserted. */
struct ConjectureCell {
  FormParams p;
  std::map<long, MembershipReport> per_j;
  std::map<long, std::optional<long>> minimal_shift;
  bool all_integral() const;
};
ConjectureCell conjecture_cell(const LinearFormBundle& b);
std::vector<ConjectureCell> conjecture_scan(const std::vector<FormParams>& grid);

}  // namespace qbeta
