#pragma once

#include <map>
#include <vector>

#include "qbeta/qseries.hpp"
#include "qbeta/ratfunc.hpp"
#include "qbeta/real.hpp"

namespace qbeta {

struct FormParams {
  long n = 1, A = 3, r = 1;
  void validate() const;  /* n odd >= 1, A odd >= 3, r >= 1, A > 2r */
  bool operator==(const FormParams&) const = default;
};

/* Structure of the rational function R_n(T) at base q^2: all exponents are
 * integral in q; poles sit at q^{1-2j}, j = 0..n, each of multiplicity A. */
struct RnData {
  FormParams p;
  long t_exponent;       /* power of T in the numerator */
  long q_prefactor_exp;  /* power of q in the scalar prefactor */
  long pole_count;       /* n + 1 */
  long degree;           /* total T-degree: t_exponent + 2rn - A(n+1) <= -3 */
};
RnData rn_data(const FormParams& p);

/* Partial-fraction tables over Q(q):
 *   R_n(T) = sum_{s=1}^{A} sum_{j=0}^{n} c[s][j] / (T - q^{1-2j})^s
 *          = sum_{s,j} d[s][j] / (1 - T q^{2j-1})^s,
 * with d[s][j] = (-1)^s q^{(2j-1)s} c[s][j].  Row index 0 is unused. */
struct PfcTable {
  FormParams p;
  std::vector<std::vector<RatFunc>> c, d;
};
PfcTable partial_fractions(const FormParams& p);

/* Clears denominators and compares both sides as polynomials in T; exact. */
bool verify_reconstruction(const PfcTable& t);

/* z-coefficient vectors of the P-polynomials at base q^2:
 * P0[k] multiplies z^k (k = 0..n-1), Ps[s][k] multiplies z^k (k = 0..n). */
struct PPolys {
  FormParams p;
  std::vector<RatFunc> P0;
  std::vector<std::vector<RatFunc>> Ps;  /* index s = 1..A; row 0 unused */
};
PPolys p_polynomials(const PfcTable& t);

/* The assembled linear form S_n(q^2) = phat0 + sum_{j even} phat[j] beta_q(j). */
struct LinearFormBundle {
  FormParams p;
  PfcTable table;
  RatFunc phat0;
  std::map<long, RatFunc> phat;  /* even j in [2, A-1] */
};
LinearFormBundle build_bundle(const FormParams& p);
LinearFormBundle build_bundle(PfcTable table);

struct IdentityReport {
  Real lhs, rhs, residual;
  bool pass;
  mpfr_prec_t prec;
  IdentityReport() : lhs(2), rhs(2), residual(2), pass(false), prec(0) {}
};
/* Evaluates both sides at rational q (the square root of the base) and
 * checks |S_n(q^2) - rhs| < 2^{-prec/2}. */
IdentityReport verify_identity(const LinearFormBundle& b, const mpq_class& q, mpfr_prec_t prec);

/* Numeric partial-fraction path: |Phat_j(base)| for j = 0 and even j, at a
 * working precision scaled to the expected coefficient magnitudes. */
struct NumericPhat {
  FormParams p;
  Real phat0_abs;
  std::map<long, Real> phat_abs;
  Real max_abs;
  mpfr_prec_t used_prec;
  NumericPhat() : phat0_abs(2), max_abs(2), used_prec(0) {}
};
NumericPhat numeric_phat(const FormParams& p, const Real& base, mpfr_prec_t prec_floor = 256);

}  // namespace qbeta
