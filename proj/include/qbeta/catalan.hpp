#pragma once

#include <gmpxx.h>

#include "qbeta/linear_forms.hpp"
#include "qbeta/ratfunc.hpp"
#include "qbeta/real.hpp"

namespace qbeta {

/* m or m - 1/2 exactly, stored as 2m */
struct HalfInt {
  long twice_value = 0;
  static HalfInt whole(long m) { return HalfInt{2 * m}; }
  static HalfInt half_odd(long twice) { return HalfInt{twice}; }
  bool is_integer() const { return twice_value % 2 == 0; }
};

/* harmonic number; the half-integer branch is H_m = sum_{j=1}^{floor(m)+1}
 * 1/(m-j+1), which is empty (= 0) at m = -1/2 */
mpq_class harmonic(HalfInt m);

/* G-coefficient of the degenerate linear form, as an exact rational */
mpq_class alpha_n(long n);

/* the two coefficients of the specialized form at (A, r) = (3, 1), assembled
 * independently from the pole-coefficient table and checked against the
 * generic bundle (A matches the j = 2 coefficient, B the constant one) */
struct AnBn {
  FormParams p;
  RatFunc A, B;
  bool matches_bundle = false;
  LinearFormBundle bundle;
};
AnBn An_Bn(long n);

/* The classical alternating series -n!/2 sum_k (-1)^k (k+(n-1)/2)
 * (k-n)_n (k+n)_n / (k-1/2)_{n+1}^3, evaluated exactly: the summand's partial
 * fractions in k reduce the series to rational multiples of beta(1), beta(2),
 * beta(3); the beta(1) and beta(3) coefficients must cancel to zero, leaving
 * series_G_coeff * G + beta_exact. */
struct CatalanForm {
  long n = 1;
  mpfr_prec_t prec = 0;
  Real lhs;
  mpq_class alpha;              /* closed form */
  Real beta_extracted;          /* lhs - alpha * G */
  mpq_class series_G_coeff;     /* G-coefficient from the series reduction */
  mpq_class beta_exact;         /* rational part of the series reduction */
  bool odd_beta_coeffs_vanish = false;
  bool coeff_matches_alpha = false;
  Real direct_partial;          /* truncated direct summation */
  Real direct_tail_bound;       /* prefactor times first omitted |term| */
  long direct_terms = 0;
  bool leading_terms_vanish = false;  /* the k <= n summands are exactly 0 */
  CatalanForm() : lhs(2), beta_extracted(2), direct_partial(2), direct_tail_bound(2) {}
};
CatalanForm catalan_form(long n, mpfr_prec_t prec = 256);

/* q -> 1 limit data for a coefficient with a double pole cleared: exact value
 * of (1-q)^2 f(q) at q = 1 plus the linear extrapolation from
 * q = 1-10^{-4}, 1-10^{-5} (all in the table variable) */
struct LimitCheck {
  mpq_class exact_at_1;
  mpq_class extrapolated;
  mpq_class at_1em4, at_1em5;
};
LimitCheck alpha_limit_check(const RatFunc& A);   /* no pole: plain values */
LimitCheck beta_limit_check(const RatFunc& B);    /* clears the double pole */

}  // namespace qbeta
