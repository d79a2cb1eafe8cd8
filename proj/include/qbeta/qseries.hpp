#pragma once

#include <optional>

#include "qbeta/real.hpp"

namespace qbeta {

/* Evaluation point for the q-series.  Holds the exact rational when there is
 * one; |q| = 1 is excluded everywhere, q = 0 is allowed only where a series
 * admits it (theta). */
class QPoint {
public:
  static QPoint rational(const mpq_class& q);
  static QPoint real(const Real& q);

  bool is_rational() const { return rat_.has_value(); }
  const mpq_class& rat() const { return *rat_; }
  Real to_real(mpfr_prec_t prec) const;
  bool inside() const;  /* |q| < 1 */
  bool is_zero() const;

private:
  QPoint() = default;
  std::optional<mpq_class> rat_;
  std::optional<Real> real_;
};

/* beta_q(s) = sum_{k>=1} k^{s-1} q^k / (1 + q^{2k});  s >= 1, 0 < |q| < 1.
 * Evaluated through the defining series and through the
 * character-divisor-sum power series; the two must agree within
 * 2^{-prec+16}, and the defining-series value is returned. */
Real beta_q(long s, const QPoint& q, mpfr_prec_t prec);

/* Y_s(q) = sum_{k>=0} (-1)^k q^{2k+1} / (1 - q^{2k+1})^s;  |q| != 1, q != 0.
 * For |q| > 1 the same expression converges when s >= 2 (s = 1 outside the
 * disk is rejected: the terms do not tend to zero). */
Real Y_s(long s, const QPoint& q, mpfr_prec_t prec);

/* L_s(z; b) = sum_{k>=1} (-1)^{k+1} b^{k-1/2} / (1 - b^{k-1/2})^s z^{-k};
 * base b > 0, b != 1.  Inside: |z| > b.  Outside: |z| b^{s-1} > 1. */
Real L_s(long s, const Real& z, const QPoint& base, mpfr_prec_t prec);

/* Dirichlet beta at integer s >= 1 via alternating-series acceleration;
 * odd s cross-checked against the closed form with Euler numbers. */
Real dirichlet_beta(long s, mpfr_prec_t prec);

/* Euler number E_k (E_0 = 1, E_2 = -1, E_4 = 5, ...); odd k rejected. */
mpz_class euler_number(long k);

/* theta(q) = 1 + 2 sum_{n>=1} q^{n^2};  |q| < 1 (q = 0 allowed). */
Real theta(const QPoint& q, mpfr_prec_t prec);

/* The very-well-poised series at base b > 0, b != 1 (any n >= 1; terms with
 * k <= rn vanish identically and are skipped). */
Real S_n_base(long n, long A, long r, const Real& base, mpfr_prec_t prec);

/* Same series at base q^2: the caller passes the square root q. */
Real S_n_numeric(long n, long A, long r, const QPoint& sqrt_base, mpfr_prec_t prec);

}  // namespace qbeta
