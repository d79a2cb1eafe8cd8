#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <string>

#include "qbeta/laurent.hpp"

namespace qbeta {

/* RAII wrapper over mpfr_t.  Precision is fixed at construction; binary
 * operations produce results at the larger operand precision. */
class Real {
public:
  explicit Real(mpfr_prec_t prec = 128) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
  Real(const Real& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
  Real(Real&& o) noexcept { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_swap(v_, o.v_); }
  Real& operator=(const Real& o);
  Real& operator=(Real&& o) noexcept { mpfr_swap(v_, o.v_); return *this; }
  ~Real() { mpfr_clear(v_); }

  static Real of(long x, mpfr_prec_t prec);
  static Real of(double x, mpfr_prec_t prec);
  static Real of(const mpq_class& x, mpfr_prec_t prec);
  static Real of(const mpz_class& x, mpfr_prec_t prec);
  static Real from_str(const std::string& s, mpfr_prec_t prec);
  static Real pi(mpfr_prec_t prec);
  static Real catalan_const(mpfr_prec_t prec);

  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

  Real operator+(const Real& o) const;
  Real operator-(const Real& o) const;
  Real operator*(const Real& o) const;
  Real operator/(const Real& o) const;
  Real operator-() const;
  Real& operator+=(const Real& o) { *this = *this + o; return *this; }
  Real& operator-=(const Real& o) { *this = *this - o; return *this; }
  Real& operator*=(const Real& o) { *this = *this * o; return *this; }
  Real& operator/=(const Real& o) { *this = *this / o; return *this; }

  Real operator*(long x) const;
  Real operator/(long x) const;
  Real operator+(long x) const;
  Real operator-(long x) const;

  bool operator<(const Real& o) const { return mpfr_cmp(v_, o.v_) < 0; }
  bool operator>(const Real& o) const { return mpfr_cmp(v_, o.v_) > 0; }
  bool operator<=(const Real& o) const { return mpfr_cmp(v_, o.v_) <= 0; }
  bool operator>=(const Real& o) const { return mpfr_cmp(v_, o.v_) >= 0; }
  bool is_zero() const { return mpfr_zero_p(v_); }
  int sign() const { return mpfr_sgn(v_); }

  Real abs() const;
  Real sqrt() const;
  Real log() const;   /* natural log */
  Real log2() const;
  Real exp() const;
  Real pow_si(long e) const;

  /* 2^e for long e (exact) */
  static Real pow2(long e, mpfr_prec_t prec);

  double d() const { return mpfr_get_d(v_, MPFR_RNDN); }
  std::string str(size_t digits = 20) const;

private:
  mpfr_t v_;
};

/* Evaluate a Laurent polynomial at x (x != 0 if negative exponents). */
Real eval_poly(const LaurentPoly& p, const Real& x);

}  // namespace qbeta
