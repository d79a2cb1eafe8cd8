#include "qbeta/real.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>
#include <vector>

namespace qbeta {

Real& Real::operator=(const Real& o) {
  if (this != &o) {
    mpfr_set_prec(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}

Real Real::of(long x, mpfr_prec_t prec) {
  Real r(prec);
  mpfr_set_si(r.v_, x, MPFR_RNDN);
  return r;
}

Real Real::of(double x, mpfr_prec_t prec) {
  Real r(prec);
  mpfr_set_d(r.v_, x, MPFR_RNDN);
  return r;
}

Real Real::of(const mpq_class& x, mpfr_prec_t prec) {
  Real r(prec);
  mpfr_set_q(r.v_, x.get_mpq_t(), MPFR_RNDN);
  return r;
}

Real Real::of(const mpz_class& x, mpfr_prec_t prec) {
  Real r(prec);
  mpfr_set_z(r.v_, x.get_mpz_t(), MPFR_RNDN);
  return r;
}

Real Real::from_str(const std::string& s, mpfr_prec_t prec) {
  Real r(prec);
  if (mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0)
    throw std::invalid_argument("Real::from_str: cannot parse '" + s + "'");
  return r;
}

Real Real::pi(mpfr_prec_t prec) {
  Real r(prec);
  mpfr_const_pi(r.v_, MPFR_RNDN);
  return r;
}

Real Real::catalan_const(mpfr_prec_t prec) {
  Real r(prec);
  mpfr_const_catalan(r.v_, MPFR_RNDN);
  return r;
}

#define QBETA_REAL_BINOP(name, fn)                                  \
  Real Real::operator name(const Real& o) const {                   \
    Real r(std::max(prec(), o.prec()));                             \
    fn(r.v_, v_, o.v_, MPFR_RNDN);                                  \
    return r;                                                       \
  }
QBETA_REAL_BINOP(+, mpfr_add)
QBETA_REAL_BINOP(-, mpfr_sub)
QBETA_REAL_BINOP(*, mpfr_mul)
QBETA_REAL_BINOP(/, mpfr_div)
#undef QBETA_REAL_BINOP

Real Real::operator-() const {
  Real r(prec());
  mpfr_neg(r.v_, v_, MPFR_RNDN);
  return r;
}

Real Real::operator*(long x) const {
  Real r(prec());
  mpfr_mul_si(r.v_, v_, x, MPFR_RNDN);
  return r;
}

Real Real::operator/(long x) const {
  Real r(prec());
  mpfr_div_si(r.v_, v_, x, MPFR_RNDN);
  return r;
}

Real Real::operator+(long x) const {
  Real r(prec());
  mpfr_add_si(r.v_, v_, x, MPFR_RNDN);
  return r;
}

Real Real::operator-(long x) const {
  Real r(prec());
  mpfr_sub_si(r.v_, v_, x, MPFR_RNDN);
  return r;
}

Real Real::abs() const {
  Real r(prec());
  mpfr_abs(r.v_, v_, MPFR_RNDN);
  return r;
}

Real Real::sqrt() const {
  Real r(prec());
  mpfr_sqrt(r.v_, v_, MPFR_RNDN);
  return r;
}

Real Real::log() const {
  Real r(prec());
  mpfr_log(r.v_, v_, MPFR_RNDN);
  return r;
}

Real Real::log2() const {
  Real r(prec());
  mpfr_log2(r.v_, v_, MPFR_RNDN);
  return r;
}

Real Real::exp() const {
  Real r(prec());
  mpfr_exp(r.v_, v_, MPFR_RNDN);
  return r;
}

Real Real::pow_si(long e) const {
  Real r(prec());
  mpfr_pow_si(r.v_, v_, e, MPFR_RNDN);
  return r;
}

Real Real::pow2(long e, mpfr_prec_t prec) {
  Real r(prec);
  mpfr_set_si_2exp(r.raw(), 1, e, MPFR_RNDN);
  return r;
}

std::string Real::str(size_t digits) const {
  char fmt[32];
  std::snprintf(fmt, sizeof(fmt), "%%.%zuRg", digits);
  char* out = nullptr;
  if (mpfr_asprintf(&out, fmt, v_) < 0) throw std::runtime_error("mpfr_asprintf failed");
  std::string s(out);
  mpfr_free_str(out);
  return s;
}

Real eval_poly(const LaurentPoly& p, const Real& x) {
  mpfr_prec_t prec = x.prec();
  if (p.is_zero()) return Real::of(0L, prec);
  if (x.is_zero()) {
    if (p.min_exp() < 0) throw std::domain_error("eval_poly: negative exponent at 0");
    return Real::of(p.coeff(0), prec);
  }
  /* Horner from the top down, then one power for the offset */
  Real acc(prec);
  long prev = 0;
  bool first = true;
  const auto& terms = p.terms();
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    if (first) {
      acc = Real::of(it->second, prec);
      prev = it->first;
      first = false;
      continue;
    }
    acc = acc * x.pow_si(prev - it->first) + Real::of(it->second, prec);
    prev = it->first;
  }
  if (prev != 0) acc *= x.pow_si(prev);
  return acc;
}

}  // namespace qbeta
