#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>

namespace qbeta {

/* Sparse Laurent polynomial over Q in one variable.  Exponents range over Z;
 * the map holds only nonzero coefficients. */
class LaurentPoly {
public:
  using Map = std::map<long, mpq_class>;

  LaurentPoly() = default;
  explicit LaurentPoly(long c) { if (c != 0) c_[0] = c; }
  explicit LaurentPoly(const mpq_class& c) { if (c != 0) c_[0] = c; }

  static LaurentPoly monomial(const mpq_class& c, long e);
  static LaurentPoly variable() { return monomial(1, 1); }

  bool is_zero() const { return c_.empty(); }
  bool is_one() const;
  bool is_monomial() const { return c_.size() == 1; }
  long min_exp() const;  /* nonzero poly only */
  long max_exp() const;
  size_t term_count() const { return c_.size(); }
  const Map& terms() const { return c_; }

  mpq_class coeff(long e) const;
  void set_coeff(long e, const mpq_class& c);

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o) { *this = *this * o; return *this; }
  LaurentPoly operator-() const;
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { a += b; return a; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { a -= b; return a; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  bool operator==(const LaurentPoly& o) const { return c_ == o.c_; }
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

  LaurentPoly& mul_scalar(const mpq_class& c);
  LaurentPoly& shift(long e);           /* multiply by q^e */
  LaurentPoly pow(unsigned long k) const;
  LaurentPoly subst_pow(long k) const;  /* q -> q^k, k != 0; k < 0 flips exponents */

  /* Exact division; nullopt when the division leaves a remainder. */
  std::optional<LaurentPoly> divexact(const LaurentPoly& d) const;

  /* Exact evaluation; x != 0 required when negative exponents are present. */
  mpq_class eval(const mpq_class& x) const;

  bool integer_coeffs() const;
  /* First (lowest-exponent) coefficient not in Z, if any. */
  std::optional<std::pair<long, mpq_class>> first_non_integer() const;

  std::string str(const std::string& var = "q") const;

private:
  Map c_;
};

}  // namespace qbeta
