#pragma once

#include <map>

#include "qbeta/laurent.hpp"

namespace qbeta {

/* Rational function num / prod_t phi_t^{e_t} with the denominator kept as a
 * cyclotomic factorization (index -> exponent, exponents > 0).  Canonical
 * form: ord_{phi_t}(num) = 0 for every t in the denominator, so reduction is
 * exact trial division by cyclotomics.  The expanded denominator is a monic
 * polynomial with nonzero constant term, which makes the representation
 * unique; every denominator this pipeline produces is of this shape. */
class RatFunc {
public:
  using DenMap = std::map<long, long>;

  RatFunc() = default;
  explicit RatFunc(LaurentPoly num) : num_(std::move(num)) {}
  explicit RatFunc(const mpq_class& c) : num_(LaurentPoly(c)) {}
  explicit RatFunc(long c) : num_(LaurentPoly(c)) {}
  RatFunc(LaurentPoly num, DenMap den_factors);

  const LaurentPoly& num() const { return num_; }
  const DenMap& den_factors() const { return den_; }
  LaurentPoly den_expanded() const;
  bool is_zero() const { return num_.is_zero(); }
  bool is_laurent() const { return den_.empty(); }

  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc operator-() const;
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { a += b; return a; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { a -= b; return a; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { a *= b; return a; }
  bool operator==(const RatFunc& o) const { return den_ == o.den_ && num_ == o.num_; }
  bool operator!=(const RatFunc& o) const { return !(*this == o); }

  RatFunc& mul_scalar(const mpq_class& c);
  RatFunc& mul_poly(const LaurentPoly& p);
  RatFunc& mul_monomial(const mpq_class& c, long e);
  RatFunc pow(unsigned long k) const;

  /* 1 / (1 - q^m), m != 0 (negative m rewrites to the positive-m factor
   * times a monomial unit). */
  static RatFunc inv_one_minus_qpow(long m);

  /* q -> 1/q.  Exact; cyclotomic denominators are palindromic up to
   * monomial units. */
  RatFunc subst_inv() const;

  /* Exact evaluation at x; the (expanded) denominator must not vanish. */
  mpq_class eval_exact(const mpq_class& x) const;

  std::string str(const std::string& var = "q") const;

private:
  LaurentPoly num_;
  DenMap den_;
  void canonicalize();
};

}  // namespace qbeta
