#include "qbeta/ratfunc.hpp"

#include <sstream>
#include <stdexcept>

#include "qbeta/cyclotomic.hpp"

namespace qbeta {

RatFunc::RatFunc(LaurentPoly num, DenMap den_factors)
    : num_(std::move(num)), den_(std::move(den_factors)) {
  for (auto it = den_.begin(); it != den_.end();) {
    if (it->second < 0) throw std::invalid_argument("RatFunc: negative denominator exponent");
    it = (it->second == 0) ? den_.erase(it) : std::next(it);
  }
  canonicalize();
}

void RatFunc::canonicalize() {
  if (num_.is_zero()) {
    den_.clear();
    return;
  }
  for (auto it = den_.begin(); it != den_.end();) {
    const LaurentPoly& phi = cyclotomic(it->first);
    while (it->second > 0) {
      auto q = num_.divexact(phi);
      if (!q) break;
      num_ = std::move(*q);
      --it->second;
    }
    it = (it->second == 0) ? den_.erase(it) : std::next(it);
  }
}

LaurentPoly RatFunc::den_expanded() const { return expand_factors(den_); }

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) { *this = o; return *this; }
  /* common denominator: factor-wise max exponent */
  DenMap common = den_;
  for (const auto& [t, e] : o.den_) {
    auto it = common.find(t);
    if (it == common.end())
      common.emplace(t, e);
    else if (it->second < e)
      it->second = e;
  }
  DenMap mine, theirs;
  for (const auto& [t, e] : common) {
    long a = e - (den_.count(t) ? den_.at(t) : 0);
    long b = e - (o.den_.count(t) ? o.den_.at(t) : 0);
    if (a > 0) mine[t] = a;
    if (b > 0) theirs[t] = b;
  }
  num_ = num_ * expand_factors(mine) + o.num_ * expand_factors(theirs);
  den_ = std::move(common);
  canonicalize();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) {
  *this += -o;
  return *this;
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) { *this = RatFunc(); return *this; }
  num_ *= o.num_;
  for (const auto& [t, e] : o.den_) den_[t] += e;
  canonicalize();
  return *this;
}

RatFunc& RatFunc::mul_scalar(const mpq_class& c) {
  if (c == 0) { *this = RatFunc(); return *this; }
  num_.mul_scalar(c);
  return *this;
}

RatFunc& RatFunc::mul_poly(const LaurentPoly& p) {
  if (p.is_zero()) { *this = RatFunc(); return *this; }
  num_ *= p;
  canonicalize();
  return *this;
}

RatFunc& RatFunc::mul_monomial(const mpq_class& c, long e) {
  if (c == 0) { *this = RatFunc(); return *this; }
  num_.mul_scalar(c);
  num_.shift(e);
  return *this;
}

RatFunc RatFunc::pow(unsigned long k) const {
  RatFunc r(1);
  RatFunc base = *this;
  while (k > 0) {
    if (k & 1) r *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return r;
}

RatFunc RatFunc::inv_one_minus_qpow(long m) {
  if (m == 0) throw std::invalid_argument("inv_one_minus_qpow: m != 0 required");
  /* (1 - q^m) = -prod_{d | m} phi_d(q) for m > 0;
   * (1 - q^{-m}) = -q^{-m} (1 - q^m) */
  long am = m < 0 ? -m : m;
  DenMap den;
  for (long d : divisors(am)) den[d] = 1;
  LaurentPoly num = LaurentPoly(-1);
  if (m < 0) num = LaurentPoly::monomial(1, am);
  return RatFunc(std::move(num), std::move(den));
}

RatFunc RatFunc::subst_inv() const {
  if (is_zero()) return RatFunc();
  /* phi_1(1/q) = -q^{-1} phi_1(q); phi_t(1/q) = q^{-totient(t)} phi_t(q), t >= 2 */
  RatFunc r;
  r.num_ = num_.subst_pow(-1);
  long shift = 0;
  bool neg = false;
  for (const auto& [t, e] : den_) {
    shift += totient(t) * e;
    if (t == 1 && (e & 1)) neg = !neg;
  }
  r.num_.shift(shift);
  if (neg) r.num_ = -r.num_;
  r.den_ = den_;
  /* canonical already: phi_t | num(1/q) q^s  iff  phi_t | num(q) */
  return r;
}

mpq_class RatFunc::eval_exact(const mpq_class& x) const {
  mpq_class d(1);
  for (const auto& [t, e] : den_) {
    mpq_class v = cyclotomic(t).eval(x);
    if (v == 0) throw std::domain_error("RatFunc::eval_exact: denominator vanishes");
    for (long i = 0; i < e; ++i) d *= v;
  }
  return num_.eval(x) / d;
}

std::string RatFunc::str(const std::string& var) const {
  if (den_.empty()) return num_.str(var);
  std::ostringstream os;
  os << "(" << num_.str(var) << ") / (";
  bool first = true;
  for (const auto& [t, e] : den_) {
    if (!first) os << " * ";
    first = false;
    os << "Phi_" << t;
    if (e != 1) os << "^" << e;
  }
  os << ")";
  return os.str();
}

}  // namespace qbeta
