#include "qbeta/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace qbeta {

LaurentPoly LaurentPoly::monomial(const mpq_class& c, long e) {
  LaurentPoly p;
  if (c != 0) p.c_[e] = c;
  return p;
}

bool LaurentPoly::is_one() const {
  return c_.size() == 1 && c_.begin()->first == 0 && c_.begin()->second == 1;
}

long LaurentPoly::min_exp() const {
  if (c_.empty()) throw std::logic_error("min_exp of zero polynomial");
  return c_.begin()->first;
}

long LaurentPoly::max_exp() const {
  if (c_.empty()) throw std::logic_error("max_exp of zero polynomial");
  return c_.rbegin()->first;
}

mpq_class LaurentPoly::coeff(long e) const {
  auto it = c_.find(e);
  return it == c_.end() ? mpq_class(0) : it->second;
}

void LaurentPoly::set_coeff(long e, const mpq_class& c) {
  if (c == 0)
    c_.erase(e);
  else
    c_[e] = c;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.c_) {
    auto it = c_.find(e);
    if (it == c_.end()) {
      c_.emplace(e, c);
    } else {
      it->second += c;
      if (it->second == 0) c_.erase(it);
    }
  }
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.c_) {
    auto it = c_.find(e);
    if (it == c_.end()) {
      c_.emplace(e, -c);
    } else {
      it->second -= c;
      if (it->second == 0) c_.erase(it);
    }
  }
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r;
  for (const auto& [e, c] : c_) r.c_.emplace(e, -c);
  return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  /* iterate over the smaller operand outside for fewer map rescans */
  const LaurentPoly& s = (a.c_.size() <= b.c_.size()) ? a : b;
  const LaurentPoly& l = (a.c_.size() <= b.c_.size()) ? b : a;
  mpq_class tmp;
  for (const auto& [es, cs] : s.c_) {
    for (const auto& [el, cl] : l.c_) {
      tmp = cs * cl;
      long e = es + el;
      auto it = r.c_.find(e);
      if (it == r.c_.end()) {
        r.c_.emplace(e, tmp);
      } else {
        it->second += tmp;
        if (it->second == 0) r.c_.erase(it);
      }
    }
  }
  return r;
}

LaurentPoly& LaurentPoly::mul_scalar(const mpq_class& c) {
  if (c == 0) {
    c_.clear();
  } else {
    for (auto& [e, v] : c_) v *= c;
  }
  return *this;
}

LaurentPoly& LaurentPoly::shift(long e) {
  if (e == 0 || c_.empty()) return *this;
  Map shifted;
  for (auto& [k, v] : c_) shifted.emplace(k + e, std::move(v));
  c_ = std::move(shifted);
  return *this;
}

LaurentPoly LaurentPoly::pow(unsigned long k) const {
  LaurentPoly r(1);
  LaurentPoly base = *this;
  while (k > 0) {
    if (k & 1) r *= base;
    k >>= 1;
    if (k) base = base * base;
  }
  return r;
}

LaurentPoly LaurentPoly::subst_pow(long k) const {
  if (k == 0) throw std::invalid_argument("subst_pow: k must be nonzero");
  LaurentPoly r;
  for (const auto& [e, c] : c_) r.c_.emplace(e * k, c);
  return r;
}

std::optional<LaurentPoly> LaurentPoly::divexact(const LaurentPoly& d) const {
  if (d.is_zero()) throw std::invalid_argument("divexact: zero divisor");
  if (is_zero()) return LaurentPoly();
  LaurentPoly rem = *this;
  LaurentPoly quo;
  const long dmax = d.max_exp();
  const mpq_class& dlc = d.c_.rbegin()->second;
  /* classic top-down long division; exponent lower bound rules out
   * non-terminating Laurent tails */
  const long qmin = rem.min_exp() - d.min_exp();
  while (!rem.is_zero()) {
    long e = rem.max_exp() - dmax;
    if (e < qmin) return std::nullopt;
    mpq_class t = rem.c_.rbegin()->second / dlc;
    quo.c_.emplace(e, t);
    LaurentPoly sub = d;
    sub.mul_scalar(t);
    sub.shift(e);
    rem -= sub;
  }
  return quo;
}

mpq_class LaurentPoly::eval(const mpq_class& x) const {
  if (c_.empty()) return mpq_class(0);
  if (x == 0) {
    if (min_exp() < 0) throw std::domain_error("eval: negative exponent at x = 0");
    return coeff(0);
  }
  /* Horner over the gap structure, from the top exponent down to min_exp,
   * then one final power of x for the (possibly negative) offset. */
  mpq_class acc(0);
  long prev = 0;
  bool first = true;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    if (first) {
      acc = it->second;
      prev = it->first;
      first = false;
      continue;
    }
    long gap = prev - it->first;
    mpq_class xp;
    mpz_pow_ui(xp.get_num_mpz_t(), x.get_num_mpz_t(), static_cast<unsigned long>(gap));
    mpz_pow_ui(xp.get_den_mpz_t(), x.get_den_mpz_t(), static_cast<unsigned long>(gap));
    xp.canonicalize();
    acc = acc * xp + it->second;
    prev = it->first;
  }
  if (prev != 0) {
    long e = prev;
    mpq_class xp;
    unsigned long ae = static_cast<unsigned long>(e < 0 ? -e : e);
    mpz_pow_ui(xp.get_num_mpz_t(), x.get_num_mpz_t(), ae);
    mpz_pow_ui(xp.get_den_mpz_t(), x.get_den_mpz_t(), ae);
    xp.canonicalize();
    if (e < 0) xp = 1 / xp;
    acc *= xp;
  }
  return acc;
}

bool LaurentPoly::integer_coeffs() const {
  for (const auto& [e, c] : c_)
    if (c.get_den() != 1) return false;
  return true;
}

std::optional<std::pair<long, mpq_class>> LaurentPoly::first_non_integer() const {
  for (const auto& [e, c] : c_)
    if (c.get_den() != 1) return std::make_pair(e, c);
  return std::nullopt;
}

std::string LaurentPoly::str(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    const auto& [e, c] = *it;
    mpq_class a = c;
    if (first) {
      if (a < 0) { os << "-"; a = -a; }
      first = false;
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    bool unit = (a == 1 && e != 0);
    if (!unit) os << a.get_str();
    if (e != 0) {
      if (!unit) os << "*";
      os << var;
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

}  // namespace qbeta
