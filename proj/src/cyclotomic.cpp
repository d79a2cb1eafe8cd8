#include "qbeta/cyclotomic.hpp"

#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace qbeta {

namespace {
std::mutex g_cyclo_mutex;
std::unordered_map<long, LaurentPoly> g_cyclo_cache;
}  // namespace

const LaurentPoly& cyclotomic(long t) {
  if (t < 1) throw std::invalid_argument("cyclotomic: t >= 1 required");
  std::lock_guard<std::mutex> lock(g_cyclo_mutex);
  auto it = g_cyclo_cache.find(t);
  if (it != g_cyclo_cache.end()) return it->second;
  /* phi_t = (x^t - 1) / prod_{d | t, d < t} phi_d, computed bottom-up so the
   * recursion never re-enters the lock */
  std::vector<long> todo{t};
  for (size_t i = 0; i < todo.size(); ++i)
    for (long d : divisors(todo[i]))
      if (d < todo[i] && !g_cyclo_cache.count(d)) todo.push_back(d);
  for (auto rit = todo.rbegin(); rit != todo.rend(); ++rit) {
    long m = *rit;
    if (g_cyclo_cache.count(m)) continue;
    LaurentPoly num = LaurentPoly::monomial(1, m) - LaurentPoly(1);
    for (long d : divisors(m)) {
      if (d == m) continue;
      auto q = num.divexact(g_cyclo_cache.at(d));
      if (!q) throw std::logic_error("cyclotomic: inexact division");
      num = std::move(*q);
    }
    g_cyclo_cache.emplace(m, std::move(num));
  }
  return g_cyclo_cache.at(t);
}

int mobius(long n) {
  if (n < 1) throw std::invalid_argument("mobius: n >= 1 required");
  int r = 1;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      r = -r;
    }
  }
  if (n > 1) r = -r;
  return r;
}

long totient(long n) {
  if (n < 1) throw std::invalid_argument("totient: n >= 1 required");
  long r = n;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      r -= r / p;
    }
  }
  if (n > 1) r -= r / n;
  return r;
}

std::vector<long> divisors(long n) {
  std::vector<long> lo, hi;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      lo.push_back(d);
      if (d != n / d) hi.push_back(n / d);
    }
  }
  for (auto it = hi.rbegin(); it != hi.rend(); ++it) lo.push_back(*it);
  return lo;
}

std::map<long, long> dn_factors(long n) {
  if (n < 1) throw std::invalid_argument("dn_poly: n >= 1 required");
  std::map<long, long> f;
  for (long t = 1; t <= n; ++t) f[t] = 1;
  return f;
}

std::map<long, long> delta_factors(long n) {
  if (n < 1) throw std::invalid_argument("delta_poly: n >= 1 required");
  std::map<long, long> f;
  for (long t = 1; t <= 2 * n - 1; t += 2) f[t] = 1;
  return f;
}

std::map<long, long> varphi_factors(long n) {
  if (n < 1) throw std::invalid_argument("varphi_poly: n >= 1 required");
  std::map<long, long> f;
  for (long k = 1; k <= n; ++k) f[2 * k] += n / k;
  return f;
}

LaurentPoly expand_factors(const std::map<long, long>& f) {
  LaurentPoly r(1);
  for (const auto& [t, e] : f) {
    if (e < 0) throw std::invalid_argument("expand_factors: negative exponent");
    if (e > 0) r *= cyclotomic(t).pow(static_cast<unsigned long>(e));
  }
  return r;
}

LaurentPoly dn_poly(long n) { return expand_factors(dn_factors(n)); }
LaurentPoly delta_poly(long n) { return expand_factors(delta_factors(n)); }
LaurentPoly varphi_poly(long n) { return expand_factors(varphi_factors(n)); }

long ord_cyclotomic(const LaurentPoly& p, long t) {
  if (p.is_zero()) throw std::invalid_argument("ord_cyclotomic: zero polynomial");
  LaurentPoly cur = p;
  cur.shift(-cur.min_exp());
  const LaurentPoly& phi = cyclotomic(t);
  long ord = 0;
  for (;;) {
    auto q = cur.divexact(phi);
    if (!q) return ord;
    cur = std::move(*q);
    ++ord;
  }
}

LaurentPoly poch_poly(long m, long k) {
  if (k < 0) throw std::invalid_argument("poch_poly: k >= 0 required");
  LaurentPoly r(1);
  for (long i = 0; i < k; ++i) {
    if (m + i == 0) return LaurentPoly();
    r *= LaurentPoly(1) - LaurentPoly::monomial(1, m + i);
  }
  return r;
}

LaurentPoly q_binomial(long n, long k) {
  if (k < 0 || k > n) throw std::invalid_argument("q_binomial: 0 <= k <= n required");
  LaurentPoly num = poch_poly(1, n);
  LaurentPoly den = poch_poly(1, k) * poch_poly(1, n - k);
  auto q = num.divexact(den);
  if (!q) throw std::logic_error("q_binomial: inexact division");
  return *q;
}

}  // namespace qbeta
