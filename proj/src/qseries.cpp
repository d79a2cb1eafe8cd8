#include "qbeta/qseries.hpp"

#include <cmath>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace qbeta {

namespace {

constexpr long kMaxIter = 50'000'000;

Real round_to(const Real& x, mpfr_prec_t prec) {
  Real r(prec);
  mpfr_set(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

/* coarse-precision scratch for tail bounds */
Real lo(const Real& x) { return round_to(x, 64); }

}  // namespace

QPoint QPoint::rational(const mpq_class& q) {
  QPoint p;
  p.rat_ = q;
  return p;
}

QPoint QPoint::real(const Real& q) {
  QPoint p;
  p.real_ = q;
  return p;
}

Real QPoint::to_real(mpfr_prec_t prec) const {
  if (rat_) return Real::of(*rat_, prec);
  return round_to(*real_, prec);
}

bool QPoint::inside() const {
  if (rat_) return abs(*rat_) < 1;
  Real a = real_->abs();
  return mpfr_cmp_si(a.raw(), 1) < 0;
}

bool QPoint::is_zero() const {
  if (rat_) return *rat_ == 0;
  return real_->is_zero();
}

namespace {

void require_unit_circle_excluded(const QPoint& q) {
  if (q.is_rational()) {
    if (abs(q.rat()) == 1) throw std::domain_error("q-series: |q| = 1 excluded");
  } else {
    Real a = q.to_real(64).abs();
    if (mpfr_cmp_si(a.raw(), 1) == 0) throw std::domain_error("q-series: |q| = 1 excluded");
  }
}

/* defining series sum_k k^{s-1} q^k / (1 + q^{2k}) */
Real beta_q_defining(long s, const Real& qr, mpfr_prec_t wprec, const Real& target) {
  Real sum(wprec);
  Real qk = Real::of(1L, wprec);
  Real aq = lo(qr.abs());
  Real one64 = Real::of(1L, 64);
  for (long k = 1; k < kMaxIter; ++k) {
    qk *= qr;
    mpz_class kp;
    mpz_ui_pow_ui(kp.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(s - 1));
    Real q2k = qk * qk;
    sum += Real::of(kp, wprec) * qk / (q2k + 1);
    /* tail <= sum_{j>k} j^{s-1}|q|^j <= (k+1)^{s-1}|q|^{k+1} / (1 - rho),
     * rho = ((k+2)/(k+1))^{s-1} |q|, once rho < 1 */
    Real rho = (Real::of(k + 2, 64) / Real::of(k + 1, 64)).pow_si(s - 1) * aq;
    if (rho < one64) {
      mpz_class kp1;
      mpz_ui_pow_ui(kp1.get_mpz_t(), static_cast<unsigned long>(k + 1),
                    static_cast<unsigned long>(s - 1));
      Real bound = Real::of(kp1, 64) * aq.pow_si(k + 1) / (one64 - rho);
      if (bound < target) return sum;
    }
  }
  throw std::runtime_error("beta_q: series did not converge within iteration cap");
}

/* power-series form sum_k (sum_{d|k} chi(k/d) d^{s-1}) q^k with chi the
 * nontrivial character mod 4 */
Real beta_q_divisor(long s, const Real& qr, mpfr_prec_t wprec, const Real& target) {
  Real aq = lo(qr.abs());
  Real one64 = Real::of(1L, 64);
  /* find the needed truncation first: |coef_k| <= k^{s-1} tau(k) <= k^s */
  long K = 0;
  for (long k = 2; ; ++k) {
    if (k >= kMaxIter) throw std::runtime_error("beta_q: truncation search overflow");
    Real rho = (Real::of(k + 2, 64) / Real::of(k + 1, 64)).pow_si(s) * aq;
    if (!(rho < one64)) continue;
    mpz_class kp1;
    mpz_ui_pow_ui(kp1.get_mpz_t(), static_cast<unsigned long>(k + 1),
                  static_cast<unsigned long>(s));
    Real bound = Real::of(kp1, 64) * aq.pow_si(k + 1) / (one64 - rho);
    if (bound < target) { K = k; break; }
  }
  /* sieve the coefficients; int64 fast path when magnitudes provably fit */
  double bits = static_cast<double>(s) * std::log2(static_cast<double>(K) + 2.0) + 2.0;
  Real sum(wprec);
  Real qk = Real::of(1L, wprec);
  if (bits < 60.0) {
    std::vector<long long> coef(static_cast<size_t>(K) + 1, 0);
    for (long c = 1; c <= K; c += 2) {
      long long sign = (c % 4 == 1) ? 1 : -1;
      for (long d = 1; c * d <= K; ++d) {
        long long dp = 1;
        for (long i = 0; i < s - 1; ++i) dp *= d;
        coef[static_cast<size_t>(c * d)] += sign * dp;
      }
    }
    for (long k = 1; k <= K; ++k) {
      qk *= qr;
      if (coef[static_cast<size_t>(k)] != 0)
        sum += qk * static_cast<long>(coef[static_cast<size_t>(k)]);
    }
  } else {
    std::vector<mpz_class> coef(static_cast<size_t>(K) + 1);
    for (long c = 1; c <= K; c += 2) {
      int sign = (c % 4 == 1) ? 1 : -1;
      for (long d = 1; c * d <= K; ++d) {
        mpz_class dp;
        mpz_ui_pow_ui(dp.get_mpz_t(), static_cast<unsigned long>(d),
                      static_cast<unsigned long>(s - 1));
        if (sign > 0)
          coef[static_cast<size_t>(c * d)] += dp;
        else
          coef[static_cast<size_t>(c * d)] -= dp;
      }
    }
    for (long k = 1; k <= K; ++k) {
      qk *= qr;
      if (coef[static_cast<size_t>(k)] != 0) sum += Real::of(coef[static_cast<size_t>(k)], wprec) * qk;
    }
  }
  return sum;
}

}  // namespace

Real beta_q(long s, const QPoint& q, mpfr_prec_t prec) {
  if (s < 1) throw std::domain_error("beta_q: s >= 1 required");
  if (q.is_zero()) throw std::domain_error("beta_q: q != 0 required");
  if (!q.inside()) throw std::domain_error("beta_q: |q| < 1 required");
  require_unit_circle_excluded(q);
  mpfr_prec_t wprec = prec + 64;
  Real qr = q.to_real(wprec);
  Real target = Real::pow2(-(static_cast<long>(prec) + 16), 64);
  Real v1 = beta_q_defining(s, qr, wprec, target);
  Real v2 = beta_q_divisor(s, qr, wprec, target);
  Real scale = v1.abs();
  if (scale < Real::of(1L, 64)) scale = Real::of(1L, 64);
  if (!((v1 - v2).abs() <= Real::pow2(-static_cast<long>(prec) + 16, 64) * scale))
    throw std::logic_error("beta_q: the two series forms disagree");
  return round_to(v1, prec);
}

Real Y_s(long s, const QPoint& q, mpfr_prec_t prec) {
  if (s < 1) throw std::domain_error("Y_s: s >= 1 required");
  if (q.is_zero()) throw std::domain_error("Y_s: q != 0 required");
  require_unit_circle_excluded(q);
  bool in = q.inside();
  if (!in && s == 1)
    throw std::domain_error("Y_s: s = 1 outside the unit disk diverges (terms tend to -1)");
  mpfr_prec_t wprec = prec + 64;
  Real qr = q.to_real(wprec);
  Real target = Real::pow2(-(static_cast<long>(prec) + 16), 64);
  Real one64 = Real::of(1L, 64);
  Real aq = lo(qr.abs());
  Real sum(wprec);
  Real q2 = qr * qr;
  Real qm = qr;  /* q^{2k+1} */
  for (long k = 0; k < kMaxIter; ++k) {
    Real den = (Real::of(1L, wprec) - qm).pow_si(s);
    Real t = qm / den;
    if (k % 2 == 1) t = -t;
    sum += t;
    if (in) {
      /* |1 - q^m| >= 1 - |q|; tail <= |q|^{2k+3} / ((1-|q|)^s (1-|q|^2)) */
      Real bound = aq.pow_si(2 * k + 3) / ((one64 - aq).pow_si(s) * (one64 - aq * aq));
      if (bound < target) break;
    } else {
      /* |1 - q^m| >= |q|^m (1 - |q|^{-m}); terms decay like |q|^{m(1-s)} */
      Real iaq = one64 / aq;
      Real bound = iaq.pow_si((2 * k + 3) * (s - 1)) /
                   ((one64 - iaq).abs().pow_si(s) * (one64 - iaq.pow_si(2 * (s - 1))).abs());
      if (bound < target) break;
    }
    qm *= q2;
  }
  return round_to(sum, prec);
}

Real L_s(long s, const Real& z, const QPoint& base, mpfr_prec_t prec) {
  if (s < 1) throw std::domain_error("L_s: s >= 1 required");
  mpfr_prec_t wprec = prec + 64;
  Real b = base.to_real(wprec);
  if (!(b > Real::of(0L, 64))) throw std::domain_error("L_s: base > 0 required");
  require_unit_circle_excluded(base);
  bool in = base.inside();
  Real az = lo(z.abs());
  Real ab = lo(b);
  Real one64 = Real::of(1L, 64);
  /* geometric term ratio: inside b/|z|, outside b^{1-s}/|z| */
  Real ratio = in ? ab / az : ab.pow_si(1 - s) / az;
  if (!(ratio < one64)) throw std::domain_error("L_s: outside the convergence domain");
  Real c = b.sqrt();
  Real target = Real::pow2(-(static_cast<long>(prec) + 16), 64);
  Real sum(wprec);
  Real cm = c;              /* c^{2k-1} = b^{k-1/2} */
  Real zk = Real::of(1L, wprec) / round_to(z, wprec); /* z^{-k} */
  Real c2 = c * c;
  for (long k = 1; k < kMaxIter; ++k) {
    Real t = cm / (Real::of(1L, wprec) - cm).pow_si(s) * zk;
    if (k % 2 == 0) t = -t;
    sum += t;
    /* tail bound: |t_{k+1}| estimate / (1 - ratio) with the worst-case
     * 1/(1-b^{k-1/2}) prefactors folded in */
    Real pre = in ? one64 / (one64 - lo(c)).pow_si(s)
                  : one64 / (one64 - one64 / lo(c)).abs().pow_si(s);
    Real mag = in ? lo(c).pow_si(2 * k + 1) : lo(c).pow_si((2 * k + 1) * (1 - s));
    Real bound = pre * mag / az.pow_si(k + 1) / (one64 - ratio);
    if (bound < target) break;
    cm *= c2;
    zk /= round_to(z, wprec);
  }
  return round_to(sum, prec);
}

mpz_class euler_number(long k) {
  if (k < 0) throw std::domain_error("euler_number: k >= 0 required");
  if (k % 2 == 1) throw std::domain_error("euler_number: even k required");
  static std::mutex mu;
  static std::vector<mpz_class> cache{1};  /* E_0, E_2, E_4, ... */
  std::lock_guard<std::mutex> lock(mu);
  long m = k / 2;
  while (static_cast<long>(cache.size()) <= m) {
    long mm = static_cast<long>(cache.size());
    /* E_{2m} = -sum_{j=1}^{m} C(2m, 2j) E_{2(m-j)} */
    mpz_class v = 0;
    for (long j = 1; j <= mm; ++j) {
      mpz_class b;
      mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(2 * mm),
                   static_cast<unsigned long>(2 * j));
      v -= b * cache[static_cast<size_t>(mm - j)];
    }
    cache.push_back(v);
  }
  return cache[static_cast<size_t>(m)];
}

Real dirichlet_beta(long s, mpfr_prec_t prec) {
  if (s < 1) throw std::domain_error("dirichlet_beta: s >= 1 required");
  mpfr_prec_t wprec = prec + 64;
  /* alternating-series acceleration (Cohen, Rodriguez Villegas, Zagier):
   * error decays like (3 + sqrt 8)^{-N} */
  long N = static_cast<long>(static_cast<double>(prec + 32) / 2.54) + 12;
  Real d = (Real::of(3L, wprec) + Real::of(8L, wprec).sqrt()).pow_si(N);
  d = (d + Real::of(1L, wprec) / d) / 2;
  Real b = Real::of(-1L, wprec);
  Real c = -d;
  Real sum(wprec);
  for (long k = 0; k < N; ++k) {
    c = b - c;
    Real ak = Real::of(2 * k + 1, wprec).pow_si(-s);
    sum += c * ak;
    /* b <- b (k+N)(k-N) / ((k+1/2)(k+1)) */
    b = b * Real::of(2 * (k + N), wprec) * Real::of(k - N, wprec) /
        (Real::of(2 * k + 1, wprec) * Real::of(k + 1, wprec));
  }
  Real v = sum / d;
  if (s % 2 == 1) {
    /* beta(2m+1) = (-1)^m E_{2m} pi^{2m+1} / (2^{2m+2} (2m)!) */
    long m = (s - 1) / 2;
    mpz_class num = euler_number(2 * m);
    if (m % 2 == 1) num = -num;
    mpz_class den;
    mpz_fac_ui(den.get_mpz_t(), static_cast<unsigned long>(2 * m));
    den <<= static_cast<unsigned long>(2 * m + 2);
    Real ref = Real::pi(wprec).pow_si(s) * Real::of(num, wprec) / Real::of(den, wprec);
    if (!((v - ref).abs() <= Real::pow2(-static_cast<long>(prec) + 16, 64)))
      throw std::logic_error("dirichlet_beta: acceleration disagrees with the Euler closed form");
  }
  return round_to(v, prec);
}

Real theta(const QPoint& q, mpfr_prec_t prec) {
  if (!q.inside()) throw std::domain_error("theta: |q| < 1 required");
  mpfr_prec_t wprec = prec + 64;
  Real qr = q.to_real(wprec);
  Real sum = Real::of(1L, wprec);
  if (q.is_zero()) return round_to(sum, prec);
  Real aq = lo(qr.abs());
  Real one64 = Real::of(1L, 64);
  Real target = Real::pow2(-(static_cast<long>(prec) + 16), 64);
  for (long n = 1; n < kMaxIter; ++n) {
    sum += qr.pow_si(n * n) * 2L;
    Real bound = aq.pow_si((n + 1) * (n + 1)) / (one64 - aq) * Real::of(2L, 64);
    if (bound < target) break;
  }
  return round_to(sum, prec);
}

Real S_n_base(long n, long A, long r, const Real& base, mpfr_prec_t prec) {
  if (n < 1 || r < 1 || A <= 2 * r) throw std::domain_error("S_n: n,r >= 1 and A > 2r required");
  if (!(base > Real::of(0L, 64))) throw std::domain_error("S_n: base > 0 required");
  if (mpfr_cmp_si(base.raw(), 1) == 0) throw std::domain_error("S_n: base != 1 required");
  mpfr_prec_t wprec = prec + 64;
  Real b = round_to(base, wprec);
  Real c(wprec);
  mpfr_rootn_ui(c.raw(), b.raw(), 4, MPFR_RNDN);  /* c = base^{1/4} */
  const long M2 = (A - 2 * r) * n + A - 2;        /* twice the T-exponent weight */
  Real one = Real::of(1L, wprec);
  Real one64 = Real::of(1L, 64);
  /* w = min(c, 1/c): the ratio-bound variable for either side of the disk */
  Real w64 = lo(c);
  if (!(w64 < one64)) w64 = one64 / w64;
  Real target = Real::pow2(-(static_cast<long>(prec) + 16), 64);

  Real sum(wprec);
  Real tail_ref(64);
  bool certified = false;
  for (long k = r * n + 1; k < kMaxIter; ++k) {
    Real t = c.pow_si((2 * k - 1) * M2) * (one - c.pow_si(4 * (2 * k + n - 1)));
    for (long i = 0; i < r * n; ++i) {
      t *= (one - c.pow_si(4 * (k - r * n + i)));
      t *= (one - c.pow_si(4 * (k + n + i)));
    }
    for (long i = 0; i <= n; ++i) t /= (one - c.pow_si(4 * (k + i) - 2)).pow_si(A);
    if (k % 2 == 0) t = -t;
    sum += t;
    /* certified geometric tail: |t_{j+1}/t_j| <= U(j) for all j >= k, with
     * each |1 - c^x| replaced by its one-sided bound in w */
    Real U = w64.pow_si(2 * M2);
    U *= (one64 + w64.pow_si(4 * (2 * k + n + 1))) / (one64 - w64.pow_si(4 * (2 * k + n - 1)));
    U *= (one64 + w64.pow_si(4 * k)) / (one64 - w64.pow_si(4 * (k - r * n)));
    U *= (one64 + w64.pow_si(4 * (k + n + r * n))) / (one64 - w64.pow_si(4 * (k + n)));
    U *= ((one64 + w64.pow_si(4 * k - 2)) / (one64 - w64.pow_si(4 * (k + n) + 2))).pow_si(A);
    if (U < Real::of(1L, 64) / 2) {
      Real bound = lo(t.abs()) * U / (one64 - U);
      if (bound < target) { certified = true; break; }
    }
  }
  if (!certified) throw std::runtime_error("S_n: tail certificate not reached");
  Real pre = Real::of(1L, wprec);
  for (long i = 1; i <= n; ++i) pre *= (one - c.pow_si(4 * i));
  return round_to(pre.pow_si(A - 2 * r) * sum, prec);
}

Real S_n_numeric(long n, long A, long r, const QPoint& sqrt_base, mpfr_prec_t prec) {
  if (sqrt_base.is_zero()) throw std::domain_error("S_n: q != 0 required");
  require_unit_circle_excluded(sqrt_base);
  mpfr_prec_t wprec = prec + 64;
  Real q = sqrt_base.to_real(wprec);
  return S_n_base(n, A, r, q * q, prec);
}

}  // namespace qbeta
