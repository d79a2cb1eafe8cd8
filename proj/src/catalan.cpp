#include "qbeta/catalan.hpp"

#include <array>
#include <stdexcept>
#include <vector>

#include "qbeta/stirling.hpp"

namespace qbeta {
namespace {

/* dense polynomials over Q, coefficient index = degree */
using Poly = std::vector<mpq_class>;

Poly mul_linear(const Poly& a, const mpq_class& c0) {
  /* a * (X + c0) */
  Poly out(a.size() + 1);
  for (size_t i = 0; i < a.size(); ++i) {
    out[i] += a[i] * c0;
    out[i + 1] += a[i];
  }
  return out;
}

mpq_class eval_at(const Poly& a, const mpq_class& x) {
  mpq_class v(0);
  for (size_t d = a.size(); d-- > 0;) v = v * x + a[d];
  return v;
}

/* first three Taylor coefficients of a(x + u) in u, by synthetic division */
std::array<mpq_class, 3> taylor2(const Poly& a, const mpq_class& x) {
  std::array<mpq_class, 3> t{mpq_class(0), mpq_class(0), mpq_class(0)};
  Poly cur = a;
  for (int l = 0; l < 3; ++l) {
    if (cur.empty()) break;
    mpq_class rem = cur.back();
    Poly quot(cur.size() - 1);
    for (size_t d = cur.size() - 1; d-- > 0;) {
      quot[d] = rem;
      rem = cur[d] + x * rem;
    }
    t[l] = rem;
    cur = std::move(quot);
  }
  return t;
}

mpq_class frac(long num, long den) {
  mpq_class f(num, den);
  f.canonicalize();
  return f;
}

mpq_class binom_half(long twice_m, long n) {
  /* binom(m, n) for m = twice_m/2: falling factorial over n! */
  mpq_class v(1);
  for (long i = 0; i < n; ++i) v *= frac(twice_m - 2 * i, 2);
  return v / mpq_class(factorial(n));
}

long pow_long(long b, long e) {
  long v = 1;
  for (long i = 0; i < e; ++i) v *= b;
  return v;
}

}  // namespace

mpq_class harmonic(HalfInt m) {
  if (m.twice_value < -1) throw std::domain_error("harmonic: argument below -1/2");
  mpq_class h(0);
  if (m.is_integer()) {
    for (long j = 1; j <= m.twice_value / 2; ++j) h += frac(1, j);
  } else {
    long terms = (m.twice_value - 1) / 2 + 1;
    for (long j = 1; j <= terms; ++j) h += frac(2, m.twice_value - 2 * j + 2);
  }
  return h;
}

mpq_class alpha_n(long n) {
  if (n < 1 || n % 2 == 0) throw std::domain_error("alpha_n: odd positive n required");
  mpq_class total(0);
  for (long j = 0; j <= n; ++j) {
    mpq_class cube(binomial_z(n, j));
    cube = cube * cube * cube;
    mpq_class term = cube * binom_half(2 * (n + j) - 1, n) * binom_half(2 * (2 * n - j) - 1, n);
    mpq_class inner = frac(1, n - 2 * j);
    inner += 3 * harmonic(HalfInt::whole(j));
    inner += harmonic(HalfInt{2 * j - 1});
    inner -= harmonic(HalfInt{2 * (n + j) - 1});
    total += mpq_class(n - 2 * j) * term * inner;
  }
  return mpq_class(-2) * total;
}

AnBn An_Bn(long n) {
  FormParams p{n, 3, 1};
  p.validate();
  PfcTable t = partial_fractions(p);

  AnBn out;
  out.p = p;
  for (long j = 0; j <= n; ++j) {
    RatFunc term = t.d[2][j];
    term.mul_scalar(2);
    term += t.d[3][j];
    term.mul_monomial(mpq_class(j % 2 == 0 ? 1 : -1), 1 - 2 * j);
    out.A += term;
  }

  RatFunc block;
  for (long s = 1; s <= 3; ++s)
    for (long j = 1; j <= n; ++j)
      for (long k = 1; k <= j; ++k) {
        RatFunc term = t.d[s][j];
        term *= RatFunc::inv_one_minus_qpow(2 * k - 1).pow(static_cast<unsigned long>(s));
        term.mul_monomial(mpq_class((j + k) % 2 == 0 ? 1 : -1), 2 * (k - j));
        block += term;
      }
  RatFunc p1;
  for (long j = 0; j <= n; ++j) {
    RatFunc term = t.d[1][j];
    term.mul_monomial(mpq_class(j % 2 == 0 ? 1 : -1), 1 - 2 * j);
    p1 += term;
  }
  p1.mul_scalar(mpq_class(1, 2));
  out.B = block + block.subst_inv() - p1;

  out.bundle = build_bundle(std::move(t));
  out.matches_bundle = out.A == out.bundle.phat.at(2) && out.B == out.bundle.phat0;
  return out;
}

CatalanForm catalan_form(long n, mpfr_prec_t prec) {
  if (n < 1 || n % 2 == 0) throw std::domain_error("catalan_form: odd positive n required");
  CatalanForm out;
  out.n = n;
  out.prec = prec;

  /* numerator N(k) = (k + (n-1)/2) (k-n)_n (k+n)_n of the summand; the
   * denominator poles sit at x_i = 1/2 - i, i = 0..n, each triple */
  Poly N{mpq_class(1)};
  N = mul_linear(N, frac(n - 1, 2));
  for (long i = 0; i < n; ++i) N = mul_linear(N, mpq_class(i - n));
  for (long i = 0; i < n; ++i) N = mul_linear(N, mpq_class(n + i));

  std::vector<std::array<mpq_class, 3>> g(static_cast<size_t>(n) + 1);
  for (long i = 0; i <= n; ++i) {
    auto T = taylor2(N, frac(1 - 2 * i, 2));
    mpq_class w0(1), w1(0), w2(0);
    for (long j = 0; j <= n; ++j) {
      if (j == i) continue;
      long m = j - i;
      mpq_class f0 = frac(1, pow_long(m, 3));
      mpq_class f1 = frac(-3, pow_long(m, 4));
      mpq_class f2 = frac(6, pow_long(m, 5));
      mpq_class nw0 = w0 * f0;
      mpq_class nw1 = w0 * f1 + w1 * f0;
      mpq_class nw2 = w0 * f2 + w1 * f1 + w2 * f0;
      w0 = std::move(nw0);
      w1 = std::move(nw1);
      w2 = std::move(nw2);
    }
    g[i][0] = T[0] * w0;                             /* 1/(k-x_i)^3 */
    g[i][1] = T[0] * w1 + T[1] * w0;                 /* 1/(k-x_i)^2 */
    g[i][2] = T[0] * w2 + T[1] * w1 + T[2] * w0;     /* 1/(k-x_i)   */
  }

  /* sum_{k>=1} (-1)^k (k-x_i)^{-m} = (-1)^i (-2^m beta(m) - T_i(m)) with
   * T_i(m) = sum_{k=1}^i (-1)^k 2^m (2k-1)^{-m}; collect per beta weight */
  mpq_class nfact(factorial(n));
  mpq_class cb1(0), cb2(0), cb3(0), tpart(0);
  for (long i = 0; i <= n; ++i) {
    long sgn = i % 2 == 0 ? 1 : -1;
    cb1 += sgn * g[i][2];
    cb2 += sgn * g[i][1];
    cb3 += sgn * g[i][0];
    for (long m = 1; m <= 3; ++m) {
      mpq_class Tim(0);
      for (long k = 1; k <= i; ++k)
        Tim += frac((k % 2 == 0 ? 1 : -1) * (1L << m), pow_long(2 * k - 1, m));
      tpart += sgn * g[i][static_cast<size_t>(3 - m)] * Tim;
    }
  }
  mpq_class coef_b1 = nfact * cb1;
  out.series_G_coeff = 2 * nfact * cb2;
  mpq_class coef_b3 = 4 * nfact * cb3;
  out.beta_exact = nfact * tpart / 2;
  out.odd_beta_coeffs_vanish = coef_b1 == 0 && coef_b3 == 0;
  out.alpha = alpha_n(n);
  out.coeff_matches_alpha = out.series_G_coeff == out.alpha;

  const mpfr_prec_t wprec = prec + 32;
  Real G = Real::catalan_const(wprec);
  out.lhs = Real::of(out.series_G_coeff, wprec) * G + Real::of(out.beta_exact, wprec);
  out.beta_extracted = out.lhs - Real::of(out.alpha, wprec) * G;

  /* direct truncated summation, exact per term; k <= n terms must vanish */
  const long K = 400;
  out.direct_terms = K;
  out.leading_terms_vanish = true;
  Real acc(wprec);
  mpq_class tK1;
  for (long k = 1; k <= K + 1; ++k) {
    mpq_class num = eval_at(N, mpq_class(k));
    if (k <= n) {
      if (num != 0) out.leading_terms_vanish = false;
      continue;
    }
    mpq_class den(1);
    for (long i = 0; i <= n; ++i) den *= frac(2 * k - 1 + 2 * i, 2);
    mpq_class t = num / (den * den * den);
    if (k == K + 1) { tK1 = t; break; }
    if (k % 2 == 1) t = -t;
    acc += Real::of(t, wprec);
  }
  Real pre = Real::of(nfact, wprec) / 2L;
  out.direct_partial = -pre * acc;
  out.direct_tail_bound = pre * Real::of(mpq_class(abs(tK1)), 64);
  return out;
}

namespace {

LimitCheck limits_of(const RatFunc& f) {
  LimitCheck out;
  out.at_1em4 = f.eval_exact(frac(9999, 10000));
  out.at_1em5 = f.eval_exact(frac(99999, 100000));
  out.extrapolated = out.at_1em5 + (out.at_1em5 - out.at_1em4) / 9;
  out.exact_at_1 = f.eval_exact(1);
  return out;
}

}  // namespace

LimitCheck alpha_limit_check(const RatFunc& A) { return limits_of(A); }

LimitCheck beta_limit_check(const RatFunc& B) {
  LaurentPoly sq;
  sq.set_coeff(0, 1);
  sq.set_coeff(1, -2);
  sq.set_coeff(2, 1);
  RatFunc cleared = B;
  cleared.mul_poly(sq);
  return limits_of(cleared);
}

}  // namespace qbeta
