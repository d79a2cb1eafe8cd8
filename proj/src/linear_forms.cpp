#include "qbeta/linear_forms.hpp"

#include <stdexcept>

#include "qbeta/stirling.hpp"

namespace qbeta {

void FormParams::validate() const {
  if (n < 1 || n % 2 == 0) throw std::domain_error("n must be an odd positive integer");
  if (A < 3 || A % 2 == 0) throw std::domain_error("A must be an odd integer >= 3");
  if (r < 1) throw std::domain_error("r must be a positive integer");
  if (A <= 2 * r) throw std::domain_error("A > 2r required");
}

RnData rn_data(const FormParams& p) {
  p.validate();
  RnData d;
  d.p = p;
  d.t_exponent = ((p.A - 2 * p.r) * p.n + p.A) / 2 - 2;
  d.q_prefactor_exp = -p.A * (p.n * p.n - 1) - ((p.A - 2 * p.r) * p.n + p.A - 2) / 2;
  d.pole_count = p.n + 1;
  d.degree = d.t_exponent + 2 * p.r * p.n - p.A * (p.n + 1);
  return d;
}

namespace {

/* Coefficient-field adapters for the table builder.  ExactOps works over
 * Q(q) with the variable optionally inverted (dir = -1 builds the table of
 * the same functions composed with q -> 1/q); NumericOps evaluates the same
 * arithmetic at a fixed positive q. */
struct ExactOps {
  using K = RatFunc;
  int dir;
  K zero() const { return RatFunc(); }
  K one() const { return RatFunc(1L); }
  K from_mpq(const mpq_class& c) const { return RatFunc(c); }
  K qpow(long e) const { return RatFunc(LaurentPoly::monomial(1, dir * e)); }
  K inv_one_minus_qpow(long m) const { return RatFunc::inv_one_minus_qpow(dir * m); }
};

struct NumericOps {
  using K = Real;
  Real q;
  mpfr_prec_t prec;
  K zero() const { return Real(prec); }
  K one() const { return Real::of(1L, prec); }
  K from_mpq(const mpq_class& c) const { return Real::of(c, prec); }
  K qpow(long e) const { return q.pow_si(e); }
  K inv_one_minus_qpow(long m) const { return one() / (one() - q.pow_si(m)); }
};

/* product of two truncated power series in u, kept to the fixed length */
template <class K>
std::vector<K> mul_trunc(const std::vector<K>& a, const std::vector<K>& b, const K& zero) {
  std::vector<K> out(a.size(), zero);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size() && i + k < a.size(); ++k)
      out[i + k] = out[i + k] + a[i] * b[k];
  return out;
}

template <class Ops>
struct Tables {
  std::vector<std::vector<typename Ops::K>> c, d;
};

/* Local Taylor expansion of R_n(T) (T - pole)^A at each pole T = q^{1-2j},
 * to order u^{A-1}; the coefficient of u^{A-s} is c_{s,j}.  Everything is a
 * product of one-term-per-factor series, so the field only ever inverts
 * elements of the form q^e (1 - q^m). */
template <class Ops>
Tables<Ops> build_tables(const FormParams& p, const Ops& ops) {
  using K = typename Ops::K;
  const long n = p.n, A = p.A, rn = p.r * p.n;
  const RnData rd = rn_data(p);
  const K zero = ops.zero();

  K scal = ops.qpow(rd.q_prefactor_exp);
  for (long i = 1; i <= n; ++i) {
    K f = ops.one() - ops.qpow(2 * i);
    for (long t = 0; t < A - 2 * p.r; ++t) scal = scal * f;
  }

  std::vector<long> lin;
  for (long i = 1; i <= rn; ++i) lin.push_back(-2 * i);
  for (long i = 0; i < rn; ++i) lin.push_back(2 * n + 2 * i);

  Tables<Ops> out;
  out.c.assign(A + 1, std::vector<K>(n + 1, zero));
  out.d.assign(A + 1, std::vector<K>(n + 1, zero));

  for (long j = 0; j <= n; ++j) {
    const long pj = 1 - 2 * j;

    std::vector<K> ser(A, zero);
    ser[0] = scal;

    /* T^{m_T} = (q^{pj} + u)^{m_T} */
    {
      std::vector<K> f(A, zero);
      for (long l = 0; l < A && l <= rd.t_exponent; ++l)
        f[l] = ops.from_mpq(mpq_class(binomial_z(rd.t_exponent, l))) *
               ops.qpow(pj * (rd.t_exponent - l));
      ser = mul_trunc(ser, f, zero);
    }

    /* (1 - q^e T) = (1 - q^{e+pj}) - q^e u */
    for (long e : lin) {
      std::vector<K> f(2, zero);
      f[0] = ops.one() - ops.qpow(e + pj);
      f[1] = -ops.qpow(e);
      ser = mul_trunc(ser, f, zero);
    }

    /* (T - q^{1-2i})^{-A} = (delta + u)^{-A} with
     * delta = q^{1-2j} - q^{1-2i} = sigma q^{ed} (1 - q^{2|i-j|}) */
    for (long i = 0; i <= n; ++i) {
      if (i == j) continue;
      const long m = i < j ? j - i : i - j;
      const long ed = i < j ? 1 - 2 * j : 1 - 2 * i;
      K dinv = ops.qpow(-ed) * ops.inv_one_minus_qpow(2 * m);
      if (i > j) dinv = -dinv;
      K dpow = dinv;
      for (long t = 1; t < A; ++t) dpow = dpow * dinv;
      std::vector<K> f(A, zero);
      for (long l = 0; l < A; ++l) {
        f[l] = ops.from_mpq(mpq_class(binomial_z(-A, l))) * dpow;
        if (l + 1 < A) dpow = dpow * dinv;
      }
      ser = mul_trunc(ser, f, zero);
    }

    for (long s = 1; s <= A; ++s) {
      out.c[s][j] = ser[A - s];
      K dv = ser[A - s] * ops.qpow((2 * j - 1) * s);
      if (s % 2 == 1) dv = -dv;
      out.d[s][j] = dv;
    }
  }
  return out;
}

template <class Ops>
typename Ops::K P_s_at_1(const FormParams& p, const std::vector<std::vector<typename Ops::K>>& d,
                         long s, const Ops& ops) {
  auto acc = ops.zero();
  for (long j = 0; j <= p.n; ++j) {
    auto term = d[s][j] * ops.qpow(1 - 2 * j);
    if (j % 2 == 1) term = -term;
    acc = acc + term;
  }
  return acc;
}

template <class Ops>
typename Ops::K P_0_at_1(const FormParams& p, const std::vector<std::vector<typename Ops::K>>& d,
                         const Ops& ops) {
  auto acc = ops.zero();
  for (long s = 1; s <= p.A; ++s)
    for (long j = 1; j <= p.n; ++j)
      for (long k = 1; k <= j; ++k) {
        auto f = ops.inv_one_minus_qpow(2 * k - 1);
        auto fs = f;
        for (long t = 1; t < s; ++t) fs = fs * f;
        auto term = d[s][j] * ops.qpow(2 * (k - j)) * fs;
        if ((j + k) % 2 == 1) term = -term;
        acc = acc + term;
      }
  return acc;
}

mpq_class phat_weight(long s, long j) {
  return 2 * mpq_class(stirling_first_signless(s - 1, j - 1)) / mpq_class(factorial(s - 1));
}

}  // namespace

PfcTable partial_fractions(const FormParams& p) {
  p.validate();
  auto t = build_tables(p, ExactOps{+1});
  return PfcTable{p, std::move(t.c), std::move(t.d)};
}

namespace {

/* polynomials in T with RatFunc coefficients, index = T-power */
using TPoly = std::vector<RatFunc>;

TPoly tmul(const TPoly& a, const TPoly& b) {
  TPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t k = 0; k < b.size(); ++k)
      if (!b[k].is_zero()) out[i + k] += a[i] * b[k];
  }
  return out;
}

/* exact quotient of W by (T - pole); throws if a remainder survives */
TPoly div_linear(const TPoly& W, const RatFunc& pole) {
  const std::size_t D = W.size() - 1;
  TPoly Q(D);
  Q[D - 1] = W[D];
  for (std::size_t i = D - 1; i >= 1; --i) Q[i - 1] = W[i] + pole * Q[i];
  RatFunc rem = W[0] + pole * Q[0];
  if (!rem.is_zero()) throw std::logic_error("linear division left a remainder");
  return Q;
}

}  // namespace

bool verify_reconstruction(const PfcTable& t) {
  const long n = t.p.n, A = t.p.A, rn = t.p.r * t.p.n;
  const RnData rd = rn_data(t.p);
  auto mono = [](long e) { return RatFunc(LaurentPoly::monomial(1, e)); };

  RatFunc scal = mono(rd.q_prefactor_exp);
  for (long i = 1; i <= n; ++i)
    for (long k = 0; k < A - 2 * t.p.r; ++k) scal *= RatFunc(1L) - mono(2 * i);

  TPoly num(rd.t_exponent + 1);
  num[rd.t_exponent] = scal;
  for (long i = 1; i <= rn; ++i) num = tmul(num, TPoly{RatFunc(1L), -mono(-2 * i)});
  for (long i = 0; i < rn; ++i) num = tmul(num, TPoly{RatFunc(1L), -mono(2 * n + 2 * i)});

  TPoly U{RatFunc(1L)};
  for (long i = 0; i <= n; ++i) {
    TPoly f{-mono(1 - 2 * i), RatFunc(1L)};
    for (long k = 0; k < A; ++k) U = tmul(U, f);
  }

  TPoly acc(U.size() - 1);
  for (long j = 0; j <= n; ++j) {
    const RatFunc pole = mono(1 - 2 * j);
    TPoly W = U;
    for (long s = 1; s <= A; ++s) {
      W = div_linear(W, pole);
      if (t.c[s][j].is_zero()) continue;
      for (std::size_t i = 0; i < W.size(); ++i)
        if (!W[i].is_zero()) acc[i] += t.c[s][j] * W[i];
    }
  }

  const std::size_t len = std::max(num.size(), acc.size());
  num.resize(len);
  acc.resize(len);
  return num == acc;
}

PPolys p_polynomials(const PfcTable& t) {
  const FormParams p = t.p;
  ExactOps ops{+1};
  PPolys out;
  out.p = p;
  out.P0.assign(p.n, RatFunc());
  for (long s = 1; s <= p.A; ++s)
    for (long j = 1; j <= p.n; ++j)
      for (long k = 1; k <= j; ++k) {
        RatFunc term = t.d[s][j] * ops.qpow(2 * (k - j)) * ops.inv_one_minus_qpow(2 * k - 1).pow(s);
        if ((j + k) % 2 == 1) term = -term;
        out.P0[j - k] += term;
      }
  out.Ps.assign(p.A + 1, std::vector<RatFunc>(p.n + 1));
  for (long s = 1; s <= p.A; ++s)
    for (long j = 0; j <= p.n; ++j) {
      RatFunc term = t.d[s][j] * ops.qpow(1 - 2 * j);
      if (j % 2 == 1) term = -term;
      out.Ps[s][j] = term;
    }
  return out;
}

LinearFormBundle build_bundle(PfcTable table) {
  const FormParams p = table.p;
  ExactOps ops{+1}, ops_inv{-1};

  std::vector<std::vector<RatFunc>> dinv(p.A + 1, std::vector<RatFunc>(p.n + 1));
  for (long s = 1; s <= p.A; ++s)
    for (long j = 0; j <= p.n; ++j) dinv[s][j] = table.d[s][j].subst_inv();

  std::vector<RatFunc> ps1(p.A + 1);
  for (long s = 1; s <= p.A; ++s) ps1[s] = P_s_at_1(p, table.d, s, ops);

  LinearFormBundle b;
  b.p = p;
  b.phat0 = P_0_at_1(p, table.d, ops) +
            ops.qpow(-2 * p.n * (p.r - 1)) * P_0_at_1(p, dinv, ops_inv) -
            RatFunc(mpq_class(1, 2)) * ps1[1];
  for (long j = 2; j <= p.A - 1; j += 2) {
    RatFunc acc;
    for (long s = j; s <= p.A; ++s) {
      RatFunc term = ps1[s];
      term.mul_scalar(phat_weight(s, j));
      acc += term;
    }
    b.phat[j] = acc;
  }
  b.table = std::move(table);
  return b;
}

LinearFormBundle build_bundle(const FormParams& p) { return build_bundle(partial_fractions(p)); }

IdentityReport verify_identity(const LinearFormBundle& b, const mpq_class& q, mpfr_prec_t prec) {
  if (q == 0 || abs(q) >= 1) throw std::domain_error("need 0 < |q| < 1");

  mpq_class v0 = b.phat0.eval_exact(q);
  std::map<long, mpq_class> vj;
  for (const auto& [j, f] : b.phat) vj[j] = f.eval_exact(q);

  long maxe = 0;
  auto note_exp = [&maxe](const mpq_class& v) {
    if (v == 0) return;
    Real t = Real::of(v, 64);
    maxe = std::max(maxe, (long)mpfr_get_exp(t.raw()));
  };
  note_exp(v0);
  for (const auto& [j, v] : vj) note_exp(v);

  const mpfr_prec_t wprec = prec + 64 + maxe;
  Real rhs = Real::of(v0, wprec);
  for (const auto& [j, v] : vj)
    rhs += Real::of(v, wprec) * beta_q(j, QPoint::rational(q), wprec);
  Real lhs = S_n_numeric(b.p.n, b.p.A, b.p.r, QPoint::rational(q), wprec);

  IdentityReport rep;
  rep.prec = prec;
  rep.lhs = lhs;
  rep.rhs = rhs;
  rep.residual = (lhs - rhs).abs();
  rep.pass = rep.residual < Real::pow2(-(long)(prec / 2), 64);
  return rep;
}

NumericPhat numeric_phat(const FormParams& p, const Real& base, mpfr_prec_t prec_floor) {
  p.validate();
  if (base.sign() <= 0 || base >= Real::of(1L, 64))
    throw std::domain_error("numeric path needs 0 < base < 1");

  const double lb = -base.log2().d();
  const double bits = 0.25 * (p.A + 4.0 * p.r * p.r) * p.n * p.n * lb;
  const mpfr_prec_t wprec =
      std::max<mpfr_prec_t>(prec_floor, (mpfr_prec_t)bits + 6 * p.n + 256);

  Real bw(wprec);
  mpfr_set(bw.raw(), base.raw(), MPFR_RNDN);
  Real qv = bw.sqrt();

  NumericOps ops{qv, wprec}, ops_inv{Real::of(1L, wprec) / qv, wprec};
  auto t = build_tables(p, ops);
  auto ti = build_tables(p, ops_inv);

  std::vector<Real> ps1(p.A + 1, Real(wprec));
  for (long s = 1; s <= p.A; ++s) ps1[s] = P_s_at_1(p, t.d, s, ops);

  NumericPhat rep;
  rep.p = p;
  rep.used_prec = wprec;
  Real phat0 = P_0_at_1(p, t.d, ops) +
               qv.pow_si(-2 * p.n * (p.r - 1)) * P_0_at_1(p, ti.d, ops_inv) -
               Real::of(mpq_class(1, 2), wprec) * ps1[1];
  rep.phat0_abs = phat0.abs();
  rep.max_abs = rep.phat0_abs;
  for (long j = 2; j <= p.A - 1; j += 2) {
    Real acc(wprec);
    for (long s = j; s <= p.A; ++s) acc += Real::of(phat_weight(s, j), wprec) * ps1[s];
    Real a = acc.abs();
    rep.phat_abs[j] = a;
    if (a > rep.max_abs) rep.max_abs = a;
  }
  return rep;
}

}  // namespace qbeta
