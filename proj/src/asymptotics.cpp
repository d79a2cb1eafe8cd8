#include "qbeta/asymptotics.hpp"

#include <mpfr.h>

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "qbeta/cyclotomic.hpp"
#include "qbeta/denominators.hpp"
#include "qbeta/qseries.hpp"
#include "qbeta/stirling.hpp"

namespace qbeta {
namespace {

void require_open_unit(const Real& q) {
  if (!(q > Real::of(0L, 64) && q < Real::of(1L, 64)))
    throw std::domain_error("rate: q in (0,1) required");
}

long grid_max(const std::vector<long>& grid, bool odd_only) {
  if (grid.empty()) throw std::domain_error("rate: empty grid");
  long m = 0;
  for (long n : grid) {
    if (n < 1) throw std::domain_error("rate: n >= 1 required");
    if (odd_only && n % 2 == 0) throw std::domain_error("rate: odd n required");
    m = std::max(m, n);
  }
  return m;
}

/* log phi_t(1/q) for t = 1..T; slot 0 unused */
std::vector<Real> log_phi_table(const Real& q, long T, mpfr_prec_t prec) {
  Real x = Real::of(1L, prec) / q;
  std::vector<Real> lam;
  lam.reserve(static_cast<size_t>(T) + 1);
  lam.emplace_back(prec);
  for (long t = 1; t <= T; ++t) lam.push_back(eval_poly(cyclotomic(t), x).abs().log());
  return lam;
}

Real factor_log(const std::map<long, long>& factors, const std::vector<Real>& lam,
                mpfr_prec_t prec) {
  Real acc(prec);
  for (const auto& [t, e] : factors) acc += lam[static_cast<size_t>(t)] * e;
  return acc;
}

RateSeries finish(const char* which, const Real& limit, bool one_sided,
                  const std::vector<long>& grid, const std::vector<Real>& vals) {
  RateSeries rs;
  rs.which = which;
  rs.limit = limit;
  rs.one_sided = one_sided;
  rs.points.resize(grid.size());
  for (size_t i = 0; i < grid.size(); ++i) {
    rs.points[i].n = grid[i];
    rs.points[i].value = vals[i];
    rs.points[i].deviation = vals[i] - limit;
  }
  return rs;
}

Real pi_squared(mpfr_prec_t prec) {
  Real p = Real::pi(prec);
  return p * p;
}

/* A/4 + r^2 + (12/pi^2)(A-1) + 4r/3 + 8/pi^2, the clearing-factor growth
 * rate as a multiple of log(1/q) */
Real clearing_rate(long A, long r, mpfr_prec_t prec) {
  Real ps = pi_squared(prec);
  return Real::of(A, prec) / 4L + Real::of(r * r, prec) +
         Real::of(12 * (A - 1), prec) / ps + Real::of(4 * r, prec) / 3L +
         Real::of(8L, prec) / ps;
}

void require_params(long A, long r) {
  if (A < 3 || A % 2 == 0) throw std::domain_error("A odd and >= 3 required");
  if (r < 1 || A <= 2 * r) throw std::domain_error("1 <= r < A/2 required");
}

}  // namespace

RateSeries rate_Sn(long A, long r, const Real& q, const std::vector<long>& grid,
                   mpfr_prec_t prec) {
  if (r < 1 || A <= 2 * r) throw std::domain_error("1 <= r < A/2 required");
  require_open_unit(q);
  grid_max(grid, false);
  Real L = -q.log();
  Real limit = Real::of(-r * (A - 2 * r), prec) * L / 2L;
  std::vector<Real> vals;
  vals.reserve(grid.size());
  for (long n : grid)
    vals.push_back(S_n_base(n, A, r, q, prec).abs().log() / (n * n));
  return finish("Sn", limit, false, grid, vals);
}

RateSeries rate_dn(const Real& q, const std::vector<long>& grid, mpfr_prec_t prec) {
  require_open_unit(q);
  long N = grid_max(grid, false);
  auto lam = log_phi_table(q, N, prec);
  Real limit = Real::of(3L, prec) / pi_squared(prec) * (-q.log());
  std::vector<Real> vals;
  vals.reserve(grid.size());
  for (long n : grid) vals.push_back(factor_log(dn_factors(n), lam, prec) / (n * n));
  return finish("dn", limit, false, grid, vals);
}

RateSeries rate_delta(const Real& q, const std::vector<long>& grid, mpfr_prec_t prec) {
  require_open_unit(q);
  long N = grid_max(grid, false);
  auto lam = log_phi_table(q, 2 * N - 1, prec);
  Real limit = Real::of(8L, prec) / pi_squared(prec) * (-q.log());
  std::vector<Real> vals;
  vals.reserve(grid.size());
  for (long n : grid) vals.push_back(factor_log(delta_factors(n), lam, prec) / (n * n));
  return finish("Delta", limit, false, grid, vals);
}

RateSeries rate_varphi(const Real& q, const std::vector<long>& grid, mpfr_prec_t prec) {
  require_open_unit(q);
  long N = grid_max(grid, false);
  auto lam = log_phi_table(q, 2 * N, prec);
  Real limit = Real::of(2L, prec) / 3L * (-q.log());
  std::vector<Real> vals;
  vals.reserve(grid.size());
  for (long n : grid) vals.push_back(factor_log(varphi_factors(n), lam, prec) / (n * n));
  return finish("varphi", limit, false, grid, vals);
}

RateSeries rate_Dn(long A, long r, const Real& q, const std::vector<long>& grid,
                   mpfr_prec_t prec) {
  require_params(A, r);
  require_open_unit(q);
  long N = grid_max(grid, true);
  auto lam = log_phi_table(q, 2 * N, prec);
  DenomSpec spec = DenomSpec::defaults(A, r);
  Real lq = q.log();
  Real lfac = Real::of(factorial(A - 1), prec).log();
  Real limit = clearing_rate(A, r, prec) * (-lq);
  std::vector<Real> vals;
  vals.reserve(grid.size());
  for (long n : grid) {
    Real v = lfac + Real::of(spec.floor_exponent(n), prec) * lq;
    v += factor_log(varphi_factors(n), lam, prec) * (2 * r);
    v += factor_log(dn_factors(2 * n), lam, prec) * (A - 1);
    v += factor_log(delta_factors(n), lam, prec);
    vals.push_back(v / (n * n));
  }
  return finish("Dn", limit, false, grid, vals);
}

RateSeries rate_phat(long A, long r, const Real& q, const std::vector<long>& grid,
                     mpfr_prec_t prec_floor) {
  require_params(A, r);
  require_open_unit(q);
  grid_max(grid, true);
  mpfr_prec_t prec = std::max<mpfr_prec_t>(prec_floor, 256);
  Real limit = Real::of(A + 4 * r * r, prec) / 8L * (-q.log());
  std::vector<Real> vals;
  vals.reserve(grid.size());
  for (long n : grid) {
    FormParams p{n, A, r};
    NumericPhat np = numeric_phat(p, q, prec_floor);
    vals.push_back(np.max_abs.log() / (n * n));
  }
  return finish("Phat", limit, true, grid, vals);
}

MobiusSums mobius_partial_sums(long n) {
  if (n < 1) throw std::domain_error("mobius: n >= 1 required");
  std::vector<signed char> mu(static_cast<size_t>(n) + 1, 0);
  std::vector<char> composite(static_cast<size_t>(n) + 1, 0);
  std::vector<long> primes;
  mu[1] = 1;
  for (long i = 2; i <= n; ++i) {
    if (!composite[static_cast<size_t>(i)]) {
      primes.push_back(i);
      mu[static_cast<size_t>(i)] = -1;
    }
    for (long p : primes) {
      if (i > n / p) break;
      composite[static_cast<size_t>(i * p)] = 1;
      if (i % p == 0) { mu[static_cast<size_t>(i * p)] = 0; break; }
      mu[static_cast<size_t>(i * p)] = static_cast<signed char>(-mu[static_cast<size_t>(i)]);
    }
  }

  const mpfr_prec_t prec = 192;
  MobiusSums out;
  out.odd_sum = Real(prec);
  out.even_sum = Real(prec);
  Real term(prec);
  double run_odd = 0, run_even = 0;
  for (long d = 1; d <= n; ++d) {
    int m = mu[static_cast<size_t>(d)];
    if (m == 0) continue;
    mpfr_set_si(term.raw(), m, MPFR_RNDN);
    mpfr_div_si(term.raw(), term.raw(), d * d, MPFR_RNDN);
    if (d % 2 == 1) {
      mpfr_add(out.odd_sum.raw(), out.odd_sum.raw(), term.raw(), MPFR_RNDN);
      run_odd += static_cast<double>(m) / (static_cast<double>(d) * d);
      out.max_abs_odd_prefix = std::max(out.max_abs_odd_prefix, std::abs(run_odd));
    } else {
      mpfr_add(out.even_sum.raw(), out.even_sum.raw(), term.raw(), MPFR_RNDN);
      run_even += static_cast<double>(m) / (static_cast<double>(d) * d);
      out.max_abs_even_prefix = std::max(out.max_abs_even_prefix, std::abs(run_even));
    }
  }
  return out;
}

BoundResult bound(char kind, long r, long A, mpfr_prec_t prec) {
  if (kind != 'f' && kind != 'g') throw std::domain_error("bound: kind must be f or g");
  require_params(A, r);
  Real ps = pi_squared(prec);
  Real num = Real::of(4 * r * A + A - 4 * r * r, prec);
  Real den = (Real::of(48L, prec) / ps + 2L) * A + Real::of(8 * r * r, prec) -
             Real::of(kind == 'f' ? 16L : 48L, prec) / ps + Real::of(16 * r, prec) / 3L;
  BoundResult b;
  b.kind = kind;
  b.A = A;
  b.r = r;
  b.value = num / den;
  return b;
}

BoundResult bound_max(char kind, long A, mpfr_prec_t prec) {
  if (kind != 'f' && kind != 'g') throw std::domain_error("bound: kind must be f or g");
  if (A < 3 || A % 2 == 0) throw std::domain_error("A odd and >= 3 required");
  BoundResult best = bound(kind, 1, A, prec);
  for (long r = 2; 2 * r < A; ++r) {
    BoundResult b = bound(kind, r, A, prec);
    if (b.value > best.value) best = b;
  }
  return best;
}

Real nesterenko_bound(const Real& alpha1, const Real& alpha2) {
  if (alpha2.sign() <= 0) throw std::domain_error("coefficient growth rate must be positive");
  return alpha1 / alpha2 + 1L;
}

NesterenkoParts nesterenko_parts(long A, long r, const Real& q, mpfr_prec_t prec) {
  require_params(A, r);
  require_open_unit(q);
  Real L = -(q.log());
  Real rate = clearing_rate(A, r, prec);
  NesterenkoParts out;
  out.alpha1 = (Real::of(r * (A - 2 * r), prec) - rate) * L;
  out.alpha2 = (Real::of(A + 4 * r * r, prec) / 4L + rate) * L;
  out.value = nesterenko_bound(out.alpha1, out.alpha2);
  return out;
}

}  // namespace qbeta
