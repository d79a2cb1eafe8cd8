#include <gmpxx.h>

#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "qbeta/qseries.hpp"
#include "qbeta/stirling.hpp"

using namespace qbeta;

namespace {

const mpfr_prec_t kPrec = 256;

QPoint qp(long num, long den) {
  mpq_class q(num, den);
  q.canonicalize();
  return QPoint::rational(q);
}

Real small(long bits_below) { return Real::pow2(-kPrec + bits_below, kPrec); }

/* k-th summand of the very-well-poised series, prefactor included */
Real series_term(long n, long A, long r, const Real& q, long k, mpfr_prec_t prec) {
  Real one = Real::of(1L, prec);
  Real sq = q.sqrt();
  Real t = one;
  for (long i = 1; i <= n; ++i) t = t * (one - q.pow_si(i));
  t = t.pow_si(A - 2 * r);
  long M = ((A - 2 * r) * n + A - 2) / 2;
  t = t * sq.pow_si((2 * k - 1) * M);
  if (k % 2 == 0) t = -t;
  t = t * (one - q.pow_si(2 * k + n - 1));
  for (long i = 0; i < r * n; ++i) t = t * (one - q.pow_si(k - r * n + i));
  for (long i = 0; i < r * n; ++i) t = t * (one - q.pow_si(k + n + i));
  Real den = one;
  for (long i = 0; i <= n; ++i) den = den * (one - sq.pow_si(2 * (k + i) - 1));
  for (long a = 0; a < A; ++a) t = t / den;
  return t;
}

}  // namespace

TEST_SUITE("qseries") {

TEST_CASE("classical dirichlet beta values") {
  Real b1 = dirichlet_beta(1, kPrec);
  Real b2 = dirichlet_beta(2, kPrec);
  Real b3 = dirichlet_beta(3, kPrec);
  Real pi = Real::pi(kPrec);
  CHECK((b1 - pi / 4L).abs() < small(16));
  CHECK((b2 - Real::catalan_const(kPrec)).abs() < small(16));
  CHECK((b3 - pi.pow_si(3) / 32L).abs() < small(16));
}

TEST_CASE("q-beta converges through both series forms") {
  /* the evaluator cross-checks the defining series against the
   * character-divisor-sum expansion internally */
  for (long s = 1; s <= 8; ++s) {
    for (auto [num, den] : {std::pair<long, long>{1, 2}, {-1, 2}, {1, 3}, {2, 5}}) {
      Real v = beta_q(s, qp(num, den), kPrec);
      CHECK(!v.is_zero());
    }
  }
  CHECK((beta_q(1, qp(-1, 2), kPrec) - Real::of(-0.246332231559, kPrec)).abs() <
        Real::of(1e-10, kPrec));
  CHECK((beta_q(3, qp(-1, 2), kPrec) - Real::of(-0.0188359906445, kPrec)).abs() <
        Real::of(1e-10, kPrec));
}

TEST_CASE("odd-denominator series relates to q-beta values") {
  /* Y_s = (1/(s-1)!) sum_{j=2}^s c(s-1,j-1) beta_q(j) */
  for (auto [num, den] : {std::pair<long, long>{1, 2}, {1, 3}}) {
    QPoint q = qp(num, den);
    for (long s = 2; s <= 7; ++s) {
      Real acc = Real::of(0L, kPrec);
      for (long j = 2; j <= s; ++j)
        acc = acc + Real::of(mpq_class(stirling_first_signless(s - 1, j - 1)), kPrec) *
                        beta_q(j, q, kPrec);
      acc = acc / Real::of(factorial(s - 1), kPrec);
      CHECK((Y_s(s, q, kPrec) - acc).abs() < small(64));
    }
  }
  QPoint h = qp(1, 2);
  CHECK((Y_s(2, h, kPrec) - beta_q(2, h, kPrec)).abs() < small(64));
  CHECK((Y_s(1, h, kPrec) - beta_q(1, h, kPrec)).abs() < small(64));
  CHECK((Y_s(3, h, kPrec) - (beta_q(3, h, kPrec) + beta_q(2, h, kPrec)) / 2L).abs() < small(64));
}

TEST_CASE("inversion symmetry keeps only even beta terms") {
  /* Y_s(q) + Y_s(1/q) = (2/(s-1)!) sum_{even j} c(s-1,j-1) beta_q(j) */
  QPoint q = qp(1, 3);
  QPoint qi = qp(3, 1);
  for (long s = 2; s <= 7; ++s) {
    Real acc = Real::of(0L, kPrec);
    for (long j = 2; j <= s; j += 2)
      acc = acc + Real::of(mpq_class(stirling_first_signless(s - 1, j - 1)), kPrec) *
                      beta_q(j, q, kPrec);
    acc = acc * 2L / Real::of(factorial(s - 1), kPrec);
    CHECK((Y_s(s, q, kPrec) + Y_s(s, qi, kPrec) - acc).abs() < small(64));
  }
  CHECK((Y_s(2, q, kPrec) - Y_s(2, qi, kPrec)).abs() < small(64));
  CHECK((Y_s(2, q, kPrec) + Y_s(2, qi, kPrec) - beta_q(2, q, kPrec) * 2L).abs() < small(64));
}

TEST_CASE("stirling inversion recovers q-beta from the Y values") {
  /* beta_q(s) = sum_{j=1}^{s-1} (-1)^{s-1-j} S(s-1,j) j! Y_{j+1} */
  for (auto [num, den] : {std::pair<long, long>{1, 2}, {1, 3}}) {
    QPoint q = qp(num, den);
    for (long s = 2; s <= 6; ++s) {
      Real acc = Real::of(0L, kPrec);
      for (long j = 1; j <= s - 1; ++j) {
        mpz_class c = stirling_second(s - 1, j) * factorial(j);
        if ((s - 1 - j) % 2) c = -c;
        acc = acc + Real::of(c, kPrec) * Y_s(j + 1, q, kPrec);
      }
      CHECK((acc - beta_q(s, q, kPrec)).abs() < small(64));
    }
  }
}

TEST_CASE("classical limit as q approaches 1") {
  const mpfr_prec_t prec = 512;
  Real q = Real::of(mpq_class(999, 1000), prec);
  Real one = Real::of(1L, prec);
  for (long s = 1; s <= 3; ++s) {
    Real lim = dirichlet_beta(s, prec);
    Real scale = (one - q).pow_si(s);
    Real yv = scale * Y_s(s, QPoint::real(q), prec);
    CHECK(((yv - lim) / lim).abs() < Real::of(0.01, prec));
    Real bv = scale * beta_q(s, QPoint::real(q), prec);
    Real blim = lim * Real::of(factorial(s - 1), prec);
    CHECK(((bv - blim) / blim).abs() < Real::of(0.01, prec));
  }
}

TEST_CASE("half-integer lerch sums") {
  /* L_s(1; q^2) telescopes to Y_s(q) */
  Real l2 = L_s(2, Real::of(1L, kPrec), qp(1, 4), kPrec);
  CHECK((l2 - Y_s(2, qp(1, 2), kPrec)).abs() < small(64));
  Real l3 = L_s(3, Real::of(1L, kPrec), qp(1, 9), kPrec);
  CHECK((l3 - Y_s(3, qp(1, 3), kPrec)).abs() < small(64));
  /* L_1(1/z; 1/q) = -L_1(1/z; q) - z/(1+z) */
  Real z = Real::of(mpq_class(9, 10), kPrec);
  Real zi = Real::of(mpq_class(10, 9), kPrec);
  Real lhs = L_s(1, zi, qp(3, 1), kPrec);
  Real rhs = -L_s(1, zi, qp(1, 3), kPrec) - z / (Real::of(1L, kPrec) + z);
  CHECK((lhs - rhs).abs() < small(64));
}

TEST_CASE("theta function and its q-beta identity") {
  CHECK((theta(qp(0, 1), kPrec) - Real::of(1L, kPrec)).abs() < small(16));
  CHECK((theta(qp(1, 2), kPrec) - Real::of(2.128936, kPrec)).abs() < Real::of(1e-5, kPrec));
  for (auto [num, den] : {std::pair<long, long>{1, 2}, {1, 3}}) {
    Real t = theta(qp(num, den), kPrec);
    Real rhs = (t * t - 1L) / 4L;
    CHECK((beta_q(1, qp(num, den), kPrec) - rhs).abs() < small(16));
  }
}

TEST_CASE("euler numbers") {
  CHECK(euler_number(0) == 1);
  CHECK(euler_number(2) == -1);
  CHECK(euler_number(4) == 5);
  CHECK_THROWS_AS(euler_number(3), std::domain_error);
}

TEST_CASE("leading terms of the well-poised series vanish") {
  Real q = Real::of(mpq_class(1, 2), kPrec);
  for (long k = 1; k <= 6; ++k) CHECK(series_term(3, 5, 2, q, k, kPrec).is_zero());
  CHECK(!series_term(3, 5, 2, q, 7, kPrec).is_zero());
}

TEST_CASE("first surviving term brackets the series") {
  Real q = Real::of(mpq_class(1, 2), kPrec);
  for (long n : {15L, 31L}) {
    Real rho = series_term(n, 3, 1, q, n + 1, kPrec).abs();
    Real s = S_n_base(n, 3, 1, q, kPrec).abs();
    CHECK(s > rho / 2L);
    CHECK(s < rho * 3L / 2L);
  }
}

TEST_CASE("series inversion symmetry in its own argument") {
  /* S_n(1/Q) = Q^{n(r-1)} S_n(Q) */
  Real b = Real::of(mpq_class(1, 4), kPrec);
  Real lhs = S_n_base(3, 5, 2, Real::of(4L, kPrec), kPrec);
  Real rhs = b.pow_si(3) * S_n_base(3, 5, 2, b, kPrec);
  CHECK((lhs - rhs).abs() < rhs.abs() * Real::pow2(-200, kPrec));
  Real l2 = S_n_base(1, 3, 1, Real::of(4L, kPrec), kPrec);
  Real r2 = S_n_base(1, 3, 1, b, kPrec);
  CHECK((l2 - r2).abs() < r2.abs() * Real::pow2(-200, kPrec));
}

TEST_CASE("square-root entry point matches the base form") {
  Real direct = S_n_base(3, 3, 1, Real::of(mpq_class(1, 4), kPrec), kPrec);
  Real via_root = S_n_numeric(3, 3, 1, qp(1, 2), kPrec);
  CHECK((direct - via_root).abs() < small(64));
}

TEST_CASE("rejected arguments") {
  CHECK_THROWS_AS(beta_q(0, qp(1, 2), 128), std::domain_error);
  CHECK_THROWS_AS(beta_q(1, qp(3, 2), 128), std::domain_error);
  CHECK_THROWS_AS(Y_s(1, qp(2, 1), 128), std::domain_error);
  CHECK_THROWS_AS(theta(qp(3, 2), 128), std::domain_error);
  CHECK_THROWS_AS(L_s(1, Real::of(mpq_class(1, 8), 128), qp(1, 4), 128), std::domain_error);
}

}  // TEST_SUITE
