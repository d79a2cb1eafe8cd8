#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "qbeta/asymptotics.hpp"

using namespace qbeta;

namespace {

const mpfr_prec_t kPrec = 256;

Real half() { return Real::of(mpq_class(1, 2), kPrec); }

Real tol(double x) { return Real::of(x, kPrec); }

}  // namespace

TEST_SUITE("asymptotics") {

TEST_CASE("closed-form dimension bounds") {
  CHECK((bound('f', 3, 21).value - Real::from_str("1.0281522213199475153", kPrec)).abs() <
        tol(1e-18));
  CHECK((bound('g', 3, 21).value - Real::from_str("1.0428201475926386349", kPrec)).abs() <
        tol(1e-18));
  BoundResult bm = bound_max('f', 21);
  CHECK(bm.r == 3);
  CHECK((bm.value - bound('f', 3, 21).value).abs().is_zero());
  CHECK((bound_max('f', 19).value - tol(0.97332005)).abs() < tol(1e-7));
  CHECK((bound_max('g', 21).value - tol(1.04282015)).abs() < tol(1e-7));
  CHECK((bound_max('g', 19).value - tol(0.98809832)).abs() < tol(1e-7));
}

TEST_CASE("first weight crossing one") {
  long first_f = 0, first_g = 0;
  for (long A = 3; A <= 99; A += 2) {
    if (!first_f && bound_max('f', A).value > Real::of(1L, kPrec)) first_f = A;
    if (!first_g && bound_max('g', A).value > Real::of(1L, kPrec)) first_g = A;
  }
  CHECK(first_f == 21);
  CHECK(first_g == 21);
}

TEST_CASE("unconditional bound dominates the conjectural one") {
  for (long A = 3; A <= 99; A += 2)
    for (long r = 1; 2 * r < A; ++r)
      CHECK(bound('g', r, A).value > bound('f', r, A).value);
}

TEST_CASE("large-weight growth of the best bound") {
  BoundResult bm = bound_max('f', 100001);
  Real ratio = bm.value / Real::of(100001L, kPrec).sqrt();
  CHECK((ratio - tol(0.26904323)).abs() < tol(1e-6));
  Real pi = Real::pi(kPrec);
  Real limit = pi / ((pi * pi + 24L).sqrt() * 2L);
  CHECK((ratio - limit).abs() < limit * tol(0.02));
}

TEST_CASE("decay and growth rates reproduce the f-bound") {
  NesterenkoParts np = nesterenko_parts(21, 3, half(), kPrec);
  Real L = Real::of(2L, kPrec).log();
  CHECK((np.alpha1 / L - tol(1.622346457)).abs() < tol(1e-8));
  CHECK((nesterenko_bound(np.alpha1, np.alpha2) - np.value).abs().is_zero());
  for (long A = 3; A <= 99; A += 2)
    for (long r = 1; 2 * r < A; ++r) {
      NesterenkoParts parts = nesterenko_parts(A, r, half(), kPrec);
      CHECK((parts.value - bound('f', r, A).value).abs() < Real::pow2(-176, kPrec));
    }
}

TEST_CASE("factorial-analogue growth rate") {
  RateSeries rs = rate_dn(half(), {25, 50, 100}, kPrec);
  CHECK((rs.limit - tol(0.2106914783)).abs() < tol(1e-8));
  CHECK(!rs.one_sided);
  REQUIRE(rs.points.size() == 3);
  CHECK((rs.points[2].value - tol(0.211078089)).abs() < tol(1e-7));
  CHECK(rs.points[0].deviation.abs() > rs.points[2].deviation.abs());
  CHECK(rs.points[2].deviation.abs() < rs.limit * tol(0.03));
}

TEST_CASE("odd-index product growth rate") {
  RateSeries rs = rate_delta(half(), {25, 50, 100}, kPrec);
  CHECK((rs.limit - tol(0.5618439422)).abs() < tol(1e-8));
  CHECK(rs.points.back().deviation.abs() < rs.limit * tol(0.03));
}

TEST_CASE("even-index power-product growth rate") {
  RateSeries rs = rate_varphi(half(), {25, 50, 100}, kPrec);
  CHECK((rs.limit - tol(0.4620981204)).abs() < tol(1e-8));
  CHECK(rs.points.back().deviation.abs() < rs.limit * tol(0.03));
}

TEST_CASE("clearing-factor growth rate") {
  RateSeries rs = rate_Dn(3, 1, half(), {101, 201, 401}, kPrec);
  CHECK((rs.limit - tol(4.3845796)).abs() < tol(1e-5));
  CHECK(rs.points.back().deviation.abs() < rs.limit * tol(0.03));
}

TEST_CASE("series decay rate") {
  RateSeries rs = rate_Sn(3, 1, half(), {7, 15, 23, 31}, kPrec);
  CHECK((rs.limit - tol(-0.34657359)).abs() < tol(1e-7));
  REQUIRE(rs.points.size() == 4);
  CHECK((rs.points[3].value - tol(-0.366108536)).abs() < tol(1e-7));
  CHECK(rs.points[3].deviation.abs() < rs.limit.abs() * tol(0.10));
}

TEST_CASE("coefficient growth stays under the one-sided cap") {
  RateSeries rs = rate_phat(3, 1, half(), {7, 15, 31}, kPrec);
  CHECK(rs.one_sided);
  CHECK((rs.limit - tol(0.60650378)).abs() < tol(1e-6));
  for (const auto& p : rs.points) CHECK(p.value < rs.limit * tol(1.05));
  CHECK(rs.points[0].value > rs.limit);  /* crosses only within the slack */
}

TEST_CASE("mobius-weighted density sums") {
  MobiusSums m = mobius_partial_sums(100000);
  Real pi2 = Real::pi(kPrec) * Real::pi(kPrec);
  CHECK((m.odd_sum - Real::of(8L, kPrec) / pi2).abs() < tol(1e-3));
  CHECK((m.even_sum + Real::of(2L, kPrec) / pi2).abs() < tol(1e-3));
  CHECK(m.max_abs_odd_prefix <= 1.0);
  CHECK(m.max_abs_odd_prefix == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(m.max_abs_even_prefix == doctest::Approx(0.25).epsilon(1e-9));
  MobiusSums m10 = mobius_partial_sums(10);
  CHECK((m10.odd_sum - tol(0.828481)).abs() < tol(1e-5));
  CHECK((m10.even_sum - tol(-0.21222)).abs() < tol(1e-4));
}

TEST_CASE("rejected arguments") {
  CHECK_THROWS_AS(rate_dn(Real::of(2L, 128), {5}, 128), std::domain_error);
  CHECK_THROWS_AS(rate_Dn(3, 1, Real::of(mpq_class(1, 2), 128), {4}, 128), std::domain_error);
  CHECK_THROWS_AS(nesterenko_bound(Real::of(1L, 64), Real::of(-1L, 64)), std::domain_error);
  CHECK_THROWS_AS(bound('x', 3, 21), std::domain_error);
  CHECK_THROWS_AS(bound('f', 3, 6), std::domain_error);
  CHECK_THROWS_AS(bound('f', 11, 21), std::domain_error);
}

}  // TEST_SUITE
