#pragma once

#include <string>
#include <vector>

#include "qbeta/linear_forms.hpp"
#include "qbeta/real.hpp"

namespace qbeta {

/* (1/n^2) log |x_n| along a grid, against the theoretical limit (or, for the
 * one-sided series, the proven upper bound). */
struct RatePoint {
  long n;
  Real value, deviation;
  RatePoint() : value(2), deviation(2) {}
};
struct RateSeries {
  std::string which;
  Real limit;
  bool one_sided = false;
  std::vector<RatePoint> points;
  RateSeries() : limit(2) {}
};

RateSeries rate_Sn(long A, long r, const Real& q, const std::vector<long>& grid,
                   mpfr_prec_t prec = 256);
RateSeries rate_dn(const Real& q, const std::vector<long>& grid, mpfr_prec_t prec = 256);
RateSeries rate_delta(const Real& q, const std::vector<long>& grid, mpfr_prec_t prec = 256);
RateSeries rate_varphi(const Real& q, const std::vector<long>& grid, mpfr_prec_t prec = 256);
RateSeries rate_Dn(long A, long r, const Real& q, const std::vector<long>& grid,
                   mpfr_prec_t prec = 256);
RateSeries rate_phat(long A, long r, const Real& q, const std::vector<long>& grid,
                     mpfr_prec_t prec_floor = 256);

struct MobiusSums {
  Real odd_sum, even_sum;
  double max_abs_odd_prefix = 0, max_abs_even_prefix = 0;
  MobiusSums() : odd_sum(2), even_sum(2) {}
};
MobiusSums mobius_partial_sums(long n);

struct BoundResult {
  char kind;  /* 'f' or 'g' */
  long A, r;
  Real value;
  BoundResult() : kind('f'), A(0), r(0), value(2) {}
};
BoundResult bound(char kind, long r, long A, mpfr_prec_t prec = 256);
BoundResult bound_max(char kind, long A, mpfr_prec_t prec = 256);

/* dimension lower bound 1 + alpha1/alpha2 from decay rate alpha1 and growth
 * rate alpha2 of an integer linear form */
Real nesterenko_bound(const Real& alpha1, const Real& alpha2);

/* the rates assembled from the pipeline pieces for the linear form
 * D_n(q) S_n(q^2); algebraically 1 + alpha1/alpha2 equals the f-bound */
struct NesterenkoParts {
  Real alpha1, alpha2, value;
  NesterenkoParts() : alpha1(2), alpha2(2), value(2) {}
};
NesterenkoParts nesterenko_parts(long A, long r, const Real& q, mpfr_prec_t prec = 256);

}  // namespace qbeta
