#pragma once

#include <map>
#include <vector>

#include "qbeta/laurent.hpp"

namespace qbeta {

/* t-th cyclotomic polynomial, monic over Z.  Memoized, thread-safe. */
const LaurentPoly& cyclotomic(long t);

int mobius(long n);
long totient(long n);
std::vector<long> divisors(long n);

/* prod_{t=1}^{n} phi_t  (equals the monic expansion of prod (x^t - 1) with
 * repetitions removed; degree = sum of totients) */
LaurentPoly dn_poly(long n);
/* prod over odd t, 1 <= t <= 2n-1, of phi_t */
LaurentPoly delta_poly(long n);
/* prod_{k=1}^{n} phi_{2k}^{floor(n/k)} */
LaurentPoly varphi_poly(long n);

/* The same three products as cyclotomic-index -> exponent maps. */
std::map<long, long> dn_factors(long n);
std::map<long, long> delta_factors(long n);
std::map<long, long> varphi_factors(long n);

LaurentPoly expand_factors(const std::map<long, long>& f);

/* Largest k with phi_t^k dividing p (monomial units ignored).  p != 0. */
long ord_cyclotomic(const LaurentPoly& p, long t);

/* (q^m; q)_k = prod_{i=0}^{k-1} (1 - q^{m+i});  k >= 0.  Zero iff the
 * exponent range contains 0. */
LaurentPoly poch_poly(long m, long k);

/* Gaussian binomial [n choose k]_q; 0 <= k <= n. */
LaurentPoly q_binomial(long n, long k);

}  // namespace qbeta
