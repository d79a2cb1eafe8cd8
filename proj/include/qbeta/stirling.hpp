#pragma once

#include <gmpxx.h>

namespace qbeta {

enum class StirlingKind { FirstSignless, Second };

/* Signless first kind c(s,j): (x)_s = x(x+1)...(x+s-1) = sum_j c(s,j) x^j.
 * Second kind S(s,j): set partitions of an s-set into j blocks.
 * Both memoized and thread-safe; 0 <= j, s. */
mpz_class stirling_first_signless(long s, long j);
mpz_class stirling_second(long s, long j);
mpz_class stirling(StirlingKind kind, long s, long j);

mpz_class factorial(long n);
/* Generalized binomial over Z: m any integer, l >= 0. */
mpz_class binomial_z(long m, long l);

}  // namespace qbeta
