#include "qbeta/stirling.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace qbeta {

namespace {

std::mutex g_mutex;
/* row s holds c(s,0..s) resp. S(s,0..s) */
std::vector<std::vector<mpz_class>> g_first{{1}};
std::vector<std::vector<mpz_class>> g_second{{1}};

void grow_first(long s) {
  while (static_cast<long>(g_first.size()) <= s) {
    long m = static_cast<long>(g_first.size());
    const auto& prev = g_first.back();
    std::vector<mpz_class> row(m + 1);
    /* c(m,j) = c(m-1,j-1) + (m-1) c(m-1,j) */
    for (long j = 0; j <= m; ++j) {
      mpz_class v = 0;
      if (j >= 1) v += prev[j - 1];
      if (j <= m - 1) v += (m - 1) * prev[j];
      row[j] = v;
    }
    g_first.push_back(std::move(row));
  }
}

void grow_second(long s) {
  while (static_cast<long>(g_second.size()) <= s) {
    long m = static_cast<long>(g_second.size());
    const auto& prev = g_second.back();
    std::vector<mpz_class> row(m + 1);
    /* S(m,j) = S(m-1,j-1) + j S(m-1,j) */
    for (long j = 0; j <= m; ++j) {
      mpz_class v = 0;
      if (j >= 1) v += prev[j - 1];
      if (j <= m - 1) v += j * prev[j];
      row[j] = v;
    }
    g_second.push_back(std::move(row));
  }
}

}  // namespace

mpz_class stirling_first_signless(long s, long j) {
  if (s < 0 || j < 0) throw std::invalid_argument("stirling: nonnegative indices required");
  if (j > s) return 0;
  std::lock_guard<std::mutex> lock(g_mutex);
  grow_first(s);
  return g_first[s][j];
}

mpz_class stirling_second(long s, long j) {
  if (s < 0 || j < 0) throw std::invalid_argument("stirling: nonnegative indices required");
  if (j > s) return 0;
  std::lock_guard<std::mutex> lock(g_mutex);
  grow_second(s);
  return g_second[s][j];
}

mpz_class stirling(StirlingKind kind, long s, long j) {
  if (s < 1 || j < 1 || j > s) throw std::domain_error("stirling: 1 <= j <= s required");
  return kind == StirlingKind::FirstSignless ? stirling_first_signless(s, j)
                                             : stirling_second(s, j);
}

mpz_class factorial(long n) {
  if (n < 0) throw std::invalid_argument("factorial: n >= 0 required");
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

mpz_class binomial_z(long m, long l) {
  if (l < 0) throw std::invalid_argument("binomial_z: l >= 0 required");
  mpz_class num = 1;
  for (long i = 0; i < l; ++i) num *= (m - i);
  mpz_class r = num / factorial(l);
  return r;
}

}  // namespace qbeta
