#include "qbeta/denominators.hpp"

#include <stdexcept>

#include "qbeta/cyclotomic.hpp"
#include "qbeta/stirling.hpp"

namespace qbeta {

DenomSpec DenomSpec::defaults(long A, long r) {
  DenomSpec s;
  s.A = A;
  s.r = r;
  s.alpha = mpq_class(-(A + 4 * r * r), 4);
  s.alpha.canonicalize();
  s.beta = mpq_class(4 * r - 3 * A + 1, 2);
  s.beta.canonicalize();
  s.gamma = mpq_class(2 * A * A - 5 * A - 1, 2 * A);
  s.gamma.canonicalize();
  return s;
}

long DenomSpec::floor_exponent(long n) const {
  mpq_class v = alpha * n * n + beta * n + gamma;
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), v.get_num().get_mpz_t(), v.get_den().get_mpz_t());
  return f.get_si();
}

namespace {

LaurentPoly dn_product(const DenomSpec& spec, long n, bool with_delta) {
  if (n < 1 || n % 2 == 0) throw std::domain_error("n must be an odd positive integer");
  std::map<long, long> fm;
  for (const auto& [t, e] : varphi_factors(n)) fm[t] += 2 * spec.r * e;
  for (const auto& [t, e] : dn_factors(2 * n)) fm[t] += (spec.A - 1) * e;
  if (with_delta)
    for (const auto& [t, e] : delta_factors(n)) fm[t] += e;
  LaurentPoly p = expand_factors(fm).subst_pow(-1);
  p.shift(spec.floor_exponent(n));
  p.mul_scalar(mpq_class(factorial(spec.A - 1)));
  return p;
}

}  // namespace

LaurentPoly build_Dn(const DenomSpec& spec, long n) { return dn_product(spec, n, true); }

LaurentPoly build_Dn_tilde(const DenomSpec& spec, long n) { return dn_product(spec, n, false); }

namespace {

MembershipReport membership(const RatFunc& f, bool require_nonpos_exponents) {
  MembershipReport rep;
  rep.unit_denominator = f.den_factors().empty();
  rep.max_exponent = f.num().is_zero() ? 0 : f.num().max_exp();
  rep.exponents_ok = !require_nonpos_exponents || rep.max_exponent <= 0;
  rep.integer_coeffs = f.num().integer_coeffs();
  if (!rep.integer_coeffs) rep.first_bad_coeff = f.num().first_non_integer();
  if (rep.member()) rep.witness = f.num();
  return rep;
}

}  // namespace

MembershipReport membership_z_inv_q(const RatFunc& f) { return membership(f, true); }

MembershipReport membership_z_laurent(const RatFunc& f) { return membership(f, false); }

bool IntegralityResult::all_member() const {
  for (const auto& [j, rep] : per_j)
    if (!rep.member()) return false;
  return true;
}

IntegralityResult check_integrality(const LinearFormBundle& b, const LaurentPoly& denom) {
  IntegralityResult res;
  auto run = [&denom](const RatFunc& phat) {
    RatFunc f = phat;
    f.mul_poly(denom);
    return membership_z_inv_q(f);
  };
  res.per_j[0] = run(b.phat0);
  for (const auto& [j, f] : b.phat) res.per_j[j] = run(f);

  if (!res.all_member()) {
    long need = 0;
    bool shift_only = true;
    for (const auto& [j, rep] : res.per_j) {
      if (rep.member()) continue;
      if (!rep.unit_denominator || !rep.integer_coeffs) shift_only = false;
      need = std::max(need, rep.max_exponent);
    }
    if (shift_only && need >= 1 && need <= b.p.A) res.gamma_fix_delta = need;
  }
  return res;
}

std::vector<CsjReport> check_csj_denominator(const PfcTable& t) {
  const long n = t.p.n, A = t.p.A;
  LaurentPoly vph2r(1L);
  {
    LaurentPoly v = varphi_poly(n).subst_pow(-1);
    for (long i = 0; i < 2 * t.p.r; ++i) vph2r *= v;
  }
  std::vector<LaurentPoly> dpow(A);
  dpow[0] = LaurentPoly(1L);
  {
    LaurentPoly d2 = dn_poly(n).subst_pow(-2);
    for (long e = 1; e < A; ++e) dpow[e] = dpow[e - 1] * d2;
  }
  std::vector<CsjReport> out;
  out.reserve(A * (n + 1));
  for (long s = 1; s <= A; ++s)
    for (long j = 0; j <= n; ++j) {
      RatFunc f = t.c[s][j];
      f.mul_poly(vph2r);
      f.mul_poly(dpow[A - s]);
      out.push_back({s, j, membership_z_laurent(f)});
    }
  return out;
}

WnResult wn_lemma_check(long e, long n) {
  if (e < 1 || e % 2 == 0) throw std::domain_error("e must be an odd positive integer");
  if (n < 1) throw std::domain_error("n must be a positive integer");
  LaurentPoly num = varphi_poly(n);
  LaurentPoly den(1L);
  for (long i = 1; i <= n; ++i) {
    num *= LaurentPoly(1L) - LaurentPoly::monomial(1, e + 2 * i);
    den *= LaurentPoly(1L) - LaurentPoly::monomial(1, 2 * i);
  }
  WnResult res;
  auto quot = num.divexact(den);
  if (quot) {
    res.ok = quot->integer_coeffs();
    res.witness = std::move(*quot);
  }
  return res;
}

bool ConjectureCell::all_integral() const {
  for (const auto& [j, rep] : per_j)
    if (!rep.member()) return false;
  return true;
}

ConjectureCell conjecture_cell(const LinearFormBundle& b) {
  ConjectureCell cell;
  cell.p = b.p;
  const LaurentPoly dt = build_Dn_tilde(DenomSpec::defaults(b.p.A, b.p.r), b.p.n);
  auto run = [&dt](const RatFunc& phat) {
    RatFunc f = phat;
    f.mul_poly(dt);
    return membership_z_inv_q(f);
  };
  cell.per_j[0] = run(b.phat0);
  for (const auto& [j, f] : b.phat) cell.per_j[j] = run(f);
  for (const auto& [j, rep] : cell.per_j) {
    if (rep.unit_denominator && rep.integer_coeffs)
      cell.minimal_shift[j] = std::max(0L, rep.max_exponent);
    else
      cell.minimal_shift[j] = std::nullopt;
  }
  return cell;
}

std::vector<ConjectureCell> conjecture_scan(const std::vector<FormParams>& grid) {
  std::vector<ConjectureCell> out;
  out.reserve(grid.size());
  for (const FormParams& p : grid) out.push_back(conjecture_cell(build_bundle(p)));
  return out;
}

}  // namespace qbeta
