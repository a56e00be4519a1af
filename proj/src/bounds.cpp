#include "floorsum/bounds.hpp"

namespace floorsum {

Real real_up(const Rational& q, mpfr_prec_t prec) {
  Real r(prec);
  mpfr_set_q(r.get(), q.get_mpq_t(), MPFR_RNDU);
  return r;
}

Real real_down(const Rational& q, mpfr_prec_t prec) {
  Real r(prec);
  mpfr_set_q(r.get(), q.get_mpq_t(), MPFR_RNDD);
  return r;
}

Real add_up(const Real& a, const Real& b) {
  Real r(std::max(a.precision(), b.precision()));
  mpfr_add(r.get(), a.get(), b.get(), MPFR_RNDU);
  return r;
}

Real mul_up(const Real& a, const Real& b) {
  Real r(std::max(a.precision(), b.precision()));
  mpfr_mul(r.get(), a.get(), b.get(), MPFR_RNDU);
  return r;
}

Real max_real(const Real& a, const Real& b) { return mpfr_cmp(a.get(), b.get()) >= 0 ? a : b; }

bool less(const Real& a, const Real& b) { return mpfr_less_p(a.get(), b.get()) != 0; }
bool less_equal(const Real& a, const Real& b) { return mpfr_lessequal_p(a.get(), b.get()) != 0; }

Real geometric_majorant(const Real& c, long d, const Real& r, long n) {
  if (n < 0) n = 0;
  if (c.is_zero() || r.is_zero()) return Real(kRadiusPrecision);
  const mpfr_prec_t p = kRadiusPrecision;
  // rho = ((N+2)/(N+1))^d r for d > 0; the ratio never exceeds r when d <= 0.
  Real rho(p), t(p);
  if (d > 0) {
    mpfr_set_si(rho.get(), n + 2, MPFR_RNDU);
    mpfr_div_si(rho.get(), rho.get(), n + 1, MPFR_RNDU);
    mpfr_pow_si(rho.get(), rho.get(), d, MPFR_RNDU);
    mpfr_mul(rho.get(), rho.get(), r.get(), MPFR_RNDU);
  } else {
    mpfr_set(rho.get(), r.get(), MPFR_RNDU);
  }
  if (mpfr_cmp_si(rho.get(), 1) >= 0) return Real::infinity();
  // first = C (N+1)^d r^(N+1)
  Real first(p);
  mpfr_set_si(first.get(), n + 1, MPFR_RNDU);
  mpfr_pow_si(first.get(), first.get(), d, MPFR_RNDU);  // (N+1)^d, also fine for d <= 0
  mpfr_pow_ui(t.get(), r.get(), static_cast<unsigned long>(n + 1), MPFR_RNDU);
  mpfr_mul(first.get(), first.get(), t.get(), MPFR_RNDU);
  mpfr_mul(first.get(), first.get(), c.get(), MPFR_RNDU);
  mpfr_si_sub(t.get(), 1, rho.get(), MPFR_RNDD);
  mpfr_div(first.get(), first.get(), t.get(), MPFR_RNDU);
  return first;
}

Real power_majorant(const Real& c, long d, long n) {
  if (d < 2 || n < 1) return Real::infinity();
  const mpfr_prec_t p = kRadiusPrecision;
  Real out(p), t(p);
  mpfr_set_si(t.get(), n, MPFR_RNDD);
  mpfr_pow_si(t.get(), t.get(), d - 1, MPFR_RNDD);
  mpfr_mul_si(t.get(), t.get(), d - 1, MPFR_RNDD);
  mpfr_div(out.get(), c.get(), t.get(), MPFR_RNDU);
  return out;
}

}  // namespace floorsum
