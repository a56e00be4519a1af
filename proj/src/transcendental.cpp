#include "floorsum/transcendental.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace floorsum {

namespace {

using Kernel = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t);

// f(x) enclosed as f(mid) +- (lipschitz * rad + ulp).
Interval apply(const Interval& x, Kernel f, const Real& lipschitz) {
  Real mid(x.precision());
  int t = f(mid.get(), x.mid().get(), MPFR_RNDN);
  Real rad(kRadiusPrecision);
  mpfr_mul(rad.get(), lipschitz.get(), x.rad().get(), MPFR_RNDU);
  if (t != 0) mpfr_add(rad.get(), rad.get(), ulp(mid).get(), MPFR_RNDU);
  return Interval(std::move(mid), std::move(rad));
}

Real lower64(const Interval& x) {
  Real r(kRadiusPrecision);
  mpfr_sub(r.get(), x.mid().get(), x.rad().get(), MPFR_RNDD);
  return r;
}

Real upper64(const Interval& x) {
  Real r(kRadiusPrecision);
  mpfr_add(r.get(), x.mid().get(), x.rad().get(), MPFR_RNDU);
  return r;
}

// sum_{k>=0} (-1)^k / ((2k+1) x^(2k+1)) for integer x >= 2.
Interval atan_inverse(long x, mpfr_prec_t prec) {
  Rational sum(0);
  BigInt power = x;
  BigInt x2 = BigInt(x) * x;
  BigInt limit = BigInt(1) << static_cast<unsigned long>(prec + 8);
  for (long k = 0;; ++k) {
    BigInt den = power * (2 * k + 1);
    if (den > limit) {
      // Alternating with decreasing terms: the tail is bounded by this term.
      Interval r = Interval::from_rational(sum, prec);
      Real bound(kRadiusPrecision);
      mpfr_set_z(bound.get(), den.get_mpz_t(), MPFR_RNDD);
      mpfr_ui_div(bound.get(), 1, bound.get(), MPFR_RNDU);
      r.inflate(bound);
      return r;
    }
    Rational term(BigInt(1), den);
    if (k % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
    power *= x2;
  }
}

}  // namespace

Interval log(const Interval& x) {
  if (!x.is_positive()) throw std::domain_error("log of an interval not strictly positive");
  Real lip(kRadiusPrecision);
  mpfr_ui_div(lip.get(), 1, lower64(x).get(), MPFR_RNDU);
  return apply(x, mpfr_log, lip);
}

Interval exp(const Interval& x) {
  Real lip(kRadiusPrecision);
  mpfr_exp(lip.get(), upper64(x).get(), MPFR_RNDU);
  return apply(x, mpfr_exp, lip);
}

Interval sqrt(const Interval& x) {
  if (x.is_positive()) {
    Real lip(kRadiusPrecision);
    mpfr_sqrt(lip.get(), lower64(x).get(), MPFR_RNDD);
    mpfr_mul_2ui(lip.get(), lip.get(), 1, MPFR_RNDD);
    mpfr_ui_div(lip.get(), 1, lip.get(), MPFR_RNDU);
    return apply(x, mpfr_sqrt, lip);
  }
  if (x.is_negative()) throw std::domain_error("sqrt of a negative interval");
  Real hi(kRadiusPrecision);
  mpfr_sqrt(hi.get(), upper64(x).get(), MPFR_RNDU);
  return Interval::hull(Real(kRadiusPrecision), hi, x.precision());
}

Interval atan(const Interval& x) { return apply(x, mpfr_atan, Real(kRadiusPrecision, 1)); }
Interval cos(const Interval& x) { return apply(x, mpfr_cos, Real(kRadiusPrecision, 1)); }
Interval sin(const Interval& x) { return apply(x, mpfr_sin, Real(kRadiusPrecision, 1)); }

Interval nth_root(const Interval& x, unsigned long k) {
  if (k == 0) throw std::domain_error("zeroth root");
  if (!x.is_positive()) throw std::domain_error("root of an interval not strictly positive");
  if (k == 1) return x;
  // Derivative t^(1/k - 1)/k is decreasing, so its value at lower(x) bounds it.
  Real lo = lower64(x);
  Real lip(kRadiusPrecision), den(kRadiusPrecision);
  mpfr_rootn_ui(lip.get(), lo.get(), k, MPFR_RNDU);
  mpfr_mul_ui(den.get(), lo.get(), k, MPFR_RNDD);
  mpfr_div(lip.get(), lip.get(), den.get(), MPFR_RNDU);
  Real mid(x.precision());
  int t = mpfr_rootn_ui(mid.get(), x.mid().get(), k, MPFR_RNDN);
  Real rad(kRadiusPrecision);
  mpfr_mul(rad.get(), lip.get(), x.rad().get(), MPFR_RNDU);
  if (t != 0) mpfr_add(rad.get(), rad.get(), ulp(mid).get(), MPFR_RNDU);
  return Interval(std::move(mid), std::move(rad));
}

Interval mul_si(const Interval& x, long k) {
  Real mid(x.precision());
  int t = mpfr_mul_si(mid.get(), x.mid().get(), k, MPFR_RNDN);
  Real rad(kRadiusPrecision);
  mpfr_mul_ui(rad.get(), x.rad().get(), static_cast<unsigned long>(k < 0 ? -k : k), MPFR_RNDU);
  if (t != 0) mpfr_add(rad.get(), rad.get(), ulp(mid).get(), MPFR_RNDU);
  return Interval(std::move(mid), std::move(rad));
}

Interval div_ui(const Interval& x, unsigned long k) {
  if (k == 0) throw std::domain_error("division by zero");
  Real mid(x.precision());
  int t = mpfr_div_ui(mid.get(), x.mid().get(), k, MPFR_RNDN);
  Real rad(kRadiusPrecision);
  mpfr_div_ui(rad.get(), x.rad().get(), k, MPFR_RNDU);
  if (t != 0) mpfr_add(rad.get(), rad.get(), ulp(mid).get(), MPFR_RNDU);
  return Interval(std::move(mid), std::move(rad));
}

Interval pi_iv(mpfr_prec_t prec) {
  static std::mutex mutex;
  static std::map<mpfr_prec_t, Interval> cache;
  std::lock_guard lock(mutex);
  if (auto it = cache.find(prec); it != cache.end()) return it->second;
  Interval pi = mul_si(atan_inverse(5, prec), 16) - mul_si(atan_inverse(239, prec), 4);
  cache.emplace(prec, pi);
  return pi;
}

Interval pi_by_cos_zero(mpfr_prec_t prec) {
  Real lo(prec), hi(prec), m(prec), c(prec);
  mpfr_set_d(lo.get(), 1.5, MPFR_RNDN);
  mpfr_set_d(hi.get(), 1.6, MPFR_RNDN);
  // cos is decreasing here and MPFR's cos is correctly rounded, so the sign test is exact.
  for (mpfr_prec_t i = 0; i < prec + 4; ++i) {
    mpfr_add(m.get(), lo.get(), hi.get(), MPFR_RNDN);
    mpfr_div_2ui(m.get(), m.get(), 1, MPFR_RNDN);
    if (mpfr_equal_p(m.get(), lo.get()) || mpfr_equal_p(m.get(), hi.get())) break;
    mpfr_cos(c.get(), m.get(), MPFR_RNDN);
    if (mpfr_sgn(c.get()) > 0) {
      mpfr_set(lo.get(), m.get(), MPFR_RNDN);
    } else {
      mpfr_set(hi.get(), m.get(), MPFR_RNDN);
    }
  }
  return mul_si(Interval::hull(lo, hi, prec), 2);
}

Interval sqrt5_iv(mpfr_prec_t prec) { return sqrt(Interval::from_long(5, prec)); }
Interval alpha_iv(mpfr_prec_t prec) { return Interval::from_qsqrt5(alpha(), prec); }
Interval log_alpha_iv(mpfr_prec_t prec) { return log(alpha_iv(prec)); }

Interval polylog_iv(long m, const Interval& x) {
  if (m < 1) throw std::domain_error("polylog order must be >= 1");
  Real mag = x.magnitude();
  if (mpfr_cmp_d(mag.get(), kPolylogRadius) > 0)
    throw std::domain_error("polylog argument outside |x| <= 0.97");
  mpfr_prec_t prec = x.precision();
  if (m == 1) return -log(Interval::from_long(1, prec) - x);
  Real one_minus(kRadiusPrecision);
  mpfr_ui_sub(one_minus.get(), 1, mag.get(), MPFR_RNDD);
  Real target(kRadiusPrecision);
  mpfr_set_ui_2exp(target.get(), 1, -prec - 2, MPFR_RNDN);
  Interval sum(prec);
  Interval power = Interval::from_long(1, prec);
  Real mag_pow(kRadiusPrecision, 1);
  Real tail(kRadiusPrecision);
  for (unsigned long k = 1;; ++k) {
    power *= x;
    Interval term = power;
    for (long j = 0; j < m; ++j) term = div_ui(term, k);
    sum += term;
    // Tail after k terms: |x|^(k+1) / ((k+1)^m (1 - |x|)).
    mpfr_mul(mag_pow.get(), mag_pow.get(), mag.get(), MPFR_RNDU);
    mpfr_mul(tail.get(), mag_pow.get(), mag.get(), MPFR_RNDU);
    for (long j = 0; j < m; ++j) mpfr_div_ui(tail.get(), tail.get(), k + 1, MPFR_RNDU);
    mpfr_div(tail.get(), tail.get(), one_minus.get(), MPFR_RNDU);
    if (mpfr_cmp(tail.get(), target.get()) <= 0) break;
  }
  sum.inflate(tail);
  return sum;
}

Interval zeta_iv(long m, mpfr_prec_t prec, long max_terms) {
  if (m < 2) throw std::domain_error("zeta(m) requires m >= 2");
  if (max_terms < 1) throw std::domain_error("zeta: max_terms must be positive");
  static std::mutex mutex;
  static std::map<std::tuple<long, mpfr_prec_t, long>, Interval> cache;
  auto key = std::make_tuple(m, prec, max_terms);
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  // The tail sandwich has width about K^-(m+1); stop once that is below 2^-prec.
  double want = std::ldexp(1.0, static_cast<int>((prec + 2 + m) / (m + 1)));
  long terms = static_cast<long>(std::min<double>(static_cast<double>(max_terms), want));
  mpfr_prec_t work = std::min<mpfr_prec_t>(prec + 32, 192);
  Real lo(work), hi(work), t(work);
  for (long n = terms; n >= 1; --n) {  // smallest terms first
    mpfr_ui_pow_ui(t.get(), static_cast<unsigned long>(n), static_cast<unsigned long>(m), MPFR_RNDU);
    mpfr_ui_div(t.get(), 1, t.get(), MPFR_RNDD);
    mpfr_add(lo.get(), lo.get(), t.get(), MPFR_RNDD);
    mpfr_ui_pow_ui(t.get(), static_cast<unsigned long>(n), static_cast<unsigned long>(m), MPFR_RNDD);
    mpfr_ui_div(t.get(), 1, t.get(), MPFR_RNDU);
    mpfr_add(hi.get(), hi.get(), t.get(), MPFR_RNDU);
  }
  const auto k1 = static_cast<unsigned long>(terms + 1);
  const auto mu = static_cast<unsigned long>(m);
  // t^-m is convex: trapezoid sums overestimate and midpoint sums underestimate the integral, so
  // (K+1)^(1-m)/(m-1) + (K+1)^-m/2 <= tail <= (K+1/2)^(1-m)/(m-1).
  mpfr_ui_pow_ui(t.get(), k1, mu - 1, MPFR_RNDU);
  mpfr_mul_ui(t.get(), t.get(), mu - 1, MPFR_RNDU);
  mpfr_ui_div(t.get(), 1, t.get(), MPFR_RNDD);
  mpfr_add(lo.get(), lo.get(), t.get(), MPFR_RNDD);
  mpfr_ui_pow_ui(t.get(), k1, mu, MPFR_RNDU);
  mpfr_mul_2ui(t.get(), t.get(), 1, MPFR_RNDU);
  mpfr_ui_div(t.get(), 1, t.get(), MPFR_RNDD);
  mpfr_add(lo.get(), lo.get(), t.get(), MPFR_RNDD);
  mpfr_ui_pow_ui(t.get(), 2 * static_cast<unsigned long>(terms) + 1, mu - 1, MPFR_RNDD);
  mpfr_mul_ui(t.get(), t.get(), mu - 1, MPFR_RNDD);
  mpfr_ui_div(t.get(), 1, t.get(), MPFR_RNDU);
  mpfr_mul_2ui(t.get(), t.get(), mu - 1, MPFR_RNDU);
  mpfr_add(hi.get(), hi.get(), t.get(), MPFR_RNDU);
  Interval result = Interval::hull(lo, hi, prec);
  std::lock_guard lock(mutex);
  cache.emplace(key, result);
  return result;
}

Interval zeta3_iv(mpfr_prec_t prec) {
  mpfr_prec_t work = prec + 32;
  Interval half = Interval::from_rational(make_rational(1, 2), work);
  Interval li3 = polylog_iv(3, half);
  Interval l2 = log(Interval::from_long(2, work));
  Interval pi = pi_iv(work);
  Interval inner = li3 - div_ui(pow(l2, 3), 6) + div_ui(pi * pi * l2, 12);
  Interval z = div_ui(mul_si(inner, 8), 7);
  Interval out(prec);
  out += z;
  return out;
}

}  // namespace floorsum
