#include "floorsum/interval.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace floorsum {

mpfr_prec_t default_precision() {
  static const mpfr_prec_t prec = [] {
    const char* env = std::getenv("FLOORSUM_PRECISION");
    if (env == nullptr) return kDefaultPrecision;
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 64 || v > 1 << 20) return kDefaultPrecision;
    return static_cast<mpfr_prec_t>(v);
  }();
  return prec;
}

// ---- Real ----

Real::Real(mpfr_prec_t prec) {
  mpfr_init2(value_, prec);
  mpfr_set_zero(value_, 1);
}

Real::Real(mpfr_prec_t prec, long value) {
  mpfr_init2(value_, prec);
  mpfr_set_si(value_, value, MPFR_RNDN);
}

Real::Real(const Real& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

Real::~Real() { mpfr_clear(value_); }

std::string Real::to_string(int digits, mpfr_rnd_t rnd) const {
  char* buf = nullptr;
  if (mpfr_asprintf(&buf, "%.*R*e", digits - 1, rnd, value_) < 0)
    throw std::runtime_error("mpfr_asprintf failed");
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

Real Real::from_string(const std::string& text, mpfr_prec_t prec, mpfr_rnd_t rnd) {
  Real r(prec);
  if (mpfr_set_str(r.get(), text.c_str(), 10, rnd) != 0)
    throw std::invalid_argument("not a decimal number: " + text);
  return r;
}

Real Real::infinity(mpfr_prec_t prec) {
  Real r(prec);
  mpfr_set_inf(r.get(), 1);
  return r;
}

Real ulp(const Real& x) {
  Real u(kRadiusPrecision);
  if (mpfr_zero_p(x.get()) || !mpfr_number_p(x.get())) return u;
  mpfr_set_ui_2exp(u.get(), 1, mpfr_get_exp(x.get()) - x.precision(), MPFR_RNDU);
  return u;
}

// ---- Interval ----

namespace {

Real abs_up(const Real& x) {
  Real r(kRadiusPrecision);
  mpfr_abs(r.get(), x.get(), MPFR_RNDU);
  return r;
}

void add_up(Real& acc, const Real& x) { mpfr_add(acc.get(), acc.get(), x.get(), MPFR_RNDU); }

}  // namespace

Interval::Interval(mpfr_prec_t prec) : mid_(prec), rad_(kRadiusPrecision) {}

Interval::Interval(Real mid, Real rad) : mid_(std::move(mid)), rad_(kRadiusPrecision) {
  mpfr_set(rad_.get(), rad.get(), MPFR_RNDU);
}

Interval Interval::from_long(long v, mpfr_prec_t prec) {
  Interval r(prec);
  if (mpfr_set_si(r.mid_.get(), v, MPFR_RNDN) != 0) r.rad_ = ulp(r.mid_);
  return r;
}

Interval Interval::from_rational(const Rational& q, mpfr_prec_t prec) {
  Interval r(prec);
  if (mpfr_set_q(r.mid_.get(), q.get_mpq_t(), MPFR_RNDN) != 0) r.rad_ = ulp(r.mid_);
  return r;
}

Interval Interval::from_qsqrt5(const QSqrt5& x, mpfr_prec_t prec) {
  if (x.is_rational()) return from_rational(x.rat(), prec);
  // rat + irr*sqrt5 may cancel heavily; raise the working precision until the
  // accumulated error is far below the final rounding.
  for (mpfr_prec_t work = prec + 32;; work *= 2) {
    Real s(work), t(work), u(work);
    mpfr_sqrt_ui(s.get(), 5, MPFR_RNDN);
    mpfr_mul_q(t.get(), s.get(), x.irr().get_mpq_t(), MPFR_RNDN);
    mpfr_add_q(u.get(), t.get(), x.rat().get_mpq_t(), MPFR_RNDN);
    Real err(kRadiusPrecision);
    Real irr_mag(kRadiusPrecision);
    mpfr_set_q(irr_mag.get(), x.irr().get_mpq_t(), MPFR_RNDU);
    mpfr_abs(irr_mag.get(), irr_mag.get(), MPFR_RNDU);
    mpfr_mul(err.get(), irr_mag.get(), ulp(s).get(), MPFR_RNDU);
    add_up(err, ulp(t));
    add_up(err, ulp(u));
    Real budget(kRadiusPrecision);
    mpfr_abs(budget.get(), u.get(), MPFR_RNDD);
    mpfr_div_2si(budget.get(), budget.get(), prec + 4, MPFR_RNDD);
    if (mpfr_zero_p(u.get()) || mpfr_cmp(err.get(), budget.get()) > 0) continue;
    Interval r(prec);
    if (mpfr_set(r.mid_.get(), u.get(), MPFR_RNDN) != 0) {
      r.rad_ = ulp(r.mid_);
      mpfr_div_2ui(r.rad_.get(), r.rad_.get(), 1, MPFR_RNDU);
    }
    add_up(r.rad_, err);
    return r;
  }
}

Interval Interval::hull(const Real& lo, const Real& hi, mpfr_prec_t prec) {
  if (mpfr_cmp(lo.get(), hi.get()) > 0) throw std::invalid_argument("hull: lo > hi");
  Interval r(prec);
  mpfr_add(r.mid_.get(), lo.get(), hi.get(), MPFR_RNDN);
  mpfr_div_2ui(r.mid_.get(), r.mid_.get(), 1, MPFR_RNDN);
  Real a(kRadiusPrecision), b(kRadiusPrecision);
  mpfr_sub(a.get(), hi.get(), r.mid_.get(), MPFR_RNDU);
  mpfr_sub(b.get(), r.mid_.get(), lo.get(), MPFR_RNDU);
  mpfr_max(r.rad_.get(), a.get(), b.get(), MPFR_RNDU);
  return r;
}

Interval Interval::symmetric(const Real& bound, mpfr_prec_t prec) {
  Interval r(prec);
  mpfr_abs(r.rad_.get(), bound.get(), MPFR_RNDU);
  return r;
}

Real Interval::lower() const {
  Real r(precision());
  mpfr_sub(r.get(), mid_.get(), rad_.get(), MPFR_RNDD);
  return r;
}

Real Interval::upper() const {
  Real r(precision());
  mpfr_add(r.get(), mid_.get(), rad_.get(), MPFR_RNDU);
  return r;
}

Real Interval::magnitude() const {
  Real r = abs_up(mid_);
  add_up(r, rad_);
  return r;
}

Real Interval::mignitude() const {
  Real r(kRadiusPrecision);
  Real m(precision());
  mpfr_abs(m.get(), mid_.get(), MPFR_RNDN);
  mpfr_sub(r.get(), m.get(), rad_.get(), MPFR_RNDD);
  if (mpfr_sgn(r.get()) < 0) mpfr_set_zero(r.get(), 1);
  return r;
}

bool Interval::contains_zero() const { return mpfr_cmpabs(mid_.get(), rad_.get()) <= 0; }
bool Interval::is_positive() const { return mpfr_cmp(mid_.get(), rad_.get()) > 0; }
bool Interval::is_negative() const {
  return mpfr_sgn(mid_.get()) < 0 && mpfr_cmpabs(mid_.get(), rad_.get()) > 0;
}

bool Interval::contains(const Interval& other) const {
  Real d = midpoint_gap(*this, other);
  add_up(d, other.rad_);
  return mpfr_cmp(d.get(), rad_.get()) <= 0;
}

bool Interval::contains(const Rational& q) const {
  Real d(kRadiusPrecision);
  Real diff(precision() + 64);
  mpfr_sub_q(diff.get(), mid_.get(), q.get_mpq_t(), MPFR_RNDN);
  mpfr_abs(d.get(), diff.get(), MPFR_RNDU);
  add_up(d, ulp(diff));
  return mpfr_cmp(d.get(), rad_.get()) <= 0;
}

bool Interval::overlaps(const Interval& other) const {
  Real d = midpoint_gap(*this, other);
  Real s = rad_;
  add_up(s, other.rad_);
  return mpfr_cmp(d.get(), s.get()) <= 0;
}

void Interval::inflate(const Real& extra) {
  Real e = abs_up(extra);
  add_up(rad_, e);
}

Interval Interval::operator-() const {
  Interval r = *this;
  mpfr_neg(r.mid_.get(), r.mid_.get(), MPFR_RNDN);
  return r;
}

Interval& Interval::operator+=(const Interval& o) {
  int t = mpfr_add(mid_.get(), mid_.get(), o.mid_.get(), MPFR_RNDN);
  add_up(rad_, o.rad_);
  if (t != 0) add_up(rad_, ulp(mid_));
  return *this;
}

Interval& Interval::operator-=(const Interval& o) {
  int t = mpfr_sub(mid_.get(), mid_.get(), o.mid_.get(), MPFR_RNDN);
  add_up(rad_, o.rad_);
  if (t != 0) add_up(rad_, ulp(mid_));
  return *this;
}

Interval& Interval::operator*=(const Interval& o) {
  Real am = abs_up(mid_), bm = abs_up(o.mid_);
  Real r(kRadiusPrecision), t1(kRadiusPrecision);
  mpfr_mul(r.get(), am.get(), o.rad_.get(), MPFR_RNDU);
  mpfr_mul(t1.get(), bm.get(), rad_.get(), MPFR_RNDU);
  add_up(r, t1);
  mpfr_mul(t1.get(), rad_.get(), o.rad_.get(), MPFR_RNDU);
  add_up(r, t1);
  int t = mpfr_mul(mid_.get(), mid_.get(), o.mid_.get(), MPFR_RNDN);
  if (t != 0) add_up(r, ulp(mid_));
  rad_ = std::move(r);
  return *this;
}

Interval& Interval::operator/=(const Interval& o) {
  if (o.contains_zero()) throw std::domain_error("interval division by an interval containing zero");
  Real den = o.mignitude();
  Real ar = rad_;
  int t = mpfr_div(mid_.get(), mid_.get(), o.mid_.get(), MPFR_RNDN);
  // |a/b - am/bm| <= (ar + |am/bm| br) / (|bm| - br), with |am/bm| <= |q| + ulp(q).
  Real qa = abs_up(mid_);
  Real u = ulp(mid_);
  add_up(qa, u);
  Real num(kRadiusPrecision);
  mpfr_mul(num.get(), qa.get(), o.rad_.get(), MPFR_RNDU);
  add_up(num, ar);
  mpfr_div(rad_.get(), num.get(), den.get(), MPFR_RNDU);
  if (t != 0) add_up(rad_, u);
  return *this;
}

Interval abs(const Interval& x) {
  if (!x.contains_zero()) return x.is_negative() ? -x : x;
  Real zero(kRadiusPrecision);
  return Interval::hull(zero, x.magnitude(), x.precision());
}

Interval pow(const Interval& x, long n) {
  if (n < 0) return Interval::from_long(1, x.precision()) / pow(x, -n);
  Interval result = Interval::from_long(1, x.precision());
  Interval base = x;
  while (n > 0) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n > 0) base *= base;
  }
  return result;
}

Real midpoint_gap(const Interval& a, const Interval& b) {
  Real d(kRadiusPrecision);
  if (mpfr_cmp(a.mid().get(), b.mid().get()) >= 0) {
    mpfr_sub(d.get(), a.mid().get(), b.mid().get(), MPFR_RNDU);
  } else {
    mpfr_sub(d.get(), b.mid().get(), a.mid().get(), MPFR_RNDU);
  }
  return d;
}

}  // namespace floorsum
