#pragma once

#include "floorsum/exact.hpp"

#include <mpfr.h>

#include <string>

namespace floorsum {

constexpr mpfr_prec_t kDefaultPrecision = 256;
constexpr mpfr_prec_t kRadiusPrecision = 64;

// kDefaultPrecision unless FLOORSUM_PRECISION holds a valid bit count.
mpfr_prec_t default_precision();

// Owning wrapper around mpfr_t.
class Real {
 public:
  explicit Real(mpfr_prec_t prec = kRadiusPrecision);
  Real(mpfr_prec_t prec, long value);
  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  mpfr_ptr get() { return value_; }
  mpfr_srcptr get() const { return value_; }
  mpfr_prec_t precision() const { return mpfr_get_prec(value_); }
  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  bool is_finite() const { return mpfr_number_p(value_) != 0; }
  // Scientific notation with `digits` significant digits.
  std::string to_string(int digits, mpfr_rnd_t rnd = MPFR_RNDN) const;

  static Real from_string(const std::string& text, mpfr_prec_t prec, mpfr_rnd_t rnd);
  static Real infinity(mpfr_prec_t prec = kRadiusPrecision);

 private:
  mpfr_t value_;
};

// Midpoint-radius enclosure: the true value lies in [mid - rad, mid + rad].
class Interval {
 public:
  explicit Interval(mpfr_prec_t prec = default_precision());
  Interval(Real mid, Real rad);

  static Interval from_long(long v, mpfr_prec_t prec = default_precision());
  static Interval from_rational(const Rational& q, mpfr_prec_t prec = default_precision());
  static Interval from_qsqrt5(const QSqrt5& x, mpfr_prec_t prec = default_precision());
  // Enclosure of [lo, hi].
  static Interval hull(const Real& lo, const Real& hi, mpfr_prec_t prec);
  // [-bound, bound].
  static Interval symmetric(const Real& bound, mpfr_prec_t prec);

  const Real& mid() const { return mid_; }
  const Real& rad() const { return rad_; }
  mpfr_prec_t precision() const { return mid_.precision(); }

  Real lower() const;
  Real upper() const;
  // Upper bound of |x| over the interval.
  Real magnitude() const;
  // Lower bound of |x| over the interval (0 when it straddles zero).
  Real mignitude() const;

  bool contains_zero() const;
  bool is_positive() const;
  bool is_negative() const;
  bool contains(const Interval& other) const;
  bool contains(const Rational& q) const;
  bool overlaps(const Interval& other) const;

  // rad += extra, rounded up.
  void inflate(const Real& extra);

  Interval operator-() const;
  Interval& operator+=(const Interval& o);
  Interval& operator-=(const Interval& o);
  Interval& operator*=(const Interval& o);
  // Throws std::domain_error when the divisor contains zero.
  Interval& operator/=(const Interval& o);

  friend Interval operator+(Interval a, const Interval& b) { return a += b; }
  friend Interval operator-(Interval a, const Interval& b) { return a -= b; }
  friend Interval operator*(Interval a, const Interval& b) { return a *= b; }
  friend Interval operator/(Interval a, const Interval& b) { return a /= b; }

 private:
  Real mid_;
  Real rad_;
};

inline Interval q5_embed(const QSqrt5& x, mpfr_prec_t prec = default_precision()) {
  return Interval::from_qsqrt5(x, prec);
}

Interval abs(const Interval& x);
Interval pow(const Interval& x, long n);

// |a.mid - b.mid| rounded up.
Real midpoint_gap(const Interval& a, const Interval& b);

// One unit in the last place of x at its precision; zero for x == 0.
Real ulp(const Real& x);

}  // namespace floorsum
