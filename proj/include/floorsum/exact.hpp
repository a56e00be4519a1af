#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

namespace floorsum {

using BigInt = mpz_class;
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

// Integer power. 0^0 = 1; 0^e with e < 0 throws std::domain_error.
Rational pow(const Rational& base, long exponent);
BigInt pow(const BigInt& base, unsigned long exponent);

bool is_integer(const Rational& q);
// Throws std::domain_error unless q is an integer fitting in a long.
long to_long(const Rational& q);

// Element rat + irr*sqrt(5) of Q(sqrt5).
class QSqrt5 {
 public:
  QSqrt5() = default;
  QSqrt5(Rational rat, Rational irr = Rational(0));  // NOLINT(google-explicit-constructor)
  QSqrt5(long value);                                // NOLINT(google-explicit-constructor)
  QSqrt5(int value) : QSqrt5(static_cast<long>(value)) {}  // NOLINT

  static QSqrt5 sqrt5() { return QSqrt5(Rational(0), Rational(1)); }

  const Rational& rat() const { return rat_; }
  const Rational& irr() const { return irr_; }

  bool is_zero() const { return sgn(rat_) == 0 && sgn(irr_) == 0; }
  bool is_rational() const { return sgn(irr_) == 0; }
  bool is_integer() const { return is_rational() && floorsum::is_integer(rat_); }

  // Exact sign of the real number rat + irr*sqrt5.
  int sign() const;
  QSqrt5 conj() const { return QSqrt5(rat_, -irr_); }
  Rational norm() const { return rat_ * rat_ - 5 * irr_ * irr_; }
  QSqrt5 abs() const { return sign() < 0 ? -*this : *this; }
  // Throws std::domain_error on zero.
  QSqrt5 inverse() const;

  QSqrt5 operator-() const { return QSqrt5(-rat_, -irr_); }
  QSqrt5& operator+=(const QSqrt5& o);
  QSqrt5& operator-=(const QSqrt5& o);
  QSqrt5& operator*=(const QSqrt5& o);
  QSqrt5& operator/=(const QSqrt5& o);

  friend QSqrt5 operator+(QSqrt5 a, const QSqrt5& b) { return a += b; }
  friend QSqrt5 operator-(QSqrt5 a, const QSqrt5& b) { return a -= b; }
  friend QSqrt5 operator*(QSqrt5 a, const QSqrt5& b) { return a *= b; }
  friend QSqrt5 operator/(QSqrt5 a, const QSqrt5& b) { return a /= b; }
  friend bool operator==(const QSqrt5& a, const QSqrt5& b) {
    return a.rat_ == b.rat_ && a.irr_ == b.irr_;
  }
  friend std::strong_ordering operator<=>(const QSqrt5& a, const QSqrt5& b);

 private:
  void canonicalize();
  Rational rat_{0};
  Rational irr_{0};
};

QSqrt5 pow(const QSqrt5& base, long exponent);

// alpha = (1 + sqrt5)/2, beta = (1 - sqrt5)/2.
QSqrt5 alpha();
QSqrt5 beta();
QSqrt5 alpha_pow(long n);
QSqrt5 beta_pow(long n);
// 5^(e/2), with odd e landing in the irrational component.
QSqrt5 sqrt5_pow(long e);

// Lossless "a/b+c/d*sqrt5" form.
std::string to_exact_string(const QSqrt5& x);
// Compact form: "a/b", "c/d*sqrt5" or "a/b+c/d*sqrt5".
std::string to_string(const QSqrt5& x);
// Accepts the forms produced above, "sqrt5", and decimal fractions like "0.5".
QSqrt5 parse_qsqrt5(std::string_view text);

// Element re + im*i with re, im in Q(sqrt5).
class QSqrt5i {
 public:
  QSqrt5i() = default;
  QSqrt5i(QSqrt5 re, QSqrt5 im = QSqrt5()) : re_(std::move(re)), im_(std::move(im)) {}  // NOLINT
  QSqrt5i(long value) : re_(value) {}  // NOLINT
  QSqrt5i(int value) : re_(static_cast<long>(value)) {}  // NOLINT

  static QSqrt5i i() { return QSqrt5i(QSqrt5(), QSqrt5(1)); }

  const QSqrt5& re() const { return re_; }
  const QSqrt5& im() const { return im_; }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }
  QSqrt5i conj() const { return QSqrt5i(re_, -im_); }
  QSqrt5 norm() const { return re_ * re_ + im_ * im_; }
  QSqrt5i inverse() const;

  QSqrt5i operator-() const { return QSqrt5i(-re_, -im_); }
  QSqrt5i& operator+=(const QSqrt5i& o);
  QSqrt5i& operator-=(const QSqrt5i& o);
  QSqrt5i& operator*=(const QSqrt5i& o);
  QSqrt5i& operator/=(const QSqrt5i& o);

  friend QSqrt5i operator+(QSqrt5i a, const QSqrt5i& b) { return a += b; }
  friend QSqrt5i operator-(QSqrt5i a, const QSqrt5i& b) { return a -= b; }
  friend QSqrt5i operator*(QSqrt5i a, const QSqrt5i& b) { return a *= b; }
  friend QSqrt5i operator/(QSqrt5i a, const QSqrt5i& b) { return a /= b; }
  friend bool operator==(const QSqrt5i& a, const QSqrt5i& b) = default;

 private:
  QSqrt5 re_;
  QSqrt5 im_;
};

QSqrt5i pow(const QSqrt5i& base, long exponent);

inline QSqrt5 q5_mul(const QSqrt5& x, const QSqrt5& y) { return x * y; }
inline QSqrt5 q5_inv(const QSqrt5& x) { return x.inverse(); }
inline QSqrt5i q5i_mul(const QSqrt5i& x, const QSqrt5i& y) { return x * y; }
std::string to_string(const QSqrt5i& x);

}  // namespace floorsum
