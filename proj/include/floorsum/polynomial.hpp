#pragma once

#include <algorithm>
#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

namespace floorsum {

// Dense univariate polynomial over a field T (Rational, QSqrt5 or QSqrt5i).
// Trailing zero coefficients are trimmed, so the zero polynomial is empty.
template <class T>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }
  Polynomial(T constant) : c_{std::move(constant)} { trim(); }  // NOLINT(google-explicit-constructor)
  Polynomial(long constant) : Polynomial(T(constant)) {}        // NOLINT(google-explicit-constructor)
  Polynomial(int constant) : Polynomial(T(static_cast<long>(constant))) {}  // NOLINT

  static Polynomial monomial(T coef, long degree) {
    std::vector<T> c(static_cast<std::size_t>(degree) + 1, T(0L));
    c.back() = std::move(coef);
    return Polynomial(std::move(c));
  }
  static Polynomial z() { return monomial(T(1L), 1); }
  static Polynomial from(std::initializer_list<long> coeffs) {
    std::vector<T> c;
    for (long x : coeffs) c.emplace_back(x);
    return Polynomial(std::move(c));
  }

  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<T>& coeffs() const { return c_; }
  T coeff(long i) const {
    return (i < 0 || i >= static_cast<long>(c_.size())) ? T(0L) : c_[static_cast<std::size_t>(i)];
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0L));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0L));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<T> c(a.c_.size() + b.c_.size() - 1, T(0L));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == T(0L)) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(c));
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  Polynomial scaled(const T& s) const {
    Polynomial r = *this;
    for (auto& x : r.c_) x *= s;
    r.trim();
    return r;
  }

  Polynomial pow(unsigned long e) const {
    Polynomial result(T(1L)), base = *this;
    while (e > 0) {
      if (e & 1) result = result * base;
      e >>= 1;
      if (e > 0) base = base * base;
    }
    return result;
  }

  // p(c z^k) for k >= 1.
  Polynomial compose_monomial(const T& c, long k) const {
    if (k < 1) throw std::invalid_argument("compose_monomial: k must be >= 1");
    if (is_zero()) return Polynomial();
    std::vector<T> out(static_cast<std::size_t>(degree() * k) + 1, T(0L));
    T cp(1L);
    for (std::size_t i = 0; i < c_.size(); ++i) {
      out[i * static_cast<std::size_t>(k)] = c_[i] * cp;
      cp *= c;
    }
    return Polynomial(std::move(out));
  }

  T evaluate(const T& x) const {
    T acc(0L);
    for (std::size_t i = c_.size(); i-- > 0;) {
      acc *= x;
      acc += c_[i];
    }
    return acc;
  }

  Polynomial derivative() const {
    if (c_.size() <= 1) return Polynomial();
    std::vector<T> out(c_.size() - 1, T(0L));
    for (std::size_t i = 1; i < c_.size(); ++i) out[i - 1] = c_[i] * T(static_cast<long>(i));
    return Polynomial(std::move(out));
  }

  // q(t) = p(a + t).
  Polynomial taylor_shift(const T& a) const {
    Polynomial result, shift = Polynomial(std::vector<T>{a, T(1L)});
    for (std::size_t i = c_.size(); i-- > 0;) result = result * shift + Polynomial(c_[i]);
    return result;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == T(0L)) c_.pop_back();
  }
  std::vector<T> c_;
};

// Coefficients c_0..c_N of a formal power series.
template <class T>
class TruncatedSeries {
 public:
  TruncatedSeries() = default;
  explicit TruncatedSeries(long order) : c_(static_cast<std::size_t>(order) + 1, T(0L)) {
    if (order < 0) throw std::invalid_argument("series order must be >= 0");
  }
  explicit TruncatedSeries(std::vector<T> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) throw std::invalid_argument("series needs at least one coefficient");
  }

  long order() const { return static_cast<long>(c_.size()) - 1; }
  const T& operator[](long n) const { return c_.at(static_cast<std::size_t>(n)); }
  T& operator[](long n) { return c_.at(static_cast<std::size_t>(n)); }
  const std::vector<T>& coeffs() const { return c_; }

  TruncatedSeries truncated(long order) const {
    if (order > this->order()) throw std::invalid_argument("cannot extend a truncated series");
    return TruncatedSeries(std::vector<T>(c_.begin(), c_.begin() + order + 1));
  }

  TruncatedSeries& operator+=(const TruncatedSeries& o) {
    check_order(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  TruncatedSeries& operator-=(const TruncatedSeries& o) {
    check_order(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    a.check_order(b);
    TruncatedSeries r(a.order());
    for (long i = 0; i <= a.order(); ++i) {
      if (a[i] == T(0L)) continue;
      for (long j = 0; i + j <= a.order(); ++j) r[i + j] += a[i] * b[j];
    }
    return r;
  }
  TruncatedSeries scaled(const T& s) const {
    TruncatedSeries r = *this;
    for (auto& x : r.c_) x *= s;
    return r;
  }
  // Polynomial times series, truncated to this order.
  TruncatedSeries multiplied(const Polynomial<T>& p) const {
    TruncatedSeries r(order());
    for (long i = 0; i <= p.degree(); ++i) {
      const T pi = p.coeff(i);
      if (pi == T(0L)) continue;
      for (long j = 0; i + j <= order(); ++j) r[i + j] += pi * (*this)[j];
    }
    return r;
  }
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) { return a.c_ == b.c_; }

 private:
  void check_order(const TruncatedSeries& o) const {
    if (o.order() != order()) throw std::invalid_argument("series order mismatch");
  }
  std::vector<T> c_;
};

// num/den with den(0) != 0 required only at expansion time. Kept unreduced.
template <class T>
struct RationalGF {
  Polynomial<T> num;
  Polynomial<T> den{T(1L)};

  friend RationalGF operator+(const RationalGF& a, const RationalGF& b) {
    return {a.num * b.den + b.num * a.den, a.den * b.den};
  }
  friend RationalGF operator-(const RationalGF& a, const RationalGF& b) {
    return {a.num * b.den - b.num * a.den, a.den * b.den};
  }
  friend RationalGF operator*(const RationalGF& a, const RationalGF& b) {
    return {a.num * b.num, a.den * b.den};
  }
  RationalGF scaled(const T& s) const { return {num.scaled(s), den}; }
};

}  // namespace floorsum
