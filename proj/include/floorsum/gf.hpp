#pragma once

#include "floorsum/exact.hpp"
#include "floorsum/polynomial.hpp"
#include "floorsum/sequences.hpp"

#include <functional>
#include <optional>
#include <stdexcept>

namespace floorsum {

using Poly = Polynomial<QSqrt5>;
using Series = TruncatedSeries<QSqrt5>;
using GF = RationalGF<QSqrt5>;

enum class Sign { plus, minus };

template <class T>
using SeqFn = std::function<T(long)>;

// Power-series coefficients of num/den through order N by the den-driven recurrence
// c_n = (num_n - sum_{j>=1} den_j c_{n-j}) / den_0.
template <class T>
TruncatedSeries<T> expand(const RationalGF<T>& gf, long order) {
  const T d0 = gf.den.coeff(0);
  if (d0 == T(0L)) throw std::domain_error("expand: denominator vanishes at z = 0");
  TruncatedSeries<T> out(order);
  const long dd = gf.den.degree();
  for (long n = 0; n <= order; ++n) {
    T acc = gf.num.coeff(n);
    for (long j = 1; j <= std::min(n, dd); ++j) {
      const T& dj = gf.den.coeffs()[static_cast<std::size_t>(j)];
      if (!(dj == T(0L))) acc -= dj * out[n - j];
    }
    out[n] = acc / d0;
  }
  return out;
}

// Coefficient n is a_{floor(n/k)} (sign +) or (-1)^n a_{floor(n/k)} (sign -).
template <class T>
TruncatedSeries<T> floor_transform_seq(const SeqFn<T>& a, long k, long order, Sign sign = Sign::plus) {
  if (k < 1) throw std::domain_error("floor transform needs k >= 1");
  TruncatedSeries<T> out(order);
  for (long n = 0; n <= order; ++n) {
    T v = a(n / k);
    out[n] = (sign == Sign::minus && n % 2 == 1) ? T(-v) : v;
  }
  return out;
}

// (1 - z^k)/(1 - z) F(z^k) for sign +; (1 + (-1)^(k+1) z^k)/(1 + z) F((-1)^k z^k) for sign -.
template <class T>
RationalGF<T> floor_transform_gf(const RationalGF<T>& f, long k, Sign sign) {
  if (k < 1) throw std::domain_error("floor transform needs k >= 1");
  using P = Polynomial<T>;
  if (sign == Sign::plus) {
    P factor = P(T(1L)) - P::monomial(T(1L), k);
    P lin = P(std::vector<T>{T(1L), T(-1L)});
    return {factor * f.num.compose_monomial(T(1L), k), lin * f.den.compose_monomial(T(1L), k)};
  }
  const T c(static_cast<long>(neg_one_pow(k)));
  P factor = P(T(1L)) + P::monomial(T(static_cast<long>(neg_one_pow(k + 1))), k);
  P lin = P(std::vector<T>{T(1L), T(1L)});
  return {factor * f.num.compose_monomial(c, k), lin * f.den.compose_monomial(c, k)};
}

// Floor-transform identity applied to a truncated series A (for sequences without a rational GF).
// Needs A.order() >= order / k.
template <class T>
TruncatedSeries<T> floor_transform_series(const TruncatedSeries<T>& a, long k, long order,
                                          Sign sign = Sign::plus) {
  if (k < 1) throw std::domain_error("floor transform needs k >= 1");
  if (a.order() < order / k) throw std::invalid_argument("floor_transform_series: input too short");
  const T c(static_cast<long>(sign == Sign::plus ? 1 : neg_one_pow(k)));
  // A(c z^k)
  TruncatedSeries<T> composed(order);
  T cp(1L);
  for (long j = 0; j * k <= order; ++j) {
    composed[j * k] = a[j] * cp;
    cp *= c;
  }
  // (1 - (c z)^k)/(1 - c z) = 1 + c z + ... + (c z)^(k-1), with c = -1 for sign -.
  const T step(static_cast<long>(sign == Sign::plus ? 1 : -1));
  std::vector<T> geo(static_cast<std::size_t>(k), T(0L));
  T sp(1L);
  for (long i = 0; i < k; ++i) {
    geo[static_cast<std::size_t>(i)] = sp;
    sp *= step;
  }
  return composed.multiplied(Polynomial<T>(std::move(geo)));
}

// s_n = sum_j C(n, j) b^(n-j) c^j a_j, summed directly.
template <class T>
TruncatedSeries<T> binomial_transform_series(const SeqFn<T>& a, const T& b, const T& c, long order) {
  std::vector<T> av, bp, cp;
  av.reserve(static_cast<std::size_t>(order) + 1);
  bp.push_back(T(1L));
  cp.push_back(T(1L));
  for (long j = 0; j <= order; ++j) {
    av.push_back(a(j));
    if (j > 0) {
      bp.push_back(bp.back() * b);
      cp.push_back(cp.back() * c);
    }
  }
  TruncatedSeries<T> out(order);
  for (long n = 0; n <= order; ++n) {
    T acc(0L);
    for (long j = 0; j <= n; ++j) {
      if (av[static_cast<std::size_t>(j)] == T(0L)) continue;
      T term = bp[static_cast<std::size_t>(n - j)] * cp[static_cast<std::size_t>(j)];
      term *= av[static_cast<std::size_t>(j)];
      term *= T(Rational(binom(n, j)));
      acc += term;
    }
    out[n] = std::move(acc);
  }
  return out;
}

// 1/(1 - b z) F(c z / (1 - b z)), cleared of nested denominators.
template <class T>
RationalGF<T> binomial_transform_gf(const RationalGF<T>& f, const T& b, const T& c) {
  using P = Polynomial<T>;
  const long e = std::max(f.num.degree(), f.den.degree());
  P one_minus_bz(std::vector<T>{T(1L), T(-b)});
  std::vector<P> pw{P(T(1L))};
  for (long i = 1; i <= std::max(e, 0L); ++i) pw.push_back(pw.back() * one_minus_bz);
  auto substitute = [&](const P& p) {
    P out;
    T ci(1L);
    for (long i = 0; i <= p.degree(); ++i) {
      out += (P::monomial(p.coeff(i) * ci, i) * pw[static_cast<std::size_t>(e - i)]);
      ci *= c;
    }
    return out;
  };
  return {substitute(f.num), one_minus_bz * substitute(f.den)};
}

// Smallest index where the series differ, or nullopt when equal to the common order.
template <class T>
std::optional<long> series_equal(const TruncatedSeries<T>& a, const TruncatedSeries<T>& b) {
  if (a.order() != b.order()) throw std::invalid_argument("series_equal: order mismatch");
  for (long n = 0; n <= a.order(); ++n)
    if (!(a[n] == b[n])) return n;
  return std::nullopt;
}

// (1 - z) sum a_{floor(n/k)} z^n - (1 + z) sum (-1)^n a_{floor(n/k)} z^n, for even k.
template <class T>
TruncatedSeries<T> parity_identity_check(const SeqFn<T>& a, long k, long order) {
  if (k < 1 || k % 2 != 0) throw std::domain_error("parity identity needs a positive even k");
  using P = Polynomial<T>;
  auto plus = floor_transform_seq(a, k, order, Sign::plus);
  auto minus = floor_transform_seq(a, k, order, Sign::minus);
  return plus.multiplied(P(std::vector<T>{T(1L), T(-1L)})) -
         minus.multiplied(P(std::vector<T>{T(1L), T(1L)}));
}

// Exact value num(z)/den(z). Throws std::domain_error at a pole.
template <class T>
T evaluate(const RationalGF<T>& gf, const T& z) {
  T d = gf.den.evaluate(z);
  if (d == T(0L)) throw std::domain_error("evaluate: pole of the generating function");
  return gf.num.evaluate(z) / d;
}

// F^(m)(z) / m!, the t^m coefficient of F(z + t).
template <class T>
T taylor_coefficient(const RationalGF<T>& gf, const T& z, long m) {
  RationalGF<T> shifted{gf.num.taylor_shift(z), gf.den.taylor_shift(z)};
  return expand(shifted, m)[m];
}

// ---- Q(sqrt5) helpers for Binet-type evaluations ----

enum class SeqKind { fibonacci, lucas };

inline QSqrt5 seq_value(SeqKind kind, long n) {
  return QSqrt5(Rational(kind == SeqKind::fibonacci ? fib(n) : lucas(n)));
}

// sum_n g_n X_{s n + c} z^n from G(alpha^s z) and G(beta^s z), X = F or L.
QSqrt5 binet_sum(const GF& g, SeqKind kind, long s, long c, const QSqrt5& z);

// sum_{n>=0} (+-1)^n a_{floor(n/k)} X_{s n + c} z^n where A is the GF of (a_n).
QSqrt5 floor_binet_sum(const GF& a, long k, Sign sign, SeqKind kind, long s, long c,
                       const QSqrt5& z);

// Standard generating functions.
GF geometric_gf(const QSqrt5& ratio);  // sum ratio^n z^n
GF fibonacci_gf();                     // z/(1 - z - z^2)
GF lucas_gf();                         // (2 - z)/(1 - z - z^2)
GF identity_gf();                      // sum n z^n = z/(1-z)^2
GF square_gf();                        // sum n^2 z^n = z(1+z)/(1-z)^3

}  // namespace floorsum
