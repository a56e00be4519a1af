#pragma once

// Shared helpers for the G, S and B catalogs.

#include "floorsum/bounds.hpp"
#include "floorsum/gf.hpp"
#include "floorsum/registry.hpp"
#include "floorsum/series.hpp"
#include "floorsum/transcendental.hpp"

#include <string>

namespace floorsum::catalog {

inline Rational F(long n) { return Rational(fib(n)); }
inline Rational L(long n) { return Rational(lucas(n)); }
inline QSqrt5 Fq(long n) { return QSqrt5(F(n)); }
inline QSqrt5 Lq(long n) { return QSqrt5(L(n)); }
inline Rational sgn(long n) { return Rational(neg_one_pow(n)); }
inline Rational R(long n) { return Rational(n); }
inline Rational Q(long a, long b) { return make_rational(a, b); }
inline QSqrt5 sqrt5() { return QSqrt5::sqrt5(); }

// Power of a Q(sqrt5) element, including 0^0 = 1.
inline QSqrt5 qpow(const QSqrt5& x, long e) { return pow(x, e); }
inline Rational rpow(const Rational& x, long e) { return pow(x, e); }

// Base sequences used by the floor-transform checks:
// 1: n, 2: n^2, 3: F_n, 4: L_n, 5: (-1)^n, 6: H_n / (n+1)^2.
constexpr long kBaseSequences = 6;
QSqrt5 base_term(long which, long n);
bool base_has_gf(long which);
GF base_gf(long which);
const char* base_name(long which);

// Coefficientwise verdict for two truncated series.
Verdict coefficient_verdict(const std::string& id, const Params& params, const Series& lhs, const Series& rhs,
                            mpfr_prec_t prec);
Verdict coefficient_verdict(const std::string& id, const Params& params, const TruncatedSeries<Rational>& lhs,
                            const TruncatedSeries<Rational>& rhs, mpfr_prec_t prec);

Series to_q5(const TruncatedSeries<Rational>& s);

// Upper bound of |x| for an exact value, as a radius-precision real.
Real upper_abs(const QSqrt5& x);
// Upper bound for alpha^e (e may be negative).
Real alpha_pow_up(long e);
Real alpha_pow_up(const Rational& e);

// Ratio bound r and tail helper for terms |t_n| <= C n^d r^n.
inline Real geometric_tail(const Real& c, long d, const Real& r, long n) { return geometric_majorant(c, d, r, n); }

Interval iv(const QSqrt5& x, mpfr_prec_t prec);
Interval iv(long x, mpfr_prec_t prec);

std::string require(bool ok, const std::string& message);

}  // namespace floorsum::catalog
