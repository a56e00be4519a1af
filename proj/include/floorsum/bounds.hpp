#pragma once

#include "floorsum/interval.hpp"

namespace floorsum {

// Directed-rounding helpers on radius-precision reals.
Real real_up(const Rational& q, mpfr_prec_t prec = kRadiusPrecision);
Real real_down(const Rational& q, mpfr_prec_t prec = kRadiusPrecision);
Real add_up(const Real& a, const Real& b);
Real mul_up(const Real& a, const Real& b);
Real max_real(const Real& a, const Real& b);
bool less(const Real& a, const Real& b);
bool less_equal(const Real& a, const Real& b);

// Upper bound for sum_{n>N} C n^d r^n with C, r >= 0 given as upper bounds.
// Uses the term ratio at n = N+1, which bounds every later ratio (r itself when d <= 0).
// Returns +inf when that ratio is not below 1.
Real geometric_majorant(const Real& c, long d, const Real& r, long n);

// Upper bound for sum_{n>N} C / n^d (d >= 2) via the integral C / ((d-1) N^(d-1)).
Real power_majorant(const Real& c, long d, long n);

}  // namespace floorsum
