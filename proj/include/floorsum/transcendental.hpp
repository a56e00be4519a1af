#pragma once

#include "floorsum/interval.hpp"

namespace floorsum {

// Elementary functions on enclosures. Midpoints come from MPFR's correctly
// rounded kernels; radii carry the propagated input radius plus one ulp.
Interval log(const Interval& x);  // requires x > 0
Interval exp(const Interval& x);
Interval sqrt(const Interval& x);  // requires x >= 0
Interval atan(const Interval& x);
Interval cos(const Interval& x);
Interval sin(const Interval& x);
Interval nth_root(const Interval& x, unsigned long k);  // requires x > 0

// Exact scaling by a machine integer.
Interval mul_si(const Interval& x, long k);
Interval div_ui(const Interval& x, unsigned long k);

// pi as 16 atan(1/5) - 4 atan(1/239) with explicit alternating-series tails.
Interval pi_iv(mpfr_prec_t prec = default_precision());
// pi as twice the bisected zero of cos on [1.5, 1.6]; an independent route.
Interval pi_by_cos_zero(mpfr_prec_t prec = default_precision());

Interval sqrt5_iv(mpfr_prec_t prec = default_precision());
Interval alpha_iv(mpfr_prec_t prec = default_precision());
Interval log_alpha_iv(mpfr_prec_t prec = default_precision());

// Li_m(x) = sum_{k>=1} x^k / k^m for m >= 1 and |x| <= 0.97.
Interval polylog_iv(long m, const Interval& x);
constexpr double kPolylogRadius = 0.97;

// zeta(m) for m >= 2: direct partial sum with directed rounding plus the
// trapezoid/midpoint sandwich on the tail, whose width is about K^-(m+1).
// Memoized per (m, prec, max_terms).
Interval zeta_iv(long m, mpfr_prec_t prec = default_precision(), long max_terms = 1L << 20);

// zeta(3) = (8/7) (Li_3(1/2) - log^3(2)/6 + pi^2 log(2)/12), accurate to full precision.
Interval zeta3_iv(mpfr_prec_t prec = default_precision());

}  // namespace floorsum
