#pragma once

#include "floorsum/exact.hpp"
#include "floorsum/interval.hpp"
#include "floorsum/verdict.hpp"

#include <string_view>

namespace floorsum {

// Weights of the binomial sums: floor(j/2), floor(j/2)^2, (-1)^floor(j/2).
enum class FloorWeight { floor_half, floor_half_squared, alternating };

Rational floor_weight(FloorWeight w, long j);

// sum_j C(n-r, j-s) b^(n-j-r+s) c^(j-s) weight(j), summed directly.
// Throws std::invalid_argument when n - r < 0 or r, s < 0.
Rational floor_binom_sum(const Rational& b, const Rational& c, long n, FloorWeight w, long r = 0, long s = 0);
QSqrt5 floor_binom_sum(const QSqrt5& b, const QSqrt5& c, long n, FloorWeight w, long r = 0, long s = 0);

// Closed forms of the three shifted identities.
// floor(j/2): C(n-s-r, j-s) b^(n-j-r) c^(j-s); requires n >= r + s.
QSqrt5 floor_half_closed(const QSqrt5& b, const QSqrt5& c, long n, long r, long s);
// floor(j/2)^2: C(n-r, j-s) b^(n-j-r+s) c^(j-s); requires n >= r >= s.
QSqrt5 floor_half_squared_closed(const QSqrt5& b, const QSqrt5& c, long n, long r, long s);
// (-1)^floor(j/2): rectangular complex form (1-i)/2 i^s (b+ic)^(n-r) + (1+i)/2 (-i)^s (b-ic)^(n-r).
QSqrt5i alternating_closed(const QSqrt5& b, const QSqrt5& c, long n, long r, long s);
// Polar form sgn(b) sqrt(2 (b^2+c^2)^(n-r)) cos((n-r) atan(c/b) + (2s-1) pi/4); b != 0.
Interval alternating_polar(const Rational& b, const Rational& c, long n, long r, long s, mpfr_prec_t prec);

// Checks that a general identity collapses to a special one on the shared
// grid. Registered pairs: (B15, B01), (B22, B19), (B28, B26), (B16, B15),
// (B23, B22). Other pairs throw std::invalid_argument.
Verdict reduction_check(std::string_view general, std::string_view special, const Policy& policy);

}  // namespace floorsum
