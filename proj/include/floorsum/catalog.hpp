#pragma once

#include "floorsum/interval.hpp"

namespace floorsum {

// sum_{n>=1} x^n n/(2n+1) from the tabulated series sum_{k>=0} x^k/(2k+1), with
// sqrt_x the exact square root of x.
Interval n_over_2n_plus_1_tabulated(const QSqrt5& x, const QSqrt5& sqrt_x, mpfr_prec_t prec);

}  // namespace floorsum
