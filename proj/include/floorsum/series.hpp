#pragma once

#include "floorsum/verdict.hpp"

#include <functional>
#include <optional>
#include <string>

namespace floorsum {

// One evaluable instance of an infinite-series identity: the oracle terms,
// a tail certificate, the stated right-hand side and, for generating-function
// entries, the exact limit obtained from the transformed generating function.
struct SeriesCell {
  long start = 0;
  std::function<QSqrt5(long n)> term;
  // Optional enclosure of term(n), used instead of term when accumulating in
  // interval arithmetic; avoids normalizing very large rationals.
  std::function<Interval(long n, mpfr_prec_t prec)> term_iv;
  // Upper bound on |sum_{n>N} term(n)|; +inf when no bound is available.
  std::function<Real(long N)> tail;
  // Right-hand side: exact when algebraic, otherwise an enclosure.
  std::optional<QSqrt5> closed_exact;
  std::function<Interval(mpfr_prec_t)> closed;
  // Exact value of the series from the generating-function route.
  std::optional<QSqrt5> limit_exact;
  // Accumulate partial sums exactly (default) or in interval arithmetic.
  bool exact_accumulation = true;
  // Per-cell term budget overriding the policy when smaller.
  long max_terms = 0;
  // Tolerance floor: the cell is judged at max(policy tolerance, floor).
  std::optional<Rational> tolerance_floor;
  // Set when the cell lies outside the convergence region.
  std::string divergence;
};

// Exact partial sum over start..N (empty sum when N < start).
QSqrt5 partial_sum(const SeriesCell& cell, long n);

// Adaptive verification: N = 64, 128, ... until the tail is below tol/4 or the
// budget is exhausted; then the verdict rule on lhs = partial sum +- tail.
Verdict verify_series(const std::string& id, const Params& params, const SeriesCell& cell,
                      const Policy& policy);

}  // namespace floorsum
