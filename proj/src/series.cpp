#include "floorsum/series.hpp"

#include "floorsum/bounds.hpp"

#include <algorithm>
#include <chrono>

namespace floorsum {

QSqrt5 partial_sum(const SeriesCell& cell, long n) {
  QSqrt5 sum;
  for (long i = cell.start; i <= n; ++i) sum += cell.term(i);
  return sum;
}

namespace {

std::string sci(const Real& x) { return x.to_string(3, MPFR_RNDU); }

}  // namespace

Verdict verify_series(const std::string& id, const Params& params, const SeriesCell& cell,
                      const Policy& policy) {
  const auto t0 = std::chrono::steady_clock::now();
  const mpfr_prec_t prec = policy.precision;
  if (!cell.divergence.empty()) return inconclusive_verdict(id, params, "divergent: " + cell.divergence, prec);

  std::string note;
  Rational tol = policy.tolerance;
  if (cell.tolerance_floor && *cell.tolerance_floor > tol) {
    tol = *cell.tolerance_floor;
    note = "tolerance floor " + sci(real_up(tol)) + " from the term budget";
  }
  const Real tol_real = real_up(tol);
  const Real quarter = real_down(tol / 4);

  long budget = policy.max_terms;
  if (cell.max_terms > 0) budget = std::min(budget, cell.max_terms);
  budget = std::max(budget, 1L);
  long terms = std::min(std::max(policy.start_terms, 1L), budget);

  QSqrt5 exact_sum;
  Interval iv_sum = Interval::from_long(0, prec + 32);
  long next = cell.start;
  Real tail = Real::infinity();
  bool converged = false;
  while (true) {
    const long last = cell.start + terms - 1;
    for (; next <= last; ++next) {
      if (cell.exact_accumulation) {
        exact_sum += cell.term(next);
      } else {
        iv_sum += cell.term_iv ? cell.term_iv(next, prec + 32) : q5_embed(cell.term(next), prec + 32);
      }
    }
    tail = cell.tail ? cell.tail(last) : Real::infinity();
    if (tail.is_finite() && less(tail, quarter)) {
      converged = true;
      break;
    }
    if (terms >= budget) break;
    terms = std::min(terms * 2, budget);
  }

  Verdict v;
  v.id = id;
  v.params = params;
  v.terms_used = terms;
  Interval lhs = cell.exact_accumulation ? q5_embed(exact_sum, prec) : iv_sum;
  lhs.inflate(tail);
  v.lhs = Quantity::of(lhs);
  v.rhs = cell.closed_exact ? Quantity::of(*cell.closed_exact, prec) : Quantity::of(cell.closed(prec));
  v.status = classify(v.lhs.value, v.rhs.value, tol_real, &v.gap);

  auto append = [&note](const std::string& s) { note += (note.empty() ? "" : "; ") + s; };
  if (!tail.is_finite()) {
    v.status = Status::inconclusive;
    append("no tail bound after " + std::to_string(terms) + " terms");
  } else if (!converged && v.status == Status::confirmed) {
    v.status = Status::inconclusive;
    append("tail bound " + sci(tail) + " not below tolerance/4 after " + std::to_string(terms) + " terms");
  }

  if (cell.limit_exact && cell.closed_exact) {
    v.lhs.exact = to_exact_string(*cell.limit_exact);
    Interval limit = q5_embed(*cell.limit_exact, prec);
    if (tail.is_finite() && !lhs.overlaps(limit)) {
      v.status = Status::inconclusive;
      append("oracle partial sum disagrees with the generating-function limit");
    } else if (*cell.limit_exact == *cell.closed_exact) {
      if (v.status != Status::refuted) v.status = Status::confirmed;
      append("exact match");
    } else {
      v.status = Status::refuted;
      append("exact mismatch: series value " + to_string(*cell.limit_exact) + ", stated " +
             to_string(*cell.closed_exact));
    }
  }
  v.note = note;
  v.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return v;
}

}  // namespace floorsum
