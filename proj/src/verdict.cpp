#include "floorsum/verdict.hpp"

#include "floorsum/bounds.hpp"

#include <stdexcept>

namespace floorsum {

const char* to_string(Status s) {
  switch (s) {
    case Status::confirmed:
      return "confirmed";
    case Status::refuted:
      return "refuted";
    case Status::inconclusive:
      break;
  }
  return "inconclusive";
}

std::string canonical_params(const Params& p) {
  std::string out;
  for (const auto& [k, v] : p) {
    if (!out.empty()) out += ',';
    out += k + "=" + v.get_str();
  }
  return out;
}

const Rational& param(const Params& p, const std::string& name) {
  auto it = p.find(name);
  if (it == p.end()) throw std::invalid_argument("missing parameter '" + name + "'");
  return it->second;
}

long param_long(const Params& p, const std::string& name) {
  const Rational& v = param(p, name);
  if (!is_integer(v)) throw std::invalid_argument("parameter '" + name + "' must be an integer");
  return to_long(v);
}

Real tolerance_real(const Policy& policy) { return real_up(policy.tolerance); }

Quantity Quantity::of(const QSqrt5& x, mpfr_prec_t prec) { return {q5_embed(x, prec), to_exact_string(x)}; }

Quantity Quantity::of(const QSqrt5i& x, mpfr_prec_t prec) {
  return {q5_embed(x.re(), prec), to_string(x)};
}

Status classify(const Interval& lhs, const Interval& rhs, const Real& tol, Real* gap_out) {
  Real gap = midpoint_gap(lhs, rhs);
  Real radii = add_up(lhs.rad(), rhs.rad());
  Real ten_tol(kRadiusPrecision);
  mpfr_mul_ui(ten_tol.get(), tol.get(), 10, MPFR_RNDU);
  Status s = Status::inconclusive;
  if (!gap.is_finite() || !radii.is_finite()) {
    s = Status::inconclusive;
  } else if (less_equal(gap, add_up(radii, tol))) {
    s = Status::confirmed;
  } else if (less(add_up(radii, ten_tol), gap)) {
    s = Status::refuted;
  }
  if (gap_out != nullptr) *gap_out = std::move(gap);
  return s;
}

Verdict exact_verdict(std::string id, Params params, const QSqrt5& lhs, const QSqrt5& rhs, mpfr_prec_t prec) {
  Verdict v;
  v.id = std::move(id);
  v.params = std::move(params);
  v.lhs = Quantity::of(lhs, prec);
  v.rhs = Quantity::of(rhs, prec);
  v.gap = midpoint_gap(v.lhs.value, v.rhs.value);
  v.status = lhs == rhs ? Status::confirmed : Status::refuted;
  if (v.status == Status::refuted) v.note = "exact mismatch, difference " + to_string(QSqrt5(lhs - rhs));
  return v;
}

Verdict exact_verdict(std::string id, Params params, const QSqrt5i& lhs, const QSqrt5i& rhs, mpfr_prec_t prec) {
  Verdict v;
  v.id = std::move(id);
  v.params = std::move(params);
  v.lhs = Quantity::of(lhs, prec);
  v.rhs = Quantity::of(rhs, prec);
  v.gap = midpoint_gap(v.lhs.value, v.rhs.value);
  v.status = lhs == rhs ? Status::confirmed : Status::refuted;
  if (v.status == Status::refuted) v.note = "exact mismatch, difference " + to_string(QSqrt5i(lhs - rhs));
  return v;
}

Verdict numeric_verdict(std::string id, Params params, Quantity lhs, Quantity rhs, const Policy& policy) {
  Verdict v;
  v.id = std::move(id);
  v.params = std::move(params);
  v.lhs = std::move(lhs);
  v.rhs = std::move(rhs);
  v.status = classify(v.lhs.value, v.rhs.value, tolerance_real(policy), &v.gap);
  return v;
}

Verdict inconclusive_verdict(std::string id, Params params, std::string note, mpfr_prec_t prec) {
  Verdict v;
  v.id = std::move(id);
  v.params = std::move(params);
  v.lhs = Quantity::of(Interval(prec));
  v.rhs = Quantity::of(Interval(prec));
  v.lhs.value.inflate(Real::infinity());
  v.gap = Real::infinity();
  v.status = Status::inconclusive;
  v.note = std::move(note);
  return v;
}

}  // namespace floorsum
