#pragma once

#include "floorsum/exact.hpp"
#include "floorsum/interval.hpp"

#include <map>
#include <optional>
#include <string>

namespace floorsum {

enum class Status { confirmed, inconclusive, refuted };
const char* to_string(Status s);

// Parameter cell. std::map keeps names in alphabetical order.
using Params = std::map<std::string, Rational>;
std::string canonical_params(const Params& p);  // "k=2,m=-1"
long param_long(const Params& p, const std::string& name);
const Rational& param(const Params& p, const std::string& name);

struct Policy {
  mpfr_prec_t precision = default_precision();
  Rational tolerance = Rational(1, 1) / pow(BigInt(10), 30);
  long max_terms = 1L << 20;
  long start_terms = 64;
};

Real tolerance_real(const Policy& policy);

// A compared value: an enclosure plus, when available, its exact text
// ("a/b+c/d*sqrt5" or a Q(sqrt5, i) literal).
struct Quantity {
  Interval value;
  std::optional<std::string> exact;

  static Quantity of(const QSqrt5& x, mpfr_prec_t prec);
  static Quantity of(const QSqrt5i& x, mpfr_prec_t prec);  // real part enclosure
  static Quantity of(Interval iv) { return {std::move(iv), std::nullopt}; }
};

struct Verdict {
  std::string id;
  Params params;
  Status status = Status::inconclusive;
  Quantity lhs;
  Quantity rhs;
  Real gap;
  long terms_used = 0;
  double wall_ms = 0;
  std::string note;
};

// confirmed iff gap <= radii + tol; refuted iff gap > radii + 10 tol.
Status classify(const Interval& lhs, const Interval& rhs, const Real& tol, Real* gap_out = nullptr);

// Exact comparison; the enclosures are filled for reporting.
Verdict exact_verdict(std::string id, Params params, const QSqrt5& lhs, const QSqrt5& rhs, mpfr_prec_t prec);
Verdict exact_verdict(std::string id, Params params, const QSqrt5i& lhs, const QSqrt5i& rhs, mpfr_prec_t prec);

Verdict numeric_verdict(std::string id, Params params, Quantity lhs, Quantity rhs, const Policy& policy);

// Verdict reported when a cell cannot be evaluated (divergence, domain, policy).
Verdict inconclusive_verdict(std::string id, Params params, std::string note, mpfr_prec_t prec);

}  // namespace floorsum
