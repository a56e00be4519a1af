#include "catalog_util.hpp"

#include <stdexcept>

namespace floorsum::catalog {

QSqrt5 base_term(long which, long n) {
  switch (which) {
    case 1:
      return QSqrt5(n);
    case 2:
      return QSqrt5(R(n) * n);
    case 3:
      return Fq(n);
    case 4:
      return Lq(n);
    case 5:
      return QSqrt5(static_cast<long>(neg_one_pow(n)));
    case 6:
      return QSqrt5(Rational(harmonic(n) / ((n + 1) * (n + 1))));
    default:
      throw std::invalid_argument("unknown base sequence");
  }
}

bool base_has_gf(long which) { return which >= 1 && which <= 5; }

GF base_gf(long which) {
  switch (which) {
    case 1:
      return identity_gf();
    case 2:
      return square_gf();
    case 3:
      return fibonacci_gf();
    case 4:
      return lucas_gf();
    case 5:
      return geometric_gf(QSqrt5(-1));
    default:
      throw std::invalid_argument("base sequence has no rational generating function");
  }
}

const char* base_name(long which) {
  static const char* names[] = {"?", "n", "n^2", "F_n", "L_n", "(-1)^n", "H_n/(n+1)^2"};
  return (which >= 1 && which <= 6) ? names[which] : names[0];
}

Verdict coefficient_verdict(const std::string& id, const Params& params, const Series& lhs, const Series& rhs,
                            mpfr_prec_t prec) {
  auto mismatch = series_equal(lhs, rhs);
  long at = mismatch.value_or(lhs.order());
  Verdict v = exact_verdict(id, params, lhs[at], rhs[at], prec);
  v.terms_used = lhs.order() + 1;
  if (mismatch) {
    v.note = "first coefficient mismatch at n=" + std::to_string(*mismatch);
  } else {
    v.note = "coefficients agree through order " + std::to_string(lhs.order());
  }
  return v;
}

Series to_q5(const TruncatedSeries<Rational>& s) {
  Series out(s.order());
  for (long n = 0; n <= s.order(); ++n) out[n] = QSqrt5(s[n]);
  return out;
}

Verdict coefficient_verdict(const std::string& id, const Params& params, const TruncatedSeries<Rational>& lhs,
                            const TruncatedSeries<Rational>& rhs, mpfr_prec_t prec) {
  return coefficient_verdict(id, params, to_q5(lhs), to_q5(rhs), prec);
}

Real upper_abs(const QSqrt5& x) { return q5_embed(x, 128).magnitude(); }

Real alpha_pow_up(long e) { return q5_embed(alpha_pow(e), 128).magnitude(); }

Real alpha_pow_up(const Rational& e) {
  // alpha^(p/q) = (alpha^p)^(1/q)
  Interval a = q5_embed(alpha_pow(to_long(Rational(e.get_num()))), 128);
  return nth_root(a, e.get_den().get_ui()).upper();
}

Interval iv(const QSqrt5& x, mpfr_prec_t prec) { return q5_embed(x, prec); }
Interval iv(long x, mpfr_prec_t prec) { return Interval::from_long(x, prec); }

std::string require(bool ok, const std::string& message) { return ok ? std::string() : message; }

}  // namespace floorsum::catalog
