#include "series_util.hpp"

#include <cstdlib>

namespace floorsum::catalog {

Real up(const Rational& q) { return real_up(abs(q)); }
Real up(const QSqrt5& x) { return upper_abs(x); }
Real up_alpha(long e) { return alpha_pow_up(std::labs(e)); }

bool below_one(const Real& r) { return r.is_finite() && less(r, Real(kRadiusPrecision, 1)); }

Growth polynomial_growth(long c, long d) { return {Real(kRadiusPrecision, c), d, Real(kRadiusPrecision, 1)}; }

Growth binet_growth(long c, long k) { return {Real(kRadiusPrecision, c), 0, alpha_pow_up(make_rational(1, k))}; }

Growth geometric_growth(const Real& c, const QSqrt5& rho, long k) {
  // rho^floor(n/k) <= rho^((n-k+1)/k) <= rho^-1 (rho^(1/k))^n
  Interval root = nth_root(q5_embed(rho, 128), static_cast<unsigned long>(k));
  return {mul_up(c, up(rho.inverse())), 0, root.upper()};
}

WeightTerm unit_weight(Rational coef, bool alternating) {
  return {std::move(coef), SeqKind::fibonacci, 0, 1, alternating};
}

std::function<Real(long)> geometric_tail_fn(const Real& c, long d, const Real& r) {
  return [c, d, r](long n) { return geometric_majorant(c, d, r, n); };
}

namespace {

// scale * a_{floor(n/k)} * sum_i w_i(n), without the 1/q^n factor.
QSqrt5 weighted_numerator(const FloorSeries& fs, long n) {
  QSqrt5 w;
  for (const auto& t : fs.weights) {
    QSqrt5 x = seq_value(t.kind, t.s * n + t.off) * QSqrt5(t.coef);
    w += (t.alternating && n % 2 != 0) ? -x : x;
  }
  if (w.is_zero()) return w;
  return fs.scale * fs.a(n / fs.k) * w;
}

}  // namespace

QSqrt5 floor_series_term(const FloorSeries& fs, long n) {
  QSqrt5 num = weighted_numerator(fs, n);
  if (num.is_zero()) return num;
  return num / qpow(fs.q, n);
}

Interval floor_series_term_iv(const FloorSeries& fs, long n, mpfr_prec_t prec) {
  QSqrt5 num = weighted_numerator(fs, n);
  if (num.is_zero()) return Interval::from_long(0, prec);
  return q5_embed(num, prec) / q5_embed(qpow(fs.q, n), prec);
}

QSqrt5 floor_series_limit(const FloorSeries& fs) {
  const QSqrt5 z = fs.q.inverse();
  QSqrt5 total;
  for (const auto& t : fs.weights) {
    total += QSqrt5(t.coef) *
             floor_binet_sum(fs.a_gf, fs.k, t.alternating ? Sign::minus : Sign::plus, t.kind, t.s, t.off, z);
  }
  total *= fs.scale;
  for (long n = 0; n < fs.start; ++n) total -= floor_series_term(fs, n);
  return total;
}

SeriesCell floor_series_cell(const FloorSeries& fs) {
  SeriesCell cell;
  cell.start = fs.start;
  cell.term = [fs](long n) { return floor_series_term(fs, n); };
  cell.term_iv = [fs](long n, mpfr_prec_t prec) { return floor_series_term_iv(fs, n, prec); };
  cell.exact_accumulation = false;
  Real weight(kRadiusPrecision, 0);
  long smax = 0;
  for (const auto& t : fs.weights) {
    // |X_{sn+off}| <= 2 alpha^(|s| n + |off|)
    weight = add_up(weight, mul_up(mul_up(up(t.coef), Real(kRadiusPrecision, 2)), up_alpha(t.off)));
    smax = std::max(smax, std::labs(t.s));
  }
  const Real c = mul_up(mul_up(up(fs.scale), fs.growth.c), weight);
  const Real r = mul_up(mul_up(fs.growth.r, up_alpha(smax)), up(fs.q.inverse()));
  if (!below_one(r)) {
    cell.divergence = "term ratio bound " + r.to_string(4, MPFR_RNDU) + " is not below 1";
    return cell;
  }
  cell.tail = geometric_tail_fn(c, fs.growth.d, r);
  cell.limit_exact = floor_series_limit(fs);
  return cell;
}

GF shifted_identity_gf() { return {Poly(QSqrt5(1)), Poly({QSqrt5(1), QSqrt5(-1)}).pow(2)}; }

GF z_derivative(const GF& g) {
  Poly num = (g.num.derivative() * g.den - g.num * g.den.derivative()) * Poly::z();
  return {num, g.den * g.den};
}

GF multisection_gf(SeqKind kind, long s) {
  const QSqrt5 ls = Lq(s);
  Poly den({QSqrt5(1), -ls, QSqrt5(neg_one_pow(s))});
  if (kind == SeqKind::fibonacci) return {Poly::monomial(Fq(s), 1), den};
  return {Poly({QSqrt5(2), -ls}), den};
}

GF scaled_argument(const GF& g, const QSqrt5& c) {
  return {g.num.compose_monomial(c, 1), g.den.compose_monomial(c, 1)};
}

Interval log_iv(const QSqrt5& x, mpfr_prec_t prec) { return log(q5_embed(x.abs(), prec)); }

}  // namespace floorsum::catalog
