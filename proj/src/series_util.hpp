#pragma once

#include "catalog_util.hpp"

#include <vector>

namespace floorsum::catalog {

// |a_{floor(n/k)}| <= c n^d r^n for n >= 1.
struct Growth {
  Real c;
  long d = 0;
  Real r;
};

Growth polynomial_growth(long c, long d);
// |X_{floor(n/k)}| <= c alpha^(n/k) for X in {F, L}.
Growth binet_growth(long c, long k);
// |a_j| <= c rho^j with 0 < rho < 1.
Growth geometric_growth(const Real& c, const QSqrt5& rho, long k);

// One summand coef * (+-1)^n X_{s n + off} of a linear Fibonacci/Lucas weight.
struct WeightTerm {
  Rational coef;
  SeqKind kind = SeqKind::fibonacci;
  long s = 1;
  long off = 0;
  bool alternating = false;
};

// Weight X_{0 n + 1} = F_1 = 1: a plain (+-1)^n factor.
WeightTerm unit_weight(Rational coef = Rational(1), bool alternating = false);

// sum_{n >= start} scale * a_{floor(n/k)} / q^n * sum_i w_i(n). The limit comes from
// the floor-transformed generating function of (a_n) through the Binet route.
struct FloorSeries {
  GF a_gf;
  SeqFn<QSqrt5> a;
  Growth growth;
  long k = 1;
  std::vector<WeightTerm> weights;
  QSqrt5 q = QSqrt5(1);
  QSqrt5 scale = QSqrt5(1);
  long start = 0;
};

SeriesCell floor_series_cell(const FloorSeries& fs);
QSqrt5 floor_series_term(const FloorSeries& fs, long n);
Interval floor_series_term_iv(const FloorSeries& fs, long n, mpfr_prec_t prec);
QSqrt5 floor_series_limit(const FloorSeries& fs);

// Tail from a geometric majorant, or +inf.
std::function<Real(long)> geometric_tail_fn(const Real& c, long d, const Real& r);

Real up(const Rational& q);
Real up(const QSqrt5& x);
Real up_alpha(long e);  // alpha^|e| rounded up
bool below_one(const Real& r);

// Generating functions used across catalogs.
GF shifted_identity_gf();              // sum (n+1) z^n
GF z_derivative(const GF& g);          // z G'(z)
GF multisection_gf(SeqKind kind, long s);  // sum X_{s j} z^j
GF scaled_argument(const GF& g, const QSqrt5& c);  // G(c z)

Interval log_iv(const QSqrt5& x, mpfr_prec_t prec);  // log |x|

void add_series_catalog_a(std::vector<IdentityRecord>& out);  // S01-S21
void add_series_catalog_b(std::vector<IdentityRecord>& out);  // S22-S41

}  // namespace floorsum::catalog
