#include "doctest.h"
#include "floorsum/transcendental.hpp"
#include "generators.hpp"

using namespace floorsum;

namespace {

Interval num(long a, long b = 1, mpfr_prec_t prec = 256) {
  return Interval::from_rational(make_rational(a, b), prec);
}

// True when |x - y| <= tol (decimal string), judged on midpoints plus radii.
bool close(const Interval& x, const Interval& y, const char* tol) {
  Real gap = midpoint_gap(x, y);
  Real bound = Real::from_string(tol, kRadiusPrecision, MPFR_RNDU);
  mpfr_add(bound.get(), bound.get(), x.rad().get(), MPFR_RNDU);
  mpfr_add(bound.get(), bound.get(), y.rad().get(), MPFR_RNDU);
  return mpfr_cmp(gap.get(), bound.get()) <= 0;
}

bool radius_below(const Interval& x, const char* tol) {
  return mpfr_cmp(x.rad().get(), Real::from_string(tol, kRadiusPrecision, MPFR_RNDD).get()) <= 0;
}

}  // namespace

TEST_CASE("interval arithmetic encloses exact rational results") {
  testing::Gen gen(17);
  for (int t = 0; t < 500; ++t) {
    Rational a = gen.rational(1000, 997), b = gen.rational(1000, 991);
    Interval x = Interval::from_rational(a, 96), y = Interval::from_rational(b, 96);
    CHECK((x + y).contains(a + b));
    CHECK((x - y).contains(a - b));
    CHECK((x * y).contains(a * b));
    if (sgn(b) != 0) CHECK((x / y).contains(a / b));
  }
  CHECK_THROWS_AS(num(1) / num(0), std::domain_error);
}

TEST_CASE("widening inputs never shrinks outputs") {
  testing::Gen gen(23);
  for (int t = 0; t < 200; ++t) {
    Interval x = Interval::from_rational(gen.rational(30, 7), 128);
    Interval y = Interval::from_rational(gen.rational(30, 7) + 40, 128);
    Interval wide_x = x, wide_y = y;
    Real extra = Real::from_string("1e-5", kRadiusPrecision, MPFR_RNDU);
    wide_x.inflate(extra);
    wide_y.inflate(extra);
    CHECK((wide_x * wide_y).contains(x * y));
    CHECK((wide_x / wide_y).contains(x / y));
    CHECK(log(wide_y).contains(log(y)));
    CHECK(atan(wide_x).contains(atan(x)));
    CHECK(cos(wide_x).contains(cos(x)));
    CHECK(sqrt(wide_y).contains(sqrt(y)));
  }
}

TEST_CASE("log") {
  Interval zero = log(num(1));
  CHECK(zero.mid().is_zero());
  CHECK_THROWS_AS(log(num(0)), std::domain_error);
  CHECK_THROWS_AS(log(num(-2)), std::domain_error);
  // log alpha = arcsinh(1/2), computed by MPFR's asinh as an independent route.
  Real as(256);
  mpfr_asinh(as.get(), Interval::from_rational(make_rational(1, 2)).mid().get(), MPFR_RNDN);
  Interval asinh_half(as, ulp(as));
  CHECK(close(log_alpha_iv(), asinh_half, "1e-70"));
  CHECK(close(log_alpha_iv(), Interval::from_rational(make_rational(4812118250596, 10000000000000)),
              "1e-13"));
  // exp(log 5) = 5.
  Interval l5 = log(num(5));
  CHECK(exp(l5).contains(Rational(5)));
  CHECK(close(l5, Interval::from_rational(make_rational(16094379124341, 10000000000000)), "1e-13"));
}

TEST_CASE("pi by two routes") {
  for (mpfr_prec_t prec : {64, 128, 256, 512}) {
    Interval a = pi_iv(prec), b = pi_by_cos_zero(prec);
    CHECK(a.overlaps(b));
    Real mp(prec);
    mpfr_const_pi(mp.get(), MPFR_RNDN);
    CHECK(a.overlaps(Interval(mp, ulp(mp))));
  }
  CHECK(radius_below(pi_iv(256), "1e-74"));
  // arctan(1) = pi/4.
  CHECK(close(atan(num(1)), div_ui(pi_iv(), 4), "1e-75"));
}

TEST_CASE("cos and sin") {
  CHECK(cos(num(0)).contains(Rational(1)));
  Interval c = cos(div_ui(pi_iv(), 4));
  CHECK((c * c).contains(make_rational(1, 2)));
  testing::Gen gen(31);
  for (int t = 0; t < 200; ++t) {
    Interval x = Interval::from_rational(gen.rational(100, 9), 256);
    Interval s = sin(x), co = cos(x);
    CHECK((s * s + co * co).contains(Rational(1)));
  }
}

TEST_CASE("roots") {
  Interval r = nth_root(num(32), 5);
  CHECK(r.contains(Rational(2)));
  Interval s = sqrt(num(2));
  CHECK((s * s).contains(Rational(2)));
  CHECK(sqrt(num(0)).contains(Rational(0)));
  CHECK_THROWS_AS(sqrt(num(-1)), std::domain_error);
}

TEST_CASE("polylog") {
  Interval zero = polylog_iv(3, num(0));
  CHECK(zero.contains(Rational(0)));
  Interval half = num(1, 2);
  CHECK(close(polylog_iv(1, half), log(num(2)), "1e-75"));
  Interval l2 = log(num(2));
  Interval pi = pi_iv();
  Interval li2_half = div_ui(pi * pi, 12) - div_ui(l2 * l2, 2);
  CHECK(close(polylog_iv(2, half), li2_half, "1e-74"));
  CHECK_THROWS_AS(polylog_iv(2, num(98, 100)), std::domain_error);
  CHECK_THROWS_AS(polylog_iv(0, half), std::domain_error);
  // Li_m(x) - x >= 0 for x in (0, 1).
  for (long m = 1; m <= 5; ++m)
    for (long p = 1; p <= 9; ++p) {
      Interval x = num(p, 10);
      Interval diff = polylog_iv(m, x) - x;
      CHECK(!diff.is_negative());
    }
}

TEST_CASE("enclosures contain the double-precision recomputation") {
  testing::Gen gen(41);
  for (int t = 0; t < 50; ++t) {
    Rational a = gen.rational(90, 100);
    if (abs(a) > make_rational(97, 100)) continue;
    Interval lo = polylog_iv(2, Interval::from_rational(a, 128));
    Interval hi = polylog_iv(2, Interval::from_rational(a, 256));
    CHECK(lo.overlaps(hi));
    Rational pos = abs(a) + 1;
    CHECK(log(Interval::from_rational(pos, 128)).overlaps(log(Interval::from_rational(pos, 256))));
    CHECK(atan(Interval::from_rational(a, 128)).overlaps(atan(Interval::from_rational(a, 256))));
  }
}

TEST_CASE("zeta") {
  CHECK_THROWS_AS(zeta_iv(1), std::domain_error);
  Interval pi = pi_iv();
  Interval z2 = zeta_iv(2);
  CHECK(z2.overlaps(div_ui(pi * pi, 6)));
  CHECK(radius_below(z2, "1e-13"));
  Interval z4 = zeta_iv(4);
  CHECK(z4.overlaps(div_ui(pow(pi, 4), 90)));
  CHECK(radius_below(z4, "1e-27"));
  Interval z3 = zeta_iv(3);
  CHECK(radius_below(z3, "1e-20"));
  Interval z3b = zeta3_iv();
  CHECK(z3.overlaps(z3b));
  CHECK(radius_below(z3b, "1e-70"));
  CHECK(close(z3b, Interval::from_rational(make_rational(12020569031, 10000000000)), "1e-10"));
  // Li_3(1/2) = log^3(2)/6 - pi^2 log(2)/12 + (7/8) zeta(3).
  Interval l2 = log(num(2));
  Interval rhs = div_ui(pow(l2, 3), 6) - div_ui(pi * pi * l2, 12) + div_ui(mul_si(z3, 7), 8);
  CHECK(polylog_iv(3, num(1, 2)).overlaps(rhs));
  // Small term budgets still give valid enclosures.
  CHECK(zeta_iv(2, 128, 1000).contains(zeta_iv(2)));
}
