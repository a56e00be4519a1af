#include "doctest.h"
#include "floorsum/gf.hpp"

using namespace floorsum;

namespace {

using RPoly = Polynomial<Rational>;
using RGF = RationalGF<Rational>;
using RSeries = TruncatedSeries<Rational>;

RSeries series_of(std::initializer_list<long> v) {
  std::vector<Rational> c;
  for (long x : v) c.emplace_back(x);
  return RSeries(c);
}

RPoly one_minus_zk(long k) { return RPoly(1L) - RPoly::monomial(Rational(1), k); }
RPoly one_minus_z() { return one_minus_zk(1); }

Series series_from(const SeqFn<QSqrt5>& a, long order) {
  Series s(order);
  for (long n = 0; n <= order; ++n) s[n] = a(n);
  return s;
}

}  // namespace

TEST_CASE("expand") {
  CHECK(expand(fibonacci_gf(), 6) == Series({0, 1, 1, 2, 3, 5, 8}));
  RGF geo{RPoly(1L), one_minus_z()};
  CHECK(expand(geo, 4) == series_of({1, 1, 1, 1, 1}));
  RGF half_floor{RPoly::monomial(Rational(1), 2), one_minus_z() * one_minus_zk(2)};
  CHECK(expand(half_floor, 7) == series_of({0, 0, 1, 1, 2, 2, 3, 3}));
  RGF bad{RPoly(1L), RPoly::z()};
  CHECK_THROWS_AS(expand(bad, 3), std::domain_error);
}

TEST_CASE("floor transform of a sequence") {
  SeqFn<Rational> id = [](long n) { return Rational(n); };
  CHECK(floor_transform_seq(id, 2, 5) == series_of({0, 0, 1, 1, 2, 2}));
  SeqFn<Rational> f = [](long n) { return Rational(fib(n)); };
  CHECK(floor_transform_seq(f, 1, 5) == series_of({0, 1, 1, 2, 3, 5}));
  SeqFn<Rational> h = [](long n) { return Rational(harmonic(n) / ((n + 1) * (n + 1))); };
  RSeries hs = floor_transform_seq(h, 2, 4);
  CHECK(hs[0] == 0);
  CHECK(hs[1] == 0);
  CHECK(hs[2] == make_rational(1, 4));
  CHECK(hs[3] == make_rational(1, 4));
  CHECK(hs[4] == make_rational(3, 2) / 9);
  CHECK_THROWS_AS(floor_transform_seq(id, 0, 5), std::domain_error);
}

TEST_CASE("floor transform of a generating function") {
  GF ident = identity_gf();
  GF floor2{Poly::monomial(QSqrt5(1), 2), Poly::from({1, -1}) * Poly::from({1, 0, -1})};
  CHECK_FALSE(series_equal(expand(floor_transform_gf(ident, 2, Sign::plus), 200), expand(floor2, 200)));
  SeqFn<QSqrt5> sq = [](long n) { return QSqrt5(Rational(n / 3) * (n / 3)); };
  CHECK_FALSE(series_equal(expand(floor_transform_gf(square_gf(), 3, Sign::plus), 300), series_from(sq, 300)));
  GF f = lucas_gf();
  CHECK_FALSE(series_equal(expand(floor_transform_gf(f, 1, Sign::plus), 100), expand(f, 100)));
}

TEST_CASE("floor transform GF identity over six base sequences and both signs") {
  const long order = 300;
  std::vector<std::pair<GF, SeqFn<QSqrt5>>> cases{
      {identity_gf(), [](long n) { return QSqrt5(n); }},
      {square_gf(), [](long n) { return QSqrt5(n * n); }},
      {fibonacci_gf(), [](long n) { return QSqrt5(Rational(fib(n))); }},
      {lucas_gf(), [](long n) { return QSqrt5(Rational(lucas(n))); }},
      {geometric_gf(QSqrt5(-1)), [](long n) { return QSqrt5(neg_one_pow(n)); }},
  };
  for (long k = 1; k <= 8; ++k) {
    for (auto& [gf, seq] : cases) {
      for (Sign sign : {Sign::plus, Sign::minus}) {
        auto lhs = floor_transform_seq(seq, k, order, sign);
        auto rhs = expand(floor_transform_gf(gf, k, sign), order);
        CHECK_FALSE(series_equal(lhs, rhs));
      }
    }
    SeqFn<QSqrt5> h = [](long n) { return QSqrt5(harmonic(n) / ((n + 1) * (n + 1))); };
    Series hs = series_from(h, order);
    for (Sign sign : {Sign::plus, Sign::minus})
      CHECK_FALSE(series_equal(floor_transform_seq(h, k, order, sign), floor_transform_series(hs, k, order, sign)));
  }
}

TEST_CASE("linearity of the floor transform") {
  GF combo = fibonacci_gf().scaled(QSqrt5(3)) + lucas_gf().scaled(QSqrt5(make_rational(-1, 2)));
  for (long k = 1; k <= 5; ++k) {
    auto whole = expand(floor_transform_gf(combo, k, Sign::plus), 120);
    auto parts = expand(floor_transform_gf(fibonacci_gf(), k, Sign::plus), 120).scaled(QSqrt5(3)) +
                 expand(floor_transform_gf(lucas_gf(), k, Sign::plus), 120).scaled(QSqrt5(make_rational(-1, 2)));
    CHECK_FALSE(series_equal(whole, parts));
  }
}

TEST_CASE("binomial transform") {
  SeqFn<Rational> one = [](long) { return Rational(1); };
  CHECK(binomial_transform_series(one, Rational(1), Rational(1), 4) == series_of({1, 2, 4, 8, 16}));
  SeqFn<Rational> half = [](long j) { return Rational(j / 2); };
  CHECK(binomial_transform_series(half, Rational(1), Rational(1), 6)[4] == 12);
  SeqFn<Rational> sgn = [](long j) { return Rational(neg_one_pow(j / 2)); };
  CHECK(binomial_transform_series(sgn, Rational(1), Rational(1), 6)[3] == 0);
  // GF route against direct summation over a rational grid.
  RGF floor2 = {RPoly::monomial(Rational(1), 2), one_minus_z() * one_minus_zk(2)};
  for (long bn : {-2, 1, 3})
    for (long cn : {-1, 1, 2}) {
      Rational b = make_rational(bn, 2), c(cn);
      auto direct = binomial_transform_series(half, b, c, 80);
      auto viagf = expand(binomial_transform_gf(floor2, b, c), 80);
      CHECK_FALSE(series_equal(direct, viagf));
    }
}

TEST_CASE("series comparison") {
  RSeries a = series_of({1, 1, 1, 1});
  RSeries b = series_of({1, -1, 1, -1});
  CHECK_FALSE(series_equal(a, a));
  CHECK(series_equal(a, b) == 1L);
  CHECK_THROWS_AS(series_equal(a, series_of({1, 1})), std::invalid_argument);
  for (long k : {4}) {
    RGF lhs{RPoly::monomial(Rational(1), k), one_minus_z() * one_minus_zk(k)};
    SeqFn<Rational> fl = [k](long n) { return Rational(n / k); };
    CHECK_FALSE(series_equal(expand(lhs, 300), floor_transform_seq<Rational>([](long n) { return Rational(n); }, k, 300)));
    CHECK_FALSE(series_equal(expand(lhs, 300), [&] {
      RSeries s(300);
      for (long n = 0; n <= 300; ++n) s[n] = fl(n);
      return s;
    }()));
  }
}

TEST_CASE("parity identity for even k") {
  SeqFn<Rational> id = [](long n) { return Rational(n); };
  RSeries r = parity_identity_check(id, 2, 100);
  for (long n = 0; n <= 100; ++n) CHECK(r[n] == 0);
  SeqFn<Rational> f = [](long n) { return Rational(fib(n)); };
  RSeries rf = parity_identity_check(f, 4, 100);
  for (long n = 0; n <= 100; ++n) CHECK(rf[n] == 0);
  CHECK_THROWS_AS(parity_identity_check(id, 3, 10), std::domain_error);
}

TEST_CASE("evaluation and Taylor coefficients") {
  GF f = fibonacci_gf();
  // sum F_n / 2^n = 2.
  CHECK(evaluate(f, QSqrt5(make_rational(1, 2))) == QSqrt5(2));
  // sum n F_n / 2^n = 10: z F'(z) at 1/2.
  QSqrt5 half(make_rational(1, 2));
  CHECK(half * taylor_coefficient(f, half, 1) == QSqrt5(10));
  // Second Taylor coefficient of 1/(1-z) at 0 is 1; at 1/2 it is 8.
  GF geo = geometric_gf(QSqrt5(1));
  CHECK(taylor_coefficient(geo, QSqrt5(0), 2) == QSqrt5(1));
  CHECK(taylor_coefficient(geo, half, 2) == QSqrt5(8));
  CHECK_THROWS_AS(evaluate(geo, QSqrt5(1)), std::domain_error);
}

TEST_CASE("Binet sums") {
  QSqrt5 half(make_rational(1, 2));
  GF geo = geometric_gf(QSqrt5(1));
  for (long m = -4; m <= 4; ++m) {
    QSqrt5 closed = binet_sum(geo, SeqKind::fibonacci, 1, m, half);
    CHECK(closed.is_rational());
    // sum_{n>=0} F_{n+m} z^n = (F_m + F_{m-1} z)/(1 - z - z^2) at z = 1/2.
    Rational z = make_rational(1, 2);
    Rational expect = (Rational(fib(m)) + Rational(fib(m - 1)) * z) / (1 - z - z * z);
    CHECK(closed == QSqrt5(expect));
  }
  // sum floor(n/2) F_n / 2^n from the floor-transformed identity GF.
  QSqrt5 v = floor_binet_sum(identity_gf(), 2, Sign::plus, SeqKind::fibonacci, 1, 0, half);
  Rational partial(0);
  for (long n = 0; n <= 400; ++n) partial += Rational(n / 2) * Rational(fib(n)) / pow(Rational(2), n);
  Rational diff = abs(partial - v.rat());
  CHECK(v.is_rational());
  CHECK(diff < make_rational(1, 1000000000));
}
