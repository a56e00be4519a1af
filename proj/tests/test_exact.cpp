#include "doctest.h"
#include "floorsum/exact.hpp"
#include "floorsum/interval.hpp"
#include "generators.hpp"

using namespace floorsum;

namespace {

QSqrt5 q(long a, long b, long c = 0, long d = 1) {
  return QSqrt5(make_rational(a, b), make_rational(c, d));
}

}  // namespace

TEST_CASE("products in Q(sqrt5)") {
  CHECK(q5_mul(QSqrt5(1, 1), QSqrt5(1, -1)) == QSqrt5(-4));
  CHECK(alpha() * beta() == QSqrt5(-1));
  CHECK(q5_mul(q(3, 2, 1, 2), q(3, 2, 1, 2)) == q(7, 2, 3, 2));
}

TEST_CASE("inverses in Q(sqrt5)") {
  CHECK(q5_inv(QSqrt5(2)) == q(1, 2));
  CHECK(q5_inv(alpha()) == -beta());
  QSqrt5 inv = q5_inv(QSqrt5(1, 1));
  CHECK(inv == q(-1, 4, 1, 4));
  CHECK(inv * QSqrt5(1, 1) == QSqrt5(1));
  CHECK_THROWS_AS(q5_inv(QSqrt5()), std::domain_error);
}

TEST_CASE("alpha powers") {
  CHECK(alpha_pow(2) == q(3, 2, 1, 2));
  CHECK(alpha_pow(-1) == q(-1, 2, 1, 2));
  CHECK(alpha_pow(0) == QSqrt5(1));
  // Recurrence oracle for L_10 and F_10.
  long f0 = 0, f1 = 1, l0 = 2, l1 = 1;
  for (int i = 0; i < 10; ++i) {
    long f2 = f0 + f1, l2 = l0 + l1;
    f0 = f1;
    f1 = f2;
    l0 = l1;
    l1 = l2;
  }
  CHECK(alpha_pow(10) == q(l0, 2, f0, 2));
  CHECK(beta_pow(10) == alpha_pow(10).conj());
  CHECK(beta_pow(-3) == alpha_pow(-3).conj());
}

TEST_CASE("sqrt5 parity split") {
  CHECK(sqrt5_pow(0) == QSqrt5(1));
  CHECK(sqrt5_pow(2) == QSqrt5(5));
  CHECK(sqrt5_pow(3) == QSqrt5(0, 5));
  CHECK(sqrt5_pow(-1) == q(0, 1, 1, 5));
  CHECK(sqrt5_pow(-2) == q(1, 5));
  for (long e = -7; e <= 7; ++e) CHECK(sqrt5_pow(e) * sqrt5_pow(e) == QSqrt5(pow(Rational(5), e)));
}

TEST_CASE("Q(sqrt5, i) products") {
  QSqrt5i i = QSqrt5i::i();
  CHECK(q5i_mul(QSqrt5i(1) + i, QSqrt5i(1) - i) == QSqrt5i(2));
  QSqrt5i z = QSqrt5i(1) + QSqrt5i(2) * i;
  CHECK(z * z == QSqrt5i(QSqrt5(-3), QSqrt5(4)));
  QSqrt5i w = i * QSqrt5i(QSqrt5::sqrt5());
  CHECK(w * w == QSqrt5i(-5));
  CHECK(pow(QSqrt5i(1) + i, 8) == QSqrt5i(16));
  CHECK(pow(QSqrt5i(1) + i, -2) * pow(QSqrt5i(1) + i, 2) == QSqrt5i(1));
}

TEST_CASE("embedding into intervals") {
  Interval zero = q5_embed(QSqrt5(), 128);
  CHECK(zero.mid().is_zero());
  CHECK(zero.rad().is_zero());
  Interval four = q5_embed(QSqrt5(-4), 128);
  CHECK(mpfr_cmp_si(four.mid().get(), -4) == 0);
  CHECK(four.rad().is_zero());

  // Independent sqrt5: integer square root of 5 * 10^80 brackets sqrt5 to 1e-40.
  BigInt scale = pow(BigInt(10), 40);
  BigInt s;
  BigInt five_scaled = 5 * scale * scale;
  mpz_sqrt(s.get_mpz_t(), five_scaled.get_mpz_t());
  Rational lo = (Rational(1) + Rational(s, scale)) / 2;
  Rational hi = (Rational(1) + Rational(s + 1, scale)) / 2;
  Interval a = q5_embed(alpha(), 128);
  Interval bracket = Interval::hull(Interval::from_rational(lo, 256).lower(),
                                    Interval::from_rational(hi, 256).upper(), 256);
  CHECK(bracket.overlaps(a));
  CHECK(mpfr_cmp_d(a.mid().get(), 1.6180339887) > 0);
  CHECK(mpfr_cmp_d(a.mid().get(), 1.6180339888) < 0);
}

TEST_CASE("embedding radius is within two ulps of the midpoint scale") {
  testing::Gen gen(11);
  for (int t = 0; t < 300; ++t) {
    QSqrt5 x = gen.qsqrt5();
    if (x.is_zero()) continue;
    for (mpfr_prec_t prec : {64, 128, 256}) {
      Interval e = q5_embed(x, prec);
      Real bound(kRadiusPrecision);
      mpfr_abs(bound.get(), e.mid().get(), MPFR_RNDD);
      mpfr_mul_2si(bound.get(), bound.get(), 1 - prec, MPFR_RNDD);
      CHECK(mpfr_cmp(e.rad().get(), bound.get()) <= 0);
      CHECK(e.is_positive() == (x.sign() > 0));
    }
  }
  // Heavy cancellation: alpha^-60 is about 3e-13 while its components are near 1e12.
  Interval tiny = q5_embed(alpha_pow(-60), 256);
  Real bound(kRadiusPrecision);
  mpfr_mul_2si(bound.get(), tiny.mid().get(), -255, MPFR_RNDD);
  CHECK(mpfr_cmp(tiny.rad().get(), bound.get()) <= 0);
}

TEST_CASE("componentwise equality over a rational grid") {
  std::vector<Rational> grid{make_rational(0), make_rational(1), make_rational(-1),
                             make_rational(1, 2), make_rational(5, 3), make_rational(-7, 4)};
  for (const auto& p : grid)
    for (const auto& qq : grid)
      for (const auto& r : grid)
        for (const auto& s : grid) {
          bool same = (p == r) && (qq == s);
          CHECK((QSqrt5(p, qq) == QSqrt5(r, s)) == same);
        }
}

TEST_CASE("ring homomorphism into intervals") {
  testing::Gen gen(2024);
  for (int t = 0; t < 1000; ++t) {
    QSqrt5 x = gen.qsqrt5(), y = gen.qsqrt5();
    Interval prod = q5_embed(x, 128) * q5_embed(y, 128);
    CHECK(prod.contains(q5_embed(x * y, 256)));
    Interval sum = q5_embed(x, 128) + q5_embed(y, 128);
    CHECK(sum.overlaps(q5_embed(x + y, 128)));
  }
}

TEST_CASE("conjugation and norm") {
  testing::Gen gen(7);
  for (int t = 0; t < 500; ++t) {
    QSqrt5 x = gen.qsqrt5(), y = gen.qsqrt5();
    CHECK((x * y).conj() == x.conj() * y.conj());
    CHECK((x + y).conj() == x.conj() + y.conj());
    CHECK((x * y).norm() == x.norm() * y.norm());
    if (!y.is_zero()) CHECK((x / y) * y == x);
  }
}

TEST_CASE("Q(sqrt5, i) field axioms") {
  testing::Gen gen(99);
  for (int t = 0; t < 300; ++t) {
    QSqrt5i x = gen.qsqrt5i(), y = gen.qsqrt5i(), z = gen.qsqrt5i();
    CHECK(x * (y + z) == x * y + x * z);
    CHECK((x * y).conj() == x.conj() * y.conj());
    if (!y.is_zero()) CHECK((x / y) * y == x);
  }
}

TEST_CASE("exact sign agrees with the embedding") {
  testing::Gen gen(5);
  for (int t = 0; t < 1000; ++t) {
    QSqrt5 x = gen.qsqrt5();
    Interval e = q5_embed(x, 128);
    if (x.sign() > 0) CHECK(e.is_positive());
    if (x.sign() < 0) CHECK(e.is_negative());
    if (x.sign() == 0) CHECK(x.is_zero());
  }
  CHECK(QSqrt5(9, -4).sign() == 1);   // 9 - 4 sqrt5 = 0.0557...
  CHECK(QSqrt5(-9, 4).sign() == -1);
  CHECK(alpha() > QSqrt5(make_rational(161, 100)));
  CHECK(beta() < QSqrt5(0));
}

TEST_CASE("text round trip") {
  testing::Gen gen(3);
  for (int t = 0; t < 300; ++t) {
    QSqrt5 x = gen.qsqrt5();
    CHECK(parse_qsqrt5(to_exact_string(x)) == x);
    CHECK(parse_qsqrt5(to_string(x)) == x);
  }
  CHECK(parse_qsqrt5("sqrt5") == QSqrt5::sqrt5());
  CHECK(parse_qsqrt5("-sqrt5") == -QSqrt5::sqrt5());
  CHECK(parse_qsqrt5("1/3*sqrt5") == q(0, 1, 1, 3));
  CHECK(parse_qsqrt5("1/2+1/2*sqrt5") == alpha());
  CHECK(parse_qsqrt5("0.25") == q(1, 4));
  CHECK(parse_qsqrt5("-3") == QSqrt5(-3));
  CHECK(to_exact_string(QSqrt5(make_rational(32, 5))) == "32/5+0*sqrt5");
  CHECK(to_exact_string(beta()) == "1/2-1/2*sqrt5");
  CHECK_THROWS(parse_qsqrt5("1/0"));
  CHECK_THROWS(parse_qsqrt5("abc"));
}

TEST_CASE("rational powers") {
  CHECK(pow(Rational(0), 0) == 1);
  CHECK(pow(make_rational(2, 3), -2) == make_rational(9, 4));
  CHECK_THROWS_AS(pow(Rational(0), -1), std::domain_error);
  CHECK(pow(QSqrt5(), 0) == QSqrt5(1));
}
