#include "doctest.h"
#include "floorsum/sequences.hpp"

#include <thread>
#include <vector>

using namespace floorsum;

namespace {

// Fast doubling: F(2k) = F(k)(2F(k+1) - F(k)), F(2k+1) = F(k)^2 + F(k+1)^2.
std::pair<BigInt, BigInt> fib_pair(unsigned long n) {
  if (n == 0) return {BigInt(0), BigInt(1)};
  auto [a, b] = fib_pair(n / 2);
  BigInt c = a * (2 * b - a);
  BigInt d = a * a + b * b;
  if (n % 2 == 0) return {c, d};
  return {d, c + d};
}

}  // namespace

TEST_CASE("fibonacci values") {
  CHECK(fib(0) == 0);
  CHECK(fib(-5) == 5);
  CHECK(fib(-6) == -8);
  CHECK(fib(10) == 55);
  for (long n = 0; n <= 2000; n += 37) CHECK(fib(n) == fib_pair(static_cast<unsigned long>(n)).first);
}

TEST_CASE("lucas values") {
  CHECK(lucas(0) == 2);
  CHECK(lucas(1) == 1);
  CHECK(lucas(-3) == -4);
  CHECK(lucas(10) == 123);
}

TEST_CASE("recurrences hold on both sides of zero") {
  for (long n = -60; n <= 60; ++n) {
    CHECK(fib(n + 2) == fib(n + 1) + fib(n));
    CHECK(lucas(n + 2) == lucas(n + 1) + lucas(n));
  }
  for (long n = -40; n <= 40; ++n) CHECK(lucas(n) == fib(n - 1) + fib(n + 1));
}

TEST_CASE("gibonacci") {
  CHECK(gibonacci(0, 1, 7) == 13);
  CHECK(gibonacci(2, 1, 4) == 7);
  CHECK(gibonacci(3, 5, 6) == 55);
  for (long n = 0; n <= 60; ++n) {
    CHECK(gibonacci(0, 1, n) == Rational(fib(n)));
    CHECK(gibonacci(2, 1, n) == Rational(lucas(n)));
  }
  // Recurrence oracle with rational seeds.
  Rational a = make_rational(-2, 3), b = make_rational(7, 5);
  Rational g0 = a, g1 = b;
  for (long n = 0; n <= 40; ++n) {
    CHECK(gibonacci(a, b, n) == g0);
    Rational g2 = g0 + g1;
    g0 = g1;
    g1 = g2;
  }
}

TEST_CASE("harmonic numbers") {
  CHECK(harmonic(0) == 0);
  CHECK(harmonic(3) == make_rational(11, 6));
  CHECK(harmonic(5) == make_rational(137, 60));
  CHECK_THROWS_AS(harmonic(-1), std::domain_error);
  Rational h(0);
  for (long n = 1; n <= 200; ++n) {
    h += Rational(1, n);
    h.canonicalize();
    CHECK(harmonic(n) == h);
  }
}

TEST_CASE("binomial coefficients") {
  CHECK(binom(4, 2) == 6);
  CHECK(binom(5, -1) == 0);
  CHECK(binom(5, 6) == 0);
  // Pascal triangle oracle.
  std::vector<BigInt> row{BigInt(1)};
  for (long n = 1; n <= 40; ++n) {
    std::vector<BigInt> next(n + 1);
    next[0] = next[n] = 1;
    for (long k = 1; k < n; ++k) next[k] = row[k - 1] + row[k];
    row = std::move(next);
  }
  CHECK(row[20] == binom(40, 20));
  CHECK(binom(40, 20) == BigInt("137846528820"));
  CHECK_THROWS_AS(binom(-1, 0), std::domain_error);
}

TEST_CASE("floor and ceiling division") {
  CHECK(floor_div(7, 2) == 3);
  CHECK(floor_div(7, -2) == -4);
  CHECK(floor_div(-7, 2) == -4);
  CHECK(floor_div(5, -3) == -2);
  CHECK(-1 - floor_div(4, 3) == -2);
  CHECK_THROWS_AS(floor_div(1, 0), std::domain_error);
  for (long n = -20; n <= 20; ++n)
    for (long k = 1; k <= 8; ++k) {
      // Negative-divisor rewrite: floor(n/(-k)) = -1 - floor((n-1)/k).
      CHECK(floor_div(n, -k) == -1 - floor_div(n - 1, k));
      CHECK(ceil_div(n, k) == -floor_div(-n, k));
      long exact = n / k;
      bool divides = n % k == 0;
      CHECK(ceil_div(n, k) == (divides ? exact : (n > 0 ? exact + 1 : exact)));
    }
}

TEST_CASE("cache is consistent under concurrent access") {
  SequenceCache cache;
  std::vector<std::thread> threads;
  std::vector<int> ok(4, 1);
  for (int t = 0; t < 4; ++t) {
    threads.emplace_back([&, t] {
      for (long n = 500 * (t + 1); n >= -50; --n) {
        if (cache.fib(n + 2) != cache.fib(n + 1) + cache.fib(n)) ok[t] = 0;
        if (n >= 0 && n % 7 == 0 && cache.harmonic(n + 1) - cache.harmonic(n) != Rational(1, n + 1))
          ok[t] = 0;
      }
    });
  }
  for (auto& th : threads) th.join();
  for (int v : ok) CHECK(v == 1);
}
