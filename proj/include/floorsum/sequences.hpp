#pragma once

#include "floorsum/exact.hpp"

#include <mutex>
#include <shared_mutex>
#include <vector>

namespace floorsum {

// Memoized Fibonacci, Lucas and harmonic numbers. Thread-safe; grows on demand.
class SequenceCache {
 public:
  BigInt fib(long n);
  BigInt lucas(long n);
  Rational harmonic(long n);

 private:
  void extend_fib(long n);
  void extend_harmonic(long n);

  std::shared_mutex fib_mutex_;
  std::vector<BigInt> fib_{BigInt(0), BigInt(1)};
  std::vector<BigInt> lucas_{BigInt(2), BigInt(1)};
  std::shared_mutex harmonic_mutex_;
  std::vector<Rational> harmonic_{Rational(0)};
};

SequenceCache& sequence_cache();

// F_n and L_n for all integers n, with F_{-n} = (-1)^{n+1} F_n and L_{-n} = (-1)^n L_n.
BigInt fib(long n);
BigInt lucas(long n);
// G_n with G_0 = a, G_1 = b, extended backwards by G_{n-1} = G_{n+1} - G_n.
Rational gibonacci(const Rational& a, const Rational& b, long n);
// H_n = sum_{j=1}^{n} 1/j, H_0 = 0. Throws std::domain_error for n < 0.
Rational harmonic(long n);
// C(n, k) for n >= 0; zero outside 0 <= k <= n. Throws std::domain_error for n < 0.
BigInt binom(long n, long k);

long floor_div(long n, long k);
long ceil_div(long n, long k);

inline int neg_one_pow(long n) { return (n % 2 == 0) ? 1 : -1; }

}  // namespace floorsum
