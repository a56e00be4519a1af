#include "floorsum/sequences.hpp"

#include <stdexcept>

namespace floorsum {

void SequenceCache::extend_fib(long n) {
  std::unique_lock lock(fib_mutex_);
  while (static_cast<long>(fib_.size()) <= n) {
    std::size_t m = fib_.size();
    fib_.push_back(fib_[m - 1] + fib_[m - 2]);
    lucas_.push_back(lucas_[m - 1] + lucas_[m - 2]);
  }
}

BigInt SequenceCache::fib(long n) {
  long m = n < 0 ? -n : n;
  {
    std::shared_lock lock(fib_mutex_);
    if (m < static_cast<long>(fib_.size())) {
      BigInt v = fib_[m];
      return (n < 0 && m % 2 == 0) ? BigInt(-v) : v;
    }
  }
  extend_fib(m);
  return fib(n);
}

BigInt SequenceCache::lucas(long n) {
  long m = n < 0 ? -n : n;
  {
    std::shared_lock lock(fib_mutex_);
    if (m < static_cast<long>(lucas_.size())) {
      BigInt v = lucas_[m];
      return (n < 0 && m % 2 == 1) ? BigInt(-v) : v;
    }
  }
  extend_fib(m);
  return lucas(n);
}

void SequenceCache::extend_harmonic(long n) {
  std::unique_lock lock(harmonic_mutex_);
  while (static_cast<long>(harmonic_.size()) <= n) {
    long j = static_cast<long>(harmonic_.size());
    Rational next = harmonic_.back() + Rational(1, j);
    next.canonicalize();
    harmonic_.push_back(std::move(next));
  }
}

Rational SequenceCache::harmonic(long n) {
  if (n < 0) throw std::domain_error("harmonic number of negative index");
  {
    std::shared_lock lock(harmonic_mutex_);
    if (n < static_cast<long>(harmonic_.size())) return harmonic_[n];
  }
  extend_harmonic(n);
  return harmonic(n);
}

SequenceCache& sequence_cache() {
  static SequenceCache cache;
  return cache;
}

BigInt fib(long n) { return sequence_cache().fib(n); }
BigInt lucas(long n) { return sequence_cache().lucas(n); }
Rational harmonic(long n) { return sequence_cache().harmonic(n); }

Rational gibonacci(const Rational& a, const Rational& b, long n) {
  // G_n = a F_{n-1} + b F_n holds for every integer n.
  return a * Rational(fib(n - 1)) + b * Rational(fib(n));
}

BigInt binom(long n, long k) {
  if (n < 0) throw std::domain_error("binomial coefficient with negative upper index");
  if (k < 0 || k > n) return BigInt(0);
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

long floor_div(long n, long k) {
  if (k == 0) throw std::domain_error("floor division by zero");
  long q = n / k;
  if ((n % k != 0) && ((n < 0) != (k < 0))) --q;
  return q;
}

long ceil_div(long n, long k) { return -floor_div(-n, k); }

}  // namespace floorsum
