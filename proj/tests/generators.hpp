#pragma once

// Hand-rolled generators for property tests. Fixed seeds keep runs reproducible.

#include "floorsum/exact.hpp"

#include <random>

namespace floorsum::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

  Rational rational(long max_num = 50, long max_den = 20) {
    return make_rational(integer(-max_num, max_num), integer(1, max_den));
  }

  QSqrt5 qsqrt5(long max_num = 50, long max_den = 20) {
    return QSqrt5(rational(max_num, max_den), rational(max_num, max_den));
  }

  QSqrt5 nonzero_qsqrt5() {
    for (;;) {
      QSqrt5 x = qsqrt5();
      if (!x.is_zero()) return x;
    }
  }

  QSqrt5i qsqrt5i() { return QSqrt5i(qsqrt5(), qsqrt5()); }

 private:
  std::mt19937_64 rng_;
};

}  // namespace floorsum::testing
