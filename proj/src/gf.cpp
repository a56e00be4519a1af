#include "floorsum/gf.hpp"

namespace floorsum {

QSqrt5 binet_sum(const GF& g, SeqKind kind, long s, long c, const QSqrt5& z) {
  QSqrt5 a = evaluate(g, alpha_pow(s) * z) * alpha_pow(c);
  QSqrt5 b = evaluate(g, beta_pow(s) * z) * beta_pow(c);
  if (kind == SeqKind::lucas) return a + b;
  return (a - b) / QSqrt5::sqrt5();
}

QSqrt5 floor_binet_sum(const GF& a, long k, Sign sign, SeqKind kind, long s, long c,
                       const QSqrt5& z) {
  return binet_sum(floor_transform_gf(a, k, sign), kind, s, c, z);
}

GF geometric_gf(const QSqrt5& ratio) { return {Poly(QSqrt5(1)), Poly({QSqrt5(1), -ratio})}; }

GF fibonacci_gf() { return {Poly::z(), Poly({QSqrt5(1), QSqrt5(-1), QSqrt5(-1)})}; }

GF lucas_gf() { return {Poly({QSqrt5(2), QSqrt5(-1)}), Poly({QSqrt5(1), QSqrt5(-1), QSqrt5(-1)})}; }

GF identity_gf() { return {Poly::z(), Poly({QSqrt5(1), QSqrt5(-1)}).pow(2)}; }

GF square_gf() {
  return {Poly({QSqrt5(0), QSqrt5(1), QSqrt5(1)}), Poly({QSqrt5(1), QSqrt5(-1)}).pow(3)};
}

}  // namespace floorsum
