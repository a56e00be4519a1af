#include "floorsum/binom.hpp"

#include "floorsum/sequences.hpp"
#include "floorsum/transcendental.hpp"

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace floorsum {

Rational floor_weight(FloorWeight w, long j) {
  const long h = floor_div(j, 2);
  switch (w) {
    case FloorWeight::floor_half:
      return Rational(h);
    case FloorWeight::floor_half_squared:
      return Rational(h * h);
    case FloorWeight::alternating:
      return Rational(neg_one_pow(h));
  }
  return Rational(0);
}

namespace {

void check_shift(long n, long r, long s) {
  if (r < 0 || s < 0) throw std::invalid_argument("shifts r and s must be non-negative");
  if (n - r < 0) throw std::invalid_argument("n - r must be non-negative");
}

template <class T>
T direct_sum(const T& b, const T& c, long n, FloorWeight w, long r, long s) {
  check_shift(n, r, s);
  const long top = n - r;
  T total;
  for (long j = s; j <= top + s; ++j) {
    const Rational wt = floor_weight(w, j);
    if (wt == 0) continue;
    const Rational coef = Rational(binom(top, j - s)) * wt;
    total += T(coef) * pow(b, top - (j - s)) * pow(c, j - s);
  }
  return total;
}

// coef * x^e with 0 * 0^e = 0 for negative e.
QSqrt5 scaled_pow(const QSqrt5& coef, const QSqrt5& x, long e) {
  if (coef.is_zero()) return QSqrt5();
  return coef * pow(x, e);
}

QSqrt5 half(long num, long den) { return QSqrt5(make_rational(num, den)); }

}  // namespace

Rational floor_binom_sum(const Rational& b, const Rational& c, long n, FloorWeight w, long r, long s) {
  return direct_sum(b, c, n, w, r, s);
}

QSqrt5 floor_binom_sum(const QSqrt5& b, const QSqrt5& c, long n, FloorWeight w, long r, long s) {
  return direct_sum(b, c, n, w, r, s);
}

QSqrt5 floor_half_closed(const QSqrt5& b, const QSqrt5& c, long n, long r, long s) {
  check_shift(n, r, s);
  if (n < r + s) throw std::invalid_argument("n must be >= r + s");
  const long e = n - r - s;
  if (e == 0 && (b + c).is_zero()) throw std::domain_error("(b+c)^(n-r-s-1) is 0/0 at b = -c, n = r + s");
  const QSqrt5 first = (QSqrt5(n - r) * c + b * QSqrt5(s)) * half(1, 2);
  return scaled_pow(first, b + c, e - 1) -
         (pow(b + c, e) - QSqrt5(neg_one_pow(s)) * pow(b - c, e)) * half(1, 4);
}

QSqrt5 floor_half_squared_closed(const QSqrt5& b, const QSqrt5& c, long n, long r, long s) {
  check_shift(n, r, s);
  const long e = n - r;
  QSqrt5 out = scaled_pow(half((e - 1) * e, 4) * c * c, b + c, e - 2);
  out += scaled_pow(half(e * 2 * s, 4) * c, b + c, e - 1);
  out -= scaled_pow(half(e * neg_one_pow(s), 4) * c, b - c, e - 1);
  out += half(2 * s * (s - 1) + 1, 8) * pow(b + c, e);
  out += half(neg_one_pow(s) * (2 * s - 1), 8) * pow(b - c, e);
  return out;
}

QSqrt5i alternating_closed(const QSqrt5& b, const QSqrt5& c, long n, long r, long s) {
  check_shift(n, r, s);
  const QSqrt5i I = QSqrt5i::i(), h(half(1, 2));
  const QSqrt5i bi(b), ci(c);
  return h * (QSqrt5i(1) - I) * pow(I, s) * pow(bi + I * ci, n - r) +
         h * (QSqrt5i(1) + I) * pow(-I, s) * pow(bi - I * ci, n - r);
}

Interval alternating_polar(const Rational& b, const Rational& c, long n, long r, long s, mpfr_prec_t prec) {
  check_shift(n, r, s);
  if (b == 0) throw std::invalid_argument("polar form needs b != 0");
  const long e = n - r;
  const Rational mod2 = b * b + c * c;
  Interval radius = sqrt(Interval::from_rational(2 * pow(mod2, e), prec));
  const Rational ratio = c / b;
  Interval angle = mul_si(atan(Interval::from_rational(ratio, prec)), e) +
                   div_ui(mul_si(pi_iv(prec), 2 * s - 1), 4);
  Interval out = radius * cos(angle);
  return b < 0 ? -out : out;
}

namespace {

const std::vector<Rational>& reduction_bc() {
  static const std::vector<Rational> g{Rational(1), Rational(-1), Rational(2), make_rational(1, 2),
                                       make_rational(-1, 3)};
  return g;
}

// Collects exact comparisons and folds them into one verdict.
class Tally {
 public:
  explicit Tally(std::string id, mpfr_prec_t prec) : id_(std::move(id)), prec_(prec) {}

  void add(const QSqrt5& general, const QSqrt5& special, const std::string& where) {
    ++cells_;
    if (general != special) {
      ++mismatches_;
      if (first_.empty()) first_ = where + ": " + to_exact_string(general) + " vs " + to_exact_string(special);
      if (!have_pair_) {
        lhs_ = general, rhs_ = special, have_pair_ = true;
      }
    }
  }
  void add(const QSqrt5i& general, const QSqrt5i& special, const std::string& where) {
    add(general.re(), special.re(), where + " (re)");
    --cells_;
    add(general.im(), special.im(), where + " (im)");
  }

  Verdict finish() const {
    Verdict v = exact_verdict(id_, {}, lhs_, rhs_, prec_);
    v.status = mismatches_ == 0 ? Status::confirmed : Status::refuted;
    v.note = std::to_string(cells_) + " cells, " + std::to_string(mismatches_) + " mismatches";
    if (!first_.empty()) v.note += "; first: " + first_;
    return v;
  }

 private:
  std::string id_;
  mpfr_prec_t prec_;
  long cells_ = 0;
  long mismatches_ = 0;
  bool have_pair_ = false;
  QSqrt5 lhs_;
  QSqrt5 rhs_;
  std::string first_;
};

std::string at(long n, long r = 0, long s = 0) {
  return "n=" + std::to_string(n) + ",r=" + std::to_string(r) + ",s=" + std::to_string(s);
}

// Right-hand sides of the unshifted identities, written independently of the
// shifted closed forms.
QSqrt5 main_floor_rhs(const QSqrt5& b, const QSqrt5& c, long n) {
  return scaled_pow(c * QSqrt5(n) * half(1, 2), b + c, n - 1) - (pow(b + c, n) - pow(b - c, n)) * half(1, 4);
}

QSqrt5 main_floor_squared_rhs(const QSqrt5& b, const QSqrt5& c, long n) {
  return scaled_pow(c * c * half(n * (n - 1), 4), b + c, n - 2) + (pow(b + c, n) - pow(b - c, n)) * half(1, 8) -
         scaled_pow(c * half(n, 4), b - c, n - 1);
}

QSqrt5i main_alternating_rhs(const QSqrt5& b, const QSqrt5& c, long n) {
  const QSqrt5i I = QSqrt5i::i(), h(half(1, 2));
  return h * (QSqrt5i(1) - I) * pow(QSqrt5i(b) + I * QSqrt5i(c), n) +
         h * (QSqrt5i(1) + I) * pow(QSqrt5i(b) - I * QSqrt5i(c), n);
}

QSqrt5 two_pow(long e) { return QSqrt5(pow(Rational(2), e)); }

}  // namespace

Verdict reduction_check(std::string_view general, std::string_view special, const Policy& policy) {
  const std::string g(general), sp(special);
  const std::string id = g + "->" + sp;
  Tally t(id, policy.precision);
  const QSqrt5 one(1), minus_one(-1);
  if (g == "B15" && sp == "B01") {
    for (const auto& b : reduction_bc())
      for (const auto& c : reduction_bc())
        for (long n = 1; n <= 30; ++n)
          t.add(floor_half_closed(QSqrt5(b), QSqrt5(c), n, 0, 0), main_floor_rhs(QSqrt5(b), QSqrt5(c), n), at(n));
  } else if (g == "B22" && sp == "B19") {
    for (const auto& b : reduction_bc())
      for (const auto& c : reduction_bc())
        for (long n = 1; n <= 30; ++n)
          t.add(floor_half_squared_closed(QSqrt5(b), QSqrt5(c), n, 0, 0),
                main_floor_squared_rhs(QSqrt5(b), QSqrt5(c), n), at(n));
  } else if (g == "B28" && sp == "B26") {
    for (const auto& b : reduction_bc())
      for (const auto& c : reduction_bc())
        for (long n = 2; n <= 30; ++n)
          t.add(alternating_closed(QSqrt5(b), QSqrt5(c), n, 0, 0), main_alternating_rhs(QSqrt5(b), QSqrt5(c), n),
                at(n));
  } else if (g == "B16" && sp == "B15") {
    // b = c = 1 and b = -1, c = 1 in the floor(j/2) shifted identity.
    for (long n = 1; n <= 30; ++n)
      for (long r = 0; r <= 5; ++r)
        for (long s = 0; s <= 5; ++s) {
          if (n > r + s) {
            QSqrt5 stated = two_pow(n - s - r - 2) * QSqrt5(n + s - r - 1);
            t.add(stated, floor_half_closed(one, one, n, r, s), at(n, r, s));
          }
          if (n >= r + s + 2) {
            QSqrt5 stated = two_pow(n - s - r - 2);
            t.add(stated, QSqrt5(neg_one_pow(n - r)) * floor_half_closed(minus_one, one, n, r, s), at(n, r, s));
          }
        }
  } else if (g == "B23" && sp == "B22") {
    for (long n = 0; n <= 30; ++n)
      for (long r = 0; r <= 6; ++r)
        for (long s = 0; s <= r; ++s) {
          if (n - 2 >= r) {
            const Rational x = Rational(n + 2 * s - r) - make_rational(1, 2);
            QSqrt5 stated = two_pow(n - r - 4) * QSqrt5(x * x + make_rational(7, 4) - Rational(2 * s));
            t.add(stated, floor_half_squared_closed(one, one, n, r, s), at(n, r, s));
          }
          if (n - 2 > r) {
            QSqrt5 stated = two_pow(n - r - 3) * QSqrt5(n + 2 * s - r - 1);
            t.add(stated, QSqrt5(neg_one_pow(n - r + s)) * floor_half_squared_closed(minus_one, one, n, r, s),
                  at(n, r, s));
          }
        }
    for (long n = 0; n <= 30; ++n)
      for (long s = 1; 2 * s + 2 <= n; ++s) {
        QSqrt5 third = two_pow(n - 2 * s - 4) * QSqrt5(n * n - n - 2 * s + 2);
        t.add(third, floor_half_squared_closed(one, one, n, 2 * s, s), at(n, 2 * s, s));
        QSqrt5 fourth = two_pow(n - 2 * s - 2) * QSqrt5(n);
        t.add(fourth, QSqrt5(neg_one_pow(n - s + 1)) * floor_half_squared_closed(minus_one, one, n, 2 * s - 1, s),
              at(n, 2 * s - 1, s));
      }
  } else {
    throw std::invalid_argument("unregistered reduction pair " + id);
  }
  return t.finish();
}

}  // namespace floorsum
