#include "catalog_util.hpp"
#include "floorsum/binom.hpp"

#include <functional>

namespace floorsum {

using namespace catalog;

namespace {

using Term = std::function<Rational(long)>;

Rational sum_over(long lo, long hi, const Term& t) {
  Rational out;
  for (long j = lo; j <= hi; ++j) out += t(j);
  return out;
}

Rational C(long n, long k) { return Rational(binom(n, k)); }
Rational h(long j) { return R(floor_div(j, 2)); }
Rational h2(long j) { return R(floor_div(j, 2) * floor_div(j, 2)); }
Rational two(long e) { return rpow(R(2), e); }
Rational five(long e) { return rpow(R(5), e); }
QSqrt5 s5(long e) { return sqrt5_pow(e); }

Rational X(bool lucas, long n) { return lucas ? L(n) : F(n); }

Verdict ex(const char* id, const Params& p, const Policy& pol, const QSqrt5& lhs, const QSqrt5& rhs) {
  return exact_verdict(id, p, lhs, rhs, pol.precision);
}
Verdict ex(const char* id, const Params& p, const Policy& pol, const Rational& lhs, const Rational& rhs) {
  return exact_verdict(id, p, QSqrt5(lhs), QSqrt5(rhs), pol.precision);
}

std::vector<Rational> bc_grid() { return values({R(1), R(-1), R(2), R(-2), Q(1, 2), Q(3, 5), Q(-1, 3)}); }
std::vector<Rational> bc_small() { return values({R(1), R(-1), R(2), Q(1, 2), Q(-1, 3)}); }

std::string bc_nonzero(const Params& p) {
  return require(param(p, "b") != 0 && param(p, "c") != 0, "b and c must be nonzero");
}

// n >= r >= s >= 0
std::string ordered(const Params& p) {
  const long n = param_long(p, "n"), r = param_long(p, "r"), s = param_long(p, "s");
  return require(s >= 0 && r >= s && n >= r, "requires n >= r >= s >= 0");
}

std::string both(const std::string& a, const std::string& b) { return a.empty() ? b : a; }

struct NRS {
  long n, r, s;
};
NRS nrs(const Params& p) { return {param_long(p, "n"), param_long(p, "r"), param_long(p, "s")}; }

// Wraps an exact verdict as a polar comparison; b < 0 cells are reported only.
Verdict polar_verdict(const char* id, const Params& p, const Policy& pol, const Rational& lhs, const Rational& b,
                      Interval rhs) {
  Verdict v = numeric_verdict(id, p, Quantity::of(QSqrt5(lhs), pol.precision), Quantity::of(std::move(rhs)), pol);
  if (b < 0) {
    v.note = std::string("polar form asserted for b > 0 only; comparison gives ") + to_string(v.status);
    v.status = Status::inconclusive;
  }
  return v;
}

Interval two_pow_half(long e, mpfr_prec_t prec) { return sqrt(Interval::from_rational(two(e), prec)); }

Interval quarter_pi(long k, mpfr_prec_t prec) { return div_ui(mul_si(pi_iv(prec), k), 4); }

}  // namespace

void add_binom_catalog(std::vector<IdentityRecord>& out) {
  const ParamSpec bgrid{"b", bc_grid(), {}, "b rational, nonzero"};
  const ParamSpec cgrid{"c", bc_grid(), {}, "c rational, nonzero"};
  const ParamSpec bsmall{"b", bc_small(), {}, "b rational, nonzero"};
  const ParamSpec csmall{"c", bc_small(), {}, "c rational, nonzero"};
  const ParamSpec mgrid{"m", range(-8, 8), {}, "m integer"};
  const ParamSpec m5{"m", range(-5, 5), {}, "m integer"};
  const ParamSpec m10{"m", range(-10, 10), {}, "m integer"};
  const ParamSpec rgrid{"r", range(0, 4), {}, "r >= 0"};
  const ParamSpec sgrid{"s", range(0, 4), {}, "s >= 0"};
  const ParamSpec r6{"r", range(0, 6), {}, "r >= 0"};
  const ParamSpec s6{"s", range(0, 6), {}, "s >= 0"};
  auto n_from = [](long lo, long hi) { return ParamSpec{"n", range(lo, hi), {}, "n >= " + std::to_string(lo)}; };
  auto n_at_least = [](long lo) {
    return [lo](const Params& p) { return require(param_long(p, "n") >= lo, "n must be >= " + std::to_string(lo)); };
  };

  // ---- floor(j/2) ----

  out.push_back({
      .id = "B01",
      .anchor = "Binomial transform of floor(j/2) with weights b^(n-j) c^j",
      .formula = "sum_{j=1}^n C(n,j) floor(j/2) b^(n-j) c^j = c n/2 (b+c)^(n-1) - ((b+c)^n - (b-c)^n)/4, n >= 1",
      .mode = Mode::exact,
      .variants = {},
      .params = {bgrid, cgrid, n_from(1, 40)},
      .validate = [n_at_least](const Params& p) { return both(bc_nonzero(p), n_at_least(1)(p)); },
      .evaluate =
          [](const Params& p, const Policy& pol) {
            const Rational b = param(p, "b"), c = param(p, "c");
            const long n = param_long(p, "n");
            Rational lhs = floor_binom_sum(b, c, n, FloorWeight::floor_half);
            Rational rhs = c * n / 2 * rpow(b + c, n - 1) - (rpow(b + c, n) - rpow(b - c, n)) / 4;
            return ex("B01", p, pol, lhs, rhs);
          },
  });

  out.push_back({
      .id = "B02",
      .anchor = "Sum of C(n,j) floor(j/2), the case b = c",
      .formula = "sum_{j=1}^n C(n,j) floor(j/2) = 2^(n-2) (n-1)",
      .mode = Mode::exact,
      .variants = {},
      .params = {n_from(1, 40)},
      .validate = n_at_least(1),
      .evaluate =
          [](const Params& p, const Policy& pol) {
            const long n = param_long(p, "n");
            Rational lhs = sum_over(1, n, [n](long j) -> Rational { return C(n, j) * h(j); });
            return ex("B02", p, pol, lhs, two(n - 2) * (n - 1));
          },
  });

  out.push_back({
      .id = "B03",
      .anchor = "Alternating and 2^j weighted sums of C(n,j) floor(j/2)",
      .formula = "v1: sum (-1)^j C(n,j) floor(j/2) = 2^(n-2); "
                 "v2: sum C(n,j) 2^j floor(j/2) = n 3^(n-1) - (3^n - (-1)^n)/4; n >= 2",
      .mode = Mode::exact,
      .variants = {1, 2},
      .params = {n_from(2, 40)},
      .validate = n_at_least(2),
      .evaluate =
          [](const Params& p, const Policy& pol) {
            const long v = param_long(p, "v"), n = param_long(p, "n");
            if (v == 1) {
              Rational lhs = sum_over(1, n, [n](long j) -> Rational { return sgn(j) * C(n, j) * h(j); });
              return ex("B03", p, pol, lhs, two(n - 2));
            }
            Rational lhs = sum_over(1, n, [n](long j) -> Rational { return C(n, j) * two(j) * h(j); });
            Rational rhs = n * rpow(R(3), n - 1) - (rpow(R(3), n) - sgn(n)) / 4;
            return ex("B03", p, pol, lhs, rhs);
          },
  });

  auto fib1 = [](bool lucas, const char* id) {
    return [lucas, id](const Params& p, const Policy& pol) {
      const long n = param_long(p, "n"), m = param_long(p, "m");
      Rational lhs = sum_over(1, n, [=](long j) -> Rational { return C(n, j) * h(j) * X(lucas, j + m); });
      Rational tail = lucas ? Rational(L(2 * n + m) - sgn(m) * L(n - m)) : Rational(F(2 * n + m) + sgn(m) * F(n - m));
      Rational rhs = Q(n, 2) * X(lucas, 2 * n + m - 1) - tail / 4;
      return ex(id, p, pol, lhs, rhs);
    };
  };

  out.push_back({
      .id = "B04",
      .anchor = "Fibonacci binomial sum with floor(j/2), (b,c) = (1, alpha)",
      .formula = "sum C(n,j) floor(j/2) F_{j+m} = n/2 F_{2n+m-1} - (F_{2n+m} + (-1)^m F_{n-m})/4",
      .mode = Mode::exact,
      .variants = {},
      .params = {n_from(1, 30), mgrid},
      .validate = n_at_least(1),
      .evaluate = fib1(false, "B04"),
  });

  out.push_back({
      .id = "B05",
      .anchor = "Lucas binomial sum with floor(j/2), (b,c) = (1, alpha)",
      .formula = "sum C(n,j) floor(j/2) L_{j+m} = n/2 L_{2n+m-1} - (L_{2n+m} - (-1)^m L_{n-m})/4",
      .mode = Mode::exact,
      .variants = {},
      .params = {n_from(1, 30), mgrid},
      .validate = n_at_least(1),
      .evaluate = fib1(true, "B05"),
  });

  out.push_back({
      .id = "B06",
      .anchor = "Classical binomial sums of shifted Fibonacci and Lucas numbers",
      .formula = "v1: sum_{j=0}^n C(n,j) F_{j+m} = F_{2n+m}; v2: sum C(n,j) L_{j+m} = L_{2n+m}",
      .mode = Mode::exact,
      .variants = {1, 2},
      .params = {n_from(0, 40), m10},
      .validate = n_at_least(0),
      .evaluate =
          [](const Params& p, const Policy& pol) {
            const bool lucas = param_long(p, "v") == 2;
            const long n = param_long(p, "n"), m = param_long(p, "m");
            Rational lhs = sum_over(0, n, [=](long j) -> Rational { return C(n, j) * X(lucas, j + m); });
            return ex("B06", p, pol, lhs, X(lucas, 2 * n + m));
          },
  });

  // F_{2pj+m} and L_{2pj+m}, odd and even p.
  auto multisection = [](bool lucas, bool odd_p, const char* id) {
    return [=](const Params& p, const Policy& pol) {
      const long n = param_long(p, "n"), m = param_long(p, "m"), q = param_long(p, "p");
      Rational lhs = sum_over(1, n, [=](long j) -> Rational { return C(n, j) * h(j) * X(lucas, 2 * q * j + m); });
      const QSqrt5 Fp(F(q)), Lp(L(q));
      const QSqrt5 Fpn1 = qpow(Fp, n - 1), Fpn = qpow(Fp, n), Lpn1 = qpow(Lp, n - 1), Lpn = qpow(Lp, n);
      const QSqrt5 quarter(Q(1, 4)), halfn(Q(n, 2));
      auto Xq = [](bool luc, long i) { return QSqrt5(X(luc, i)); };
      const long a = q * (n + 1) + m, b = q * n + m;
      QSqrt5 rhs;
      if (odd_p) {
        if (!lucas) {
          rhs = n % 2 != 0 ? halfn * s5(n - 1) * Fpn1 * Xq(false, a) - quarter * s5(n - 1) * Fpn * Xq(true, b) -
                                 quarter * Lpn * Xq(false, b)
                           : halfn * s5(n - 2) * Fpn1 * Xq(true, a) - quarter * s5(n) * Fpn * Xq(false, b) +
                                 quarter * Lpn * Xq(false, b);
        } else {
          rhs = n % 2 != 0 ? halfn * s5(n - 1) * Fpn1 * Xq(true, a) - quarter * s5(n + 1) * Fpn * Xq(false, b) -
                                 quarter * Lpn * Xq(true, b)
                           : halfn * s5(n) * Fpn1 * Xq(false, a) - quarter * s5(n) * Fpn * Xq(true, b) +
                                 quarter * Lpn * Xq(true, b);
        }
      } else {
        const QSqrt5 common = halfn * Lpn1 * Xq(lucas, a) - quarter * Lpn * Xq(lucas, b);
        if (!lucas) {
          rhs = n % 2 != 0 ? common - quarter * s5(n - 1) * Fpn * Xq(true, b)
                           : common + quarter * s5(n) * Fpn * Xq(false, b);
        } else {
          rhs = n % 2 != 0 ? common - quarter * s5(n + 1) * Fpn * Xq(false, b)
                           : common + quarter * s5(n) * Fpn * Xq(true, b);
        }
      }
      return ex(id, p, pol, QSqrt5(lhs), rhs);
    };
  };
  const ParamSpec podd{"p", values({R(1), R(3), R(5)}), {}, "p odd"};
  const ParamSpec peven{"p", values({R(2), R(4)}), {}, "p even"};
  auto p_parity = [](bool odd) {
    return [odd](const Params& p) {
      const long q = param_long(p, "p");
      return both(require((q % 2 != 0) == odd, odd ? "p must be odd" : "p must be even"),
                  require(param_long(p, "n") >= 1, "n must be >= 1"));
    };
  };

  out.push_back({
      .id = "B07",
      .anchor = "Binomial sum of floor(j/2) F_{2pj+m} for odd p",
      .formula = "n odd: n sqrt5^(n-1)/2 F_p^(n-1) F_{p(n+1)+m} - sqrt5^(n-1)/4 F_p^n L_{pn+m} - L_p^n F_{pn+m}/4; "
                 "n even: n sqrt5^(n-2)/2 F_p^(n-1) L_{p(n+1)+m} - sqrt5^n/4 F_p^n F_{pn+m} + L_p^n F_{pn+m}/4",
      .mode = Mode::exact,
      .variants = {},
      .params = {n_from(1, 25), podd, m5},
      .validate = p_parity(true),
      .evaluate = multisection(false, true, "B07"),
  });

  out.push_back({
      .id = "B08",
      .anchor = "Binomial sum of floor(j/2) L_{2pj+m} for odd p",
      .formula = "n odd: n sqrt5^(n-1)/2 F_p^(n-1) L_{p(n+1)+m} - sqrt5^(n+1)/4 F_p^n F_{pn+m} - L_p^n L_{pn+m}/4; "
                 "n even: n sqrt5^n/2 F_p^(n-1) F_{p(n+1)+m} - sqrt5^n/4 F_p^n L_{pn+m} + L_p^n L_{pn+m}/4",
      .mode = Mode::exact,
      .variants = {},
      .params = {n_from(1, 25), podd, m5},
      .validate = p_parity(true),
      .evaluate = multisection(true, true, "B08"),
  });

  out.push_back({
      .id = "B09",
      .anchor = "Binomial sum of floor(j/2) F_{2pj+m} for even p",
      .formula = "n/2 L_p^(n-1) F_{p(n+1)+m} - L_p^n F_{pn+m}/4 + (n odd: -sqrt5^(n-1)/4 F_p^n L_{pn+m}; "
                 "n even: +sqrt5^n/4 F_p^n F_{pn+m})",
      .mode = Mode::exact,
      .variants = {},
      .params = {n_from(1, 25), peven, m5},
      .validate = p_parity(false),
      .evaluate = multisection(false, false, "B09"),
  });

  out.push_back({
      .id = "B10",
      .anchor = "Binomial sum of floor(j/2) L_{2pj+m} for even p",
      .formula = "n/2 L_p^(n-1) L_{p(n+1)+m} - L_p^n L_{pn+m}/4 + (n odd: -sqrt5^(n+1)/4 F_p^n F_{pn+m}; "
                 "n even: +sqrt5^n/4 F_p^n L_{pn+m})",
      .mode = Mode::exact,
      .variants = {},
      .params = {n_from(1, 25), peven, m5},
      .validate = p_parity(false),
      .evaluate = multisection(true, false, "B10"),
  });

  out.push_back({
      .id = "B11",
      .anchor = "Classical binomial sums of F_{2j+m} and L_{2j+m}",
      .formula = "v1: sum C(n,j) F_{2j+m} = 5^((n-1)/2) L_{n+m} (n odd), 5^(n/2) F_{n+m} (n even); "
                 "v2: sum C(n,j) L_{2j+m} = 5^((n+1)/2) F_{n+m} (n odd), 5^(n/2) L_{n+m} (n even)",
      .mode = Mode::exact,
      .variants = {1, 2},
      .params = {n_from(0, 40), m10},
      .validate = n_at_least(0),
      .evaluate =
          [](const Params& p, const Policy& pol) {
            const bool lucas = param_long(p, "v") == 2;
            const long n = param_long(p, "n"), m = param_long(p, "m");
            Rational lhs = sum_over(0, n, [=](long j) -> Rational { return C(n, j) * X(lucas, 2 * j + m); });
            Rational rhs;
            if (n % 2 == 0) {
              rhs = five(n / 2) * X(lucas, n + m);
            } else {
              rhs = lucas ? Rational(five((n + 1) / 2) * F(n + m)) : Rational(five((n - 1) / 2) * L(n + m));
            }
            return ex("B11", p, pol, lhs, rhs);
          },
  });

  out.push_back({
      .id = "B12",
      .anchor = "Binomial sums of floor(j/2) F_{3j+m} and L_{3j+m}",
      .formula = "v1: sum C(n,j) floor(j/2) F_{3j+m} = 2^(n-2) (n F_{2n+m+1} - F_{2n+m} + (-1)^n F_{n+m}); "
                 "v2: the same with L",
      .mode = Mode::exact,
      .variants = {1, 2},
      .params = {n_from(1, 25), m5},
      .validate = n_at_least(1),
      .evaluate =
          [](const Params& p, const Policy& pol) {
            const bool lucas = param_long(p, "v") == 2;
            const long n = param_long(p, "n"), m = param_long(p, "m");
            Rational lhs = sum_over(1, n, [=](long j) -> Rational { return C(n, j) * h(j) * X(lucas, 3 * j + m); });
            Rational rhs =
                two(n - 2) * (n * X(lucas, 2 * n + m + 1) - X(lucas, 2 * n + m) + sgn(n) * X(lucas, n + m));
            return ex("B12", p, pol, lhs, rhs);
          },
  });

  out.push_back({
      .id = "B13",
      .anchor = "Binomial sums of floor(j/2) 2^j F_{j+m} and L_{j+m}, with their classical counterparts",
      .formula = "v1: sum C(n,j) floor(j/2) 2^j F_{j+m} = n F_{3n+m-2} - F_{3n+m}/4 + (n even: 5^(n/2) F_m/4; "
                 "n odd: -5^((n-1)/2) L_m/4); v2: L version with (n even: 5^(n/2) L_m/4; n odd: -5^((n+1)/2) F_m/4); "
                 "v3: sum C(n,j) 2^j F_{j+m} = F_{3n+m}; v4: the same with L",
      .mode = Mode::exact,
      .variants = {1, 2, 3, 4},
      .params = {{"n", range(1, 25), {1, 2}, "n >= 1"}, {"n", range(0, 40), {3, 4}, "n >= 0"},
                 {"m", range(-5, 5), {1, 2}, "m integer"}, {"m", range(-10, 10), {3, 4}, "m integer"}},
      .validate =
          [](const Params& p) {
            const long v = param_long(p, "v");
            return require(param_long(p, "n") >= (v <= 2 ? 1 : 0), "n out of range");
          },
      .evaluate =
          [](const Params& p, const Policy& pol) {
            const long v = param_long(p, "v"), n = param_long(p, "n"), m = param_long(p, "m");
            const bool lucas = v % 2 == 0;
            if (v >= 3) {
              Rational lhs = sum_over(0, n, [=](long j) -> Rational { return C(n, j) * two(j) * X(lucas, j + m); });
              return ex("B13", p, pol, lhs, X(lucas, 3 * n + m));
            }
            Rational lhs = sum_over(1, n, [=](long j) -> Rational { return C(n, j) * h(j) * two(j) * X(lucas, j + m); });
            QSqrt5 rhs(n * X(lucas, 3 * n + m - 2) - X(lucas, 3 * n + m) / 4);
            if (n % 2 == 0) {
              rhs += QSqrt5(five(n / 2) * X(lucas, m) / 4);
            } else {
              rhs -= lucas ? QSqrt5(five((n + 1) / 2) * F(m) / 4) : QSqrt5(five((n - 1) / 2) * L(m) / 4);
            }
            return ex("B13", p, pol, QSqrt5(lhs), rhs);
          },
  });

  out.push_back({
      .id = "B14",
      .anchor = "Signed binomial sums of floor(j/2) F_{2qj+m} and L_{2qj+m}, (b,c) = ((-1)^q, alpha^(2q))",
      .formula = "v1: sum (-1)^(q(n-j)) C(n,j) floor(j/2) F_{2qj+m} = n/2 F_{q(n+1)+m} L_q^(n-1) - F_{qn+m} L_q^n/4 "
                 "+ (n even: 5^(n/2) F_{qn+m} F_q^n/4; n odd: -5^((n-1)/2) L_{qn+m} F_q^n/4); "
                 "v2: L version with (n even: 5^(n/2) L_{qn+m} F_q^n/4; n odd: -5^((n+1)/2) F_{qn+m} F_q^n/4)",
      .mode = Mode::exact,
      .variants = {1, 2},
      .params = {n_from(1, 25), {"q", range(-3, 3), {}, "q integer"}, m5},
      .validate = n_at_least(1),
      .evaluate =
          [](const Params& p, const Policy& pol) {
            const bool lucas = param_long(p, "v") == 2;
            const long n = param_long(p, "n"), q = param_long(p, "q"), m = param_long(p, "m");
            Rational lhs =
                sum_over(0, n, [=](long j) -> Rational { return sgn(q * (n - j)) * C(n, j) * h(j) * X(lucas, 2 * q * j + m); });
            const Rational Lq1 = rpow(L(q), n - 1), Lqn = rpow(L(q), n), Fqn = rpow(F(q), n);
            Rational rhs = Q(n, 2) * X(lucas, q * (n + 1) + m) * Lq1 - X(lucas, q * n + m) * Lqn / 4;
            if (n % 2 == 0) {
              rhs += five(n / 2) * X(lucas, q * n + m) * Fqn / 4;
            } else {
              rhs -= lucas ? Rational(five((n + 1) / 2) * F(q * n + m) * Fqn / 4)
                           : Rational(five((n - 1) / 2) * L(q * n + m) * Fqn / 4);
            }
            return ex("B14", p, pol, lhs, rhs);
          },
  });

  out.push_back({
      .id = "B15",
      .anchor = "Shifted floor(j/2) binomial sums from r b-derivatives and s c-derivatives",
      .formula = "v1: sum C(n-s-r, j-s) floor(j/2) b^(n-j-r) c^(j-s) = ((n-r)c + bs)/2 (b+c)^(n-r-s-1) "
                 "- ((b+c)^(n-r-s) - (-1)^s (b-c)^(n-r-s))/4, n >= r+s (n > r+s when b = -c); "
                 "v2: (r,s) = (1,0) equals (1/n) d/db of the unshifted right side; "
                 "v3: (r,s) = (0,1) equals (1/n) d/dc of the unshifted right side",
      .mode = Mode::exact,
      .variants = {1, 2, 3},
      .params = {bsmall, csmall, {"n", range(0, 16), {1}, "n >= r+s"}, {"n", range(1, 20), {2, 3}, "n >= 1"},
                 {"r", range(0, 3), {1}, "r >= 0"}, {"s", range(0, 3), {1}, "s >= 0"}},
      .validate =
          [](const Params& p) {
            if (auto e = bc_nonzero(p); !e.empty()) return e;
            const long n = param_long(p, "n");
            const bool opposite = param(p, "b") + param(p, "c") == 0;
            if (param_long(p, "v") != 1) return require(n >= 1 && !(opposite && n == 1), "n must be >= 1, > 1 if b = -c");
            const long r = param_long(p, "r"), s = param_long(p, "s");
            return require(r >= 0 && s >= 0 && n >= r + s && !(opposite && n == r + s),
                           "requires n >= r + s, strictly when b = -c");
          },
      .evaluate =
          [](const Params& p, const Policy& pol) {
            const long v = param_long(p, "v"), n = param_long(p, "n");
            const Rational b = param(p, "b"), c = param(p, "c");
            if (v == 1) {
              const long r = param_long(p, "r"), s = param_long(p, "s");
              // C(n-s-r, j-s) b^(n-j-r) is the general sum at n - s.
              Rational lhs = floor_binom_sum(b, c, n - s, FloorWeight::floor_half, r, s);
              return ex("B15", p, pol, QSqrt5(lhs), floor_half_closed(QSqrt5(b), QSqrt5(c), n, r, s));
            }
            // The unshifted right side as a polynomial in the differentiated variable.
            using P = Polynomial<Rational>;
            const bool in_b = v == 2;
            const P x = P::z();
            const P plus = in_b ? P(std::vector<Rational>{c, 1}) : P(std::vector<Rational>{b, 1});
            const P minus = in_b ? P(std::vector<Rational>{Rational(-c), 1}) : P(std::vector<Rational>{b, -1});
            const P cfac = in_b ? P(c) : x;
            const auto un = static_cast<unsigned long>(n);
            P rhs = (cfac * plus.pow(un - 1)).scaled(Q(n, 2)) - (plus.pow(un) - minus.pow(un)).scaled(Q(1, 4));
            const Rational at = in_b ? b : c;
            Rational derived = rhs.derivative().evaluate(at) / n;
            QSqrt5 shifted = floor_half_closed(QSqrt5(b), QSqrt5(c), n, in_b ? 1 : 0, in_b ? 0 : 1);
            return ex("B15", p, pol, QSqrt5(derived), shifted);
          },
  });

  out.push_back({
      .id = "B16",
      .anchor = "Shifted floor(j/2) binomial sums at b = c and b = -c",
      .formula = "v1: sum_{j=1}^n C(n-s-r, j-s) floor(j/2) = 2^(n-s-r-2) (n+s-r-1), n > r+s; "
                 "v2: sum (-1)^j C(n-s-r, j-s) floor(j/2) = 2^(n-s-r-2), n >= r+s+2",
      .mode = Mode::exact,
      .variants = {1, 2},
      .params = {n_from(0, 25), rgrid, sgrid},
      .validate =
          [](const Params& p) {
            auto [n, r, s] = nrs(p);
            const long gap = param_long(p, "v") == 1 ? 1 : 2;
            return require(r >= 0 && s >= 0 && n >= r + s + gap, "n too small for r and s");
          },
      .evaluate =
          [](const Params& p, const Policy& pol) {
            auto [n, r, s] = nrs(p);
            const bool alt = param_long(p, "v") == 2;
            Rational lhs = sum_over(1, n, [=](long j) -> Rational { return (alt ? sgn(j) : R(1)) * C(n - s - r, j - s) * h(j); });
            Rational rhs = alt ? two(n - s - r - 2) : Rational(two(n - s - r - 2) * (n + s - r - 1));
            return ex("B16", p, pol, lhs, rhs);
          },
  });

  out.push_back({
      .id = "B17",
      .anchor = "Even and odd binomial index sums weighted by j",
      .formula = "v1: sum_{j=1}^{floor(n/2)} C(n-s-r, 2j-s) j = 2^(n-s-r-3) (n+s-r); "
                 "v2: sum C(n-s-r, 2j-s+1) j = 2^(n-s-r-3) (n+s-r-2); n >= r+s+2",
      .mode = Mode::exact,
      .variants = {1, 2},
      .params = {n_from(0, 25), rgrid, sgrid},
      .validate =
          [](const Params& p) {
            auto [n, r, s] = nrs(p);
            return require(r >= 0 && s >= 0 && n >= r + s + 2, "requires n >= r + s + 2");
          },
      .evaluate =
          [](const Params& p, const Policy& pol) {
            auto [n, r, s] = nrs(p);
            const long off = param_long(p, "v") == 1 ? 0 : 1;
            Rational lhs = sum_over(1, n / 2, [=](long j) -> Rational { return C(n - s - r, 2 * j - s + off) * j; });
            return ex("B17", p, pol, lhs, two(n - s - r - 3) * (n + s - r - 2 * off));
          },
  });

  out.push_back({
      .id = "B18",
      .anchor = "Binomial sums of 5^j j over even and odd index classes, b = 1/2, c = sqrt5/2",
      .formula = "s odd: v1: sum_{j=1}^{floor(n/2)} C(n-r, 2j-s) 5^j j = 2^(n-r-3) 5^((s+1)/2) ((n-r) L_{n-r-1} "
                 "+ 2s F_{n-r}); v2: sum C(n-r, 2j+1-s) 5^j j = 2^(n-r-3) 5^((s-1)/2) (5(n-r) F_{n-r-1} "
                 "+ 2(s-1) L_{n-r}); s even: v3: sum C(n-r, 2j-s) 5^j j = 2^(n-r-3) 5^(s/2) (5(n-r) F_{n-r-1} "
                 "+ 2s L_{n-r}); v4: sum C(n-r, 2j+1-s) 5^j j = 2^(n-r-3) 5^(s/2) ((n-r) L_{n-r-1} "
                 "+ 2(s-1) F_{n-r}); n >= r >= s",
      .mode = Mode::exact,
      .variants = {1, 2, 3, 4},
      .params = {n_from(0, 30), r6, s6},
      .validate =
          [](const Params& p) {
            const bool odd = param_long(p, "v") <= 2;
            return both(ordered(p), require((param_long(p, "s") % 2 != 0) == odd, "s parity does not match"));
          },
      .evaluate =
          [](const Params& p, const Policy& pol) {
            const long v = param_long(p, "v");
            auto [n, r, s] = nrs(p);
            const long off = v % 2 == 1 ? 0 : 1, e = n - r;
            Rational lhs = sum_over(1, n / 2, [=](long j) -> Rational { return C(e, 2 * j - s + off) * five(j) * j; });
            Rational rhs;
            switch (v) {
              case 1:
                rhs = two(e - 3) * five((s + 1) / 2) * (e * L(e - 1) + 2 * s * F(e));
                break;
              case 2:
                rhs = two(e - 3) * five((s - 1) / 2) * (5 * e * F(e - 1) + 2 * (s - 1) * L(e));
                break;
              case 3:
                rhs = two(e - 3) * five(s / 2) * (5 * e * F(e - 1) + 2 * s * L(e));
                break;
              default:
                rhs = two(e - 3) * five(s / 2) * (e * L(e - 1) + 2 * (s - 1) * F(e));
            }
            return ex("B18", p, pol, lhs, rhs);
          },
  });

  // ---- floor(j/2)^2 ----

  out.push_back({
      .id = "B19",
      .anchor = "Binomial transform of floor(j/2)^2 with weights b^(n-j) c^j",
      .formula = "sum C(n,j) floor(j/2)^2 b^(n-j) c^j = c^2 n(n-1) (b+c)^(n-2)/4 + ((b+c)^n - (b-c)^n)/8 "
                 "- c n (b-c)^(n-1)/4, n >= 0",
      .mode = Mode::exact,
      .variants = {},
      .params = {bgrid, cgrid, n_from(0, 40)},
      .validate = [n_at_least](const Params& p) { return both(bc_nonzero(p), n_at_least(0)(p)); },
      .evaluate =
          [](const Params& p, const Policy& pol) {
            const Rational b = param(p, "b"), c = param(p, "c");
            const long n = param_long(p, "n");
            Rational lhs = floor_binom_sum(b, c, n, FloorWeight::floor_half_squared);
            // Terms with a vanishing coefficient are dropped before powering.
            Rational rhs = (rpow(b + c, n) - rpow(b - c, n)) / 8;
            if (n >= 2) rhs += c * c * n * (n - 1) * rpow(b + c, n - 2) / 4;
            if (n >= 1) rhs -= c * n * rpow(b - c, n - 1) / 4;
            return ex("B19", p, pol, lhs, rhs);
          },
  });

  out.push_back({
      .id = "B20",
      .anchor = "Fibonacci and Lucas binomial sums with floor(j/2)^2",
      .formula = "v1: sum C(n,j) floor(j/2)^2 F_{j+m} = n(n-1)/4 F_{2n+m-2} + (F_{2n+m} + (-1)^m F_{n-m})/8 "
                 "- (-1)^m n/4 F_{n-2-m}; v2: sum C(n,j) floor(j/2)^2 L_{j+m} = n(n-1)/4 L_{2n+m-2} "
                 "+ (L_{2n+m} - (-1)^m L_{n-m})/8 + (-1)^m n/4 L_{n-2-m}",
      .mode = Mode::exact,
      .variants = {1, 2},
      .params = {n_from(0, 30), mgrid},
      .validate = n_at_least(0),
      .evaluate =
          [](const Params& p, const Policy& pol) {
            const bool lucas = param_long(p, "v") == 2;
            const long n = param_long(p, "n"), m = param_long(p, "m");
            Rational lhs = sum_over(1, n, [=](long j) -> Rational { return C(n, j) * h2(j) * X(lucas, j + m); });
            const Rational e = lucas ? R(-1) : R(1);
            Rational rhs = Q(n * (n - 1), 4) * X(lucas, 2 * n + m - 2) +
                           (X(lucas, 2 * n + m) + e * sgn(m) * X(lucas, n - m)) / 8 -
                           e * sgn(m) * n * X(lucas, n - 2 - m) / 4;
            return ex("B20", p, pol, lhs, rhs);
          },
  });

  out.push_back({
      .id = "B21",
      .anchor = "Sums of C(n,j) floor(j/2)^2, plain and alternating",
      .formula = "v1: sum C(n,j) floor(j/2)^2 = 0 (n = 1), 2^(n-4)(n^2-n+2) (n >= 2); "
                 "v2: sum (-1)^j C(n,j) floor(j/2)^2 = 0 (n = 1), 1 (n = 2), 2^(n-3)(n-1) (n >= 3)",
      .mode = Mode::exact,
      .variants = {1, 2},
      .params = {n_from(1, 40)},
      .validate = n_at_least(1),
      .evaluate =
          [](const Params& p, const Policy& pol) {
            const bool alt = param_long(p, "v") == 2;
            const long n = param_long(p, "n");
            Rational lhs = sum_over(1, n, [=](long j) -> Rational { return (alt ? sgn(j) : R(1)) * C(n, j) * h2(j); });
            Rational rhs;
            if (n == 1) {
              rhs = 0;
            } else if (!alt) {
              rhs = two(n - 4) * (n * n - n + 2);
            } else {
              rhs = n == 2 ? R(1) : Rational(two(n - 3) * (n - 1));
            }
            return ex("B21", p, pol, lhs, rhs);
          },
  });

  out.push_back({
      .id = "B22",
      .anchor = "Shifted floor(j/2)^2 binomial sums from r b-derivatives and s c-derivatives",
      .formula = "sum C(n-r, j-s) b^(n-j-r+s) c^(j-s) floor(j/2)^2 = (n-r-1)(n-r)/4 c^2 (b+c)^(n-r-2) "
                 "+ (n-r)c/4 (2s (b+c)^(n-r-1) - (-1)^s (b-c)^(n-r-1)) + (2s(s-1)+1)/8 (b+c)^(n-r) "
                 "+ (-1)^s (2s-1)/8 (b-c)^(n-r), n >= r >= s",
      .mode = Mode::exact,
      .variants = {},
      .params = {bsmall, csmall, n_from(0, 16), rgrid, sgrid},
      .validate = [](const Params& p) { return both(bc_nonzero(p), ordered(p)); },
      .evaluate =
          [](const Params& p, const Policy& pol) {
            const Rational b = param(p, "b"), c = param(p, "c");
            auto [n, r, s] = nrs(p);
            Rational lhs = floor_binom_sum(b, c, n, FloorWeight::floor_half_squared, r, s);
            return ex("B22", p, pol, QSqrt5(lhs), floor_half_squared_closed(QSqrt5(b), QSqrt5(c), n, r, s));
          },
  });

  out.push_back({
      .id = "B23",
      .anchor = "Particular values of the shifted floor(j/2)^2 sums",
      .formula = "v1: sum C(n-r, j-s) floor(j/2)^2 = 2^(n-r-4) ((n+2s-r-1/2)^2 + 7/4 - 2s), n-2 >= r >= s; "
                 "v2: sum (-1)^j C(n-r, j-s) floor(j/2)^2 = 2^(n-r-3) (n+2s-r-1), n-2 > r >= s; "
                 "v3: sum_{j=1}^{2n-s} C(n-2s, j-s) floor(j/2)^2 = 2^(n-2s-4) (n^2-n-2s+2), n >= 2s+2; "
                 "v4: sum_{j=1}^n (-1)^j C(n-2s+1, j-s) floor(j/2)^2 = 2^(n-2s-2) n, n >= 2s+2; "
                 "v4 is v2 at r = 2s-1, so r >= s needs s >= 1",
      .mode = Mode::exact,
      .variants = {1, 2, 3, 4},
      .params = {{"n", range(0, 30), {}, "see formula"},
                 {"r", range(0, 6), {1, 2}, "r >= 0"},
                 {"s", range(0, 6), {}, "s >= 0"}},
      .validate =
          [](const Params& p) {
            const long v = param_long(p, "v"), n = param_long(p, "n"), s = param_long(p, "s");
            if (v == 3) return require(s >= 0 && n >= 2 * s + 2, "requires n >= 2s + 2");
            if (v == 4) return require(s >= 1 && n >= 2 * s + 2, "requires s >= 1 and n >= 2s + 2");
            const long r = param_long(p, "r");
            return require(s >= 0 && r >= s && (v == 1 ? n - 2 >= r : n - 2 > r), "n, r, s out of domain");
          },
      .evaluate =
          [](const Params& p, const Policy& pol) {
            const long v = param_long(p, "v"), n = param_long(p, "n"), s = param_long(p, "s");
            Rational lhs, rhs;
            if (v <= 2) {
              const long r = param_long(p, "r");
              const bool alt = v == 2;
              lhs = sum_over(1, n, [=](long j) -> Rational { return (alt ? sgn(j) : R(1)) * C(n - r, j - s) * h2(j); });
              if (!alt) {
                const Rational x = Rational(n + 2 * s - r) - Q(1, 2);
                rhs = two(n - r - 4) * (x * x + Q(7, 4) - 2 * s);
              } else {
                rhs = two(n - r - 3) * (n + 2 * s - r - 1);
              }
            } else if (v == 3) {
              lhs = sum_over(1, 2 * n - s, [=](long j) -> Rational { return C(n - 2 * s, j - s) * h2(j); });
              rhs = two(n - 2 * s - 4) * (n * n - n - 2 * s + 2);
            } else {
              lhs = sum_over(1, n, [=](long j) -> Rational { return sgn(j) * C(n - 2 * s + 1, j - s) * h2(j); });
              rhs = two(n - 2 * s - 2) * n;
            }
            return ex("B23", p, pol, lhs, rhs);
          },
  });

  out.push_back({
      .id = "B24",
      .anchor = "Even and odd binomial index sums weighted by j^2",
      .formula = "v1: sum_{j=1}^{floor(n/2)} C(n-r, 2j-s) j^2 = 2^(n-r-5) ((n-r+2s)^2 + n-r); "
                 "v2: sum C(n-r, 2j-s+1) j^2 = 2^(n-r-5) ((n-r+2s)^2 - 3(n-r) - 8s + 4); n-2 > r >= s",
      .mode = Mode::exact,
      .variants = {1, 2},
      .params = {n_from(0, 30), r6, s6},
      .validate =
          [](const Params& p) {
            auto [n, r, s] = nrs(p);
            return require(s >= 0 && r >= s && n - 2 > r, "requires n - 2 > r >= s");
          },
      .evaluate =
          [](const Params& p, const Policy& pol) {
            auto [n, r, s] = nrs(p);
            const long off = param_long(p, "v") == 1 ? 0 : 1, e = n - r;
            Rational lhs = sum_over(1, n / 2, [=](long j) -> Rational { return C(e, 2 * j - s + off) * j * j; });
            const long t = e + 2 * s;
            Rational rhs = off == 0 ? Rational(two(e - 5) * (t * t + e)) : Rational(two(e - 5) * (t * t - 3 * e - 8 * s + 4));
            return ex("B24", p, pol, lhs, rhs);
          },
  });

  out.push_back({
      .id = "B25",
      .anchor = "Binomial sums of 5^j j^2 over even and odd index classes, b = 1/2, c = sqrt5/2",
      .formula = "s odd: v1: sum C(n-r, 2j-s) 5^j j^2 = 2^(n-r-5) 5^((s+1)/2) (5(n-r-1)(n-r) F_{n-r-2} "
                 "+ 2(2s+1)(n-r) L_{n-r-1} + 4s^2 F_{n-r}); v2: sum C(n-r, 2j-s+1) 5^j j^2 = 2^(n-r-5) 5^((s-1)/2) "
                 "(5(n-r-1)(n-r) L_{n-r-2} + 10(2s-1)(n-r) F_{n-r-1} + 4(s-1)^2 L_{n-r}); s even: v3: "
                 "2^(n-r-5) 5^(s/2) (5(n-r-1)(n-r) L_{n-r-2} + 10(2s+1)(n-r) F_{n-r-1} + 4s^2 L_{n-r}); v4: "
                 "2^(n-r-5) 5^(s/2) (5(n-r-1)(n-r) F_{n-r-2} + 2(2s-1)(n-r) L_{n-r-1} + 4(s-1)^2 F_{n-r}); "
                 "n >= r >= s",
      .mode = Mode::exact,
      .variants = {1, 2, 3, 4},
      .params = {n_from(0, 30), r6, s6},
      .validate =
          [](const Params& p) {
            const bool odd = param_long(p, "v") <= 2;
            return both(ordered(p), require((param_long(p, "s") % 2 != 0) == odd, "s parity does not match"));
          },
      .evaluate =
          [](const Params& p, const Policy& pol) {
            const long v = param_long(p, "v");
            auto [n, r, s] = nrs(p);
            const long off = v % 2 == 1 ? 0 : 1, e = n - r;
            Rational lhs = sum_over(1, n / 2, [=](long j) -> Rational { return C(e, 2 * j - s + off) * five(j) * j * j; });
            const long q = 5 * (e - 1) * e;
            Rational rhs;
            switch (v) {
              case 1:
                rhs = two(e - 5) * five((s + 1) / 2) * (q * F(e - 2) + 2 * (2 * s + 1) * e * L(e - 1) + 4 * s * s * F(e));
                break;
              case 2:
                rhs = two(e - 5) * five((s - 1) / 2) *
                      (q * L(e - 2) + 10 * (2 * s - 1) * e * F(e - 1) + 4 * (s - 1) * (s - 1) * L(e));
                break;
              case 3:
                rhs = two(e - 5) * five(s / 2) * (q * L(e - 2) + 10 * (2 * s + 1) * e * F(e - 1) + 4 * s * s * L(e));
                break;
              default:
                rhs = two(e - 5) * five(s / 2) *
                      (q * F(e - 2) + 2 * (2 * s - 1) * e * L(e - 1) + 4 * (s - 1) * (s - 1) * F(e));
            }
            return ex("B25", p, pol, lhs, rhs);
          },
  });

  // ---- (-1)^floor(j/2) ----

  out.push_back({
      .id = "B26",
      .anchor = "Binomial transform of (-1)^floor(j/2): complex and polar forms",
      .formula = "v1: sum (-1)^floor(j/2) C(n,j) b^(n-j) c^j = (1-i)/2 (b+ic)^n + (1+i)/2 (b-ic)^n; "
                 "v2: = sgn(b) sqrt(2 (b^2+c^2)^n) cos(n atan(c/b) - pi/4); n >= 2",
      .mode = Mode::exact,
      .variants = {1, 2},
      .params = {bgrid, cgrid, n_from(2, 40)},
      .validate = [n_at_least](const Params& p) { return both(bc_nonzero(p), n_at_least(2)(p)); },
      .evaluate =
          [](const Params& p, const Policy& pol) {
            const Rational b = param(p, "b"), c = param(p, "c");
            const long n = param_long(p, "n");
            Rational lhs = floor_binom_sum(b, c, n, FloorWeight::alternating);
            if (param_long(p, "v") == 2) {
              Interval rhs = sqrt(Interval::from_rational(2 * rpow(b * b + c * c, n), pol.precision)) *
                             cos(mul_si(atan(Interval::from_rational(c / b, pol.precision)), n) -
                                 quarter_pi(1, pol.precision));
              return polar_verdict("B26", p, pol, lhs, b, b < 0 ? -rhs : rhs);
            }
            const QSqrt5i I = QSqrt5i::i(), half(QSqrt5(Q(1, 2)));
            const QSqrt5i bi{QSqrt5(b)}, ci{QSqrt5(c)};
            QSqrt5i rhs = half * (QSqrt5i(1) - I) * pow(bi + I * ci, n) + half * (QSqrt5i(1) + I) * pow(bi - I * ci, n);
            return exact_verdict("B26", p, QSqrt5i(QSqrt5(lhs)), rhs, pol.precision);
          },
  });

  out.push_back({
      .id = "B27",
      .anchor = "Cosine and sine evaluations of (-1)^floor(j/2) and (-1)^(floor(3j/2)+1) binomial sums",
      .formula = "v1: sum (-1)^floor(j/2) C(n,j) = 2^((n+1)/2) cos((n-1) pi/4); "
                 "v2: sum (-1)^(floor(3j/2)+1) C(n,j) = 2^((n+1)/2) sin((n-1) pi/4); n >= 2",
      .mode = Mode::numeric,
      .variants = {1, 2},
      .params = {n_from(2, 40)},
      .validate = n_at_least(2),
      .evaluate =
          [](const Params& p, const Policy& pol) {
            const bool sine = param_long(p, "v") == 2;
            const long n = param_long(p, "n");
            Rational lhs = sine ? sum_over(0, n, [n](long j) -> Rational { return Rational(-sgn(floor_div(3 * j, 2)) * C(n, j)); })
                                : sum_over(0, n, [n](long j) -> Rational { return sgn(floor_div(j, 2)) * C(n, j); });
            Interval angle = quarter_pi(n - 1, pol.precision);
            Interval rhs = two_pow_half(n + 1, pol.precision) * (sine ? sin(angle) : cos(angle));
            return numeric_verdict("B27", p, Quantity::of(QSqrt5(lhs), pol.precision), Quantity::of(rhs), pol);
          },
  });

  out.push_back({
      .id = "B28",
      .anchor = "Shifted (-1)^floor(j/2) binomial sums: complex form, polar form and cosine evaluations",
      .formula = "v1: sum (-1)^floor(j/2) C(n-r, j-s) b^(n-j-r+s) c^(j-s) = (1-i)/2 i^s (b+ic)^(n-r) "
                 "+ (1+i)/2 (-i)^s (b-ic)^(n-r); v2: = sgn(b) sqrt(2 (b^2+c^2)^(n-r)) cos((n-r) atan(c/b) "
                 "+ (2s-1) pi/4); v3: sum (-1)^floor(j/2) C(n-r, j-s) = 2^((n-r+1)/2) cos(pi/4 (n+2s-r-1)); "
                 "v4: sum (-1)^floor(3j/2) C(n-r, j-s) = (-1)^s 2^((n-r+1)/2) cos(pi/4 (n-2s-r+1)); n >= r >= s",
      .mode = Mode::exact,
      .variants = {1, 2, 3, 4},
      .params = {{"b", bc_small(), {1, 2}, "b rational, nonzero"},
                 {"c", bc_small(), {1, 2}, "c rational, nonzero"},
                 {"n", range(0, 16), {1, 2}, "n >= r"},
                 {"n", range(0, 30), {3, 4}, "n >= r"},
                 rgrid,
                 sgrid},
      .validate =
          [](const Params& p) {
            if (param_long(p, "v") <= 2)
              if (auto e = bc_nonzero(p); !e.empty()) return e;
            return ordered(p);
          },
      .evaluate =
          [](const Params& p, const Policy& pol) {
            const long v = param_long(p, "v");
            auto [n, r, s] = nrs(p);
            if (v >= 3) {
              const bool three = v == 4;
              Rational lhs = sum_over(0, n, [=](long j) -> Rational {
                return sgn(floor_div(three ? 3 * j : j, 2)) * C(n - r, j - s);
              });
              Interval angle = quarter_pi(three ? n - 2 * s - r + 1 : n + 2 * s - r - 1, pol.precision);
              Interval rhs = two_pow_half(n - r + 1, pol.precision) * cos(angle);
              if (three && s % 2 != 0) rhs = -rhs;
              return numeric_verdict("B28", p, Quantity::of(QSqrt5(lhs), pol.precision), Quantity::of(rhs), pol);
            }
            const Rational b = param(p, "b"), c = param(p, "c");
            Rational lhs = floor_binom_sum(b, c, n, FloorWeight::alternating, r, s);
            if (v == 2) return polar_verdict("B28", p, pol, lhs, b, alternating_polar(b, c, n, r, s, pol.precision));
            return exact_verdict("B28", p, QSqrt5i(QSqrt5(lhs)), alternating_closed(QSqrt5(b), QSqrt5(c), n, r, s),
                                 pol.precision);
          },
  });

  out.push_back({
      .id = "B29",
      .anchor = "Even and odd index binomial sums from the shifted complex form with ic for c",
      .formula = "v1: sum_{j=0}^{floor(n/2)} C(n-r, 2j-s) b^(n-2j-r+s) c^(2j-s) = ((b+c)^(n-r) + (-1)^s (b-c)^(n-r))/2; "
                 "v2: sum_{j=1}^{floor(n/2)} C(n-r, 2j-s+1) b^(n-2j-1-r+s) c^(2j+1-s) "
                 "= ((b+c)^(n-r) - (-1)^s (b-c)^(n-r))/2; n >= r >= s",
      .mode = Mode::exact,
      .variants = {1, 2},
      .params = {bsmall, csmall, n_from(0, 16), rgrid, sgrid},
      .validate = [](const Params& p) { return both(bc_nonzero(p), ordered(p)); },
      .evaluate =
          [](const Params& p, const Policy& pol) {
            const Rational b = param(p, "b"), c = param(p, "c");
            auto [n, r, s] = nrs(p);
            const long off = param_long(p, "v") == 1 ? 0 : 1, e = n - r;
            Rational lhs = sum_over(off, n / 2, [=](long j) -> Rational {
              const long k = 2 * j - s + off;
              if (k < 0 || k > e) return R(0);
              return C(e, k) * rpow(b, e - k) * rpow(c, k);
            });
            const Rational sign = off == 0 ? sgn(s) : Rational(-sgn(s));
            Rational rhs = (rpow(b + c, e) + sign * rpow(b - c, e)) / 2;
            return ex("B29", p, pol, lhs, rhs);
          },
  });

  out.push_back({
      .id = "B30",
      .anchor = "Binomial sums of 5^j over even and odd index classes, b = 1/2, c = sqrt5/2",
      .formula = "v1: sum_{j=1}^{floor(n/2)} C(n-r, 2j-s) 5^j = 2^(n-r-1) 5^((s+1)/2) F_{n-r}; "
                 "v2: sum_{j=1}^{floor(n/2)} C(n-r, 2j+1-s) 5^j = 2^(n-r-1) 5^((s-1)/2) L_{n-r}; "
                 "v3, v4: the even and odd index right sides at b = 1/2, c = sqrt5/2, rescaled, against v1, v2; "
                 "n >= r >= s, s odd",
      .mode = Mode::exact,
      .variants = {1, 2, 3, 4},
      .params = {n_from(0, 30), r6, {"s", values({R(1), R(3), R(5)}), {}, "s odd"}},
      .validate =
          [](const Params& p) {
            return both(ordered(p), require(param_long(p, "s") % 2 != 0, "s must be odd"));
          },
      .evaluate =
          [](const Params& p, const Policy& pol) {
            const long v = param_long(p, "v");
            auto [n, r, s] = nrs(p);
            const long e = n - r;
            const QSqrt5 v1_rhs = QSqrt5(two(e - 1) * five((s + 1) / 2) * F(e));
            const QSqrt5 v2_rhs = QSqrt5(two(e - 1) * five((s - 1) / 2) * L(e));
            if (v <= 2) {
              const long off = v == 1 ? 0 : 1;
              Rational lhs = sum_over(1, n / 2, [=](long j) -> Rational { return C(e, 2 * j - s + off) * five(j); });
              return ex("B30", p, pol, QSqrt5(lhs), v == 1 ? v1_rhs : v2_rhs);
            }
            const QSqrt5 b(Q(1, 2)), c = sqrt5() * QSqrt5(Q(1, 2));
            const QSqrt5 sign(sgn(s));
            const QSqrt5 scale = QSqrt5(two(e));
            if (v == 3) {
              QSqrt5 even_rhs = (qpow(b + c, e) + sign * qpow(b - c, e)) * QSqrt5(Q(1, 2));
              return ex("B30", p, pol, scale * s5(s) * even_rhs, v1_rhs);
            }
            QSqrt5 odd_rhs = (qpow(b + c, e) - sign * qpow(b - c, e)) * QSqrt5(Q(1, 2));
            return ex("B30", p, pol, scale * s5(s - 1) * odd_rhs, v2_rhs);
          },
  });
}

}  // namespace floorsum
