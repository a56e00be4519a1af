#include "series_util.hpp"

namespace floorsum {

using namespace catalog;

namespace {

QSqrt5 f(long n) { return Fq(n); }
QSqrt5 l(long n) { return Lq(n); }
QSqrt5 sg(long e) { return QSqrt5(sgn(e)); }
QSqrt5 pw(const QSqrt5& x, long e) { return qpow(x, e); }
QSqrt5 x_of(SeqKind kind, long n) { return seq_value(kind, n); }
const char* x_name(SeqKind kind) { return kind == SeqKind::fibonacci ? "F" : "L"; }

Interval combo(const QSqrt5& a, const Interval& x, mpfr_prec_t prec) { return q5_embed(a, prec) * x; }

Verdict run(const std::string& id, const Params& p, const Policy& pol, const SeriesCell& cell) {
  return verify_series(id, p, cell, pol);
}

SeriesCell with_closed(SeriesCell cell, QSqrt5 closed) {
  cell.closed_exact = std::move(closed);
  return cell;
}

QSqrt5 point(const Params& p, const std::vector<QSqrt5>& pts) {
  const long i = param_long(p, "pt");
  if (i < 1 || i > static_cast<long>(pts.size())) throw std::invalid_argument("pt out of range");
  return pts[static_cast<std::size_t>(i - 1)];
}

std::string pt_valid(const Params& p, std::size_t count) {
  const long i = param_long(p, "pt");
  return require(i >= 1 && i <= static_cast<long>(count), "pt must be in 1.." + std::to_string(count));
}

std::string point_list(const std::vector<QSqrt5>& pts) {
  std::string out;
  for (std::size_t i = 0; i < pts.size(); ++i)
    out += (i ? ", " : "") + std::to_string(i + 1) + ": " + to_string(pts[i]);
  return out;
}

const std::vector<QSqrt5>& log_points() {
  static const std::vector<QSqrt5> pts = {QSqrt5(Q(1, 2)), QSqrt5(Q(-1, 2)), QSqrt5(Q(1, 3)), QSqrt5(Q(-3, 4)),
                                          QSqrt5(0, Q(1, 5))};
  return pts;
}

// The sequences (a_n) used by the parity families: 1: F_n, 2: n, 3: 1.
struct Choice {
  GF gf;
  SeqFn<QSqrt5> a;
};

Choice choice(long which) {
  switch (which) {
    case 1:
      return {fibonacci_gf(), [](long j) { return Fq(j); }};
    case 2:
      return {identity_gf(), [](long j) { return QSqrt5(j); }};
    default:
      return {geometric_gf(QSqrt5(1)), [](long) { return QSqrt5(1); }};
  }
}

// Bound for |a_{floor(n/k)}|.
Growth choice_growth(long which, long k) {
  if (which == 1) return binet_growth(1, k);
  return polynomial_growth(1, which == 2 ? 1 : 0);
}

const char* choice_names = "a: 1 = F_n, 2 = n, 3 = 1";

std::string k_even(const Params& p) {
  const long k = param_long(p, "k");
  return require(k >= 2 && k % 2 == 0, "k must be a positive even integer");
}

const std::vector<Rational>& zgrid() {
  static const std::vector<Rational> z = values({Q(1, 2), Q(-1, 2), Q(1, 3), Q(2, 3), Q(-3, 4)});
  return z;
}

std::string k_and_z(const Params& p) {
  const Rational& z = param(p, "z");
  return require(param_long(p, "k") >= 1 && z != 0 && abs(z) < 1, "need k >= 1 and 0 < |z| < 1");
}

// (1 +- |z|)/k |z|^n majorant shared by the telescoped log and polylog series.
std::function<Real(long)> telescoped_tail(const QSqrt5& z, long k) {
  const Real c = up((QSqrt5(1) + z.abs()) / QSqrt5(k));
  return geometric_tail_fn(c, 0, up(z));
}

// ---- S34: odd-m parity series ----

struct OddParity {
  SeqKind kind;  // the leading sequence X_{2mn+r+m}
  long which, k, m, r;
};

QSqrt5 odd_parity_term(const OddParity& s, const Choice& c, long n) {
  const SeqKind other = s.kind == SeqKind::fibonacci ? SeqKind::lucas : SeqKind::fibonacci;
  const QSqrt5 coef = s.kind == SeqKind::fibonacci ? f(s.m) : QSqrt5(5) * f(s.m);
  const QSqrt5 first = c.a((2 * n) / s.k) * x_of(s.kind, 2 * s.m * n + s.r + s.m);
  const QSqrt5 second =
      c.a((2 * n - 1) / s.k) * coef * (x_of(other, 2 * s.m * (n - 1) + s.r) + x_of(other, 2 * s.m * n + s.r));
  return (first - second) / pw(QSqrt5(5) * f(s.m) * f(s.m), n);
}

QSqrt5 odd_parity_limit(const OddParity& s, const Choice& c) {
  const SeqKind other = s.kind == SeqKind::fibonacci ? SeqKind::lucas : SeqKind::fibonacci;
  const QSqrt5 coef = s.kind == SeqKind::fibonacci ? f(s.m) : QSqrt5(5) * f(s.m);
  const QSqrt5 d = QSqrt5(5) * f(s.m) * f(s.m);
  const QSqrt5 w = d.inverse();
  const long kh = s.k / 2;
  // floor(2n/k) = floor(n/kh) and floor((2n-1)/k) = floor((n-1)/kh) for even k.
  QSqrt5 first = floor_binet_sum(c.gf, kh, Sign::plus, s.kind, 2 * s.m, s.r + s.m, w) -
                 c.a(0) * x_of(s.kind, s.r + s.m);
  QSqrt5 second = coef * w *
                  (floor_binet_sum(c.gf, kh, Sign::plus, other, 2 * s.m, s.r, w) +
                   floor_binet_sum(c.gf, kh, Sign::plus, other, 2 * s.m, 2 * s.m + s.r, w));
  return first - second;
}

// ---- S41 right-hand sides ----

QSqrt5 final_rhs(long v, long k, long m, const QSqrt5& p) {
  auto P = [&p](long e) { return pw(p, e); };
  const QSqrt5 sk = sg(k), sm = sg(m);
  switch (v) {
    case 1:
      return P(3 * k + 1) * f(k + m) + P(3 * k) * f(k + m - 1) - P(2 * k + 1) * (sk * f(m) + f(2 * k + m)) -
             P(2 * k) * (sk * f(m - 1) + f(2 * k + m - 1)) + sk * P(k + 1) * (sm * f(k - m) + f(k + m)) -
             sk * P(k) * (sm * f(k - m + 1) - f(k + m - 1)) + p * f(m) + f(m - 1);
    case 2:
      return P(3 * k + 1) * l(k + m) + P(3 * k) * l(k + m - 1) - P(2 * k + 1) * (sk * l(m) + l(2 * k + m)) -
             P(2 * k) * (sk * l(m - 1) + l(2 * k + m - 1)) - sk * P(k + 1) * (sm * l(k - m) - l(k + m)) +
             sk * P(k) * (sm * l(k - m + 1) + l(k + m - 1)) + p * l(m) + l(m - 1);
    case 3:
    case 5:
      return QSqrt5(2) * P(4 * k + 1) * f(m) + QSqrt5(2) * P(4 * k) * f(m - 1) +
             P(3 * k + 1) * (QSqrt5(2) * sm * f(k - m) - QSqrt5(3) * f(k + m)) -
             P(3 * k) * (QSqrt5(3) * f(k + m - 1) + QSqrt5(2) * sm * f(k - m + 1)) +
             P(2 * k + 1) * (f(2 * k + m) + QSqrt5(2) * sm * f(2 * k - m) + QSqrt5(3) * sk * (v == 3 ? l(m) : f(m))) +
             P(2 * k) * (f(2 * k + m - 1) + QSqrt5(3) * sk * f(m - 1) - QSqrt5(2) * sm * f(2 * k - m + 1)) +
             (v == 3 ? sk : -sk) * P(k + 1) * (QSqrt5(3) * sm * f(k - m) + f(k + m)) -
             sk * P(k) * (f(k + m - 1) - QSqrt5(3) * sm * f(k - m + 1)) - p * f(m) - f(m - 1);
    default:
      return QSqrt5(2) * P(4 * k + 1) * l(m) + QSqrt5(2) * P(4 * k) * l(m - 1) -
             P(3 * k + 1) * (QSqrt5(3) * l(k + m) + QSqrt5(2) * sm * l(k - m)) -
             P(3 * k) * (QSqrt5(3) * l(k + m - 1) - QSqrt5(2) * sm * l(k - m + 1)) +
             P(2 * k + 1) * (l(2 * k + m) - QSqrt5(2) * sm * l(2 * k - m) + QSqrt5(3) * sk * l(m)) +
             P(2 * k) * (l(2 * k + m - 1) + QSqrt5(3) * sk * l(m - 1) + QSqrt5(2) * sm * l(2 * k - m + 1)) +
             sk * P(k + 1) * (QSqrt5(3) * sm * l(k - m) - l(k + m)) -
             sk * P(k) * (QSqrt5(3) * sm * l(k - m + 1) + l(k + m - 1)) - p * l(m) - l(m - 1);
  }
}

QSqrt5 final_denominator(long k, const QSqrt5& p) {
  auto P = [&p](long e) { return pw(p, e); };
  return (p * p - p - QSqrt5(1)) *
         (P(4 * k) - P(3 * k) * l(k) - P(2 * k) * (l(2 * k) - sg(k)) + sg(k) * P(k) * l(k) + QSqrt5(1));
}

}  // namespace

namespace catalog {

void add_series_catalog_b(std::vector<IdentityRecord>& out) {
  const auto& lp = log_points();
  const ParamSpec kspec{"k", range(1, 5), {}, "k >= 1"};
  const ParamSpec ptspec{"pt", range(1, static_cast<long>(lp.size())), {}, "z index: " + point_list(lp)};

  // ---- telescoped logarithm series ----
  for (auto [id, alt] : {std::pair{"S22", false}, std::pair{"S23", true}}) {
    out.push_back({
        .id = id,
        .anchor = alt ? "Alternating telescoped floor series as a logarithm" : "Telescoped floor series as a logarithm",
        .formula = alt ? "sum_{n>=1} (-1)^(n-1) floor(n/k) (z^n/n + z^(n+1)/(n+1)) = (1/k) log(1 - (-1)^k z^k)"
                       : "sum_{n>=1} floor(n/k) (z^n/n - z^(n+1)/(n+1)) = -(1/k) log(1 - z^k)",
        .mode = Mode::numeric,
        .variants = {},
        .params = {kspec, ptspec},
        .validate =
            [n = lp.size()](const Params& p) {
              auto e = pt_valid(p, n);
              return e.empty() ? require(param_long(p, "k") >= 1, "k must be >= 1") : e;
            },
        .evaluate =
            [id = std::string(id), alt = alt](const Params& prm, const Policy& pol) {
              const long k = param_long(prm, "k");
              const QSqrt5 z = point(prm, log_points());
              SeriesCell cell;
              cell.start = 1;
              cell.term = [z, k, alt](long n) {
                const QSqrt5 a = QSqrt5(Q(n / k, n)) * pw(z, n), b = QSqrt5(Q(n / k, n + 1)) * pw(z, n + 1);
                if (!alt) return a - b;
                return n % 2 == 1 ? a + b : -(a + b);
              };
              cell.tail = telescoped_tail(z, k);
              const QSqrt5 arg = alt ? QSqrt5(1) - sg(k) * pw(z, k) : QSqrt5(1) - pw(z, k);
              cell.closed = [arg, k, alt](mpfr_prec_t prec) {
                return combo(QSqrt5(Q(alt ? 1 : -1, k)), log_iv(arg, prec), prec);
              };
              return run(id, prm, pol, cell);
            },
    });
  }

  const ParamSpec k4{"k", range(1, 4), {}, "k >= 1"};
  const ParamSpec rspec{"r", range(-2, 2), {}, "r integer"};
  out.push_back({
      .id = "S24",
      .anchor = "Telescoped logarithm series at alpha^m/L_m, m even",
      .formula = "v1: sum_{n>=1} floor(n/k)/L_m^(n+1) (L_{mn+r} L_m/n - L_{m(n+1)+r}/(n+1)) = "
                 "-(beta^r/k) log(L_m^(2k) - L_m^k L_{mk} + 1) - (sqrt5/k) F_r log(L_m^k - alpha^(mk)) + L_r log L_m; "
                 "v2: F version = (beta^r/(sqrt5 k)) log(L_m^(2k) - L_m^k L_{mk} + 1) - (L_r/(sqrt5 k)) "
                 "log(L_m^k - alpha^(mk)) + F_r log L_m",
      .mode = Mode::numeric,
      .variants = {1, 2},
      .params = {k4, {"m", values({R(-2), R(0), R(2)}), {}, "m even"}, rspec},
      .validate =
          [](const Params& p) {
            return require(param_long(p, "k") >= 1 && param_long(p, "m") % 2 == 0, "need k >= 1 and m even");
          },
      .evaluate =
          [](const Params& prm, const Policy& pol) {
            const long v = param_long(prm, "v"), k = param_long(prm, "k"), m = param_long(prm, "m"),
                       r = param_long(prm, "r");
            const SeqKind kind = v == 1 ? SeqKind::lucas : SeqKind::fibonacci;
            const QSqrt5 lm = l(m);
            SeriesCell cell;
            cell.start = 1;
            cell.term = [kind, k, m, r, lm](long n) {
              const QSqrt5 a = x_of(kind, m * n + r) * lm * QSqrt5(Q(n / k, n));
              const QSqrt5 b = x_of(kind, m * (n + 1) + r) * QSqrt5(Q(n / k, n + 1));
              return (a - b) / pw(lm, n + 1);
            };
            const QSqrt5 am = alpha_pow(std::labs(m));
            cell.tail = geometric_tail_fn(up(QSqrt5(2) * alpha_pow(std::labs(r)) * (lm + am) / (QSqrt5(k) * lm)), 0,
                                          up(am / lm));
            const QSqrt5 big = pw(lm, 2 * k) - pw(lm, k) * l(m * k) + QSqrt5(1);
            const QSqrt5 small = pw(lm, k) - alpha_pow(m * k);
            const QSqrt5 kk(k), r5 = sqrt5();
            QSqrt5 c1, c2, c3;  // c1 log big + c2 log small + c3 log L_m
            if (kind == SeqKind::lucas) {
              c1 = -beta_pow(r) / kk, c2 = -r5 * f(r) / kk, c3 = l(r);
            } else {
              c1 = beta_pow(r) / (r5 * kk), c2 = -l(r) / (r5 * kk), c3 = f(r);
            }
            cell.closed = [=](mpfr_prec_t prec) {
              return combo(c1, log_iv(big, prec), prec) + combo(c2, log_iv(small, prec), prec) +
                     combo(c3, log_iv(lm, prec), prec);
            };
            return run("S24", prm, pol, cell);
          },
  });

  out.push_back({
      .id = "S25",
      .anchor = "Telescoped logarithm series at alpha^m/(sqrt5 F_m), m odd",
      .formula = "v1: sum_{n>=1} floor(n/k)/(sqrt5^n F_m^(n+1)) (sqrt5 L_{mn+r} F_m/n - L_{m(n+1)+r}/(n+1)) = "
                 "-(sqrt5 alpha^r/k) log(5^k F_m^(2k) - sqrt5^k F_m^k L_{mk} + (-1)^k) + (5 F_r/k) "
                 "log(sqrt5^k F_m^k - beta^(mk)) + sqrt5 L_r log(sqrt5 F_m); v2: F version = -(alpha^r/k) log(...) + "
                 "(L_r/k) log(sqrt5^k F_m^k - beta^(mk)) + sqrt5 F_r log(sqrt5 F_m)",
      .mode = Mode::numeric,
      .variants = {1, 2},
      .params = {k4, {"m", values({R(-1), R(1), R(3)}), {}, "m odd"}, rspec},
      .validate =
          [](const Params& p) {
            return require(param_long(p, "k") >= 1 && param_long(p, "m") % 2 != 0, "need k >= 1 and m odd");
          },
      .evaluate =
          [](const Params& prm, const Policy& pol) {
            const long v = param_long(prm, "v"), k = param_long(prm, "k"), m = param_long(prm, "m"),
                       r = param_long(prm, "r");
            const SeqKind kind = v == 1 ? SeqKind::lucas : SeqKind::fibonacci;
            const QSqrt5 fm = f(m), r5 = sqrt5();
            SeriesCell cell;
            cell.start = 1;
            cell.term = [kind, k, m, r, fm, r5](long n) {
              const QSqrt5 a = r5 * x_of(kind, m * n + r) * fm * QSqrt5(Q(n / k, n));
              const QSqrt5 b = x_of(kind, m * (n + 1) + r) * QSqrt5(Q(n / k, n + 1));
              return (a - b) / (pw(r5, n) * pw(fm, n + 1));
            };
            const QSqrt5 am = alpha_pow(std::labs(m)), afm = fm.abs();
            cell.tail = geometric_tail_fn(
                up(QSqrt5(2) * alpha_pow(std::labs(r)) * (r5 * afm + am) / (QSqrt5(k) * afm)), 0, up(am / (r5 * afm)));
            const QSqrt5 rk = pw(r5, k) * pw(fm, k);
            const QSqrt5 big = pw(QSqrt5(5), k) * pw(fm, 2 * k) - rk * l(m * k) + sg(k);
            const QSqrt5 small = rk - beta_pow(m * k);
            const QSqrt5 kk(k);
            QSqrt5 c1, c2, c3;  // c1 log big + c2 log small + c3 log(sqrt5 F_m)
            if (kind == SeqKind::lucas) {
              c1 = -r5 * alpha_pow(r) / kk, c2 = QSqrt5(5) * f(r) / kk, c3 = r5 * l(r);
            } else {
              c1 = -alpha_pow(r) / kk, c2 = l(r) / kk, c3 = r5 * f(r);
            }
            const QSqrt5 base = r5 * fm;
            cell.closed = [=](mpfr_prec_t prec) {
              return combo(c1, log_iv(big, prec), prec) + combo(c2, log_iv(small, prec), prec) +
                     combo(c3, log_iv(base, prec), prec);
            };
            return run("S25", prm, pol, cell);
          },
  });

  // ---- polylogarithms and zeta ----
  const ParamSpec m4{"m", range(1, 4), {}, "m >= 1"};
  const ParamSpec zpoly{"z", values({Q(1, 2), Q(-1, 2), Q(1, 3), Q(3, 4)}), {}, "0 < |z| <= 0.97"};
  for (auto [id, alt] : {std::pair{"S26", false}, std::pair{"S27", true}}) {
    out.push_back({
        .id = id,
        .anchor = alt ? "Alternating telescoped floor series as a polylogarithm"
                      : "Telescoped floor series as a polylogarithm",
        .formula = alt ? "sum_{n>=1} (-1)^(n-1) floor(n/k) (z^n/n^m + z^(n+1)/(n+1)^m) = -Li_m((-1)^k z^k)/k^m"
                       : "sum_{n>=1} floor(n/k) (z^n/n^m - z^(n+1)/(n+1)^m) = Li_m(z^k)/k^m",
        .mode = Mode::numeric,
        .variants = {},
        .params = {m4, k4, zpoly},
        .validate =
            [](const Params& p) {
              const Rational& z = param(p, "z");
              return require(param_long(p, "m") >= 1 && param_long(p, "k") >= 1 && z != 0 &&
                                 abs(z) <= Q(97, 100),
                             "need m >= 1, k >= 1 and 0 < |z| <= 0.97");
            },
        .evaluate =
            [id = std::string(id), alt = alt](const Params& prm, const Policy& pol) {
              const long m = param_long(prm, "m"), k = param_long(prm, "k");
              const Rational z = param(prm, "z");
              SeriesCell cell;
              cell.start = 1;
              cell.term = [z, k, m, alt](long n) {
                const Rational a = Rational(n / k) * pow(z, n) / pow(Rational(n), m);
                const Rational b = Rational(n / k) * pow(z, n + 1) / pow(Rational(n + 1), m);
                if (!alt) return QSqrt5(Rational(a - b));
                const Rational s = a + b;
                return QSqrt5(n % 2 == 1 ? s : Rational(-s));
              };
              cell.tail = telescoped_tail(QSqrt5(z), k);
              const Rational arg = alt ? Rational(sgn(k) * pow(z, k)) : pow(z, k);
              const Rational scale = Rational(alt ? -1 : 1) / pow(Rational(k), m);
              cell.closed = [m, arg, scale](mpfr_prec_t prec) {
                return Interval::from_rational(scale, prec) * polylog_iv(m, Interval::from_rational(arg, prec));
              };
              return run(id, prm, pol, cell);
            },
    });
  }

  out.push_back({
      .id = "S28",
      .anchor = "Floor series representation of zeta(m)",
      .formula = "zeta(m) = k^m sum_{n>=1} floor(n/k) ((n+1)^m - n^m)/(n^m (n+1)^m)",
      .mode = Mode::numeric,
      .variants = {},
      .params = {{"m", range(2, 4), {}, "m >= 2"}, {"k", range(2, 3), {}, "k >= 1"}},
      .validate =
          [](const Params& p) {
            return require(param_long(p, "m") >= 2 && param_long(p, "k") >= 1, "need m >= 2 and k >= 1");
          },
      .evaluate =
          [](const Params& prm, const Policy& pol) {
            const long m = param_long(prm, "m"), k = param_long(prm, "k");
            constexpr long kBudget = 1L << 18;
            const Rational km = pow(Rational(k), m);
            SeriesCell cell;
            cell.start = 1;
            cell.term = [m, k, km](long n) {
              const Rational a = pow(Rational(n), m), b = pow(Rational(n + 1), m);
              return QSqrt5(Rational(km * (n / k) * (b - a) / (a * b)));
            };
            // term <= k^(m-1) m / n^m, so the tail after N is at most k^(m-1) m / ((m-1) N^(m-1))
            auto tail_q = [m, k](long n) {
              return Rational(pow(Rational(k), m - 1) * m / (Rational(m - 1) * pow(Rational(n), m - 1)));
            };
            cell.tail = [tail_q](long n) { return real_up(tail_q(n)); };
            cell.exact_accumulation = false;
            cell.max_terms = kBudget;
            cell.tolerance_floor = Rational(8 * tail_q(kBudget));
            cell.closed = [m](mpfr_prec_t prec) { return zeta_iv(m, prec, 1L << 16); };
            return run("S28", prm, pol, cell);
          },
  });

  out.push_back({
      .id = "S29",
      .anchor = "Harmonic-number floor series with polylogarithms",
      .formula = "sum_{n>=0} H_{floor(n/k)} z^(n+k)/(floor(n/k)+1)^2 = (1-z^k)/(1-z) ((k/2) log z log^2(1-z^k) + "
                 "log(1-z^k) Li_2(1-z^k) - Li_3(1-z^k) + zeta(3))",
      .mode = Mode::numeric,
      .variants = {},
      .params = {k4, {"z", values({Q(1, 2), Q(2, 3), Q(3, 4)}), {}, "0 < z < 1, z^k >= 0.03"}},
      .validate =
          [](const Params& p) {
            const long k = param_long(p, "k");
            const Rational& z = param(p, "z");
            return require(k >= 1 && z > 0 && z < 1 && pow(z, k) >= Q(3, 100), "need k >= 1, 0 < z < 1, z^k >= 0.03");
          },
      .evaluate =
          [](const Params& prm, const Policy& pol) {
            const long k = param_long(prm, "k");
            const Rational z = param(prm, "z");
            SeriesCell cell;
            cell.start = 0;
            cell.term = [k, z](long n) {
              const long j = n / k;
              return QSqrt5(Rational(harmonic(j) * pow(z, n + k) / ((j + 1) * (j + 1))));
            };
            // H_j <= j + 1
            cell.tail = geometric_tail_fn(up(pow(z, k)), 0, up(z));
            cell.closed = [k, z](mpfr_prec_t prec) {
              const Rational w = 1 - pow(z, k);
              const Interval lw = log(Interval::from_rational(w, prec)), lz = log(Interval::from_rational(z, prec));
              const Interval wi = Interval::from_rational(w, prec);
              Interval inner = div_ui(mul_si(lz * lw * lw, k), 2) + lw * polylog_iv(2, wi) - polylog_iv(3, wi) +
                               zeta3_iv(prec);
              return Interval::from_rational(w / (1 - z), prec) * inner;
            };
            return run("S29", prm, pol, cell);
          },
  });

  out.push_back({
      .id = "S30",
      .anchor = "A floor(n/2) harmonic series for zeta(3)",
      .formula = "zeta(3) = 4(2 - sqrt2) sum_{n>=1} H_{floor(n/2)}/(2^(n/2) floor((n+2)/2)^2) + (4/3) log^3 2",
      .mode = Mode::numeric,
      .variants = {},
      .params = {},
      .validate = {},
      .evaluate =
          [](const Params& prm, const Policy& pol) {
            const mpfr_prec_t prec = pol.precision;
            constexpr long kTerms = 256;
            // n = 2j (j >= 1) and n = 2j+1 (j >= 0) give H_j/(2^j (j+1)^2), the odd ones over sqrt2 as well.
            Rational even, odd;
            for (long j = 0; j <= kTerms; ++j) {
              const Rational t = harmonic(j) / (pow(Rational(2), j) * ((j + 1) * (j + 1)));
              if (j >= 1) even += t;
              odd += t;
            }
            // H_j/(j+1)^2 <= 1, so each tail is at most 2^-kTerms.
            const Real tail = real_up(pow(Rational(2), -kTerms));
            Interval a = Interval::from_rational(even, prec), b = Interval::from_rational(odd, prec);
            a.inflate(tail);
            b.inflate(tail);
            const Interval two = Interval::from_long(2, prec), r2 = sqrt(two);
            const Interval l2 = log(two);
            Interval lhs = mul_si(two - r2, 4) * (a + b / r2) + div_ui(mul_si(l2 * l2 * l2, 4), 3);
            Verdict v = numeric_verdict("S30", prm, Quantity::of(lhs), Quantity::of(zeta3_iv(prec)), pol);
            v.terms_used = 2 * kTerms + 1;
            return v;
          },
  });

  // ---- parity sums for even k ----
  out.push_back({
      .id = "S31",
      .anchor = "Vanishing parity sums for even k",
      .formula = "v1, v2: sum_{n>=1} (1 - 3(-1)^n)/2^n X_{floor(n/2k)} = 0 for X = F, L; v3, v4: sum_{n>=1} "
                 "(1 - 2(-1)^n)/3^n floor(n/2k) X_{floor(n/2k)} = 0; v5, v6: sum_{n>=1} (3 - 5(-1)^n)/4^n "
                 "X_{k floor(n/2k)} = 0; v7: sum_{n>=0} (-1)^n a_{floor(n/k)} = 0 for even k, "
                 "a: 1 = F_n/2^n, 2 = L_n/3^n, 3 = 1/2^n",
      .mode = Mode::exact,
      .variants = {1, 2, 3, 4, 5, 6, 7},
      .params = {{"k", range(1, 4), {1, 2, 3, 4, 5, 6}, "k >= 1"},
                 {"k", values({R(2), R(4), R(6)}), {7}, "k even"},
                 {"a", range(1, 3), {7}, "a: 1 = F_n/2^n, 2 = L_n/3^n, 3 = 1/2^n"}},
      .validate =
          [](const Params& p) {
            if (param_long(p, "v") == 7) {
              auto e = k_even(p);
              if (!e.empty()) return e;
              const long a = param_long(p, "a");
              return require(a >= 1 && a <= 3, "a must be in 1..3");
            }
            return require(param_long(p, "k") >= 1, "k must be >= 1");
          },
      .evaluate =
          [](const Params& prm, const Policy& pol) {
            const long v = param_long(prm, "v"), k = param_long(prm, "k");
            FloorSeries fs;
            if (v == 7) {
              const long a = param_long(prm, "a");
              const QSqrt5 rho = a == 1 ? alpha_pow(1) / QSqrt5(2) : a == 2 ? alpha_pow(1) / QSqrt5(3) : QSqrt5(Q(1, 2));
              const QSqrt5 div = a == 1 ? QSqrt5(2) : a == 2 ? QSqrt5(3) : QSqrt5(2);
              const GF base = a == 1 ? fibonacci_gf() : a == 2 ? lucas_gf() : geometric_gf(QSqrt5(1));
              fs.a_gf = scaled_argument(base, div.inverse());
              fs.a = [a, div](long j) {
                const QSqrt5 x = a == 1 ? f(j) : a == 2 ? l(j) : QSqrt5(1);
                return x / pw(div, j);
              };
              fs.growth = geometric_growth(Real(kRadiusPrecision, a == 2 ? 2 : 1), rho, k);
              fs.k = k;
              fs.weights = {unit_weight(Rational(1), true)};
              return run("S31", prm, pol, with_closed(floor_series_cell(fs), QSqrt5()));
            }
            const SeqKind kind = v % 2 == 1 ? SeqKind::fibonacci : SeqKind::lucas;
            const long c = kind == SeqKind::fibonacci ? 1 : 2;
            long c1 = 1, c2 = -3, q = 2;
            if (v <= 2) {
              fs.a_gf = kind == SeqKind::fibonacci ? fibonacci_gf() : lucas_gf();
              fs.a = [kind](long j) { return x_of(kind, j); };
              fs.growth = binet_growth(c, 2 * k);
            } else if (v <= 4) {
              c1 = 1, c2 = -2, q = 3;
              fs.a_gf = z_derivative(kind == SeqKind::fibonacci ? fibonacci_gf() : lucas_gf());
              fs.a = [kind](long j) { return QSqrt5(j) * x_of(kind, j); };
              fs.growth = binet_growth(c, 2 * k);
              fs.growth.d = 1;
            } else {
              c1 = 3, c2 = -5, q = 4;
              fs.a_gf = multisection_gf(kind, k);
              fs.a = [kind, k](long j) { return x_of(kind, k * j); };
              fs.growth = binet_growth(c, 2);
            }
            fs.k = 2 * k;
            fs.weights = {unit_weight(Rational(c1), false), unit_weight(Rational(c2), true)};
            fs.q = QSqrt5(q);
            fs.start = 1;
            return run("S31", prm, pol, with_closed(floor_series_cell(fs), QSqrt5()));
          },
  });

  out.push_back({
      .id = "S32",
      .anchor = "Vanishing parity sums at alpha/p and beta/p",
      .formula = "v1: sum_{n>=0} a_{floor(n/k)} ((p L_{n+m} - L_{n+m+1}) - (-1)^n (p L_{n+m} + L_{n+m+1}))/p^n = 0; "
                 "v2: the same with F; v3: sum a_{floor(n/k)} (L_{n+m-2} - 5(-1)^n F_{n+m+1})/2^n = 0; "
                 "v4: sum a_{floor(n/k)} (F_{n+m-2} - (-1)^n L_{n+m+1})/2^n = 0; v5: sum a_{floor(n/k)} "
                 "(L_{n+m-1} - (-1)^n (F_{n+m} + L_{n+m+1}))/3^n = 0; v6: sum a_{floor(n/k)} (5 F_{n+m-1} - "
                 "(-1)^n (L_{n+m} + 5 F_{n+m+1}))/3^n = 0; k even, " +
                 std::string(choice_names),
      .mode = Mode::exact,
      .variants = {1, 2, 3, 4, 5, 6},
      .params = {{"a", range(1, 3), {}, choice_names},
                 {"k", values({R(2), R(4)}), {}, "k even"},
                 {"p", values({R(2), R(3)}), {1, 2}, "p >= 2"},
                 {"m", range(-3, 3), {}, "m integer"}},
      .validate =
          [](const Params& p) {
            auto e = k_even(p);
            if (!e.empty()) return e;
            if (param_long(p, "v") <= 2 && param(p, "p") < 2) return std::string("p must be >= 2");
            const long a = param_long(p, "a");
            return require(a >= 1 && a <= 3, "a must be in 1..3");
          },
      .evaluate =
          [](const Params& prm, const Policy& pol) {
            const long v = param_long(prm, "v"), k = param_long(prm, "k"), m = param_long(prm, "m"),
                       which = param_long(prm, "a");
            const auto F_ = SeqKind::fibonacci, L_ = SeqKind::lucas;
            FloorSeries fs;
            const Choice c = choice(which);
            fs.a_gf = c.gf;
            fs.a = c.a;
            fs.growth = choice_growth(which, k);
            fs.k = k;
            switch (v) {
              case 1:
              case 2: {
                const Rational p = param(prm, "p");
                const SeqKind x = v == 1 ? L_ : F_;
                fs.weights = {{p, x, 1, m, false}, {Rational(-1), x, 1, m + 1, false},
                              {Rational(-p), x, 1, m, true}, {Rational(-1), x, 1, m + 1, true}};
                fs.q = QSqrt5(p);
                break;
              }
              case 3:
                fs.weights = {{Rational(1), L_, 1, m - 2, false}, {Rational(-5), F_, 1, m + 1, true}};
                fs.q = QSqrt5(2);
                break;
              case 4:
                fs.weights = {{Rational(1), F_, 1, m - 2, false}, {Rational(-1), L_, 1, m + 1, true}};
                fs.q = QSqrt5(2);
                break;
              case 5:
                fs.weights = {{Rational(1), L_, 1, m - 1, false}, {Rational(-1), F_, 1, m, true},
                              {Rational(-1), L_, 1, m + 1, true}};
                fs.q = QSqrt5(3);
                break;
              default:
                fs.weights = {{Rational(5), F_, 1, m - 1, false}, {Rational(-1), L_, 1, m, true},
                              {Rational(-5), F_, 1, m + 1, true}};
                fs.q = QSqrt5(3);
                break;
            }
            return run("S32", prm, pol, with_closed(floor_series_cell(fs), QSqrt5()));
          },
  });

  out.push_back({
      .id = "S33",
      .anchor = "Vanishing parity sums at alpha^m/L_m, m even",
      .formula = "v1: sum_{n>=1} a_{floor(n/k)}/L_m^n (L_{mn+r-m} - (-1)^n (L_{mn+r} L_m + L_{m(n+1)+r})) = 0; "
                 "v2: the same with F; k even, m even, " +
                 std::string(choice_names),
      .mode = Mode::exact,
      .variants = {1, 2},
      .params = {{"a", range(1, 3), {}, choice_names},
                 {"k", values({R(2), R(4)}), {}, "k even"},
                 {"m", values({R(-2), R(0), R(2)}), {}, "m even"},
                 rspec},
      .validate =
          [](const Params& p) {
            auto e = k_even(p);
            if (!e.empty()) return e;
            const long a = param_long(p, "a");
            return require(a >= 1 && a <= 3 && param_long(p, "m") % 2 == 0, "need a in 1..3 and m even");
          },
      .evaluate =
          [](const Params& prm, const Policy& pol) {
            const long v = param_long(prm, "v"), k = param_long(prm, "k"), m = param_long(prm, "m"),
                       r = param_long(prm, "r"), which = param_long(prm, "a");
            const SeqKind x = v == 1 ? SeqKind::lucas : SeqKind::fibonacci;
            const Choice c = choice(which);
            FloorSeries fs;
            fs.a_gf = c.gf;
            fs.a = c.a;
            fs.growth = choice_growth(which, k);
            fs.k = k;
            fs.weights = {{Rational(1), x, m, r - m, false}, {-L(m), x, m, r, true}, {Rational(-1), x, m, m + r, true}};
            fs.q = l(m);
            fs.start = 1;
            return run("S33", prm, pol, with_closed(floor_series_cell(fs), QSqrt5()));
          },
  });

  out.push_back({
      .id = "S34",
      .anchor = "Vanishing parity sums at alpha^m/(sqrt5 F_m), m odd",
      .formula = "v1: sum_{n>=1} (a_{floor(2n/k)} F_{2mn+r+m} - a_{floor((2n-1)/k)} F_m (L_{2m(n-1)+r} + L_{2mn+r}))/"
                 "(5^n F_m^(2n)) = 0; v2: sum_{n>=1} (a_{floor(2n/k)} L_{2mn+r+m} - 5 a_{floor((2n-1)/k)} F_m "
                 "(F_{2m(n-1)+r} + F_{2mn+r}))/(5^n F_m^(2n)) = 0; k even, m odd, " +
                 std::string(choice_names),
      .mode = Mode::exact,
      .variants = {1, 2},
      .params = {{"a", range(1, 3), {}, choice_names},
                 {"k", values({R(2), R(4)}), {}, "k even"},
                 {"m", values({R(-1), R(1), R(3)}), {}, "m odd"},
                 rspec},
      .validate =
          [](const Params& p) {
            auto e = k_even(p);
            if (!e.empty()) return e;
            const long a = param_long(p, "a");
            return require(a >= 1 && a <= 3 && param_long(p, "m") % 2 != 0, "need a in 1..3 and m odd");
          },
      .evaluate =
          [](const Params& prm, const Policy& pol) {
            const OddParity s{param_long(prm, "v") == 1 ? SeqKind::fibonacci : SeqKind::lucas, param_long(prm, "a"),
                              param_long(prm, "k"), param_long(prm, "m"), param_long(prm, "r")};
            const Choice c = choice(s.which);
            SeriesCell cell;
            cell.start = 1;
            cell.term = [s, c](long n) { return odd_parity_term(s, c, n); };
            // |a_j| <= ca n^da ra^n for j <= 2n/k; |X_i| <= 2 alpha^|i|.
            const Real ra = s.which == 1 ? alpha_pow_up(make_rational(2, s.k)) : Real(kRadiusPrecision, 1);
            const long da = s.which == 2 ? 1 : 0;
            const QSqrt5 afm = f(s.m).abs(), am = alpha_pow(std::labs(s.m)), ar = alpha_pow(std::labs(s.r));
            const QSqrt5 c0 = QSqrt5(2) * ar * am + QSqrt5(10) * afm * ar * (am * am + QSqrt5(1));
            const Real ratio = mul_up(ra, up(am * am / (QSqrt5(5) * afm * afm)));
            if (!below_one(ratio)) {
              cell.divergence = "term ratio bound " + ratio.to_string(4, MPFR_RNDU) + " is not below 1";
            } else {
              cell.tail = geometric_tail_fn(up(c0), da, ratio);
              cell.limit_exact = odd_parity_limit(s, c);
            }
            cell.closed_exact = QSqrt5();
            return run("S34", prm, pol, cell);
          },
  });

  // ---- floor squared ----
  out.push_back({
      .id = "S35",
      .anchor = "Floor-squared series evaluated at rational points",
      .formula = "v1: sum floor(n/k)^2 z^n = z^k (1+z^k)/((1-z)(1-z^k)^2); v2: sum (-1)^n floor(n/k)^2 z^n = "
                 "(-1)^k z^k (1+(-1)^k z^k)/((1+z)(1+(-1)^(k+1) z^k)^2)",
      .mode = Mode::exact,
      .variants = {1, 2},
      .params = {kspec, {"z", zgrid(), {}, "0 < |z| < 1"}},
      .validate = k_and_z,
      .evaluate =
          [](const Params& p, const Policy& pol) {
            const long v = param_long(p, "v"), k = param_long(p, "k");
            const QSqrt5 z(param(p, "z"));
            const QSqrt5 zk = pw(z, k), one(1);
            const QSqrt5 closed =
                v == 1 ? zk * (one + zk) / ((one - z) * pw(one - zk, 2))
                       : sg(k) * zk * (one + sg(k) * zk) / ((one + z) * pw(one + sg(k + 1) * zk, 2));
            FloorSeries fs;
            fs.a_gf = square_gf();
            fs.a = [](long j) { return QSqrt5(j * j); };
            fs.growth = polynomial_growth(1, 2);
            fs.k = k;
            fs.weights = {unit_weight(Rational(1), v == 2)};
            fs.q = z.inverse();
            return run("S35", p, pol, with_closed(floor_series_cell(fs), closed));
          },
  });

  out.push_back({
      .id = "S36",
      .anchor = "Floor-squared Fibonacci and Lucas series over 2^(n+1)",
      .formula = "sum_{n>=0} floor(n/k)^2 X_{n+m-2}/2^(n+1) = (4^k X_{m+2k} + 2^(k+1)(2^(2k-1) - (-1)^k) X_{m+k} + "
                 "2^k X_{m-k} + (1 - 2(-4)^k) X_m)/(4^k - 2^k L_k + (-1)^k)^2; v1: X = F, v2: X = L",
      .mode = Mode::exact,
      .variants = {1, 2},
      .params = {kspec, {"m", range(-5, 5), {}, "m integer"}},
      .validate = [](const Params& p) { return require(param_long(p, "k") >= 1, "k must be >= 1"); },
      .evaluate =
          [](const Params& prm, const Policy& pol) {
            const long v = param_long(prm, "v"), k = param_long(prm, "k"), m = param_long(prm, "m");
            const SeqKind kind = v == 1 ? SeqKind::fibonacci : SeqKind::lucas;
            auto X = [kind](long n) { return x_of(kind, n); };
            const QSqrt5 two(2), four(4);
            const QSqrt5 num = pw(four, k) * X(m + 2 * k) +
                               pw(two, k + 1) * (pw(two, 2 * k - 1) - sg(k)) * X(m + k) + pw(two, k) * X(m - k) +
                               (QSqrt5(1) - two * pw(QSqrt5(-4), k)) * X(m);
            const QSqrt5 den = pw(pw(four, k) - pw(two, k) * l(k) + sg(k), 2);
            FloorSeries fs;
            fs.a_gf = square_gf();
            fs.a = [](long j) { return QSqrt5(j * j); };
            fs.growth = polynomial_growth(1, 2);
            fs.k = k;
            fs.weights = {{Rational(1), kind, 1, m - 2, false}};
            fs.q = two;
            fs.scale = QSqrt5(Q(1, 2));
            return run("S36", prm, pol, with_closed(floor_series_cell(fs), num / den));
          },
  });

  // ---- (-1)^floor(n/k) ----
  out.push_back({
      .id = "S37",
      .anchor = "Generating function of (-1)^floor(n/k) at rational points",
      .formula = "sum_{n>=0} (-1)^floor(n/k) z^n = (1-z^k)/((1-z)(1+z^k))",
      .mode = Mode::exact,
      .variants = {},
      .params = {kspec, {"z", zgrid(), {}, "0 < |z| < 1"}},
      .validate = k_and_z,
      .evaluate =
          [](const Params& p, const Policy& pol) {
            const long k = param_long(p, "k");
            const QSqrt5 z(param(p, "z")), one(1), zk = pw(z, k);
            FloorSeries fs;
            fs.a_gf = geometric_gf(QSqrt5(-1));
            fs.a = [](long j) { return sg(j); };
            fs.growth = polynomial_growth(1, 0);
            fs.k = k;
            fs.weights = {unit_weight()};
            fs.q = z.inverse();
            return run("S37", p, pol, with_closed(floor_series_cell(fs), (one - zk) / ((one - z) * (one + zk))));
          },
  });

  const ParamSpec m44{"m", range(-4, 4), {}, "m integer"};
  out.push_back({
      .id = "S38",
      .anchor = "Fibonacci and Lucas series with signs (-1)^floor(n/k)",
      .formula = "v1: sum_{n>=0} (-1)^floor(n/k) F_{n+m}/p^(n+1) = ((p^(2k) - (-1)^k)(p F_m + F_{m-1}) - p^k (p F_{k+m} "
                 "+ F_{k+m-1}) + (-1)^m p^k (F_{k-m+1} - p F_{k-m}))/((p^2-p-1)(p^(2k) + p^k L_k + (-1)^k)); "
                 "v2: L version with -(-1)^m p^k (L_{k-m+1} - p L_{k-m})",
      .mode = Mode::exact,
      .variants = {1, 2},
      .params = {{"p", range(2, 5), {}, "p >= 2"}, kspec, m44},
      .validate =
          [](const Params& p) {
            return require(param(p, "p") >= 2 && param_long(p, "k") >= 1, "need p >= 2 and k >= 1");
          },
      .evaluate =
          [](const Params& prm, const Policy& pol) {
            const long v = param_long(prm, "v"), k = param_long(prm, "k"), m = param_long(prm, "m");
            const QSqrt5 p(param(prm, "p"));
            const SeqKind kind = v == 1 ? SeqKind::fibonacci : SeqKind::lucas;
            auto X = [kind](long n) { return x_of(kind, n); };
            const QSqrt5 last = sg(m) * pw(p, k) * (X(k - m + 1) - p * X(k - m));
            const QSqrt5 num = (pw(p, 2 * k) - sg(k)) * (p * X(m) + X(m - 1)) - pw(p, k) * (p * X(k + m) + X(k + m - 1)) +
                               (v == 1 ? last : -last);
            const QSqrt5 den = (p * p - p - QSqrt5(1)) * (pw(p, 2 * k) + pw(p, k) * l(k) + sg(k));
            FloorSeries fs;
            fs.a_gf = geometric_gf(QSqrt5(-1));
            fs.a = [](long j) { return sg(j); };
            fs.growth = polynomial_growth(1, 0);
            fs.k = k;
            fs.weights = {{Rational(1), kind, 1, m, false}};
            fs.q = p;
            fs.scale = p.inverse();
            return run("S38", prm, pol, with_closed(floor_series_cell(fs), num / den));
          },
  });

  out.push_back({
      .id = "S39",
      .anchor = "Signed floor series at p = 2 and p = 3",
      .formula = "v1: sum (-1)^floor(n/k) F_{n+m}/2^(n+1) = ((4^k - (-1)^k) F_{m+2} - 2^k F_{k+m+2} - (-1)^m 2^k "
                 "F_{k-m-2})/(4^k + 2^k L_k + (-1)^k); v2: L version with + (-1)^m 2^k L_{k-m-2}; v3: sum "
                 "(-1)^floor(n/k) F_{n+m}/3^(n+1) = ((9^k - (-1)^k) L_{m+1} - 3^k L_{k+m+1} - (-1)^m 3^k L_{k-m-1})/"
                 "(5(9^k + 3^k L_k + (-1)^k)); v4: sum (-1)^floor(n/k) L_{n+m}/3^(n+1) = ((9^k - (-1)^k) F_{m+1} - "
                 "3^k F_{k+m+1} + (-1)^m 3^k F_{k-m-1})/(9^k + 3^k L_k + (-1)^k)",
      .mode = Mode::exact,
      .variants = {1, 2, 3, 4},
      .params = {kspec, m44},
      .validate = [](const Params& p) { return require(param_long(p, "k") >= 1, "k must be >= 1"); },
      .evaluate =
          [](const Params& prm, const Policy& pol) {
            const long v = param_long(prm, "v"), k = param_long(prm, "k"), m = param_long(prm, "m");
            const SeqKind kind = v % 2 == 1 ? SeqKind::fibonacci : SeqKind::lucas;
            const QSqrt5 p(v <= 2 ? 2 : 3);
            const QSqrt5 pk = pw(p, k), p2k = pw(p, 2 * k), sk = sg(k), sm = sg(m);
            const QSqrt5 den = p2k + pk * l(k) + sk;
            QSqrt5 closed;
            switch (v) {
              case 1:
                closed = ((p2k - sk) * f(m + 2) - pk * f(k + m + 2) - sm * pk * f(k - m - 2)) / den;
                break;
              case 2:
                closed = ((p2k - sk) * l(m + 2) - pk * l(k + m + 2) + sm * pk * l(k - m - 2)) / den;
                break;
              case 3:
                closed = ((p2k - sk) * l(m + 1) - pk * l(k + m + 1) - sm * pk * l(k - m - 1)) / (QSqrt5(5) * den);
                break;
              default:
                closed = ((p2k - sk) * f(m + 1) - pk * f(k + m + 1) + sm * pk * f(k - m - 1)) / den;
                break;
            }
            FloorSeries fs;
            fs.a_gf = geometric_gf(QSqrt5(-1));
            fs.a = [](long j) { return sg(j); };
            fs.growth = polynomial_growth(1, 0);
            fs.k = k;
            fs.weights = {{Rational(1), kind, 1, m, false}};
            fs.q = p;
            fs.scale = p.inverse();
            return run("S39", prm, pol, with_closed(floor_series_cell(fs), closed));
          },
  });

  // ---- F_floor(n/k) and L_floor(n/k) ----
  out.push_back({
      .id = "S40",
      .anchor = "Generating functions of F_floor(n/k) and L_floor(n/k): expansions and values",
      .formula = "sum F_{floor(n/k)} z^n = (1-z^k) z^k/((1-z)(1-z^k-z^(2k))), sum L_{floor(n/k)} z^n = "
                 "(1-z^k)(2-z^k)/((1-z)(1-z^k-z^(2k))), |z| < |beta|; v1, v2: coefficients to order 300; "
                 "v3, v4: values at rational z",
      .mode = Mode::exact,
      .variants = {1, 2, 3, 4},
      .params = {{"k", range(1, 8), {1, 2}, "k >= 1"},
                 {"k", range(1, 5), {3, 4}, "k >= 1"},
                 {"z", values({Q(1, 2), Q(-1, 2), Q(1, 3), Q(-3, 5)}), {3, 4}, "0 < |z| < |beta|"}},
      .validate =
          [](const Params& p) {
            if (param_long(p, "k") < 1) return std::string("k must be >= 1");
            if (param_long(p, "v") <= 2) return std::string();
            const QSqrt5 z(param(p, "z"));
            return require(!z.is_zero() && (z.abs() + beta_pow(1)).sign() < 0, "need 0 < |z| < |beta|");
          },
      .evaluate =
          [](const Params& prm, const Policy& pol) {
            constexpr long kOrder = 300;
            const long v = param_long(prm, "v"), k = param_long(prm, "k");
            const SeqKind kind = v % 2 == 1 ? SeqKind::fibonacci : SeqKind::lucas;
            using P = Polynomial<Rational>;
            const P one(Rational(1)), zk = P::monomial(Rational(1), k);
            const RationalGF<Rational> gf{
                (one - zk) * (kind == SeqKind::fibonacci ? zk : P(Rational(2)) - zk),
                P(std::vector<Rational>{1, -1}) * (one - zk - P::monomial(Rational(1), 2 * k))};
            if (v <= 2) {
              TruncatedSeries<Rational> lhs(kOrder);
              for (long n = 0; n <= kOrder; ++n) lhs[n] = kind == SeqKind::fibonacci ? F(n / k) : L(n / k);
              return coefficient_verdict("S40", prm, lhs, expand(gf, kOrder), pol.precision);
            }
            const Rational z = param(prm, "z");
            FloorSeries fs;
            fs.a_gf = kind == SeqKind::fibonacci ? fibonacci_gf() : lucas_gf();
            fs.a = [kind](long j) { return x_of(kind, j); };
            fs.growth = binet_growth(kind == SeqKind::fibonacci ? 1 : 2, k);
            fs.k = k;
            fs.weights = {unit_weight()};
            fs.q = QSqrt5(Rational(1) / z);
            return run("S40", prm, pol, with_closed(floor_series_cell(fs), QSqrt5(evaluate(gf, z))));
          },
  });

  out.push_back({
      .id = "S41",
      .anchor = "Series with F_floor(n/k) or L_floor(n/k) against F_{n+m} or L_{n+m} over p^(n+1)",
      .formula = "D_k(p) sum_{n>=0} Y_{floor(n/k)} X_{n+m}/p^(n+1) = RHS_v(k, m, p), D_k(p) = (p^2-p-1)(p^(4k) - "
                 "p^(3k) L_k - p^(2k)(L_(2k) - (-1)^k) + (-1)^k p^k L_k + 1); v1: (Y, X) = (F, F), v2: (F, L), "
                 "v3: (L, F), v4: (L, L); v5: v3 with 3(-1)^k F_m in place of 3(-1)^k L_m in the p^(2k+1) term "
                 "and the sign of the (-1)^k p^(k+1) term reversed; "
                 "cells with alpha^(1+1/k) >= p diverge",
      .mode = Mode::exact,
      .variants = {1, 2, 3, 4, 5},
      .params = {{"p", range(2, 4), {}, "p >= 2"}, k4, m44},
      .validate =
          [](const Params& p) {
            return require(param(p, "p") >= 2 && param_long(p, "k") >= 1, "need p >= 2 and k >= 1");
          },
      .evaluate =
          [](const Params& prm, const Policy& pol) {
            const long v = param_long(prm, "v"), k = param_long(prm, "k"), m = param_long(prm, "m");
            const QSqrt5 p(param(prm, "p"));
            const bool y_fib = v <= 2;
            const SeqKind x = v % 2 == 1 ? SeqKind::fibonacci : SeqKind::lucas;  // v5 pairs (L, F)
            FloorSeries fs;
            fs.a_gf = y_fib ? fibonacci_gf() : lucas_gf();
            fs.a = [y_fib](long j) { return y_fib ? f(j) : l(j); };
            fs.growth = binet_growth(y_fib ? 1 : 2, k);
            fs.k = k;
            fs.weights = {{Rational(1), x, 1, m, false}};
            fs.q = p;
            fs.scale = p.inverse();
            return run("S41", prm, pol, with_closed(floor_series_cell(fs), final_rhs(v, k, m, p) / final_denominator(k, p)));
          },
  });
}

}  // namespace catalog

void add_series_catalog(std::vector<IdentityRecord>& out) {
  catalog::add_series_catalog_a(out);
  catalog::add_series_catalog_b(out);
}

}  // namespace floorsum
