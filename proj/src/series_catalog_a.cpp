#include "floorsum/catalog.hpp"
#include "series_util.hpp"

namespace floorsum {

using namespace catalog;

namespace {

QSqrt5 f(long n) { return Fq(n); }
QSqrt5 l(long n) { return Lq(n); }
QSqrt5 sg(long e) { return QSqrt5(sgn(e)); }
QSqrt5 pw(const QSqrt5& x, long e) { return qpow(x, e); }
QSqrt5 x_of(SeqKind kind, long n) { return seq_value(kind, n); }

SeqFn<QSqrt5> identity_seq() {
  return [](long j) { return QSqrt5(j); };
}

// sum (+-1)^n floor(n/k) X_{s n + m} / p^n, times scale.
FloorSeries floor_binet(SeqKind kind, long s, long m, const QSqrt5& p, long k, bool alternating, QSqrt5 scale) {
  FloorSeries fs;
  fs.a_gf = identity_gf();
  fs.a = identity_seq();
  fs.growth = polynomial_growth(1, 1);
  fs.k = k;
  fs.weights = {{Rational(1), kind, s, m, alternating}};
  fs.q = p;
  fs.scale = std::move(scale);
  return fs;
}

Verdict run(const std::string& id, const Params& p, const Policy& pol, const SeriesCell& cell) {
  return verify_series(id, p, cell, pol);
}

SeriesCell with_closed(SeriesCell cell, QSqrt5 closed) {
  cell.closed_exact = std::move(closed);
  return cell;
}

SeqKind kind_of(long v) { return v % 2 == 1 ? SeqKind::fibonacci : SeqKind::lucas; }

// Sample points for the elementary log series; the last four are the example points.
const std::vector<QSqrt5>& log_points() {
  static const std::vector<QSqrt5> pts = {
      QSqrt5(Q(1, 2)), QSqrt5(Q(-1, 2)), QSqrt5(Q(1, 3)), QSqrt5(Q(-2, 3)), QSqrt5(Q(3, 4)),
      QSqrt5(0, Q(1, 5)), QSqrt5(0, Q(1, 3)), QSqrt5(0, Q(2, 5)), QSqrt5(0, Q(3, 7))};
  return pts;
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

const std::vector<QSqrt5>& derivative_points() {
  static const std::vector<QSqrt5> pts = {QSqrt5(Q(1, 2)), QSqrt5(Q(-1, 2)), QSqrt5(Q(1, 3)),
                                          QSqrt5(Q(-1, 3)), QSqrt5(0, Q(1, 5)), QSqrt5(0, Q(1, 3))};
  return pts;
}

std::string point_list(const std::vector<QSqrt5>& pts) {
  std::string out;
  for (std::size_t i = 0; i < pts.size(); ++i)
    out += (i ? ", " : "") + std::to_string(i + 1) + ": " + to_string(pts[i]);
  return out;
}

Rational factorial(long m) {
  Rational out(1);
  for (long i = 2; i <= m; ++i) out *= i;
  return out;
}

// m-th derivative over m! of f+(z,2) and f-(z,2) at z.
QSqrt5 floor2_derivative(Sign sign, const QSqrt5& z, long m) {
  return taylor_coefficient(floor_transform_gf(identity_gf(), 2, sign), z, m);
}

// sum_{n>=1} n C(2n,M) z^(2n) and sum_{n>=1} n C(2n+1,M) z^(2n+1).
std::pair<QSqrt5, QSqrt5> even_odd_parts(const QSqrt5& z, long M) {
  const QSqrt5 plus = floor2_derivative(Sign::plus, z, M);     // sum floor(N/2) C(N,M) z^(N-M)
  const QSqrt5 minus = -floor2_derivative(Sign::minus, z, M);  // sum (-1)^(N-1) floor(N/2) C(N,M) z^(N-M)
  const QSqrt5 zm = pw(z, M);
  return {zm * (plus - minus) / QSqrt5(2), zm * (plus + minus) / QSqrt5(2)};
}

Interval combo(const QSqrt5& a, const Interval& x, mpfr_prec_t prec) { return q5_embed(a, prec) * x; }

}  // namespace

Interval n_over_2n_plus_1_tabulated(const QSqrt5& x, const QSqrt5& sqrt_x, mpfr_prec_t prec) {
  // sum_{k>=0} x^k/(2k+1) = (log(1+sqrt x) - log(1-sqrt x)) / (2 sqrt x)
  Interval t = (log_iv(QSqrt5(1) + sqrt_x, prec) - log_iv(QSqrt5(1) - sqrt_x, prec)) /
               q5_embed(QSqrt5(2) * sqrt_x, prec);
  // n/(2n+1) = (1 - 1/(2n+1))/2
  Interval geo = q5_embed(x / (QSqrt5(1) - x), prec);
  return (geo - (t - Interval::from_long(1, prec))) * q5_embed(QSqrt5(Q(1, 2)), prec);
}

namespace catalog {

void add_series_catalog_a(std::vector<IdentityRecord>& out) {
  // ---- opening series ----
  for (auto [id, kind, value] : {std::tuple{"S01", SeqKind::fibonacci, Q(32, 5)}, std::tuple{"S02", SeqKind::lucas, R(16)}}) {
    const std::string name = kind == SeqKind::fibonacci ? "F_n" : "L_n";
    out.push_back({
        .id = id,
        .anchor = "Opening floor series with " + name + "/2^n",
        .formula = "sum_{n>=0} (floor(n/2)+1) " + name + "/2^n = " + to_string(QSqrt5(value)),
        .mode = Mode::exact,
        .variants = {},
        .params = {},
        .validate = {},
        .evaluate =
            [id = std::string(id), kind = kind, value = value](const Params& p, const Policy& pol) {
              FloorSeries fs;
              fs.a_gf = shifted_identity_gf();
              fs.a = [](long j) { return QSqrt5(j + 1); };
              fs.growth = polynomial_growth(2, 1);
              fs.k = 2;
              fs.weights = {{Rational(1), kind, 1, 0, false}};
              fs.q = QSqrt5(2);
              return run(id, p, pol, with_closed(floor_series_cell(fs), QSqrt5(value)));
            },
    });
  }

  out.push_back({
      .id = "S03",
      .anchor = "Gibonacci form of the opening series",
      .formula = "sum_{n>=0} (floor(n/2)+1) G_n/2^n = 8(3a+4b)/5, G_0 = a, G_1 = b",
      .mode = Mode::exact,
      .variants = {},
      .params = {{"a", values({R(-1), R(0), R(1), R(2), R(3)}), {}, "a rational"},
                 {"b", values({R(-2), R(1), R(2), Q(1, 2), R(5)}), {}, "b rational"}},
      .validate = {},
      .evaluate =
          [](const Params& p, const Policy& pol) {
            const Rational a = param(p, "a"), b = param(p, "b");
            FloorSeries fs;
            fs.a_gf = shifted_identity_gf();
            fs.a = [](long j) { return QSqrt5(j + 1); };
            fs.growth = polynomial_growth(2, 1);
            fs.k = 2;
            // G_n = a F_{n-1} + b F_n
            fs.weights = {{a, SeqKind::fibonacci, 1, -1, false}, {b, SeqKind::fibonacci, 1, 0, false}};
            fs.q = QSqrt5(2);
            return run("S03", p, pol, with_closed(floor_series_cell(fs), QSqrt5(Rational(8 * (3 * a + 4 * b) / 5))));
          },
  });

  const std::vector<Rational> zgrid = values({Q(1, 2), Q(-1, 2), Q(1, 3), Q(2, 3), Q(-3, 4)});
  out.push_back({
      .id = "S04",
      .anchor = "Floor series evaluated at rational points",
      .formula = "v1: sum floor(n/k) z^n = z^k/((1-z)(1-z^k)); v2: sum (-1)^n floor(n/k) z^n = "
                 "(-1)^k z^k/((1+z)(1+(-1)^(k+1) z^k))",
      .mode = Mode::exact,
      .variants = {1, 2},
      .params = {{"k", range(1, 5), {}, "k >= 1"}, {"z", zgrid, {}, "0 < |z| < 1"}},
      .validate =
          [](const Params& p) {
            const Rational& z = param(p, "z");
            return require(param_long(p, "k") >= 1 && z != 0 && abs(z) < 1, "need k >= 1 and 0 < |z| < 1");
          },
      .evaluate =
          [](const Params& p, const Policy& pol) {
            const long v = param_long(p, "v"), k = param_long(p, "k");
            const QSqrt5 z(param(p, "z"));
            const QSqrt5 zk = pw(z, k), one(1);
            QSqrt5 closed = v == 1 ? zk / ((one - z) * (one - zk))
                                   : sg(k) * zk / ((one + z) * (one + sg(k + 1) * zk));
            FloorSeries fs;
            fs.a_gf = identity_gf();
            fs.a = identity_seq();
            fs.growth = polynomial_growth(1, 1);
            fs.k = k;
            fs.weights = {unit_weight(Rational(1), v == 2)};
            fs.q = z.inverse();
            return run("S04", p, pol, with_closed(floor_series_cell(fs), closed));
          },
  });

  // ---- floor(n/k) X_{sn+m} / p^(n+1) ----
  const ParamSpec kspec{"k", range(1, 5), {}, "k >= 1"};
  const ParamSpec mspec{"m", range(-5, 5), {}, "m integer"};
  const ParamSpec sspec{"s", range(1, 2), {}, "s >= 1"};
  const ParamSpec pspec{"p", values({R(2), Q(5, 2), R(3), R(4)}), {}, "p > alpha^s"};
  auto p_above_alpha = [](const Params& p) {
    const long s = param_long(p, "s");
    if (s < 1 || param_long(p, "k") < 1) return std::string("need s >= 1 and k >= 1");
    return require((QSqrt5(param(p, "p")) - alpha_pow(s)).sign() > 0, "p must exceed alpha^s");
  };

  for (auto [id, kind] : {std::pair{"S05", SeqKind::fibonacci}, std::pair{"S06", SeqKind::lucas}}) {
    const std::string X = kind == SeqKind::fibonacci ? "F" : "L";
    out.push_back({
        .id = id,
        .anchor = std::string("Floor series with ") + (kind == SeqKind::fibonacci ? "Fibonacci" : "Lucas") +
                  " numbers and a general ratio",
        .formula = "sum floor(n/k) " + X + "_{sn+m}/p^(n+1) = (p^k (p " + X + "_{sk+m} - (-1)^s " + X +
                   "_{s(k-1)+m}) - (-1)^(sk) (p " + X + "_m - (-1)^s " + X +
                   "_{m-s})) / ((p^2 - p L_s + (-1)^s)(p^(2k) - p^k L_{sk} + (-1)^(sk))), p > alpha^s",
        .mode = Mode::exact,
        .variants = {},
        .params = {kspec, mspec, sspec, pspec},
        .validate = p_above_alpha,
        .evaluate =
            [id = std::string(id), kind = kind](const Params& prm, const Policy& pol) {
              const long k = param_long(prm, "k"), m = param_long(prm, "m"), s = param_long(prm, "s");
              const QSqrt5 p(param(prm, "p"));
              auto X = [kind](long n) { return x_of(kind, n); };
              QSqrt5 num = pw(p, k) * (p * X(s * k + m) - sg(s) * X(s * (k - 1) + m)) - sg(s * k) * (p * X(m) - sg(s) * X(m - s));
              QSqrt5 den = (p * p - p * l(s) + sg(s)) * (pw(p, 2 * k) - pw(p, k) * l(s * k) + sg(s * k));
              auto fs = floor_binet(kind, s, m, p, k, false, p.inverse());
              return run(id, prm, pol, with_closed(floor_series_cell(fs), num / den));
            },
    });
  }

  out.push_back({
      .id = "S07",
      .anchor = "Specializations of the general-ratio floor series",
      .formula = "v1/v2: p = 2; v3/v4: p = 3; v5/v6: F_{2n+m}, L_{2n+m} over 4^(n+1); v7/v8: ratio L_{2s}; "
                 "v9: F_{2sn+m}/F_p^(n+1) (stated condition F_p > alpha^s; summed when alpha^(2s) < F_p)",
      .mode = Mode::exact,
      .variants = {1, 2, 3, 4, 5, 6, 7, 8, 9},
      .params = {kspec, mspec, {"s", range(1, 2), {7, 8, 9}, "s >= 1"},
                 {"p", range(5, 8), {9}, "index of F_p with alpha^(2s) < F_p"}},
      .validate =
          [](const Params& prm) {
            if (param_long(prm, "k") < 1) return std::string("k must be >= 1");
            if (param_long(prm, "v") != 9) return std::string();
            const long s = param_long(prm, "s");
            if (s < 1) return std::string("s must be >= 1");
            return require((QSqrt5(F(param_long(prm, "p"))) - alpha_pow(2 * s)).sign() > 0,
                           "ratio alpha^(2s)/F_p must be below 1");
          },
      .evaluate =
          [](const Params& prm, const Policy& pol) {
            const long v = param_long(prm, "v"), k = param_long(prm, "k"), m = param_long(prm, "m");
            const SeqKind kind = kind_of(v);
            QSqrt5 closed, q;
            long s = 1;
            switch (v) {
              case 1:
              case 2: {
                auto X = [kind](long n) { return x_of(kind, n); };
                q = QSqrt5(2);
                closed = (pw(q, k) * X(k + m + 2) - sg(k) * X(m + 2)) / (pw(QSqrt5(4), k) - pw(q, k) * l(k) + sg(k));
                break;
              }
              case 3:
                q = QSqrt5(3);
                closed = (pw(q, k) * l(k + m + 1) - sg(k) * l(m + 1)) /
                         (QSqrt5(5) * (pw(QSqrt5(9), k) - pw(q, k) * l(k) + sg(k)));
                break;
              case 4:
                q = QSqrt5(3);
                closed = (pw(q, k) * f(k + m + 1) - sg(k) * f(m + 1)) / (pw(QSqrt5(9), k) - pw(q, k) * l(k) + sg(k));
                break;
              case 5:
                q = QSqrt5(4), s = 2;
                closed = (pw(q, k) * l(2 * k + m + 1) - l(m + 1)) /
                         (QSqrt5(5) * (pw(QSqrt5(16), k) - pw(q, k) * l(2 * k) + QSqrt5(1)));
                break;
              case 6:
                q = QSqrt5(4), s = 2;
                closed = (pw(q, k) * f(2 * k + m + 1) - f(m + 1)) / (pw(QSqrt5(16), k) - pw(q, k) * l(2 * k) + QSqrt5(1));
                break;
              case 7:
              case 8: {
                const long t = param_long(prm, "s");
                auto X = [kind](long n) { return x_of(kind, n); };
                q = l(2 * t), s = 2 * t;
                closed = (pw(q, k) * X(2 * t * (k + 1) + m) - X(m + 2 * t)) /
                         (pw(q, 2 * k) - pw(q, k) * l(2 * t * k) + QSqrt5(1));
                break;
              }
              default: {
                const long t = param_long(prm, "s");
                q = f(param_long(prm, "p")), s = 2 * t;
                closed = (pw(q, k) * (q * f(2 * t * k + m) - f(2 * t * (k - 1) + m)) - q * f(m) + f(m - 2 * t)) /
                         ((q * q - q * l(2 * t) + QSqrt5(1)) * (pw(q, 2 * k) - pw(q, k) * l(2 * t * k) + QSqrt5(1)));
                break;
              }
            }
            auto fs = floor_binet(kind, s, m, q, k, false, q.inverse());
            return run("S07", prm, pol, with_closed(floor_series_cell(fs), closed));
          },
  });

  out.push_back({
      .id = "S08",
      .anchor = "Alternating floor series with a general ratio",
      .formula = "sum (-1)^(n-k) floor(n/k) X_{sn+m}/p^(n+1) = (p^k (p X_{sk+m} + (-1)^s X_{s(k-1)+m}) - "
                 "(-1)^(k(s-1)) (p X_m + (-1)^s X_{m-s})) / ((p^2 + p L_s + (-1)^s)(p^(2k) - (-1)^k p^k L_{sk} + "
                 "(-1)^(sk))); v1: X = F, v2: X = L",
      .mode = Mode::exact,
      .variants = {1, 2},
      .params = {kspec, mspec, sspec, pspec},
      .validate = p_above_alpha,
      .evaluate =
          [](const Params& prm, const Policy& pol) {
            const long v = param_long(prm, "v"), k = param_long(prm, "k"), m = param_long(prm, "m"),
                       s = param_long(prm, "s");
            const SeqKind kind = kind_of(v);
            const QSqrt5 p(param(prm, "p"));
            auto X = [kind](long n) { return x_of(kind, n); };
            QSqrt5 num = pw(p, k) * (p * X(s * k + m) + sg(s) * X(s * (k - 1) + m)) - sg(k * (s - 1)) * (p * X(m) + sg(s) * X(m - s));
            QSqrt5 den = (p * p + p * l(s) + sg(s)) * (pw(p, 2 * k) - sg(k) * pw(p, k) * l(s * k) + sg(s * k));
            auto fs = floor_binet(kind, s, m, p, k, true, sg(k) / p);
            return run("S08", prm, pol, with_closed(floor_series_cell(fs), num / den));
          },
  });

  out.push_back({
      .id = "S09",
      .anchor = "Specializations of the alternating floor series",
      .formula = "v1/v2: (-1)^(n-k) floor(n/k) X_{n+m}/2^(n+1) (v2 with denominator 4^k - (-2)^(k+1) L_k + (-1)^k); "
                 "v3/v4: (-1)^n floor(n/k) X_{2n+m}/3^(n+1); v5/v6: (-1)^(n-k) floor(n/k) X_{2sn+m}/L_{2s}^(n+1); "
                 "v7: v2 with (-2)^k in place of (-2)^(k+1)",
      .mode = Mode::exact,
      .variants = {1, 2, 3, 4, 5, 6, 7},
      .params = {kspec, mspec, {"s", range(1, 2), {5, 6}, "s >= 1"}},
      .validate = [](const Params& prm) { return require(param_long(prm, "k") >= 1, "k must be >= 1"); },
      .evaluate =
          [](const Params& prm, const Policy& pol) {
            const long v = param_long(prm, "v"), k = param_long(prm, "k"), m = param_long(prm, "m");
            const SeqKind kind = v == 7 ? SeqKind::lucas : kind_of(v);  // v7 is the L series of v2
            QSqrt5 closed, q, scale;
            long s = 1;
            switch (v) {
              case 1:
                q = QSqrt5(2), scale = sg(k) / q;
                closed = (pw(q, k) * l(k + m - 1) - l(m - 1)) /
                         (QSqrt5(5) * (pw(QSqrt5(4), k) - pw(QSqrt5(-2), k) * l(k) + sg(k)));
                break;
              case 2:
              case 7:
                q = QSqrt5(2), scale = sg(k) / q;
                closed = (pw(q, k) * f(k + m - 1) - f(m - 1)) /
                         (pw(QSqrt5(4), k) - pw(QSqrt5(-2), v == 2 ? k + 1 : k) * l(k) + sg(k));
                break;
              case 3:
              case 4: {
                auto X = [kind](long n) { return x_of(kind, n); };
                q = QSqrt5(3), scale = q.inverse(), s = 2;
                closed = (pw(QSqrt5(-3), k) * (QSqrt5(3) * X(2 * k + m) + X(2 * (k - 1) + m)) - QSqrt5(3) * X(m) - X(m - 2)) /
                         (QSqrt5(19) * (pw(QSqrt5(9), k) - pw(QSqrt5(-3), k) * l(2 * k) + QSqrt5(1)));
                break;
              }
              default: {
                const long t = param_long(prm, "s");
                auto X = [kind](long n) { return x_of(kind, n); };
                q = l(2 * t), scale = sg(k) / q, s = 2 * t;
                closed = (pw(q, k) * (X(2 * t * k + m) * q + X(2 * t * (k - 1) + m)) - sg(k) * (q * X(m) + X(m - 2 * t))) /
                         ((QSqrt5(2) * q * q + QSqrt5(1)) * (pw(q, 2 * k) - sg(k) * pw(q, k) * l(2 * t * k) + QSqrt5(1)));
                break;
              }
            }
            auto fs = floor_binet(kind, s, m, q, k, true, scale);
            return run("S09", prm, pol, with_closed(floor_series_cell(fs), closed));
          },
  });

  // ---- logarithmic series ----
  const auto& lp = log_points();
  const ParamSpec ptspec{"pt", range(1, static_cast<long>(lp.size())), {}, "z index: " + point_list(lp)};
  for (auto [id, alt] : {std::pair{"S10", false}, std::pair{"S11", true}}) {
    out.push_back({
        .id = id,
        .anchor = alt ? "Alternating floor(n/2)/n power series as a logarithm"
                      : "Floor(n/2)/n power series as a logarithm",
        .formula = alt ? "sum_{n>=1} (-1)^(n-1) floor(n/2) z^n/n = log|(1-z)/(1+z)|/4 + z/(2(1+z))"
                       : "sum_{n>=1} floor(n/2) z^n/n = log|(1-z)/(1+z)|/4 + z/(2(1-z))",
        .mode = Mode::numeric,
        .variants = {},
        .params = {ptspec},
        .validate = [n = lp.size()](const Params& p) { return pt_valid(p, n); },
        .evaluate =
            [id = std::string(id), alt = alt](const Params& prm, const Policy& pol) {
              const QSqrt5 z = point(prm, log_points());
              const QSqrt5 one(1);
              SeriesCell cell;
              cell.start = 1;
              cell.term = [z, alt](long n) {
                QSqrt5 t = QSqrt5(Rational(n / 2, n)) * pw(z, n);
                return (alt && n % 2 == 0) ? -t : t;
              };
              cell.tail = geometric_tail_fn(Real(kRadiusPrecision, 1), 0, up(z));
              cell.closed = [z, alt, one](mpfr_prec_t prec) {
                Interval lg = log_iv((one - z) / (one + z), prec) * q5_embed(QSqrt5(Q(1, 4)), prec);
                return lg + q5_embed(z / (QSqrt5(2) * (alt ? one + z : one - z)), prec);
              };
              return run(id, prm, pol, cell);
            },
    });
  }

  out.push_back({
      .id = "S12",
      .anchor = "Four n/(2n+1) series evaluated with log alpha",
      .formula = "sum_{n>=1} x^n n/(2n+1): v1 x = 1/5: 5/8 - (sqrt5/2) log alpha; v2 x = 5/9: 9/8 - (3 sqrt5/5) log alpha; "
                 "v3 x = 4/5: 5/2 - (3 sqrt5/4) log alpha; v4 x = 45/49: 49/8 - (14 sqrt5/15) log alpha; "
                 "each cell also compares against the tabulated sum_{k>=0} x^k/(2k+1)",
      .mode = Mode::numeric,
      .variants = {1, 2, 3, 4},
      .params = {},
      .validate = {},
      .evaluate =
          [](const Params& prm, const Policy& pol) {
            const long v = param_long(prm, "v");
            struct Row {
              Rational x;
              QSqrt5 root;
              Rational c;
              QSqrt5 log_coef;
            };
            static const Row rows[] = {
                {Q(1, 5), QSqrt5(0, Q(1, 5)), Q(5, 8), QSqrt5(0, Q(-1, 2))},
                {Q(5, 9), QSqrt5(0, Q(1, 3)), Q(9, 8), QSqrt5(0, Q(-3, 5))},
                {Q(4, 5), QSqrt5(0, Q(2, 5)), Q(5, 2), QSqrt5(0, Q(-3, 4))},
                {Q(45, 49), QSqrt5(0, Q(3, 7)), Q(49, 8), QSqrt5(0, Q(-14, 15))},
            };
            const Row& row = rows[v - 1];
            SeriesCell cell;
            cell.start = 1;
            const QSqrt5 x(row.x);
            cell.term = [x](long n) { return QSqrt5(Rational(n, 2 * n + 1)) * pw(x, n); };
            cell.tail = geometric_tail_fn(Real(kRadiusPrecision, 1), 0, up(row.x));
            cell.closed = [row](mpfr_prec_t prec) {
              return q5_embed(QSqrt5(row.c), prec) + combo(row.log_coef, log_alpha_iv(prec), prec);
            };
            Verdict out = run("S12", prm, pol, cell);
            Interval tab = n_over_2n_plus_1_tabulated(x, row.root, pol.precision);
            Real gap;
            Status st = classify(tab, cell.closed(pol.precision), tolerance_real(pol), &gap);
            out.note += std::string(out.note.empty() ? "" : "; ") + "tabulated route gap " + gap.to_string(3, MPFR_RNDU);
            if (st != Status::confirmed) {
              out.status = st == Status::refuted ? Status::refuted : Status::inconclusive;
              out.note += " (tabulated route disagrees)";
            }
            return out;
          },
  });

  struct LogRow {
    const char* id;
    SeqKind kind;
    bool alt;
    const char* formula;
  };
  static const LogRow log_rows[] = {
      {"S13", SeqKind::lucas, false,
       "sum_{n>=1} floor(n/2) L_{n+m}/(2^n n) = -(3 sqrt5/4) F_m log alpha - (L_m/8) log 5 + L_{m+3}/2"},
      {"S14", SeqKind::fibonacci, false,
       "sum_{n>=1} floor(n/2) F_{n+m}/(2^n n) = -(3/(4 sqrt5)) L_m log alpha - (F_m/8) log 5 + F_{m+3}/2"},
      {"S15", SeqKind::fibonacci, true,
       "sum_{n>=1} (-1)^n floor(n/2) F_{n+m}/(2^n n) = (F_m/8) log 5 + (3/(4 sqrt5)) L_m log alpha - L_m/10"},
      {"S16", SeqKind::lucas, true,
       "sum_{n>=1} (-1)^n floor(n/2) L_{n+m}/(2^n n) = (L_m/8) log 5 + (3 sqrt5/4) F_m log alpha - F_m/2"},
  };
  for (const auto& row : log_rows) {
    out.push_back({
        .id = row.id,
        .anchor = std::string(row.alt ? "Alternating " : "") + "floor(n/2) " +
                  (row.kind == SeqKind::fibonacci ? "Fibonacci" : "Lucas") + " series with log alpha and log 5",
        .formula = row.formula,
        .mode = Mode::numeric,
        .variants = {},
        .params = {{"m", range(-5, 5), {}, "m integer"}},
        .validate = {},
        .evaluate =
            [row](const Params& prm, const Policy& pol) {
              const long m = param_long(prm, "m");
              SeriesCell cell;
              cell.start = 1;
              cell.term = [row, m](long n) {
                QSqrt5 t = x_of(row.kind, n + m) * QSqrt5(Rational(n / 2, n)) / pw(QSqrt5(2), n);
                return (row.alt && n % 2 != 0) ? -t : t;
              };
              // floor(n/2)/n <= 1/2 and |X_{n+m}| <= 2 alpha^(n+|m|)
              cell.tail = geometric_tail_fn(up_alpha(m), 0, up(alpha_pow(1) / QSqrt5(2)));
              const QSqrt5 r5 = sqrt5();
              QSqrt5 a, b, c;  // a log alpha + b log 5 + c
              if (std::string(row.id) == "S13") {
                a = -QSqrt5(Q(3, 4)) * r5 * f(m), b = -l(m) / QSqrt5(8), c = l(m + 3) / QSqrt5(2);
              } else if (std::string(row.id) == "S14") {
                a = -QSqrt5(3) / (QSqrt5(4) * r5) * l(m), b = -f(m) / QSqrt5(8), c = f(m + 3) / QSqrt5(2);
              } else if (std::string(row.id) == "S15") {
                a = QSqrt5(3) / (QSqrt5(4) * r5) * l(m), b = f(m) / QSqrt5(8), c = -l(m) / QSqrt5(10);
              } else {
                a = QSqrt5(Q(3, 4)) * r5 * f(m), b = l(m) / QSqrt5(8), c = -f(m) / QSqrt5(2);
              }
              cell.closed = [a, b, c](mpfr_prec_t prec) {
                return combo(a, log_alpha_iv(prec), prec) + combo(b, log(Interval::from_long(5, prec)), prec) +
                       q5_embed(c, prec);
              };
              return run(row.id, prm, pol, cell);
            },
    });
  }

  // ---- derivatives of f+(z,2) and f-(z,2) ----
  const auto& dp = derivative_points();
  const ParamSpec dpt{"pt", range(1, static_cast<long>(dp.size())), {}, "z index: " + point_list(dp)};
  for (auto [id, alt] : {std::pair{"S17", false}, std::pair{"S18", true}}) {
    out.push_back({
        .id = id,
        .anchor = alt ? "Alternating floor(n/2) binomial power series from derivatives"
                      : "Floor(n/2) binomial power series from derivatives",
        .formula = alt ? "sum_{n>=1} (-1)^(n-1) floor(n/2) C(n,m) z^(n-m) = 3(-1)^m/(4(1+z)^(m+1)) - 1/(4(1-z)^(m+1)) "
                         "- (-1)^m (m+1)/(2(1+z)^(m+2))"
                       : "sum_{n>=1} floor(n/2) C(n,m) z^(n-m) = -3/(4(1-z)^(m+1)) + (-1)^m/(4(1+z)^(m+1)) + "
                         "(m+1)/(2(1-z)^(m+2))",
        .mode = Mode::exact,
        .variants = {},
        .params = {{"m", range(0, 5), {}, "m >= 0"}, dpt},
        .validate =
            [n = dp.size()](const Params& p) {
              auto e = pt_valid(p, n);
              return e.empty() ? require(param_long(p, "m") >= 0, "m must be >= 0") : e;
            },
        .evaluate =
            [id = std::string(id), alt = alt](const Params& prm, const Policy& pol) {
              const long m = param_long(prm, "m");
              const QSqrt5 z = point(prm, derivative_points());
              const QSqrt5 one(1), mp1(m + 1);
              SeriesCell cell;
              cell.start = std::max(1L, m);
              cell.term = [z, m, alt](long n) {
                QSqrt5 t = QSqrt5(Rational(binom(n, m) * (n / 2))) * pw(z, n - m);
                return (alt && n % 2 == 0) ? -t : t;
              };
              // floor(n/2) C(n,m) |z|^(n-m) <= n^(m+1) |z|^n / (m! |z|^m)
              cell.tail = geometric_tail_fn(up(pw(z, -m) / QSqrt5(factorial(m))), m + 1, up(z));
              if (!alt) {
                cell.closed_exact = -QSqrt5(3) / (QSqrt5(4) * pw(one - z, m + 1)) + sg(m) / (QSqrt5(4) * pw(one + z, m + 1)) +
                                    mp1 / (QSqrt5(2) * pw(one - z, m + 2));
                cell.limit_exact = floor2_derivative(Sign::plus, z, m);
              } else {
                cell.closed_exact = sg(m) * QSqrt5(3) / (QSqrt5(4) * pw(one + z, m + 1)) - one / (QSqrt5(4) * pw(one - z, m + 1)) -
                                    sg(m) * mp1 / (QSqrt5(2) * pw(one + z, m + 2));
                cell.limit_exact = -floor2_derivative(Sign::minus, z, m);
              }
              return run(id, prm, pol, cell);
            },
    });
  }

  out.push_back({
      .id = "S19",
      .anchor = "Binomial-coefficient series with powers of 1/5",
      .formula = "v1: sum_{n>=1} n C(2n+1,m)/5^(n+1) = ((5m+1) F_{m+1} + (5m-3) F_m)/2^(m+4); "
                 "v2: sum_{n>=1} n C(2n,m)/5^(n+1) = ((3m+1) F_{m+1} + (m+1) F_m)/2^(m+4)",
      .mode = Mode::exact,
      .variants = {1, 2},
      .params = {{"m", range(0, 8), {}, "m >= 0"}},
      .validate = [](const Params& p) { return require(param_long(p, "m") >= 0, "m must be >= 0"); },
      .evaluate =
          [](const Params& prm, const Policy& pol) {
            const long v = param_long(prm, "v"), m = param_long(prm, "m");
            const QSqrt5 z(0, Q(1, 5));  // 1/sqrt5
            auto [even, odd] = even_odd_parts(z, m);
            SeriesCell cell;
            cell.start = 1;
            const long shift = v == 1 ? 1 : 0;
            cell.term = [m, shift](long n) {
              return QSqrt5(Rational(binom(2 * n + shift, m) * n) / pow(Rational(5), n + 1));
            };
            // C(2n+1,m) <= (3n)^m/m!
            cell.tail = geometric_tail_fn(real_up(pow(Rational(3), m) / (5 * factorial(m))), m + 1, real_up(Q(1, 5)));
            const QSqrt5 mm(m), pref = QSqrt5(Rational(1) / pow(Rational(2), m + 4));
            if (v == 1) {
              cell.closed_exact = pref * ((QSqrt5(5) * mm + QSqrt5(1)) * f(m + 1) + (QSqrt5(5) * mm - QSqrt5(3)) * f(m));
              cell.limit_exact = odd / (QSqrt5(5) * z);
            } else {
              cell.closed_exact = pref * ((QSqrt5(3) * mm + QSqrt5(1)) * f(m + 1) + (mm + QSqrt5(1)) * f(m));
              cell.limit_exact = even / QSqrt5(5);
            }
            return run("S19", prm, pol, cell);
          },
  });

  out.push_back({
      .id = "S20",
      .anchor = "Binomial-coefficient series with powers of 5/9",
      .formula = "sum_{n>=1} n C(2n+e, M) (5/9)^n: v1 (e,M) = (1,2m): (9/16)(5/4)^m ((6m+3) F_{4m+4} - 4 F_{4m+2}); "
                 "v2 (1,2m+1): (9/32)(5/4)^m ((6m+6) L_{4m+6} - 4 L_{4m+4}); v3 (0,2m): (3/16)(5/4)^m ((6m+3) L_{4m+4} - "
                 "2 L_{4m+2}); v4 (0,2m+1): (15/16)(5/4)^m ((3m+3) F_{4m+6} - F_{4m+4})",
      .mode = Mode::exact,
      .variants = {1, 2, 3, 4},
      .params = {{"m", range(0, 5), {}, "m >= 0"}},
      .validate = [](const Params& p) { return require(param_long(p, "m") >= 0, "m must be >= 0"); },
      .evaluate =
          [](const Params& prm, const Policy& pol) {
            const long v = param_long(prm, "v"), m = param_long(prm, "m");
            const QSqrt5 z(0, Q(1, 3));  // sqrt5/3
            const long M = (v == 1 || v == 3) ? 2 * m : 2 * m + 1;
            const long e = v <= 2 ? 1 : 0;
            auto [even, odd] = even_odd_parts(z, M);
            SeriesCell cell;
            cell.start = 1;
            cell.term = [M, e](long n) { return QSqrt5(Rational(binom(2 * n + e, M) * n) * pow(Q(5, 9), n)); };
            cell.tail = geometric_tail_fn(real_up(pow(Rational(3), M) / factorial(M)), M + 1, real_up(Q(5, 9)));
            const QSqrt5 mm(m), q54 = pw(QSqrt5(Q(5, 4)), m);
            switch (v) {
              case 1:
                cell.closed_exact = QSqrt5(Q(9, 16)) * q54 * ((QSqrt5(6) * mm + QSqrt5(3)) * f(4 * m + 4) - QSqrt5(4) * f(4 * m + 2));
                cell.limit_exact = odd / z;
                break;
              case 2:
                cell.closed_exact = QSqrt5(Q(9, 32)) * q54 * ((QSqrt5(6) * mm + QSqrt5(6)) * l(4 * m + 6) - QSqrt5(4) * l(4 * m + 4));
                cell.limit_exact = odd / z;
                break;
              case 3:
                cell.closed_exact = QSqrt5(Q(3, 16)) * q54 * ((QSqrt5(6) * mm + QSqrt5(3)) * l(4 * m + 4) - QSqrt5(2) * l(4 * m + 2));
                cell.limit_exact = even;
                break;
              default:
                cell.closed_exact = QSqrt5(Q(15, 16)) * q54 * ((QSqrt5(3) * mm + QSqrt5(3)) * f(4 * m + 6) - f(4 * m + 4));
                cell.limit_exact = even;
                break;
            }
            return run("S20", prm, pol, cell);
          },
  });

  out.push_back({
      .id = "S21",
      .anchor = "Floor, binomial and Fibonacci or Lucas series over 2^(n-1)",
      .formula = "v1: sum_{n>=1} floor(n/2) C(n,m) F_{n+p}/2^(n-1) = 4(m+1) F_{3m+p+4} - 3 F_{3m+p+2} + (-1)^m "
                 "{5^(-(m+2)/2) L_{p-1}, m even; 5^(-(m+1)/2) F_{p-1}, m odd}; v2: L version with "
                 "{5^(-m/2) F_{p-1}, m even; 5^(-(m+1)/2) L_{p-1}, m odd}",
      .mode = Mode::exact,
      .variants = {1, 2},
      .params = {{"m", range(0, 6), {}, "m >= 0"}, {"p", range(-4, 4), {}, "p integer"}},
      .validate = [](const Params& p) { return require(param_long(p, "m") >= 0, "m must be >= 0"); },
      .evaluate =
          [](const Params& prm, const Policy& pol) {
            const long v = param_long(prm, "v"), m = param_long(prm, "m"), p = param_long(prm, "p");
            const SeqKind kind = kind_of(v);
            SeriesCell cell;
            cell.start = 1;
            cell.term = [kind, m, p](long n) {
              return QSqrt5(Rational(binom(n, m) * (n / 2)) / pow(Rational(2), n - 1)) * x_of(kind, n + p);
            };
            cell.tail = geometric_tail_fn(mul_up(real_up(Rational(4) / factorial(m)), up_alpha(p)), m + 1,
                                          up(alpha_pow(1) / QSqrt5(2)));
            // 2 gamma^p (gamma/2)^m T(gamma/2) for gamma in {alpha, beta}
            auto part = [m, p](const QSqrt5& g) {
              const QSqrt5 z = g / QSqrt5(2);
              return QSqrt5(2) * pw(g, p) * pw(z, m) * floor2_derivative(Sign::plus, z, m);
            };
            const QSqrt5 a = part(alpha_pow(1)), b = part(beta_pow(1));
            cell.limit_exact = kind == SeqKind::fibonacci ? (a - b) / sqrt5() : a + b;
            auto five = [](long e) { return pw(QSqrt5(5), e); };
            QSqrt5 tailterm;
            if (kind == SeqKind::fibonacci) {
              tailterm = m % 2 == 0 ? five(-(m + 2) / 2) * l(p - 1) : five(-(m + 1) / 2) * f(p - 1);
              cell.closed_exact = QSqrt5(4 * (m + 1)) * f(3 * m + p + 4) - QSqrt5(3) * f(3 * m + p + 2) + sg(m) * tailterm;
            } else {
              tailterm = m % 2 == 0 ? five(-m / 2) * f(p - 1) : five(-(m + 1) / 2) * l(p - 1);
              cell.closed_exact = QSqrt5(4 * (m + 1)) * l(3 * m + p + 4) - QSqrt5(3) * l(3 * m + p + 2) + sg(m) * tailterm;
            }
            return run("S21", prm, pol, cell);
          },
  });
}

}  // namespace catalog
}  // namespace floorsum
