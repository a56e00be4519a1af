#include "catalog_util.hpp"

#include <stdexcept>

namespace floorsum {

using namespace catalog;

namespace {

constexpr long kOrder = 300;
constexpr long kBinomialOrder = 120;
constexpr long kCompositeOrder = 60;

template <class T>
Polynomial<T> mono(const T& c, long d) {
  return Polynomial<T>::monomial(c, d);
}

template <class T>
Polynomial<T> one() {
  return Polynomial<T>(T(1L));
}

// 1 + c z^d
template <class T>
Polynomial<T> one_plus(const T& c, long d) {
  return one<T>() + mono<T>(c, d);
}

template <class T>
TruncatedSeries<T> sequence(long order, const std::function<T(long)>& f) {
  TruncatedSeries<T> s(order);
  for (long n = 0; n <= order; ++n) s[n] = f(n);
  return s;
}

std::string k_positive(const Params& p) { return require(param_long(p, "k") >= 1, "k must be >= 1"); }

std::vector<Rational> coefficient_grid() { return values({R(1), R(2), R(-1), Q(1, 2), Q(-1, 3)}); }

// ---- G01 / G02: the floor transform of six base sequences ----

Verdict transform_cell(const std::string& id, const Params& p, const Policy& pol, Sign sign) {
  const long a = param_long(p, "a"), k = param_long(p, "k");
  SeqFn<QSqrt5> seq = [a](long n) { return base_term(a, n); };
  Series lhs = floor_transform_seq(seq, k, kOrder, sign);
  Series rhs;
  if (base_has_gf(a)) {
    rhs = expand(floor_transform_gf(base_gf(a), k, sign), kOrder);
  } else {
    rhs = floor_transform_series(sequence<QSqrt5>(kOrder / k + 1, seq), k, kOrder, sign);
  }
  return coefficient_verdict(id, p, lhs, rhs, pol.precision);
}

// ---- binomial-transform generating functions over the rationals ----

template <class T>
Polynomial<T> one_minus_bz_pow(const T& b, long e) {
  return Polynomial<T>(std::vector<T>{T(1L), T(-b)}).pow(static_cast<unsigned long>(e));
}

template <class T>
Polynomial<T> cz_pow(const T& c, long e) {
  return mono<T>(pow(c, e), e);
}


TruncatedSeries<Rational> binomial_direct(const std::function<Rational(long)>& a, const Rational& b,
                                          const Rational& c) {
  return binomial_transform_series<Rational>(a, b, c, kBinomialOrder);
}

}  // namespace

void add_gf_catalog(std::vector<IdentityRecord>& out) {
  const ParamSpec base{"a", range(1, kBaseSequences), {}, "a in 1..6 selects n, n^2, F_n, L_n, (-1)^n, H_n/(n+1)^2"};
  const ParamSpec kpos{"k", range(1, 8), {}, "k >= 1"};

  out.push_back({
      .id = "G01",
      .anchor = "Floor transform of a generating function, plain form",
      .formula = "sum a_{floor(n/k)} z^n = (1-z^k)/(1-z) F(z^k)",
      .mode = Mode::coefficient,
      .variants = {},
      .params = {base, kpos},
      .validate = k_positive,
      .evaluate = [](const Params& p, const Policy& pol) { return transform_cell("G01", p, pol, Sign::plus); },
  });

  out.push_back({
      .id = "G02",
      .anchor = "Floor transform of a generating function, alternating form",
      .formula = "sum (-1)^n a_{floor(n/k)} z^n = (1+(-1)^(k+1) z^k)/(1+z) F((-1)^k z^k)",
      .mode = Mode::coefficient,
      .variants = {},
      .params = {base, kpos},
      .validate = k_positive,
      .evaluate = [](const Params& p, const Policy& pol) { return transform_cell("G02", p, pol, Sign::minus); },
  });

  out.push_back({
      .id = "G03",
      .anchor = "Generating functions of floor(n/k) and (-1)^n floor(n/k)",
      .formula = "v1: z^k/((1-z)(1-z^k)); v2: (-1)^k z^k/((1+z)(1+(-1)^(k+1) z^k))",
      .mode = Mode::coefficient,
      .variants = {1, 2},
      .params = {kpos},
      .validate = k_positive,
      .evaluate =
          [](const Params& p, const Policy& pol) {
            const long v = param_long(p, "v"), k = param_long(p, "k");
            using P = Polynomial<Rational>;
            RationalGF<Rational> gf;
            TruncatedSeries<Rational> lhs;
            if (v == 1) {
              gf = {mono(R(1), k), P(std::vector<Rational>{1, -1}) * one_plus(R(-1), k)};
              lhs = sequence<Rational>(kOrder, [k](long n) { return R(n / k); });
            } else {
              gf = {mono(sgn(k), k), P(std::vector<Rational>{1, 1}) * one_plus(sgn(k + 1), k)};
              lhs = sequence<Rational>(kOrder, [k](long n) { return Rational(sgn(n) * (n / k)); });
            }
            return coefficient_verdict("G03", p, lhs, expand(gf, kOrder), pol.precision);
          },
  });

  out.push_back({
      .id = "G04",
      .anchor = "Floor generating functions extended to negative k",
      .formula = "v1: sum floor((n+1)/k) z^n = z^k/((1-z)(1-z^k)); v2: sum (-1)^n floor((n+1)/k) z^n = "
                 "(-1)^k z^k/((1+z)(1+(-1)^(k+1) z^k)), k <= -1",
      .mode = Mode::coefficient,
      .variants = {1, 2},
      .params = {{"k", range(-8, -1), {}, "k <= -1"}},
      .validate = [](const Params& p) { return require(param_long(p, "k") <= -1, "k must be <= -1"); },
      .evaluate =
          [](const Params& p, const Policy& pol) {
            const long v = param_long(p, "v"), k = param_long(p, "k"), K = -k;
            using P = Polynomial<Rational>;
            // Numerator and denominator multiplied by z^K to clear the negative power.
            RationalGF<Rational> gf;
            TruncatedSeries<Rational> lhs;
            if (v == 1) {
              gf = {P(R(1)), P(std::vector<Rational>{1, -1}) * (mono(R(1), K) - P(R(1)))};
              lhs = sequence<Rational>(kOrder, [k](long n) { return R(floor_div(n + 1, k)); });
            } else {
              gf = {P(sgn(k)), P(std::vector<Rational>{1, 1}) * (mono(R(1), K) + P(sgn(k + 1)))};
              lhs = sequence<Rational>(kOrder, [k](long n) { return Rational(sgn(n) * floor_div(n + 1, k)); });
            }
            return coefficient_verdict("G04", p, lhs, expand(gf, kOrder), pol.precision);
          },
  });

  out.push_back({
      .id = "G05",
      .anchor = "Ceiling-function generating functions",
      .formula = "v1: sum ceil((n+1)/k) z^n, k >= 1; v2: sum ceil(n/k) z^n, k <= -1; both 1/((1-z)(1-z^k)); "
                 "v3, v4: alternating versions equal to 1/((1+z)(1-(-1)^k z^k))",
      .mode = Mode::coefficient,
      .variants = {1, 2, 3, 4},
      .params = {{"k", range(1, 8), {1, 3}, "k >= 1"}, {"k", range(-8, -1), {2, 4}, "k <= -1"}},
      .validate =
          [](const Params& p) {
            const long v = param_long(p, "v"), k = param_long(p, "k");
            return require((v % 2 == 1) ? k >= 1 : k <= -1, "k sign does not match the variant");
          },
      .evaluate =
          [](const Params& p, const Policy& pol) {
            const long v = param_long(p, "v"), k = param_long(p, "k");
            using P = Polynomial<Rational>;
            const bool alt = v >= 3;
            const P lin(std::vector<Rational>{1, alt ? R(1) : R(-1)});
            RationalGF<Rational> gf;
            if (k >= 1) {
              gf = {P(R(1)), lin * one_plus(alt ? Rational(-sgn(k)) : R(-1), k)};
            } else {
              // 1 - c z^k = (z^K - c)/z^K with K = -k.
              const long K = -k;
              const Rational c = alt ? sgn(k) : R(1);
              gf = {mono(R(1), K), lin * (mono(R(1), K) - P(c))};
            }
            auto lhs = sequence<Rational>(kOrder, [k, v, alt](long n) {
              long val = (v % 2 == 1) ? ceil_div(n + 1, k) : ceil_div(n, k);
              return alt ? sgn(n) * val : R(val);
            });
            return coefficient_verdict("G05", p, lhs, expand(gf, kOrder), pol.precision);
          },
  });

  out.push_back({
      .id = "G06",
      .anchor = "Generating functions of floor(n/k)^2, plain and alternating",
      .formula = "v1: z^k(1+z^k)/((1-z)(1-z^k)^2); v2: (-1)^k z^k(1+(-1)^k z^k)/((1+z)(1+(-1)^(k+1) z^k)^2)",
      .mode = Mode::coefficient,
      .variants = {1, 2},
      .params = {kpos},
      .validate = k_positive,
      .evaluate =
          [](const Params& p, const Policy& pol) {
            const long v = param_long(p, "v"), k = param_long(p, "k");
            using P = Polynomial<Rational>;
            RationalGF<Rational> gf;
            TruncatedSeries<Rational> lhs;
            if (v == 1) {
              gf = {mono(R(1), k) * one_plus(R(1), k),
                    P(std::vector<Rational>{1, -1}) * one_plus(R(-1), k).pow(2)};
              lhs = sequence<Rational>(kOrder, [k](long n) { return R((n / k) * (n / k)); });
            } else {
              gf = {mono(sgn(k), k) * one_plus(sgn(k), k),
                    P(std::vector<Rational>{1, 1}) * one_plus(sgn(k + 1), k).pow(2)};
              lhs = sequence<Rational>(kOrder, [k](long n) { return Rational(sgn(n) * ((n / k) * (n / k))); });
            }
            return coefficient_verdict("G06", p, lhs, expand(gf, kOrder), pol.precision);
          },
  });

  const ParamSpec bgrid{"b", coefficient_grid(), {}, "b rational, nonzero"};
  const ParamSpec cgrid{"c", coefficient_grid(), {}, "c rational, nonzero"};
  const ParamSpec ksmall{"k", range(1, 4), {}, "k >= 1"};
  auto bc_nonzero = [](const Params& p) {
    return require(param(p, "b") != 0 && param(p, "c") != 0, "b and c must be nonzero");
  };

  out.push_back({
      .id = "G07",
      .anchor = "Binomial transform of floor(j/k)^2, general k",
      .formula = "sum_n u_n z^n = (cz)^k((1-bz)^k+(cz)^k)/((1-(b+c)z)((1-bz)^k-(cz)^k)^2), "
                 "u_n = sum_j C(n,j) b^(n-j) c^j floor(j/k)^2",
      .mode = Mode::coefficient,
      .variants = {},
      .params = {bgrid, cgrid, ksmall},
      .validate = [bc_nonzero](const Params& p) {
        auto e = bc_nonzero(p);
        return e.empty() ? k_positive(p) : e;
      },
      .evaluate =
          [](const Params& p, const Policy& pol) {
            const Rational b = param(p, "b"), c = param(p, "c");
            const long k = param_long(p, "k");
            using P = Polynomial<Rational>;
            const P u = one_minus_bz_pow(b, k), w = cz_pow(c, k);
            RationalGF<Rational> gf{w * (u + w), P(std::vector<Rational>{1, Rational(-(b + c))}) * (u - w).pow(2)};
            auto lhs = binomial_direct([k](long j) { return R((j / k) * (j / k)); }, b, c);
            return coefficient_verdict("G07", p, lhs, expand(gf, kBinomialOrder), pol.precision);
          },
  });

  out.push_back({
      .id = "G08",
      .anchor = "Binomial transform of a floor sequence",
      .formula = "v1: sum_n s_n z^n = (cz)^k/((1-(b+c)z)((1-bz)^k-(cz)^k)) for a_n = n; "
                 "v2: k = 2 form (cz)^2/((1-(b+c)z)(1-2bz+(b^2-c^2)z^2)); "
                 "v3: 1/(1-bz) F+(cz/(1-bz), k) for the base sequences",
      .mode = Mode::coefficient,
      .variants = {1, 2, 3},
      .params = {bgrid, cgrid, {"k", range(1, 4), {1}, "k >= 1"},
                 {"k", range(1, 3), {3}, "k >= 1"}, {"a", range(1, 5), {3}, "a in 1..5 selects n, n^2, F_n, L_n, (-1)^n"}},
      .validate = bc_nonzero,
      .evaluate =
          [](const Params& p, const Policy& pol) {
            const long v = param_long(p, "v");
            const Rational b = param(p, "b"), c = param(p, "c");
            using P = Polynomial<Rational>;
            const P lin(std::vector<Rational>{1, Rational(-(b + c))});
            if (v == 1 || v == 2) {
              const long k = v == 1 ? param_long(p, "k") : 2;
              RationalGF<Rational> gf;
              if (v == 1) {
                gf = {cz_pow(c, k), lin * (one_minus_bz_pow(b, k) - cz_pow(c, k))};
              } else {
                gf = {cz_pow(c, 2), lin * P(std::vector<Rational>{1, Rational(-2 * b), Rational(b * b - c * c)})};
              }
              auto lhs = binomial_direct([k](long j) { return R(j / k); }, b, c);
              return coefficient_verdict("G08", p, lhs, expand(gf, kBinomialOrder), pol.precision);
            }
            const long k = param_long(p, "k"), a = param_long(p, "a");
            const QSqrt5 bq(b), cq(c);
            GF gf = binomial_transform_gf(floor_transform_gf(base_gf(a), k, Sign::plus), bq, cq);
            Series lhs = binomial_transform_series<QSqrt5>([a, k](long j) { return base_term(a, j / k); }, bq, cq,
                                                           kCompositeOrder);
            return coefficient_verdict("G08", p, lhs, expand(gf, kCompositeOrder), pol.precision);
          },
  });

  out.push_back({
      .id = "G09",
      .anchor = "Binomial transform of floor(j/2)^2, factored k = 2 form",
      .formula = "sum_n u_n z^n = (cz)^2((1-bz)^2+(cz)^2)/((1-(b+c)z)^3 (1-(b-c)z)^2)",
      .mode = Mode::coefficient,
      .variants = {},
      .params = {bgrid, cgrid},
      .validate = bc_nonzero,
      .evaluate =
          [](const Params& p, const Policy& pol) {
            const Rational b = param(p, "b"), c = param(p, "c");
            using P = Polynomial<Rational>;
            const P w = cz_pow(c, 2);
            RationalGF<Rational> gf{w * (one_minus_bz_pow(b, 2) + w),
                                    P(std::vector<Rational>{1, Rational(-(b + c))}).pow(3) *
                                        P(std::vector<Rational>{1, Rational(-(b - c))}).pow(2)};
            auto lhs = binomial_direct([](long j) { return R((j / 2) * (j / 2)); }, b, c);
            return coefficient_verdict("G09", p, lhs, expand(gf, kBinomialOrder), pol.precision);
          },
  });

  out.push_back({
      .id = "G10",
      .anchor = "Generating function of (-1)^floor(n/k)",
      .formula = "sum (-1)^floor(n/k) z^n = (1-z^k)/((1-z)(1+z^k))",
      .mode = Mode::coefficient,
      .variants = {},
      .params = {kpos},
      .validate = k_positive,
      .evaluate =
          [](const Params& p, const Policy& pol) {
            const long k = param_long(p, "k");
            using P = Polynomial<Rational>;
            RationalGF<Rational> gf{one_plus(R(-1), k), P(std::vector<Rational>{1, -1}) * one_plus(R(1), k)};
            auto lhs = sequence<Rational>(kOrder, [k](long n) { return sgn(n / k); });
            return coefficient_verdict("G10", p, lhs, expand(gf, kOrder), pol.precision);
          },
  });

  out.push_back({
      .id = "G11",
      .anchor = "Binomial transform of (-1)^floor(j/k)",
      .formula = "v1: sum_n v_n z^n = (1/(1-(b+c)z))(1 - 2(cz)^k/((1-bz)^k+(cz)^k)); "
                 "v2: [z^n] 1/((1-bz)^2+(cz)^2) = ((b+ic)^n (c-ib) + (b-ic)^n (c+ib))/(2c)",
      .mode = Mode::coefficient,
      .variants = {1, 2},
      .params = {bgrid, cgrid, {"k", range(1, 4), {1}, "k >= 1"}},
      .validate = bc_nonzero,
      .evaluate =
          [](const Params& p, const Policy& pol) {
            const long v = param_long(p, "v");
            const Rational b = param(p, "b"), c = param(p, "c");
            using P = Polynomial<Rational>;
            if (v == 1) {
              const long k = param_long(p, "k");
              const P u = one_minus_bz_pow(b, k), w = cz_pow(c, k);
              RationalGF<Rational> gf{u - w, P(std::vector<Rational>{1, Rational(-(b + c))}) * (u + w)};
              auto lhs = binomial_direct([k](long j) { return sgn(j / k); }, b, c);
              return coefficient_verdict("G11", p, lhs, expand(gf, kBinomialOrder), pol.precision);
            }
            RationalGF<Rational> gf{P(R(1)), one_minus_bz_pow(b, 2) + cz_pow(c, 2)};
            auto series = expand(gf, kBinomialOrder);
            const QSqrt5i I = QSqrt5i::i();
            const QSqrt5i bi{QSqrt5(b)}, ci{QSqrt5(c)};
            const QSqrt5i up = bi + I * ci, dn = bi - I * ci;
            const QSqrt5i w_up = ci - I * bi, w_dn = ci + I * bi;
            const QSqrt5i scale = QSqrt5i(QSqrt5(Rational(1 / (2 * c))));
            QSqrt5i pu(1), pd(1);
            for (long n = 0; n <= kBinomialOrder; ++n) {
              QSqrt5i formula = scale * (pu * w_up + pd * w_dn);
              QSqrt5i coeff{QSqrt5(series[n])};
              if (!(formula == coeff) || n == kBinomialOrder) {
                Verdict out = exact_verdict("G11", p, coeff, formula, pol.precision);
                out.terms_used = n + 1;
                out.note = formula == coeff ? "coefficients agree through order " + std::to_string(n)
                                            : "first coefficient mismatch at n=" + std::to_string(n);
                return out;
              }
              pu *= up;
              pd *= dn;
            }
            throw std::logic_error("unreachable");
          },
  });

  out.push_back({
      .id = "G12",
      .anchor = "Generating functions of F_floor(n/k) and L_floor(n/k)",
      .formula = "v1: (1-z^k) z^k/((1-z)(1-z^k-z^(2k))); v2: (1-z^k)(2-z^k)/((1-z)(1-z^k-z^(2k)))",
      .mode = Mode::coefficient,
      .variants = {1, 2},
      .params = {kpos},
      .validate = k_positive,
      .evaluate =
          [](const Params& p, const Policy& pol) {
            const long v = param_long(p, "v"), k = param_long(p, "k");
            using P = Polynomial<Rational>;
            const P den = P(std::vector<Rational>{1, -1}) * (one_plus(R(-1), k) - mono(R(1), 2 * k));
            RationalGF<Rational> gf;
            TruncatedSeries<Rational> lhs;
            if (v == 1) {
              gf = {one_plus(R(-1), k) * mono(R(1), k), den};
              lhs = sequence<Rational>(kOrder, [k](long n) { return F(n / k); });
            } else {
              gf = {one_plus(R(-1), k) * (P(R(2)) - mono(R(1), k)), den};
              lhs = sequence<Rational>(kOrder, [k](long n) { return L(n / k); });
            }
            return coefficient_verdict("G12", p, lhs, expand(gf, kOrder), pol.precision);
          },
  });

  out.push_back({
      .id = "G13",
      .anchor = "Convolution identities behind the floor-squared binomial sum",
      .formula = "(z-1)^4 z^3 sum_{j=0}^{n-4} (j+1) q_v(n,j) z^j equals the stated polynomial, "
                 "q_1 = (n-j)(n-1-j), q_2 = (n-1-j)(n-2-j), q_3 = (n-2-j)(n-3-j); "
                 "v4: the q_3 case with prefactor (z-1)^4 z",
      .mode = Mode::coefficient,
      .variants = {1, 2, 3, 4},
      .params = {{"n", range(4, 30), {}, "n >= 4"}},
      .validate = [](const Params& p) { return require(param_long(p, "n") >= 4, "n must be >= 4"); },
      .evaluate =
          [](const Params& p, const Policy& pol) {
            const long v = param_long(p, "v"), n = param_long(p, "n");
            using P = Polynomial<Rational>;
            std::vector<Rational> sum(static_cast<std::size_t>(n - 3), R(0));
            for (long j = 0; j <= n - 4; ++j) {
              long q = v == 1 ? (n - j) * (n - 1 - j) : v == 2 ? (n - 1 - j) * (n - 2 - j) : (n - 2 - j) * (n - 3 - j);
              sum[static_cast<std::size_t>(j)] = R((j + 1) * q);
            }
            P lhs = P(std::move(sum)) * P(std::vector<Rational>{-1, 1}).pow(4) * mono(R(1), v == 4 ? 1 : 3);
            P rhs;
            auto add = [&rhs](long coef, long deg) { rhs += mono(R(coef), deg); };
            if (v == 1) {
              add(n * n + 3 * n + 2, 5), add(-(2 * n * n + 2 * n - 4), 4), add(n * n - n, 3);
              add(-(6 * n - 12), n), add(22 * n - 46, n + 1), add(-(28 * n - 64), n + 2), add(12 * n - 36, n + 3);
            } else if (v == 2) {
              add(n * n + n, 5), add(-(2 * n * n - 2 * n - 4), 4), add(n * n - 3 * n + 2, 3);
              add(-(2 * n - 4), n), add(8 * n - 16, n + 1), add(-(12 * n - 24), n + 2), add(6 * n - 18, n + 3);
            } else {
              add(n * n - 5 * n + 6, 1), add(-(2 * n * n - 6 * n), 2), add(n * n - n, 3);
              add(-2 * n, n), add(2 * n - 6, n + 1);
            }
            const long order = std::max({lhs.degree(), rhs.degree(), 0L});
            TruncatedSeries<Rational> ls(order), rs(order);
            for (long i = 0; i <= order; ++i) {
              ls[i] = lhs.coeff(i);
              rs[i] = rhs.coeff(i);
            }
            return coefficient_verdict("G13", p, ls, rs, pol.precision);
          },
  });

  out.push_back({
      .id = "G14",
      .anchor = "Even and odd part functions h1, h2 and their derivatives",
      .formula = "h1 = ((b+cx)^n+(b-cx)^n)/2, h2 = ((b+cx)^n-(b-cx)^n)/(2x); "
                 "v1: 2 sum C(n,j) floor(j/2) b^(n-j) c^j = h1'(1)+h2'(1); "
                 "v2: 4 sum C(n,j) floor(j/2)^2 b^(n-j) c^j = (x h1')'(1)+(x h2')'(1); "
                 "v3: sum (-1)^floor(j/2) C(n,j) b^(n-j) c^j = h1(i)+h2(i)",
      .mode = Mode::exact,
      .variants = {1, 2, 3},
      .params = {bgrid, cgrid, {"n", range(1, 20), {}, "n >= 1"}},
      .validate = bc_nonzero,
      .evaluate =
          [](const Params& p, const Policy& pol) {
            const long v = param_long(p, "v"), n = param_long(p, "n");
            const Rational b = param(p, "b"), c = param(p, "c");
            if (v == 3) {
              using P = Polynomial<QSqrt5i>;
              const QSqrt5i bi{QSqrt5(b)}, ci{QSqrt5(c)};
              P plus = P(std::vector<QSqrt5i>{bi, ci}).pow(static_cast<unsigned long>(n));
              P minus = P(std::vector<QSqrt5i>{bi, -ci}).pow(static_cast<unsigned long>(n));
              const QSqrt5i half{QSqrt5(Q(1, 2))};
              P h1 = (plus + minus).scaled(half);
              P num = (plus - minus).scaled(half);
              std::vector<QSqrt5i> shifted(num.coeffs().begin() + (num.is_zero() ? 0 : 1), num.coeffs().end());
              P h2(std::move(shifted));
              const QSqrt5i I = QSqrt5i::i();
              QSqrt5i rhs = h1.evaluate(I) + h2.evaluate(I);
              QSqrt5i lhs;
              for (long j = 0; j <= n; ++j)
                lhs += QSqrt5i(QSqrt5(Rational(binom(n, j)) * sgn(j / 2) * pow(b, n - j) * pow(c, j)));
              return exact_verdict("G14", p, lhs, rhs, pol.precision);
            }
            using P = Polynomial<Rational>;
            P plus = P(std::vector<Rational>{b, c}).pow(static_cast<unsigned long>(n));
            P minus = P(std::vector<Rational>{b, Rational(-c)}).pow(static_cast<unsigned long>(n));
            P h1 = (plus + minus).scaled(Q(1, 2));
            P num = (plus - minus).scaled(Q(1, 2));
            std::vector<Rational> shifted(num.coeffs().begin() + (num.is_zero() ? 0 : 1), num.coeffs().end());
            P h2(std::move(shifted));
            Rational rhs, lhs;
            if (v == 1) {
              rhs = h1.derivative().evaluate(R(1)) + h2.derivative().evaluate(R(1));
              for (long j = 0; j <= n; ++j) lhs += 2 * Rational(binom(n, j)) * (j / 2) * pow(b, n - j) * pow(c, j);
            } else {
              const P x = P::z();
              rhs = (x * h1.derivative()).derivative().evaluate(R(1)) + (x * h2.derivative()).derivative().evaluate(R(1));
              for (long j = 0; j <= n; ++j)
                lhs += 4 * Rational(binom(n, j)) * ((j / 2) * (j / 2)) * pow(b, n - j) * pow(c, j);
            }
            return exact_verdict("G14", p, QSqrt5(lhs), QSqrt5(rhs), pol.precision);
          },
  });
}

}  // namespace floorsum
