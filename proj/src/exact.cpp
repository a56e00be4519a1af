#include "floorsum/exact.hpp"

#include <cctype>
#include <climits>
#include <stdexcept>

namespace floorsum {

namespace {

std::string trim(std::string_view s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  return out;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational make_rational(long num, long den) {
  if (den == 0) throw std::domain_error("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(std::string_view text) {
  std::string s = trim(text);
  if (s.empty()) throw std::invalid_argument("empty rational");
  bool negative = false;
  std::string body = s;
  if (body[0] == '+' || body[0] == '-') {
    negative = body[0] == '-';
    body = body.substr(1);
  }
  Rational q;
  if (auto e = body.find_first_of("eE"); e != std::string::npos) {
    std::string mant = body.substr(0, e), ex = body.substr(e + 1);
    std::string digits = (!ex.empty() && (ex[0] == '+' || ex[0] == '-')) ? ex.substr(1) : ex;
    if (mant.empty() || mant.find('/') != std::string::npos || !all_digits(digits) || digits.size() > 6)
      throw std::invalid_argument("bad decimal: " + s);
    const long power = std::stol(ex);
    const Rational scale(pow(BigInt(10), static_cast<unsigned long>(power < 0 ? -power : power)));
    q = parse_rational(mant);
    q = power < 0 ? Rational(q / scale) : Rational(q * scale);
  } else if (auto slash = body.find('/'); slash != std::string::npos) {
    std::string num = body.substr(0, slash), den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) throw std::invalid_argument("bad rational: " + s);
    BigInt d(den, 10);
    if (d == 0) throw std::domain_error("zero denominator: " + s);
    q = Rational(BigInt(num, 10), d);
  } else if (auto dot = body.find('.'); dot != std::string::npos) {
    std::string ip = body.substr(0, dot), fp = body.substr(dot + 1);
    if (ip.empty()) ip = "0";
    if (!all_digits(ip) || (!fp.empty() && !all_digits(fp)))
      throw std::invalid_argument("bad decimal: " + s);
    BigInt den = pow(BigInt(10), fp.size());
    q = Rational(BigInt(ip + fp, 10), den);
  } else {
    if (!all_digits(body)) throw std::invalid_argument("bad rational: " + s);
    q = Rational(BigInt(body, 10));
  }
  q.canonicalize();
  return negative ? Rational(-q) : q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

BigInt pow(const BigInt& base, unsigned long exponent) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

Rational pow(const Rational& base, long exponent) {
  if (exponent == 0) return Rational(1);
  if (sgn(base) == 0) {
    if (exponent < 0) throw std::domain_error("0 raised to a negative power");
    return Rational(0);
  }
  unsigned long e = exponent < 0 ? static_cast<unsigned long>(-(exponent + 1)) + 1
                                 : static_cast<unsigned long>(exponent);
  Rational r(pow(base.get_num(), e), pow(base.get_den(), e));
  r.canonicalize();
  if (exponent < 0) r = 1 / r;
  return r;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

long to_long(const Rational& q) {
  if (!is_integer(q) || !q.get_num().fits_slong_p())
    throw std::domain_error("not a machine integer: " + q.get_str());
  return q.get_num().get_si();
}

// ---- QSqrt5 ----

QSqrt5::QSqrt5(Rational rat, Rational irr) : rat_(std::move(rat)), irr_(std::move(irr)) {
  canonicalize();
}

QSqrt5::QSqrt5(long value) : rat_(value), irr_(0) {}

void QSqrt5::canonicalize() {
  rat_.canonicalize();
  irr_.canonicalize();
}

int QSqrt5::sign() const {
  int a = sgn(rat_), b = sgn(irr_);
  if (a >= 0 && b >= 0) return (a > 0 || b > 0) ? 1 : 0;
  if (a <= 0 && b <= 0) return -1;
  int c = sgn(Rational(rat_ * rat_ - 5 * irr_ * irr_));
  return a > 0 ? c : -c;
}

QSqrt5 QSqrt5::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero in Q(sqrt5)");
  Rational n = norm();
  return QSqrt5(rat_ / n, -irr_ / n);
}

QSqrt5& QSqrt5::operator+=(const QSqrt5& o) {
  rat_ += o.rat_;
  irr_ += o.irr_;
  return *this;
}

QSqrt5& QSqrt5::operator-=(const QSqrt5& o) {
  rat_ -= o.rat_;
  irr_ -= o.irr_;
  return *this;
}

QSqrt5& QSqrt5::operator*=(const QSqrt5& o) {
  if (sgn(irr_) == 0 && sgn(o.irr_) == 0) {
    rat_ *= o.rat_;
    return *this;
  }
  Rational r = rat_ * o.rat_ + 5 * irr_ * o.irr_;
  Rational i = rat_ * o.irr_ + irr_ * o.rat_;
  rat_ = std::move(r);
  irr_ = std::move(i);
  return *this;
}

QSqrt5& QSqrt5::operator/=(const QSqrt5& o) {
  if (o.is_rational()) {
    if (sgn(o.rat_) == 0) throw std::domain_error("division by zero in Q(sqrt5)");
    rat_ /= o.rat_;
    irr_ /= o.rat_;
    return *this;
  }
  return *this *= o.inverse();
}

std::strong_ordering operator<=>(const QSqrt5& a, const QSqrt5& b) {
  int s = (a - b).sign();
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

template <class T>
static T binary_pow(T base, long exponent) {
  if (exponent == 0) return T(1L);
  if (exponent < 0) {
    base = base.inverse();
    exponent = -exponent;
  }
  T result(1L);
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

QSqrt5 pow(const QSqrt5& base, long exponent) {
  if (exponent < 0 && base.is_zero()) throw std::domain_error("0 raised to a negative power");
  if (base.is_rational()) return QSqrt5(pow(base.rat(), exponent));
  return binary_pow(base, exponent);
}

QSqrt5 alpha() { return QSqrt5(make_rational(1, 2), make_rational(1, 2)); }
QSqrt5 beta() { return QSqrt5(make_rational(1, 2), make_rational(-1, 2)); }

// alpha^-1 = -beta and beta^-1 = -alpha, so negative powers stay division free.
QSqrt5 alpha_pow(long n) { return n >= 0 ? binary_pow(alpha(), n) : binary_pow(-beta(), -n); }
QSqrt5 beta_pow(long n) { return n >= 0 ? binary_pow(beta(), n) : binary_pow(-alpha(), -n); }

QSqrt5 sqrt5_pow(long e) {
  long half = e >= 0 ? e / 2 : -((-e + 1) / 2);  // floor(e/2)
  Rational five_pow = pow(Rational(5), half);
  if (e - 2 * half == 0) return QSqrt5(five_pow);
  return QSqrt5(Rational(0), five_pow);
}

std::string to_exact_string(const QSqrt5& x) {
  std::string out = x.rat().get_str();
  if (sgn(x.irr()) < 0) {
    out += "-" + Rational(-x.irr()).get_str();
  } else {
    out += "+" + x.irr().get_str();
  }
  return out + "*sqrt5";
}

std::string to_string(const QSqrt5& x) {
  if (x.is_rational()) return x.rat().get_str();
  std::string irr = x.irr().get_str() + "*sqrt5";
  if (sgn(x.rat()) == 0) return irr;
  if (sgn(x.irr()) < 0) return x.rat().get_str() + "-" + Rational(-x.irr()).get_str() + "*sqrt5";
  return x.rat().get_str() + "+" + irr;
}

QSqrt5 parse_qsqrt5(std::string_view text) {
  std::string s = trim(text);
  auto pos = s.find("sqrt5");
  if (pos == std::string::npos) return QSqrt5(parse_rational(s));
  if (pos + 5 != s.size()) throw std::invalid_argument("bad Q(sqrt5) literal: " + s);
  std::string head = s.substr(0, pos);
  if (!head.empty() && head.back() == '*') head.pop_back();
  // Split head into rational part and coefficient at the last sign past index 0.
  std::size_t split = std::string::npos;
  for (std::size_t i = head.size(); i-- > 1;) {
    if (head[i] == '+' || head[i] == '-') {
      split = i;
      break;
    }
  }
  std::string rat_part, coef;
  if (split == std::string::npos) {
    coef = head;
  } else {
    rat_part = head.substr(0, split);
    coef = head.substr(split);
  }
  Rational c;
  if (coef.empty() || coef == "+") {
    c = 1;
  } else if (coef == "-") {
    c = -1;
  } else {
    c = parse_rational(coef);
  }
  Rational r = rat_part.empty() ? Rational(0) : parse_rational(rat_part);
  return QSqrt5(r, c);
}

// ---- QSqrt5i ----

QSqrt5i QSqrt5i::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero in Q(sqrt5, i)");
  QSqrt5 n = norm();
  return QSqrt5i(re_ / n, -im_ / n);
}

QSqrt5i& QSqrt5i::operator+=(const QSqrt5i& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

QSqrt5i& QSqrt5i::operator-=(const QSqrt5i& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

QSqrt5i& QSqrt5i::operator*=(const QSqrt5i& o) {
  QSqrt5 r = re_ * o.re_ - im_ * o.im_;
  QSqrt5 i = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}

QSqrt5i& QSqrt5i::operator/=(const QSqrt5i& o) { return *this *= o.inverse(); }

QSqrt5i pow(const QSqrt5i& base, long exponent) {
  if (exponent < 0 && base.is_zero()) throw std::domain_error("0 raised to a negative power");
  return binary_pow(base, exponent);
}

std::string to_string(const QSqrt5i& x) {
  if (x.is_real()) return to_string(x.re());
  return "(" + to_string(x.re()) + ")+(" + to_string(x.im()) + ")*i";
}

}  // namespace floorsum
