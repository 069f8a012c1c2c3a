#include "lelong/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace lelong {

namespace {

Integer pow2(unsigned bits) {
  Integer r = 1;
  r <<= bits;
  return r;
}

// floor(sqrt(n)) for n >= 0.
Integer isqrt(const Integer& n) { return boost::multiprecision::sqrt(n); }

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(s));
    Integer num(s.substr(0, slash));
    Integer den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("malformed rational '" + s + "'");
  }
}

std::string to_string(const Rational& q) { return q.str(); }

std::string to_decimal(const Rational& q, int digits) {
  Integer scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  Rational scaled = q * scale;
  bool neg = scaled < 0;
  if (neg) scaled = -scaled;
  Integer n = floor(scaled + Rational(1, 2));
  std::string body = n.str();
  if (digits > 0) {
    if (body.size() <= static_cast<std::size_t>(digits))
      body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
    body.insert(body.size() - static_cast<std::size_t>(digits), ".");
  }
  if (neg && n != 0) body.insert(0, "-");
  return body;
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

Rational from_double(double v) {
  if (!std::isfinite(v)) throw std::invalid_argument("non-finite double");
  int exp = 0;
  double mant = std::frexp(v, &exp);
  // 53-bit mantissa as an exact integer.
  Integer m(static_cast<long long>(std::ldexp(mant, 53)));
  exp -= 53;
  Rational r(m);
  if (exp >= 0) return r * Rational(pow2(static_cast<unsigned>(exp)));
  return r / Rational(pow2(static_cast<unsigned>(-exp)));
}

Integer floor(const Rational& q) {
  Integer n = numerator(q);
  Integer d = denominator(q);
  Integer r = n / d;  // truncates toward zero
  if (n < 0 && r * d != n) r -= 1;
  return r;
}

Integer ceil(const Rational& q) { return -floor(-q); }

Rational round_down(const Rational& q, unsigned bits) {
  Integer s = pow2(bits);
  return Rational(floor(q * s), s);
}

Rational round_up(const Rational& q, unsigned bits) {
  Integer s = pow2(bits);
  return Rational(ceil(q * s), s);
}

Rational pow(const Rational& q, long e) {
  if (e < 0) return Rational(1) / pow(q, -e);
  Rational result = 1;
  Rational base = q;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

Interval operator+(const Interval& a, const Interval& b) { return {a.lo + b.lo, a.hi + b.hi}; }
Interval operator-(const Interval& a, const Interval& b) { return {a.lo - b.hi, a.hi - b.lo}; }
Interval operator-(const Interval& a) { return {-a.hi, -a.lo}; }

Interval operator*(const Rational& s, const Interval& a) {
  if (s >= 0) return {s * a.lo, s * a.hi};
  return {s * a.hi, s * a.lo};
}

Interval mul_nonneg(const Interval& a, const Interval& b) { return {a.lo * b.lo, a.hi * b.hi}; }

Rational sqrt_lower(const Rational& q, unsigned bits) {
  if (q < 0) throw std::domain_error("sqrt of negative rational");
  Integer s = pow2(bits);
  Integer y = floor(q * s * s);
  return Rational(isqrt(y), s);
}

Rational sqrt_upper(const Rational& q, unsigned bits) {
  if (q < 0) throw std::domain_error("sqrt of negative rational");
  Integer s = pow2(bits);
  Integer y = ceil(q * s * s);
  Integer r = isqrt(y);
  if (r * r < y) r += 1;
  return Rational(r, s);
}

namespace {

// Enclosure of atanh(u) for |u| <= 1/2 via the odd power series; the tail
// after N terms is bounded by |u|^(2N+1) / ((2N+1)(1-u^2)).
Interval atanh_enclosure(const Rational& u, unsigned bits) {
  unsigned guard = bits + 16;
  Rational u2 = u * u;
  Rational power = u;
  Interval sum(Rational(0));
  Rational eps = Rational(1, pow2(guard));
  for (int k = 0;; ++k) {
    Rational term = power / (2 * k + 1);
    sum.lo += round_down(term, guard);
    sum.hi += round_up(term, guard);
    power *= u2;
    Rational tail = abs(power) / ((2 * k + 3) * (1 - u2));
    if (tail < eps) {
      sum.lo -= tail;
      sum.hi += tail;
      return sum;
    }
  }
}

Interval log2_enclosure(unsigned bits) { return Rational(2) * atanh_enclosure(Rational(1, 3), bits); }

// Exponent k with x / 2^k in [2/3, 4/3].
long binary_scale(const Rational& x) {
  long k = static_cast<long>(msb(numerator(x))) - static_cast<long>(msb(denominator(x)));
  Rational y = k >= 0 ? x / Rational(pow2(static_cast<unsigned>(k))) : x * Rational(pow2(static_cast<unsigned>(-k)));
  while (y > Rational(4, 3)) {
    y /= 2;
    ++k;
  }
  while (y < Rational(2, 3)) {
    y *= 2;
    --k;
  }
  return k;
}

}  // namespace

Interval log_enclosure(const Rational& x, unsigned bits) {
  if (x <= 0) throw std::domain_error("log of non-positive rational");
  if (x == 1) return Interval(Rational(0));
  long k = binary_scale(x);
  Rational scale = k >= 0 ? Rational(pow2(static_cast<unsigned>(k))) : Rational(1) / Rational(pow2(static_cast<unsigned>(-k)));
  // Work with a dyadic neighbour of y to keep the series rationals small.
  Rational y = x / scale;
  unsigned guard = bits + 8;
  Rational ylo = round_down(y, guard);
  Rational yhi = round_up(y, guard);
  auto half_log = [&](const Rational& v) { return atanh_enclosure((v - 1) / (v + 1), bits + 4); };
  Interval lo = half_log(ylo);
  Interval hi = ylo == yhi ? lo : half_log(yhi);
  Interval logy{2 * lo.lo, 2 * hi.hi};
  if (k == 0) return logy;
  return logy + Rational(k) * log2_enclosure(bits + 8 + static_cast<unsigned>(msb(Integer(std::abs(k))) + 1));
}

Interval log_enclosure(const Interval& x, unsigned bits) {
  if (x.lo <= 0) throw std::domain_error("log of interval touching zero");
  Interval a = log_enclosure(x.lo, bits);
  if (x.lo == x.hi) return a;
  Interval b = log_enclosure(x.hi, bits);
  return {a.lo, b.hi};
}

Interval exp_enclosure(const Rational& x, unsigned bits) {
  // Halve until |y| <= 1/2, sum the Taylor series, then square back.
  unsigned halvings = 0;
  Rational y = x;
  while (abs(y) > Rational(1, 2)) {
    y /= 2;
    ++halvings;
  }
  unsigned guard = bits + 2 * halvings + 16;
  Rational eps = Rational(1, pow2(guard));
  Interval sum(Rational(0));
  Rational term = 1;
  for (int n = 1;; ++n) {
    sum.lo += round_down(term, guard);
    sum.hi += round_up(term, guard);
    term = term * y / n;
    // Remaining tail is at most 2|term| for |y| <= 1/2.
    Rational tail = 2 * abs(term);
    if (tail < eps) {
      sum.lo -= tail;
      sum.hi += tail;
      break;
    }
  }
  for (unsigned i = 0; i < halvings; ++i) {
    sum = mul_nonneg(sum, sum);
    sum.lo = round_down(sum.lo, guard);
    sum.hi = round_up(sum.hi, guard);
  }
  return sum;
}

Interval exp_enclosure(const Interval& x, unsigned bits) {
  Interval a = exp_enclosure(x.lo, bits);
  if (x.lo == x.hi) return a;
  Interval b = exp_enclosure(x.hi, bits);
  return {a.lo, b.hi};
}

}  // namespace lelong
