#include "lelong/ball.hpp"

#include <stdexcept>

namespace lelong {

namespace {

Rational round_nearest(const Rational& q, unsigned bits) {
  Integer s = 1;
  s <<= bits;
  return Rational(floor(q * s + Rational(1, 2)), s);
}

// Rough floor(log2 q) for q > 0.
long log2_floor(const Rational& q) {
  return static_cast<long>(msb(numerator(q))) - static_cast<long>(msb(denominator(q))) - 1;
}

constexpr long kGuardBits = 40;

}  // namespace

ComplexQ round(const ComplexQ& z, unsigned bits) { return {round_nearest(z.re, bits), round_nearest(z.im, bits)}; }

std::complex<double> to_complex(const ComplexQ& z) { return {to_double(z.re), to_double(z.im)}; }

ComplexQ from_complex(std::complex<double> z) { return {from_double(z.real()), from_double(z.imag())}; }

namespace {

// Absolute precision giving about `bits` significant bits for sqrt(n2).
unsigned relative_bits(const Rational& n2, unsigned bits) {
  if (n2.is_zero()) return bits;
  long e = log2_floor(n2);
  return e < 0 ? bits + static_cast<unsigned>((-e) / 2 + 1) : bits;
}

}  // namespace

Rational abs_upper(const ComplexQ& z, unsigned bits) {
  Rational n2 = z.norm2();
  return sqrt_upper(n2, relative_bits(n2, bits));
}
Rational abs_lower(const ComplexQ& z, unsigned bits) {
  Rational n2 = z.norm2();
  return sqrt_lower(n2, relative_bits(n2, bits));
}

bool Disk::intersects(const Disk& o) const {
  Rational r = radius + o.radius;
  return (center - o.center).norm2() <= r * r;
}

bool Disk::inside(const Disk& o) const {
  Rational slack = o.radius - radius;
  if (slack < 0) return false;
  return (center - o.center).norm2() <= slack * slack;
}

namespace {

Ball normalized(ComplexQ mid, Rational rad) {
  if (rad.is_zero()) return {std::move(mid), std::move(rad)};
  long bits = kGuardBits - log2_floor(rad);
  if (bits < 0) bits = 0;
  auto b = static_cast<unsigned>(bits);
  Rational grid(Integer(1), Integer(1) << b);
  return {round(mid, b), round_up(rad + grid, b + 8)};
}

}  // namespace

bool Ball::contains_zero() const { return mid_.norm2() <= rad_ * rad_; }

Interval Ball::abs_enclosure(unsigned bits) const {
  Rational lo = abs_lower(mid_, bits) - rad_;
  if (lo < 0) lo = 0;
  return {lo, abs_upper(mid_, bits) + rad_};
}

Ball operator+(const Ball& a, const Ball& b) { return normalized(a.mid_ + b.mid_, a.rad_ + b.rad_); }

Ball operator-(const Ball& a, const Ball& b) { return normalized(a.mid_ - b.mid_, a.rad_ + b.rad_); }

Ball operator*(const Ball& a, const Ball& b) {
  ComplexQ mid = a.mid_ * b.mid_;
  if (a.rad_.is_zero() && b.rad_.is_zero()) return {mid, Rational(0)};
  Rational rad = a.rad_ * b.rad_;
  if (!b.rad_.is_zero()) rad += abs_upper(a.mid_) * b.rad_;
  if (!a.rad_.is_zero()) rad += abs_upper(b.mid_) * a.rad_;
  return normalized(std::move(mid), std::move(rad));
}

Ball operator/(const Ball& a, const Ball& b) {
  if (b.rad_.is_zero()) {
    if (b.mid_.is_zero()) throw std::domain_error("ball division by zero");
    Ball inv(ComplexQ(1) / b.mid_);
    return a * inv;
  }
  Rational m = abs_lower(b.mid_);
  if (m <= b.rad_) throw std::domain_error("ball division by a ball containing zero");
  Ball inv = normalized(ComplexQ(1) / b.mid_, b.rad_ / (m * (m - b.rad_)));
  return a * inv;
}

Ball eval(const QPoly& p, const Ball& z) {
  Ball acc(0);
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + Ball(*it);
  return acc;
}

}  // namespace lelong
