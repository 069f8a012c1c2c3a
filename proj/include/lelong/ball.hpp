#pragma once

#include "lelong/rational.hpp"
#include "lelong/upoly.hpp"

#include <complex>

namespace lelong {

/// Exact Gaussian rational.
struct ComplexQ {
  Rational re;
  Rational im;

  ComplexQ() = default;
  ComplexQ(Rational r, Rational i = Rational(0)) : re(std::move(r)), im(std::move(i)) {}  // NOLINT
  ComplexQ(int r) : re(r) {}                                                            // NOLINT

  Rational norm2() const { return re * re + im * im; }
  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  ComplexQ conj() const { return {re, -im}; }

  friend ComplexQ operator+(const ComplexQ& a, const ComplexQ& b) { return {a.re + b.re, a.im + b.im}; }
  friend ComplexQ operator-(const ComplexQ& a, const ComplexQ& b) { return {a.re - b.re, a.im - b.im}; }
  friend ComplexQ operator-(const ComplexQ& a) { return {-a.re, -a.im}; }
  friend ComplexQ operator*(const ComplexQ& a, const ComplexQ& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend ComplexQ operator/(const ComplexQ& a, const ComplexQ& b) {
    Rational d = b.norm2();
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
  }
  friend bool operator==(const ComplexQ& a, const ComplexQ& b) { return a.re == b.re && a.im == b.im; }
};

inline bool is_zero(const ComplexQ& z) { return z.is_zero(); }

ComplexQ round(const ComplexQ& z, unsigned bits);
std::complex<double> to_complex(const ComplexQ& z);
ComplexQ from_complex(std::complex<double> z);
Rational abs_upper(const ComplexQ& z, unsigned bits = 64);
Rational abs_lower(const ComplexQ& z, unsigned bits = 64);

/// Closed complex disk. As a root enclosure it contains exactly one root of
/// the polynomial it was certified for.
struct Disk {
  ComplexQ center;
  Rational radius;

  bool contains(const ComplexQ& z) const { return (z - center).norm2() <= radius * radius; }
  bool intersects(const Disk& o) const;
  /// This disk lies inside `o`.
  bool inside(const Disk& o) const;
};

/// Midpoint-radius complex ball. Inexact balls keep their midpoint on a
/// dyadic grid a few dozen bits finer than the radius.
class Ball {
 public:
  Ball() = default;
  Ball(ComplexQ mid, Rational rad = Rational(0)) : mid_(std::move(mid)), rad_(std::move(rad)) {}  // NOLINT
  Ball(int v) : mid_(v) {}                                                                       // NOLINT
  Ball(const Rational& v) : mid_(v) {}                                                           // NOLINT

  const ComplexQ& mid() const { return mid_; }
  const Rational& rad() const { return rad_; }
  Disk disk() const { return {mid_, rad_}; }
  bool contains_zero() const;
  /// Interval containing |z| for every z in the ball.
  Interval abs_enclosure(unsigned bits = 64) const;

  friend Ball operator+(const Ball& a, const Ball& b);
  friend Ball operator-(const Ball& a, const Ball& b);
  friend Ball operator-(const Ball& a) { return {-a.mid_, a.rad_}; }
  friend Ball operator*(const Ball& a, const Ball& b);
  friend Ball operator/(const Ball& a, const Ball& b);

 private:
  ComplexQ mid_;
  Rational rad_;
};

/// Enclosure of p(z) for all z in the ball.
Ball eval(const QPoly& p, const Ball& z);

}  // namespace lelong
