#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>

namespace lelong {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

inline bool is_zero(const Rational& q) { return q.is_zero(); }

Rational parse_rational(std::string_view text);

/// "p" or "p/q" in lowest terms.
std::string to_string(const Rational& q);

/// Fixed-point decimal rendering rounded to `digits` fractional digits.
std::string to_decimal(const Rational& q, int digits = 17);

double to_double(const Rational& q);

/// Exact conversion of a finite double.
Rational from_double(double v);

Integer floor(const Rational& q);
Integer ceil(const Rational& q);

/// Nearest multiple of 2^-bits below / above q.
Rational round_down(const Rational& q, unsigned bits);
Rational round_up(const Rational& q, unsigned bits);

Rational pow(const Rational& q, long e);

/// Closed interval with rational endpoints.
struct Interval {
  Rational lo;
  Rational hi;

  Interval() = default;
  explicit Interval(const Rational& point) : lo(point), hi(point) {}
  Interval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {}

  Rational width() const { return hi - lo; }
  Rational midpoint() const { return (lo + hi) / 2; }
  bool contains(const Rational& q) const { return lo <= q && q <= hi; }
  bool overlaps(const Interval& o) const { return !(hi < o.lo || o.hi < lo); }
};

Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator-(const Interval& a);
Interval operator*(const Rational& s, const Interval& a);
/// Product of intervals with non-negative endpoints.
Interval mul_nonneg(const Interval& a, const Interval& b);

// Certified enclosures. Every result contains the exact real value; its width
// is roughly 2^-bits (relative for exp).
Rational sqrt_lower(const Rational& q, unsigned bits);
Rational sqrt_upper(const Rational& q, unsigned bits);
Interval log_enclosure(const Rational& x, unsigned bits);
Interval log_enclosure(const Interval& x, unsigned bits);
Interval exp_enclosure(const Rational& x, unsigned bits);
Interval exp_enclosure(const Interval& x, unsigned bits);

}  // namespace lelong
