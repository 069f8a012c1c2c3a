#pragma once

#include "lelong/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace lelong {

namespace detail {
template <class S>
bool scalar_zero(const S& s) {
  return is_zero(s);
}
}  // namespace detail

/// Dense univariate polynomial over a scalar type with field operations.
///
/// `Scalar` must be default-constructible to zero, constructible from `int`,
/// and provide a free `is_zero(const Scalar&)`. Coefficients are stored from
/// the constant term up; the representation is always trimmed so the leading
/// coefficient is nonzero (the zero polynomial has no coefficients).
template <class Scalar>
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }
  UPoly(const Scalar& constant) : c_{constant} { trim(); }  // NOLINT(implicit)

  static UPoly monomial(const Scalar& coeff, std::size_t degree) {
    std::vector<Scalar> c(degree + 1);
    c[degree] = coeff;
    return UPoly(std::move(c));
  }
  static UPoly x() { return monomial(Scalar(1), 1); }

  bool is_zero() const { return c_.empty(); }
  /// Degree; -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const Scalar& lead() const { return c_.back(); }
  const std::vector<Scalar>& coeffs() const { return c_; }
  std::size_t size() const { return c_.size(); }

  Scalar coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Scalar(0); }

  template <class Value>
  Value operator()(const Value& v) const {
    Value acc = Value(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * v + Value(*it);
    return acc;
  }

  UPoly& operator+=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] + o.c_[i];
    trim();
    return *this;
  }
  UPoly& operator-=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] - o.c_[i];
    trim();
    return *this;
  }
  UPoly& operator*=(const Scalar& s) {
    for (auto& v : c_) v = v * s;
    trim();
    return *this;
  }

  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator-(UPoly a) {
    for (auto& v : a.c_) v = -v;
    return a;
  }
  friend UPoly operator*(UPoly a, const Scalar& s) { return a *= s; }
  friend UPoly operator*(const Scalar& s, UPoly a) { return a *= s; }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Scalar> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
    return UPoly(std::move(r));
  }
  friend bool operator==(const UPoly& a, const UPoly& b) { return (a - b).is_zero(); }

  UPoly shifted(std::size_t k) const {
    if (is_zero()) return {};
    std::vector<Scalar> r(k);
    r.insert(r.end(), c_.begin(), c_.end());
    return UPoly(std::move(r));
  }

 private:
  void trim() {
    while (!c_.empty() && detail::scalar_zero(c_.back())) c_.pop_back();
  }
  std::vector<Scalar> c_;
};

using QPoly = UPoly<Rational>;

template <class Scalar>
UPoly<Scalar> derivative(const UPoly<Scalar>& p) {
  if (p.degree() < 1) return {};
  std::vector<Scalar> r(p.size() - 1);
  for (std::size_t k = 1; k < p.size(); ++k) r[k - 1] = p.coeffs()[k] * Scalar(static_cast<int>(k));
  return UPoly<Scalar>(std::move(r));
}

/// Euclidean division a = q*b + r with deg r < deg b.
template <class Scalar>
std::pair<UPoly<Scalar>, UPoly<Scalar>> divmod(const UPoly<Scalar>& a, const UPoly<Scalar>& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Scalar> rem = a.coeffs();
  long db = b.degree();
  if (a.degree() < db) return {UPoly<Scalar>(), a};
  Scalar inv_lead = Scalar(1) / b.lead();
  std::vector<Scalar> quo(static_cast<std::size_t>(a.degree() - db + 1));
  for (long k = a.degree(); k >= db; --k) {
    Scalar f = rem[static_cast<std::size_t>(k)] * inv_lead;
    quo[static_cast<std::size_t>(k - db)] = f;
    if (is_zero(f)) continue;
    for (long i = 0; i <= db; ++i) {
      auto idx = static_cast<std::size_t>(k - db + i);
      rem[idx] = rem[idx] - f * b.coeffs()[static_cast<std::size_t>(i)];
    }
  }
  rem.resize(static_cast<std::size_t>(db));
  return {UPoly<Scalar>(std::move(quo)), UPoly<Scalar>(std::move(rem))};
}

template <class Scalar>
UPoly<Scalar> operator%(const UPoly<Scalar>& a, const UPoly<Scalar>& b) {
  return divmod(a, b).second;
}

/// Exact quotient; throws if b does not divide a.
template <class Scalar>
UPoly<Scalar> exact_div(const UPoly<Scalar>& a, const UPoly<Scalar>& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
  return q;
}

template <class Scalar>
UPoly<Scalar> monic(const UPoly<Scalar>& p) {
  if (p.is_zero()) return p;
  return p * (Scalar(1) / p.lead());
}

/// Monic greatest common divisor (zero if both inputs are zero).
template <class Scalar>
UPoly<Scalar> gcd(UPoly<Scalar> a, UPoly<Scalar> b) {
  while (!b.is_zero()) {
    auto r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

/// Extended Euclid: returns (g, s, t) with s*a + t*b = g, g monic.
template <class Scalar>
std::tuple<UPoly<Scalar>, UPoly<Scalar>, UPoly<Scalar>> ext_gcd(const UPoly<Scalar>& a, const UPoly<Scalar>& b) {
  UPoly<Scalar> r0 = a, r1 = b;
  UPoly<Scalar> s0(Scalar(1)), s1, t0, t1(Scalar(1));
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    auto s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    auto t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  Scalar inv = Scalar(1) / r0.lead();
  return {r0 * inv, s0 * inv, t0 * inv};
}

/// Product of the distinct irreducible factors (monic).
template <class Scalar>
UPoly<Scalar> squarefree_part(const UPoly<Scalar>& p) {
  if (p.degree() < 1) return monic(p);
  return monic(exact_div(p, gcd(p, derivative(p))));
}

/// Yun's algorithm: factors[i] is the product of the irreducible factors of
/// multiplicity i+1 (monic; constant 1 when absent).
template <class Scalar>
std::vector<UPoly<Scalar>> squarefree_decomposition(const UPoly<Scalar>& p) {
  std::vector<UPoly<Scalar>> out;
  if (p.degree() < 1) return out;
  auto a = monic(p);
  auto b = derivative(a);
  auto c = gcd(a, b);
  auto w = exact_div(a, c);
  auto y = exact_div(b, c);
  auto z = y - derivative(w);
  while (w.degree() >= 1) {
    auto g = gcd(w, z);
    out.push_back(g);
    w = exact_div(w, g);
    y = exact_div(z, g);
    z = y - derivative(w);
  }
  while (!out.empty() && out.back().degree() < 1) out.pop_back();
  return out;
}

/// p(q(x)).
template <class Scalar>
UPoly<Scalar> compose(const UPoly<Scalar>& p, const UPoly<Scalar>& q) {
  UPoly<Scalar> acc;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * q + UPoly<Scalar>(*it);
  return acc;
}

/// Resultant over a field by the Euclidean remainder sequence.
template <class Scalar>
Scalar resultant(UPoly<Scalar> a, UPoly<Scalar> b) {
  if (a.is_zero() || b.is_zero()) return Scalar(0);
  Scalar res(1);
  while (true) {
    long da = a.degree(), db = b.degree();
    if (db == 0) {
      Scalar f(1);
      for (long i = 0; i < da; ++i) f = f * b.lead();
      return res * f;
    }
    if (da < db) {
      std::swap(a, b);
      if ((da % 2 == 1) && (db % 2 == 1)) res = -res;
      continue;
    }
    auto r = a % b;
    if (r.is_zero()) return Scalar(0);
    long dr = r.degree();
    // res(a, b) = (-1)^(da*db) lc(b)^(da-dr) res(b, r)
    Scalar f(1);
    for (long i = 0; i < da - dr; ++i) f = f * b.lead();
    if ((da % 2 == 1) && (db % 2 == 1)) f = -f;
    res = res * f;
    a = std::move(b);
    b = std::move(r);
  }
}

/// Integer-coefficient primitive multiple of a rational polynomial with
/// positive leading coefficient.
QPoly primitive_integer(const QPoly& p);

/// Pretty form in variable `var`, highest degree first.
std::string to_string(const QPoly& p, const std::string& var = "z");

}  // namespace lelong
