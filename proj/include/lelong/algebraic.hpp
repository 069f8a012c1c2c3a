#pragma once

#include "lelong/ball.hpp"
#include "lelong/upoly.hpp"

#include <complex>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lelong {

/// Q(θ) for one chosen complex root θ of a squarefree rational polynomial.
///
/// The modulus need not be irreducible. Zero tests that hit a proper factor
/// split it and keep the factor θ belongs to, so the modulus only shrinks.
/// Narrowing is guarded by a mutex; everything else is read-only.
class NumberField {
 public:
  NumberField(QPoly modulus, Disk root);

  QPoly modulus() const;
  Disk root_disk() const;
  long degree() const;
  /// θ itself when the modulus has degree one.
  std::optional<Rational> rational_value() const;

  /// Decides e(θ) = 0.
  bool vanishes(const QPoly& e);
  /// Enclosure of e(θ) with radius at most `max_radius`.
  Ball enclose(const QPoly& e, const Rational& max_radius);
  /// Shrinks the isolating disk to radius at most `max_radius`.
  void refine(const Rational& max_radius);
  std::complex<double> approx() const;

 private:
  void refine_locked(const Rational& max_radius);
  mutable std::mutex mu_;
  QPoly m_;
  Disk disk_;
};

using FieldPtr = std::shared_ptr<NumberField>;

/// Element of a number field, or a plain rational when `field()` is null.
/// Rational values always use the null-field form, so constants such as 0
/// and 1 combine freely with elements of any field.
class FieldElem {
 public:
  FieldElem() = default;
  FieldElem(int v) : q_(v) {}            // NOLINT
  FieldElem(Rational v) : q_(std::move(v)) {}  // NOLINT
  FieldElem(FieldPtr field, const QPoly& rep);

  static FieldElem generator(const FieldPtr& field) { return FieldElem(field, QPoly::x()); }

  const FieldPtr& field() const { return field_; }
  bool is_rational() const { return !field_; }
  const Rational& rational() const { return q_; }
  /// Representative polynomial in θ (a constant for rationals).
  QPoly rep() const;

  friend FieldElem operator+(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator-(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator-(const FieldElem& a);
  friend FieldElem operator*(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator/(const FieldElem& a, const FieldElem& b);
  friend bool operator==(const FieldElem& a, const FieldElem& b);

 private:
  static FieldElem make(const FieldPtr& field, QPoly rep);
  FieldPtr field_;
  Rational q_;
  QPoly rep_;
};

bool is_zero(const FieldElem& a);
Ball enclose(const FieldElem& a, const Rational& max_radius);
std::complex<double> approx(const FieldElem& a);
/// Exact form for rationals, otherwise a decimal approximation.
std::string to_string(const FieldElem& a);

using KPoly = UPoly<FieldElem>;

/// Field homomorphism Q(θ) -> Q(θ') sending θ to image(θ').
struct Embedding {
  FieldPtr from;
  FieldPtr to;
  QPoly image = QPoly::x();

  FieldElem operator()(const FieldElem& a) const;
  KPoly operator()(const KPoly& p) const;
};

/// Embedding composition: first `f`, then `g`.
Embedding compose(const Embedding& f, const Embedding& g);

struct FieldDegreeError : std::runtime_error {
  explicit FieldDegreeError(long required);
  long required;
};

/// One root of a polynomial over K together with a field containing K and
/// that root.
struct AdjoinedRoot {
  FieldPtr field;
  Embedding embed;
  FieldElem root;
};

/// Every distinct complex root of `phi` (coefficients in `base`, or rational
/// when `base` is null), each in its own extension of `base`. With
/// `first_only` the search stops after one root. Rational roots come first in
/// increasing order, the rest follow by isolating disk.
std::vector<AdjoinedRoot> adjoin_roots(const KPoly& phi, const FieldPtr& base, long degree_cap = 64,
                                       bool first_only = false);

}  // namespace lelong
