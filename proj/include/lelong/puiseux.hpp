#pragma once

#include "lelong/projective.hpp"

#include <complex>
#include <memory>
#include <vector>

namespace lelong {

struct HullSegment {
  long i1 = 0, j1 = 0, i2 = 0, j2 = 0;
  /// w ~ t^slope along this edge; slope = p/q in lowest terms.
  long p = 0, q = 1;
  /// Support points on the edge, (t-exponent, w-exponent).
  std::vector<std::pair<long, long>> points;
  Rational slope() const { return Rational(p, q); }
};

/// Lower hull of the support between the w-axis side and the lowest w-power.
struct NewtonPolygon {
  std::vector<std::pair<long, long>> support;
  std::vector<HullSegment> segments;  // increasing slope
};

NewtonPolygon newton_polygon(const LocalPoly& g);
/// For a rational local equation in (t, w).
NewtonPolygon newton_polygon(const MultiPoly& g);

/// Power series in the branch parameter s; entry k is the coefficient of s^k.
using Series = std::vector<FieldElem>;

/// ct*t + cx*x + cy*y = 0.
struct TangentLine {
  FieldElem ct, cx, cy;
};
std::string to_string(const TangentLine& l);

/// One irreducible germ component at a point at infinity, parametrised by
/// t = s^e, w = W(s) in the local chart.
struct PuiseuxBranch {
  ProjPoint point;
  Chart chart = Chart::X1;
  FieldElem center;
  long ramification = 1;
  /// Coefficients of W, valid through s^order.
  Series w;
  long order = 0;
  /// W is exactly the finite series (the branch is a root of a linear factor).
  bool exact = false;
  long id = 0;
  TangentLine tangent;
  bool smooth = false;

  /// Truncation order in t.
  Rational truncation_order() const { return Rational(order, ramification); }
  /// ord_s W, or -1 when W = 0.
  long leading_exponent() const;
  FieldPtr field() const;
  /// Chart coordinates (x^(s), y^(s)) with t = s^e; one of them is 1.
  Series chart_x() const;
  Series chart_y() const;

  struct Leaf;
  std::shared_ptr<const Leaf> leaf;
};

struct GermDecomposition {
  ProjPoint point;
  Chart chart = Chart::X1;
  std::vector<PuiseuxBranch> branches;
  /// Individual Puiseux series before grouping: the sum of ramifications.
  long series_count = 0;
  /// ord_w G(0, w).
  long local_degree = 0;
};

struct PuiseuxOptions {
  long trunc_cap = 64;
  long degree_cap = 64;
};

struct TruncationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Branches of the germ of G = 0 at the origin, each expanded through
/// t-order `order` (at least one nonzero term beyond the characteristic data).
GermDecomposition puiseux_branches(const LocalEquation& eq, const Rational& order, const PuiseuxOptions& opt = {});

/// Extends W so it is valid through s^order.
void extend_branch(PuiseuxBranch& b, long order, const PuiseuxOptions& opt = {});

struct AffinePoint {
  std::complex<double> x, y;
  double residual = 0;
  double relative_residual = 0;
};

/// Affine points at |t| = each given magnitude (t = s^e with s > 0).
std::vector<AffinePoint> branch_points(const PuiseuxBranch& b, const MultiPoly& f, const std::vector<double>& t_values);

/// Numeric chart coordinates at a complex parameter s.
std::pair<std::complex<long double>, std::complex<long double>> branch_affine(const PuiseuxBranch& b,
                                                                              std::complex<long double> s);

/// Series truncated after `len` coefficients.
Series series_mul(const Series& a, const Series& b, std::size_t len);

}  // namespace lelong
