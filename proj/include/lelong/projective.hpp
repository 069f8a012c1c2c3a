#pragma once

#include "lelong/algebraic.hpp"
#include "lelong/multipoly.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace lelong {

/// Point [t:x:y] of the projective plane. Points at infinity are stored as
/// [0:1:b] or [0:0:1].
struct ProjPoint {
  FieldElem t;
  FieldElem x;
  FieldElem y;

  bool is_rational() const { return t.is_rational() && x.is_rational() && y.is_rational(); }
  FieldPtr field() const;
};

std::string to_string(const ProjPoint& p);
/// Parses "0:1:0" or "[0:0:1]" (rational coordinates only) and normalises.
ProjPoint parse_point(const std::string& text);
bool same_point(const ProjPoint& a, const ProjPoint& b);

enum class Chart { X1, Y1 };
std::string to_string(Chart c);
bool in_chart(const ProjPoint& p, Chart c);
/// x = 1 when possible, else y = 1.
Chart default_chart(const ProjPoint& p);

struct PointAtInfinity {
  ProjPoint point;
  long multiplicity = 0;
};

struct CurveAtInfinity {
  MultiPoly affine;
  HomogPoly closure;
  std::vector<PointAtInfinity> points;
};

struct CurveError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ClosureOptions {
  bool allow_coordinate_lines = false;
  long field_degree_cap = 64;
};

/// Checks F (squarefree, no coordinate-line component unless permitted),
/// homogenises it and lists the points on t = 0 with multiplicities, sorted
/// as [0:1:b] by b and then [0:0:1].
CurveAtInfinity closure(const MultiPoly& f, const ClosureOptions& opt = {});

/// gcd(F, F_x, F_y); constant iff F is squarefree.
MultiPoly repeated_part(const MultiPoly& f);
/// Indices of coordinate variables v with v | F.
std::vector<std::size_t> coordinate_line_factors(const MultiPoly& f);

/// Sparse bivariate polynomial over a number field, keyed by (i, j) for
/// t^i w^j.
struct LocalPoly {
  std::map<std::pair<long, long>, FieldElem> terms;

  void add(long i, long j, const FieldElem& c);
  bool is_zero() const { return terms.empty(); }
  FieldPtr field() const;
  /// ord_w of G(0, w); -1 when G(0, w) is identically zero.
  long order_at_zero() const;
};

/// Local equation of the closure at a point: G(t, w) = F^(t, chart coords)
/// with w the non-chart coordinate translated to vanish at the point.
struct LocalEquation {
  ProjPoint point;
  Chart chart = Chart::X1;
  /// Value of the non-chart coordinate at the point (b for [0:1:b] in x = 1).
  FieldElem center;
  LocalPoly poly;
};

LocalEquation local_equation(const HomogPoly& closure, const ProjPoint& p, Chart chart);
/// Rational points only; variables (t, y) in chart x = 1 and (t, x) in y = 1.
MultiPoly chart_local_equation(const CurveAtInfinity& c, const ProjPoint& p, Chart chart);

/// Invertible change x <- a x + b y + e, y <- c x + d y + f.
struct LinearChange {
  Rational a = 1, b = 0, c = 0, d = 1, e = 0, f = 0;
  Rational det() const { return a * d - b * c; }
};

MultiPoly apply(const LinearChange& m, const MultiPoly& p);
/// Small random integer matrix with nonzero determinant.
LinearChange random_linear_change(std::uint64_t seed);
/// Rational entries p/q with |p| <= 5, q <= 4, translation included.
LinearChange random_affine_change(std::uint64_t seed);

}  // namespace lelong
