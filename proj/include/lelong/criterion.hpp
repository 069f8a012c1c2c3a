#pragma once

#include "lelong/asymptotics.hpp"

namespace lelong {

enum class Status { EXTENDABLE, OBSTRUCTED, INDETERMINATE };
std::string to_string(Status s);

struct BranchReport {
  long id = 0;
  long ramification = 1;
  bool smooth = false;
  std::string tangent;
  /// Leading terms of the parametrisation, e.g. "t=s^2, y=-s-1/2*s^4+...".
  std::string leading;
  ExtendedValue value = ExtendedValue::neg_inf();
  std::optional<Interval> enclosure;
};

struct PointReport {
  ProjPoint point;
  Chart chart = Chart::X1;
  long multiplicity = 0;
  long series_count = 0;
  std::vector<BranchReport> branches;
  /// Every branch value is -inf.
  bool all_neg_inf = false;
};

struct PairReport {
  std::size_t point = 0;  // index into Verdict::points
  long first = 0, second = 0;
  Comparison comparison;
};

struct Verdict {
  Status status = Status::EXTENDABLE;
  std::vector<PointReport> points;
  /// First DISTINCT pair (OBSTRUCTED).
  std::optional<PairReport> witness;
  /// First INDETERMINATE pair.
  std::optional<PairReport> near_tie;
};

struct CheckOptions {
  ClosureOptions closure;
  PuiseuxOptions puiseux;
  Rational target{1, 1000000000};
  Rational cap{1, 1000000000000000LL};
};

/// Branch values at every point at infinity and their pairwise comparison.
Verdict check_extendable(const MultiPoly& f, const GrowthFunction& eta, const CheckOptions& opt = {});

/// Maximum over all branches of the largest term order.
GrowthOrder lelong_order(const MultiPoly& f, const GrowthFunction& eta, const CheckOptions& opt = {});

struct GermReport {
  ProjPoint point;
  long series_count = 0;
  long components = 0;
};

struct ExtendabilityReport {
  bool always = true;
  std::vector<GermReport> points;
};

/// True iff every germ at infinity is irreducible.
ExtendabilityReport always_extendable(const MultiPoly& f, const CheckOptions& opt = {});

/// All germ decompositions at infinity in default charts.
std::vector<GermDecomposition> germs_at_infinity(const CurveAtInfinity& c, const Rational& order,
                                                 const PuiseuxOptions& opt = {});

std::string leading_terms(const PuiseuxBranch& b, std::size_t count = 2);

/// Applies the same coordinate change to every polynomial in eta. RHO is
/// left as it is.
GrowthFunction apply(const LinearChange& m, const GrowthFunction& eta);

}  // namespace lelong
