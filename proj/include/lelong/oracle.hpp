#pragma once

#include "lelong/asymptotics.hpp"

namespace lelong {

struct OracleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SamplePoint {
  /// Target |pivot coordinate| and its argument.
  double radius = 0;
  double phase = 0;
  std::complex<long double> x, y;
  long double residual = 0;
  /// |F| over the largest monomial.
  long double relative_residual = 0;
};

struct SampleOptions {
  int phases = 8;
  /// 'x', 'y', or 0 to pick x unless x stays bounded along the branch.
  char pivot = 0;
  int newton_steps = 60;
};

/// Points of F = 0 on the branch with |pivot| = radius at `phases` equally
/// spaced arguments: seeded from the series, then Newton-polished on F in
/// the other coordinate.
std::vector<SamplePoint> sample_curve(const MultiPoly& f, const PuiseuxBranch& b, const std::vector<double>& radii,
                                      const SampleOptions& opt = {});

/// The affine coordinate the radii refer to.
char sampling_pivot(const PuiseuxBranch& b, char requested = 0);

enum class Trend { CONVERGING, DIVERGING, NOISY };
std::string to_string(Trend t);

struct RadiusSample {
  double radius = 0;
  /// max over phases of eta - rho.
  long double value = 0;
  long double max_residual = 0;
  int used = 0;
  int skipped = 0;
};

struct ConvergenceReport {
  long branch_id = 0;
  std::vector<RadiusSample> samples;
  /// Symbolic enclosure; empty for -inf.
  std::optional<Interval> target;
  std::vector<long double> errors;
  Trend trend = Trend::NOISY;
};

/// Groups points by radius (in the given order) and compares the empirical
/// maxima with the symbolic value.
ConvergenceReport empirical_value(const GrowthExpr& eta, const std::vector<SamplePoint>& points,
                                  const ExtendedValue& symbolic, long branch_id = 0);

}  // namespace lelong
