#pragma once

#include "lelong/rational.hpp"
#include "lelong/upoly.hpp"

#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

#include <optional>
#include <vector>

namespace lelong {

using QMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using QVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

/// Outcome of solving A x = b exactly.
struct LinearSolution {
  bool consistent = false;
  /// A particular solution (free variables set to zero) when consistent.
  QVector solution;
  /// Pivot column per eliminated row, in elimination order.
  std::vector<Eigen::Index> pivots;
  /// Farkas-style certificates of inconsistency: each y has y^T A = 0 and
  /// y^T b != 0. One per inconsistent row of the reduced system.
  std::vector<QVector> certificates;
};

/// Fraction-free (Bareiss) elimination on [A | b | I]. Rows are scaled to
/// integers first so every intermediate division is exact. Columns are
/// pivoted in their given order, so callers control which unknowns are
/// preferred as basic variables.
LinearSolution solve_exact(const QMatrix& a, const QVector& b);

/// Characteristic polynomial det(zI - M) by Hessenberg reduction over Q.
QPoly charpoly(const QMatrix& m);

/// Rank over Q.
Eigen::Index rank_exact(const QMatrix& m);

}  // namespace lelong
