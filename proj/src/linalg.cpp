#include "lelong/linalg.hpp"

#include <stdexcept>

namespace lelong {

namespace {

Integer lcm_denominators(const QMatrix& m, Eigen::Index row) {
  Integer l = 1;
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    Integer d = denominator(m(row, j));
    l = boost::multiprecision::lcm(l, d);
  }
  return l;
}

}  // namespace

LinearSolution solve_exact(const QMatrix& a, const QVector& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve_exact: dimension mismatch");
  const Eigen::Index rows = a.rows();
  const Eigen::Index cols = a.cols();
  // Working matrix [A | b | I]; the identity block tracks row operations.
  QMatrix w = QMatrix::Zero(rows, cols + 1 + rows);
  w.leftCols(cols) = a;
  w.col(cols) = b;
  for (Eigen::Index i = 0; i < rows; ++i) w(i, cols + 1 + i) = 1;
  for (Eigen::Index i = 0; i < rows; ++i) {
    Integer l = lcm_denominators(w, i);
    if (l != 1) w.row(i) *= Rational(l);
  }

  LinearSolution out;
  Rational prev_pivot = 1;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index p = r;
    while (p < rows && w(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != r) w.row(p).swap(w.row(r));
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == r) continue;
      // Bareiss step below the pivot; plain elimination above keeps the
      // reduced-row form needed for back substitution.
      if (i > r) {
        for (Eigen::Index j = 0; j < w.cols(); ++j) {
          if (j == c) continue;
          w(i, j) = (w(r, c) * w(i, j) - w(i, c) * w(r, j)) / prev_pivot;
        }
        w(i, c) = 0;
      }
    }
    prev_pivot = w(r, c);
    out.pivots.push_back(c);
    ++r;
  }

  // Rows r.. have a zero A-part; a nonzero b entry means inconsistency.
  for (Eigen::Index i = r; i < rows; ++i) {
    if (!w(i, cols).is_zero()) out.certificates.push_back(w.row(i).tail(rows).transpose());
  }
  out.consistent = out.certificates.empty();
  if (!out.consistent) return out;

  // Back substitution on the echelon rows.
  out.solution = QVector::Zero(cols);
  for (Eigen::Index k = static_cast<Eigen::Index>(out.pivots.size()) - 1; k >= 0; --k) {
    Eigen::Index c = out.pivots[static_cast<std::size_t>(k)];
    Rational acc = w(k, cols);
    for (Eigen::Index j = c + 1; j < cols; ++j) {
      if (!w(k, j).is_zero()) acc -= w(k, j) * out.solution(j);
    }
    out.solution(c) = acc / w(k, c);
  }
  return out;
}

Eigen::Index rank_exact(const QMatrix& m) {
  return static_cast<Eigen::Index>(solve_exact(m, QVector::Zero(m.rows())).pivots.size());
}

QPoly charpoly(const QMatrix& input) {
  if (input.rows() != input.cols()) throw std::invalid_argument("charpoly: matrix not square");
  const Eigen::Index n = input.rows();
  QMatrix h = input;
  // Reduce to upper Hessenberg form by similarity transforms.
  for (Eigen::Index m = 1; m + 1 < n; ++m) {
    Eigen::Index i = m;
    while (i < n && h(i, m - 1).is_zero()) ++i;
    if (i == n) continue;
    if (i != m) {
      h.row(i).swap(h.row(m));
      h.col(i).swap(h.col(m));
    }
    for (Eigen::Index k = m + 1; k < n; ++k) {
      if (h(k, m - 1).is_zero()) continue;
      Rational u = h(k, m - 1) / h(m, m - 1);
      h.row(k) -= u * h.row(m);
      h.col(m) += u * h.col(k);
    }
  }
  // Recurrence on leading principal submatrices.
  std::vector<QPoly> p(static_cast<std::size_t>(n) + 1);
  p[0] = QPoly(Rational(1));
  const QPoly z = QPoly::x();
  for (Eigen::Index m = 1; m <= n; ++m) {
    QPoly acc = (z - QPoly(h(m - 1, m - 1))) * p[static_cast<std::size_t>(m - 1)];
    Rational t = 1;
    for (Eigen::Index i = 1; i < m; ++i) {
      t *= h(m - i, m - i - 1);
      Rational f = t * h(m - i - 1, m - 1);
      if (!f.is_zero()) acc -= p[static_cast<std::size_t>(m - i - 1)] * f;
    }
    p[static_cast<std::size_t>(m)] = acc;
  }
  return p[static_cast<std::size_t>(n)];
}

}  // namespace lelong
