#include "lelong/oracle.hpp"

#include <cmath>
#include <numbers>
#include <algorithm>
#include <limits>

namespace lelong {

using CLD = std::complex<long double>;

namespace {

// ord_s and leading coefficient of the affine coordinate (chart series / t).
std::pair<long, CLD> affine_lead(const PuiseuxBranch& b, char var) {
  Series s = var == 'x' ? b.chart_x() : b.chart_y();
  for (std::size_t k = 0; k < s.size(); ++k)
    if (!is_zero(s[k])) {
      auto c = approx(s[k]);
      return {static_cast<long>(k) - b.ramification, CLD(c.real(), c.imag())};
    }
  return {0, CLD(0)};
}

CLD pivot_value(const PuiseuxBranch& b, char var, CLD s) {
  auto [x, y] = branch_affine(b, s);
  return var == 'x' ? x : y;
}

}  // namespace

char sampling_pivot(const PuiseuxBranch& b, char requested) {
  if (requested == 'x' || requested == 'y') {
    if (affine_lead(b, requested).first == 0)
      throw OracleError(std::string(1, requested) + " stays bounded along this branch; sample along the other coordinate");
    return requested;
  }
  if (requested != 0) throw OracleError("pivot must be x or y");
  return affine_lead(b, 'x').first != 0 ? 'x' : 'y';
}

std::vector<SamplePoint> sample_curve(const MultiPoly& f, const PuiseuxBranch& b, const std::vector<double>& radii,
                                      const SampleOptions& opt) {
  if (opt.phases < 1) throw OracleError("need at least one phase");
  const char pv = sampling_pivot(b, opt.pivot);
  const auto [k, lead] = affine_lead(b, pv);
  const std::size_t other = pv == 'x' ? 1 : 0;
  const MultiPoly df = derivative(f, other);
  std::vector<SamplePoint> out;
  for (double r : radii) {
    if (!(r > 0)) throw OracleError("radii must be positive");
    for (int ph = 0; ph < opt.phases; ++ph) {
      const long double phi = 2 * std::numbers::pi_v<long double> * ph / opt.phases;
      const CLD target = std::polar(static_cast<long double>(r), phi);
      // s with pivot(s) = target: start from the leading term, then Newton.
      CLD s = std::pow(target / lead, 1.0L / static_cast<long double>(k));
      for (int it = 0; it < opt.newton_steps; ++it) {
        CLD g = pivot_value(b, pv, s) - target;
        CLD h = s * 1e-7L;
        CLD dg = (pivot_value(b, pv, s + h) - pivot_value(b, pv, s - h)) / (2.0L * h);
        if (dg == CLD(0)) break;
        CLD step = g / dg;
        s -= step;
        if (std::abs(step) <= 1e-17L * std::abs(s)) break;
      }
      auto [x, y] = branch_affine(b, s);
      if (pv == 'x') x = target;
      else y = target;
      // Polish the other coordinate on F.
      CLD& w = pv == 'x' ? y : x;
      const CLD seed = w;
      for (int it = 0; it < opt.newton_steps; ++it) {
        std::vector<CLD> pt{x, y};
        CLD fv = f.eval(pt);
        CLD dv = df.eval(pt);
        if (fv == CLD(0) || dv == CLD(0)) break;
        CLD step = fv / dv;
        w -= step;
        if (std::abs(step) <= 1e-18L * std::max(std::abs(w), 1.0L)) break;
      }
      if (std::abs(w - seed) > 1e-2L * std::max(std::abs(seed), 1.0L))
        throw OracleError("Newton polish left the branch at radius " + std::to_string(r) +
                          "; the radius is outside the series' useful range");
      SamplePoint p;
      p.radius = r;
      p.phase = static_cast<double>(phi);
      p.x = x;
      p.y = y;
      std::vector<CLD> pt{x, y};
      p.residual = std::abs(f.eval(pt));
      long double scale = f.max_term_abs(pt);
      p.relative_residual = scale > 0 ? p.residual / scale : p.residual;
      out.push_back(p);
    }
  }
  return out;
}

std::string to_string(Trend t) {
  switch (t) {
    case Trend::CONVERGING: return "CONVERGING";
    case Trend::DIVERGING: return "DIVERGING";
    case Trend::NOISY: return "NOISY";
  }
  return "?";
}

ConvergenceReport empirical_value(const GrowthExpr& eta, const std::vector<SamplePoint>& points,
                                  const ExtendedValue& symbolic, long branch_id) {
  ConvergenceReport rep;
  rep.branch_id = branch_id;
  rep.target = symbolic.enclosure(Rational(1, 1000000000000LL));
  for (const auto& p : points) {
    if (rep.samples.empty() || rep.samples.back().radius != p.radius) {
      RadiusSample rs;
      rs.radius = p.radius;
      rs.value = -std::numeric_limits<long double>::infinity();
      rep.samples.push_back(rs);
    }
    auto& rs = rep.samples.back();
    long double v = eval_growth(eta, p.x, p.y);
    if (std::isinf(v) && v < 0) {
      ++rs.skipped;
      continue;
    }
    v -= rho_ld({CLD(1), p.x, p.y});
    rs.value = std::max(rs.value, v);
    rs.max_residual = std::max(rs.max_residual, p.relative_residual);
    ++rs.used;
  }
  if (rep.samples.empty()) return rep;
  if (rep.target) {
    long double mid = to_double((rep.target->lo + rep.target->hi) / 2);
    for (const auto& s : rep.samples) rep.errors.push_back(std::abs(s.value - mid));
  } else {
    // Against -inf the values themselves should keep falling.
    for (const auto& s : rep.samples) rep.errors.push_back(s.value);
  }
  const auto& e = rep.errors;
  const std::size_t n = e.size();
  const long double floor = rep.target ? 1e-14L : -std::numeric_limits<long double>::infinity();
  bool tiny = rep.target && std::all_of(e.begin(), e.end(), [&](long double v) { return v <= floor; });
  if (tiny || n == 1) {
    rep.trend = tiny ? Trend::CONVERGING : Trend::NOISY;
    return rep;
  }
  // Eventually decreasing: the second half of the sequence shrinks step by step.
  bool down = true, up = true;
  for (std::size_t i = n / 2; i + 1 < n; ++i) {
    bool settled = e[i + 1] <= floor && e[i] <= floor;
    down = down && (e[i + 1] < e[i] || settled);
    up = up && e[i + 1] > e[i];
  }
  if (n == 2) {
    down = e[1] < e[0] || (e[1] <= floor && e[0] <= floor);
    up = e[1] > e[0];
  }
  rep.trend = down ? Trend::CONVERGING : up ? Trend::DIVERGING : Trend::NOISY;
  return rep;
}

}  // namespace lelong
