// Acceptance run: one PASS/FAIL line per criterion.
#include "lelong/criterion.hpp"
#include "lelong/oracle.hpp"
#include "lelong/report.hpp"
#include "lelong/schedule.hpp"
#include "random_poly.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <sstream>

using namespace lelong;

namespace {

const std::vector<std::string> XY{"x", "y"};

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void need(bool ok, const std::string& what) {
  if (!ok) throw Failure(what);
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

bool run(int id, const std::string& name, double budget, const std::function<std::string()>& body) {
  auto t0 = std::chrono::steady_clock::now();
  std::string detail;
  bool ok = true;
  try {
    detail = body();
  } catch (const std::exception& e) {
    ok = false;
    detail = e.what();
  }
  double t = seconds_since(t0);
  if (ok && budget > 0 && t > budget) {
    ok = false;
    detail += "; took " + std::to_string(t) + " s, budget " + std::to_string(budget) + " s";
  }
  std::ostringstream line;
  line.precision(3);
  line << (ok ? "PASS" : "FAIL") << " criterion " << id << " (" << name << ", " << std::fixed << t << " s): " << detail;
  std::cout << line.str() << std::endl;
  return ok;
}

Rational width(const std::optional<Interval>& i) { return i ? i->width() : Rational(-1); }

// parallel lines y(y-1).
std::string criterion1() {
  CheckOptions o;
  o.closure.allow_coordinate_lines = true;
  Verdict v = check_extendable(parse_poly("y*(y-1)", XY), parse_growth("on y: RHO; on y-1: RHO+1", XY), o);
  need(v.status == Status::OBSTRUCTED, "status " + to_string(v.status));
  need(v.witness.has_value(), "no witness");
  const PointReport& p = v.points[v.witness->point];
  need(to_string(p.point) == "[0:1:0]", "witness point " + to_string(p.point));
  need(p.branches.size() == 2, "branch count");
  for (std::size_t i = 0; i < 2; ++i) {
    const auto& c = p.branches[i].value.candidates();
    need(c.size() == 1 && c[0].is_rational_only() && c[0].logs.empty(), "value is not an exact rational");
    need(c[0].constant == Rational(static_cast<long>(i)), "value " + to_string(p.branches[i].value));
    need(width(p.branches[i].enclosure) == 0, "enclosure not exact");
  }
  return "OBSTRUCTED at [0:1:0], values exactly 0 and 1";
}

// xy = x^3 + 1.
std::string criterion2() {
  Verdict v = check_extendable(parse_poly("x*y - x^3 - 1", XY), parse_growth("max(-log|x|, 2*log|x|+1)", XY));
  need(v.status == Status::OBSTRUCTED, "status " + to_string(v.status));
  need(v.witness.has_value(), "no witness");
  const PointReport& p = v.points[v.witness->point];
  need(to_string(p.point) == "[0:0:1]", "witness point " + to_string(p.point));
  need(p.series_count == 3, "series count " + std::to_string(p.series_count));
  need(p.branches.size() == 2, "components " + std::to_string(p.branches.size()));
  const Rational tol(1, 1000000000);
  for (std::size_t i = 0; i < 2; ++i) {
    const auto& e = p.branches[i].enclosure;
    need(e && e->contains(Rational(static_cast<long>(i))), "value of X" + std::to_string(i + 1));
    need(width(e) <= tol, "enclosure wider than 1e-9");
  }
  need(p.branches[0].tangent == "x=0", "X1 tangent " + p.branches[0].tangent);
  need(p.branches[1].tangent == "t=0", "X2 tangent " + p.branches[1].tangent);
  return "OBSTRUCTED at [0:0:1], X1 -> 0 tangent x=0, X2 -> 1 tangent t=0, 2 components from 3 series";
}

// Q_k.
std::string criterion3() {
  MultiPoly y = MultiPoly::variable({"y"}, 0);
  for (unsigned k = 1; k <= 5; ++k) {
    std::string ks = std::to_string(k);
    MultiPoly u = parse_poly("(y+1)^" + std::to_string(3 * k), {"y"});
    MultiPoly q = reduce_mod_relation(u, 3);
    need(q.total_degree() == static_cast<long>(k) + 1, "deg Q_" + ks);
    need(q.homogeneous_part(k + 1) == MultiPoly::monomial(XY, {k - 1, 2}, Rational(3 * k)), "leading term of Q_" + ks);
    need(substitute(q, {{"x", y.pow(3)}, {"y", y}}) == u, "substitute-back for Q_" + ks);
    InterpResult r = interp_exists(u, 3, k);
    need(!r.feasible, "degree-" + ks + " interpolation feasible");
    need(r.certificate && *r.certificate == 3 * k - 1, "certificate for k=" + ks);
  }
  CheckOptions o;
  o.closure.allow_coordinate_lines = true;
  MultiPoly cusp = parse_poly("x - y^3", XY);
  need(always_extendable(cusp, o).always, "always_extendable(x=y^3)");
  GrowthOrder ord = lelong_order(cusp, parse_growth("log|1+y|", XY), o);
  need(ord.kind == GrowthOrder::FINITE && ord.value == Rational(1, 3), "order " + to_string(ord));
  return "k=1..5: degree k+1, leading 3k x^(k-1) y^2, exact substitution, certificate y^(3k-1); germ irreducible; "
         "order 1/3";
}

// Growth schedules.
std::string criterion4() {
  std::string out;
  for (const Rational& c : {Rational(11, 10), Rational(2), Rational(10)}) {
    GrowthSchedule s = build_schedule(c, 20);
    std::string cs = "c=" + to_string(c);
    for (long j = 1; j <= 20; ++j) {
      auto k = static_cast<std::size_t>(j);
      need(s.gamma[k] * (s.m_at(j) - s.m_at(j - 1)) == s.gamma[k - 1] * (s.m_at(j) - s.m_at(j - 2)) + 1,
           cs + ": recurrence at j=" + std::to_string(j));
      need(s.gamma[k] > s.gamma[k - 1], cs + ": gamma not increasing at " + std::to_string(j));
      need(s.x(j) >= s.x(j - 1), cs + ": x decreasing at " + std::to_string(j));
      need(rho_j(s.m_at(j), j, s) == rho_j(s.m_at(j), j - 1, s), cs + ": rho discontinuous at m_" + std::to_string(j));
    }
    need(s.x(0) == 0, cs + ": x_0");
    need(s.gamma[20] < c, cs + ": gamma_20 >= c");
    SupCertificate cert = certify_sup(s);
    need(cert.tail_ok && cert.tail_bound < c, cs + ": tail certificate");
    need(cert.ok, cs + ": certificate " + cert.message);
    const Rational lo(-5), hi = s.m[20];
    for (int i = 0; i < 1000; ++i) {
      Rational u = lo + (hi - lo) * Rational(i, 999);
      Rational env = envelope(u, s);
      Rational bound = u > 0 ? c * u : Rational(0);
      need(env <= bound, cs + ": envelope above c max(u,0)");
      need(u <= 0 || env < bound, cs + ": envelope not strict");
    }
    out += cs + " gamma_20~" + to_decimal(s.gamma[20], 6) + " ";
  }
  return out + "all invariants exact";
}

// theta.
std::string criterion5() {
  std::mt19937_64 rng(20240101);
  std::normal_distribution<double> n(0, 1);
  std::uniform_real_distribution<double> e(-8, 8);
  double worst_scale = 0, worst_eq = 0;
  for (int dim = 1; dim <= 5; ++dim) {
    const double m = std::log(std::sqrt(dim + 1.0));
    for (int i = 0; i < 10000; ++i) {
      std::vector<std::complex<double>> z(static_cast<std::size_t>(dim + 1));
      for (auto& c : z) c = {n(rng), n(rng)};
      double th = theta(z);
      need(th <= 0 && th >= -m - 1e-15, "bound violated for n=" + std::to_string(dim));
      std::complex<double> lambda = std::polar(std::pow(10.0, e(rng)), n(rng));
      for (auto& c : z) c *= lambda;
      worst_scale = std::max(worst_scale, std::abs(theta(z) - th));
    }
    // Equality cases: a single nonzero coordinate, and all moduli equal.
    for (std::size_t i = 0; i <= static_cast<std::size_t>(dim); ++i) {
      std::vector<std::complex<double>> z(static_cast<std::size_t>(dim + 1), 0.0);
      z[i] = std::polar(3.5, n(rng));
      worst_eq = std::max(worst_eq, std::abs(theta(z)));
      std::vector<std::complex<double>> w(static_cast<std::size_t>(dim + 1));
      for (auto& c : w) c = std::polar(0.7, n(rng));
      worst_eq = std::max(worst_eq, std::abs(theta(w) + m));
    }
  }
  need(worst_scale <= 1e-12, "scale invariance error " + std::to_string(worst_scale));
  need(worst_eq <= 1e-14, "equality case error " + std::to_string(worst_eq));
  std::ostringstream o;
  o << "5x10^4 points; max scale error " << worst_scale << ", max equality error " << worst_eq;
  return o.str();
}

// Numeric oracle.
std::string criterion6() {
  MultiPoly f = parse_poly("x*y - x^3 - 1", XY);
  GrowthExpr eta = *parse_growth("max(-log|x|, 2*log|x|+1)", XY).global;
  auto g = germs_at_infinity(closure(f), Rational(2));
  auto& br = g.at(0).branches;
  need(br.size() == 2, "branch count");
  std::vector<std::vector<double>> radii{{1e-2, 1e-3, 1e-4}, {1e2, 1e3, 1e4}};
  std::ostringstream o;
  for (std::size_t i = 0; i < 2; ++i) {
    ExtendedValue v = branch_value(eta, br[i], 3);
    auto pts = sample_curve(f, br[i], radii[i]);
    for (const auto& p : pts) need(p.relative_residual < 1e-8L, "residual too large");
    ConvergenceReport r = empirical_value(eta, pts, v, br[i].id);
    need(r.trend == Trend::CONVERGING, "X" + std::to_string(i + 1) + " trend " + to_string(r.trend));
    need(r.errors.back() < 1e-3L, "X" + std::to_string(i + 1) + " final error");
    o << "X" << i + 1 << " final error " << static_cast<double>(r.errors.back()) << " ";
  }
  return o.str() + "(CONVERGING)";
}

std::vector<ExtendedValue> values_at(const GermDecomposition& g, const GrowthFunction& eta, const MultiPoly& f) {
  std::vector<ExtendedValue> out;
  for (auto b : g.branches) out.push_back(branch_value(select_expr(eta, b, f), b, f.total_degree()));
  return out;
}

// Properties.
std::string criterion7() {
  const Rational w10(1, 10000000000LL), w8(1, 100000000);
  MultiPoly f = parse_poly("x*y - x^3 - 1", XY);
  GrowthFunction eta = parse_growth("max(-log|x|, 2*log|x|+1)", XY);

  // Chart independence on the sheared curve, whose only point [0:1:-1] lies in both charts.
  LinearChange shear{1, 1, 0, 1};
  MultiPoly fs = apply(shear, f);
  GrowthFunction es = apply(shear, eta);
  CurveAtInfinity cs = closure(fs);
  need(cs.points.size() == 1 && in_chart(cs.points[0].point, Chart::X1) && in_chart(cs.points[0].point, Chart::Y1),
       "sheared point not in both charts");
  std::vector<std::vector<Interval>> per_chart;
  std::vector<long> counts;
  for (Chart ch : {Chart::X1, Chart::Y1}) {
    GermDecomposition g = puiseux_branches(local_equation(cs.closure, cs.points[0].point, ch), Rational(2));
    counts.push_back(g.series_count * 100 + static_cast<long>(g.branches.size()));
    std::vector<Interval> vals;
    for (const auto& v : values_at(g, es, fs)) vals.push_back(*v.enclosure(w10));
    std::sort(vals.begin(), vals.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
    per_chart.push_back(vals);
  }
  need(counts[0] == counts[1], "germ counts differ between charts");
  need(per_chart[0].size() == per_chart[1].size(), "value counts differ");
  for (std::size_t i = 0; i < per_chart[0].size(); ++i)
    need(per_chart[0][i].overlaps(per_chart[1][i]), "values differ between charts");

  // Verdict and gap invariance under random affine changes.
  Verdict base = check_extendable(f, eta);
  Interval gap0 = *base.points[0].branches[1].enclosure - *base.points[0].branches[0].enclosure;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    LinearChange m = random_affine_change(seed);
    Verdict v = check_extendable(apply(m, f), apply(m, eta));
    need(v.status == base.status, "verdict changed for seed " + std::to_string(seed));
    need(v.points.size() == 1 && v.points[0].branches.size() == 2, "germ changed for seed " + std::to_string(seed));
    std::vector<Interval> vals;
    for (const auto& b : v.points[0].branches) vals.push_back(*b.value.enclosure(w8));
    // Match branches by tangent order: the lower value is X1's image.
    std::sort(vals.begin(), vals.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
    Interval gap = vals[1] - vals[0];
    need(gap.overlaps(Interval(gap0.lo - w8, gap0.hi + w8)), "gap changed for seed " + std::to_string(seed));
  }

  // Homomorphism and round trips.
  std::mt19937_64 rng(77);
  MultiPoly yv = MultiPoly::variable({"y"}, 0);
  for (int i = 0; i < 1000; ++i) {
    MultiPoly p = testing::random_poly(rng, XY), q = testing::random_poly(rng, XY);
    std::vector<Rational> pt{testing::random_rational(rng), testing::random_rational(rng)};
    need((p * q).eval_exact(pt) == p.eval_exact(pt) * q.eval_exact(pt), "evaluation not multiplicative");
    need((p + q).eval_exact(pt) == p.eval_exact(pt) + q.eval_exact(pt), "evaluation not additive");
    need(parse_poly(to_string(p), XY) == p, "print/parse round trip");
    MultiPoly u = testing::random_poly(rng, {"y"}, 10, 5);
    MultiPoly r = reduce_mod_relation(u, 3);
    need(substitute(r, {{"x", yv.pow(3)}, {"y", yv}}) == u, "reduce round trip");
    ReduceDoc d{to_string(u), to_string(r), 3, r.total_degree(), true};
    nlohmann::json j = d;
    need(nlohmann::json(j.get<ReduceDoc>()) == j, "json round trip");
  }
  return "charts agree at [0:1:-1]; 20 affine changes keep OBSTRUCTED and gap 1; 1000 homomorphism/round-trip "
         "instances";
}

}  // namespace

int main() {
  int failed = 0;
  failed += !run(1, "parallel lines y(y-1)", 1.0, criterion1);
  failed += !run(2, "xy = x^3 + 1", 5.0, criterion2);
  failed += !run(3, "Q_k", 5.0, criterion3);
  failed += !run(4, "schedule", 1.0, criterion4);
  failed += !run(5, "theta", 0, criterion5);
  failed += !run(6, "oracle", 0, criterion6);
  failed += !run(7, "properties", 0, criterion7);
  return failed == 0 ? 0 : 1;
}
