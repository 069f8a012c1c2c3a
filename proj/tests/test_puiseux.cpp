#include "lelong/puiseux.hpp"

#include <doctest.h>

using namespace lelong;

namespace {

const std::vector<std::string> XY{"x", "y"};

GermDecomposition germ(const std::string& f, bool allow = false, Chart* chart = nullptr, std::size_t point = 0,
                       const Rational& order = Rational(6)) {
  ClosureOptions o;
  o.allow_coordinate_lines = allow;
  CurveAtInfinity c = closure(parse_poly(f, XY), o);
  const ProjPoint& p = c.points.at(point).point;
  return puiseux_branches(local_equation(c.closure, p, chart ? *chart : default_chart(p)), order);
}

// Independent check: G(s^e, W(s)) must vanish through s^(order).
long residual_order(const GermDecomposition& g, const PuiseuxBranch& b, const LocalEquation& eq) {
  std::size_t len = static_cast<std::size_t>(b.order + b.ramification * 8 + 1);
  std::vector<Series> wp{Series{FieldElem(1)}};
  Series acc(len);
  (void)g;
  for (const auto& [ij, c] : eq.poly.terms) {
    std::size_t shift = static_cast<std::size_t>(ij.first * b.ramification);
    if (shift >= len) continue;
    while (static_cast<long>(wp.size()) <= ij.second) wp.push_back(series_mul(wp.back(), b.w, len));
    const Series& m = wp[static_cast<std::size_t>(ij.second)];
    for (std::size_t k = 0; k + shift < len && k < m.size(); ++k) acc[k + shift] = acc[k + shift] + c * m[k];
  }
  for (std::size_t k = 0; k < len; ++k)
    if (!is_zero(acc[k])) return static_cast<long>(k);
  return static_cast<long>(len);
}

}  // namespace

TEST_SUITE("puiseux") {

TEST_CASE("Newton polygon of the germ of xy = x^3 + 1") {
  NewtonPolygon np = newton_polygon(parse_poly("x*t - x^3 - t^3", {"t", "x"}));
  REQUIRE(np.segments.size() == 2);
  CHECK(np.segments[0].slope() == Rational(1, 2));
  CHECK(np.segments[1].slope() == 2);
}

TEST_CASE("xy = x^3 + 1: two components from three series") {
  GermDecomposition g = germ("x*y - x^3 - 1");
  CHECK(g.series_count == 3);
  REQUIRE(g.branches.size() == 2);
  const auto& x1 = g.branches[0];
  const auto& x2 = g.branches[1];
  CHECK(x1.ramification == 1);
  CHECK(to_string(x1.tangent) == "x=0");
  CHECK(x2.ramification == 2);
  CHECK(to_string(x2.tangent) == "t=0");
  // X1: x = s^2 + s^5 + ..., X2: x = -s - s^4/2 + ...
  CHECK(x1.w.at(2) == FieldElem(1));
  CHECK(x1.w.at(5) == FieldElem(1));
  CHECK(x2.w.at(1) == FieldElem(-1));
  CHECK(x2.w.at(4) == FieldElem(Rational(-1, 2)));
}

TEST_CASE("series satisfy the local equation") {
  for (const char* f : {"x*y - x^3 - 1", "y^3 - x^2*y - x", "x^2 - 2*y^2 + x", "x*y^2 - y - x^3"}) {
    ClosureOptions o;
    o.allow_coordinate_lines = true;
    CurveAtInfinity c = closure(parse_poly(f, XY), o);
    for (const auto& p : c.points) {
      LocalEquation eq = local_equation(c.closure, p.point, default_chart(p.point));
      GermDecomposition g = puiseux_branches(eq, Rational(5));
      long total = 0;
      for (auto b : g.branches) {
        total += b.ramification;
        if (b.exact) continue;
        CHECK(residual_order(g, b, eq) > b.order);
      }
      CHECK(total == g.series_count);
      CHECK(g.series_count == g.local_degree);
    }
  }
}

TEST_CASE("cusp x = y^3") {
  GermDecomposition g = germ("x - y^3", true);
  REQUIRE(g.branches.size() == 1);
  const auto& b = g.branches[0];
  CHECK(b.ramification == 3);
  CHECK(b.exact);
  CHECK(b.leading_exponent() == 2);
  CHECK_FALSE(b.smooth);
}

TEST_CASE("parallel lines") {
  GermDecomposition g = germ("y*(y-1)", true);
  REQUIRE(g.branches.size() == 2);
  CHECK(g.branches[0].leading_exponent() == -1);  // y = 0 exactly
  CHECK(to_string(g.branches[0].tangent) == "y=0");
  CHECK(to_string(g.branches[1].tangent) == "y-t=0");
}

TEST_CASE("both charts see the same germ") {
  for (Chart ch : {Chart::X1, Chart::Y1}) {
    GermDecomposition g = germ("(x+y)*y - (x+y)^3 - 1", false, &ch);
    CHECK(g.series_count == 3);
    CHECK(g.branches.size() == 2);
  }
}

TEST_CASE("extension and truncation cap") {
  GermDecomposition g = germ("x*y - x^3 - 1", false, nullptr, 0, Rational(1));
  PuiseuxBranch b = g.branches[1];
  long before = b.order;
  extend_branch(b, 20);
  CHECK(b.order >= 20);
  CHECK(b.order > before);
  PuiseuxOptions cap;
  cap.trunc_cap = 10;
  CHECK_THROWS_AS(extend_branch(b, 40, cap), TruncationError);
}

TEST_CASE("numeric points on the branch") {
  MultiPoly f = parse_poly("x*y - x^3 - 1", XY);
  GermDecomposition g = germ("x*y - x^3 - 1", false, nullptr, 0, Rational(12));
  auto pts = branch_points(g.branches[0], f, {1e-3, 1e-4});
  for (const auto& p : pts) {
    // y = x^2 + 1/x on this branch.
    CHECK(std::abs(p.y - (p.x * p.x + 1.0 / p.x)) <= 1e-9 * std::abs(p.y));
    CHECK(p.relative_residual < 1e-10);
  }
}

}
