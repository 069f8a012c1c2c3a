#include "lelong/projective.hpp"

#include <doctest.h>

#include <cmath>

using namespace lelong;

namespace {
const std::vector<std::string> XY{"x", "y"};
MultiPoly poly(const std::string& s) { return parse_poly(s, XY); }
}  // namespace

TEST_SUITE("projective") {

TEST_CASE("xy = x^3 + 1 closure") {
  CurveAtInfinity c = closure(poly("x*y - x^3 - 1"));
  CHECK(to_string(c.closure.poly) == "-t^3+t*x*y-x^3");
  REQUIRE(c.points.size() == 1);
  CHECK(to_string(c.points[0].point) == "[0:0:1]");
  CHECK(c.points[0].multiplicity == 3);
  CHECK(to_string(chart_local_equation(c, c.points[0].point, Chart::Y1)) == "-t^3+t*x-x^3");
}

TEST_CASE("x = y^3 meets infinity once") {
  ClosureOptions o;
  o.allow_coordinate_lines = true;
  CurveAtInfinity c = closure(poly("x - y^3"), o);
  REQUIRE(c.points.size() == 1);
  CHECK(to_string(c.points[0].point) == "[0:1:0]");
  CHECK(c.points[0].multiplicity == 3);
  CHECK(to_string(chart_local_equation(c, c.points[0].point, Chart::X1)) == "t^2-y^3");
}

TEST_CASE("coordinate lines are rejected unless allowed") {
  CHECK_THROWS_AS(closure(poly("y*(y-1)")), CurveError);
  ClosureOptions o;
  o.allow_coordinate_lines = true;
  CurveAtInfinity c = closure(poly("y*(y-1)"), o);
  REQUIRE(c.points.size() == 1);
  CHECK(to_string(c.points[0].point) == "[0:1:0]");
  CHECK(c.points[0].multiplicity == 2);
  CHECK(coordinate_line_factors(poly("y*(y-1)")) == std::vector<std::size_t>{1});
}

TEST_CASE("non-squarefree curves are rejected") {
  CHECK_THROWS_AS(closure(poly("(x*y-1)^2")), CurveError);
  CHECK(repeated_part(poly("(x*y-1)^2*(x+y+1)")).total_degree() == 2);
}

TEST_CASE("irrational points at infinity") {
  CurveAtInfinity c = closure(poly("x^2 - 2*y^2 + x"));
  REQUIRE(c.points.size() == 2);
  for (const auto& p : c.points) {
    CHECK(p.multiplicity == 1);
    CHECK_FALSE(p.point.is_rational());
    // [0:1:b] with 1 - 2 b^2 = 0.
    CHECK(is_zero(FieldElem(1) - FieldElem(2) * p.point.y * p.point.y));
  }
  CHECK(approx(c.points[0].point.y).real() < approx(c.points[1].point.y).real());
}

TEST_CASE("charts and point parsing") {
  ProjPoint p = parse_point("[0:2:-2]");
  CHECK(to_string(p) == "[0:1:-1]");
  CHECK(in_chart(p, Chart::X1));
  CHECK(in_chart(p, Chart::Y1));
  CHECK(default_chart(parse_point("0:0:1")) == Chart::Y1);
  CHECK_FALSE(in_chart(parse_point("0:0:1"), Chart::X1));
  CHECK_THROWS(parse_point("0:0:0"));
}

TEST_CASE("local equations agree between charts") {
  // The sheared cubic passes through [0:1:-1], visible in both charts.
  CurveAtInfinity c = closure(poly("(x+y)*y - (x+y)^3 - 1"));
  REQUIRE(c.points.size() == 1);
  const ProjPoint& p = c.points[0].point;
  CHECK(to_string(p) == "[0:1:-1]");
  for (Chart ch : {Chart::X1, Chart::Y1}) {
    LocalEquation le = local_equation(c.closure, p, ch);
    CHECK(le.poly.order_at_zero() == 3);
    CHECK(le.center == FieldElem(-1));
  }
}

TEST_CASE("linear changes") {
  LinearChange m{1, 1, 0, 1};
  CHECK(apply(m, poly("x")) == poly("x+y"));
  LinearChange t{1, 0, 0, 1, 2, -1};
  CHECK(apply(t, poly("x*y")) == poly("(x+2)*(y-1)"));
  for (std::uint64_t s = 0; s < 50; ++s) {
    CHECK_FALSE(random_linear_change(s).det().is_zero());
    CHECK_FALSE(random_affine_change(s).det().is_zero());
  }
  CHECK_THROWS(apply(LinearChange{1, 1, 1, 1}, poly("x")));
}

}
