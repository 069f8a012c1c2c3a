#include "lelong/criterion.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace lelong;

namespace {

const std::vector<std::string> XY{"x", "y"};

struct Curve {
  MultiPoly f;
  std::vector<GermDecomposition> germs;
};

Curve curve(const std::string& s, bool allow = false) {
  ClosureOptions o;
  o.allow_coordinate_lines = allow;
  Curve c{parse_poly(s, XY), {}};
  c.germs = germs_at_infinity(closure(c.f, o), Rational(2));
  return c;
}

double value(const ExtendedValue& v) {
  auto e = v.enclosure(Rational(1, 1000000000000LL));
  REQUIRE(e);
  return to_double(e->midpoint());
}

SymbolicValue logs(std::vector<std::pair<Rational, FieldElem>> l, Rational c = 0) {
  SymbolicValue v;
  v.constant = c;
  v.logs = std::move(l);
  return v;
}

}  // namespace

TEST_SUITE("asymptotics") {

TEST_CASE("rho") {
  CHECK(rho(1, {0}) == 0);
  CHECK(rho(1, {0, 1}) == doctest::Approx(0.5 * std::log(2.0)).epsilon(1e-15));
  CHECK(rho(0, {3, 4}) == doctest::Approx(std::log(5.0)).epsilon(1e-15));
  CHECK(rho(1e-300, {1e300, 0}) == doctest::Approx(std::log(1e300)));
  CHECK_THROWS(rho(0, {0, 0}));
}

TEST_CASE("theta") {
  CHECK(theta({1, 0, 0}) == 0);
  for (int n = 1; n <= 5; ++n) {
    std::vector<std::complex<double>> ones(static_cast<std::size_t>(n + 1), 1.0);
    CHECK(theta(ones) == doctest::Approx(-std::log(std::sqrt(n + 1.0))).epsilon(1e-15));
  }
  CHECK(theta({3, 4}) == doctest::Approx(std::log(4.0 / 5.0)).epsilon(1e-15));
  CHECK_THROWS(theta({0, 0}));
}

TEST_CASE("growth grammar") {
  GrowthFunction g = parse_growth("max(-log|x|, 2*log|x|+1)", XY);
  REQUIRE(g.global);
  CHECK(g.global->terms.size() == 2);
  CHECK(to_string(g) == "max(-log|x|, 2*log|x|+1)");
  GrowthFunction p = parse_growth("on y: RHO; on y-1: RHO+1", XY);
  CHECK(p.is_per_factor());
  CHECK(p.per_factor.size() == 2);
  CHECK(to_string(p) == "on y: RHO; on y-1: RHO+1");
  CHECK(to_string(parse_growth("1/3*log|x+3y^2+3y+1| - 2", XY)) == "1/3*log|x+3y^2+3y+1|-2");
  CHECK_THROWS_AS(parse_growth("max(log|x|", XY), ParseError);
  CHECK_THROWS_AS(parse_growth("log|0|", XY), ParseError);
  CHECK_THROWS_AS(parse_growth("log|z|", XY), ParseError);
  CHECK_THROWS_AS(parse_growth("2*", XY), ParseError);
}

TEST_CASE("xy = x^3 + 1 branch values") {
  Curve c = curve("x*y - x^3 - 1");
  GrowthExpr eta = *parse_growth("max(-log|x|, 2*log|x|+1)", XY).global;
  auto& g = c.germs.at(0);
  REQUIRE(g.branches.size() == 2);
  CHECK(value(branch_value(eta, g.branches[0], 3)) == doctest::Approx(0).epsilon(1e-12));
  CHECK(value(branch_value(eta, g.branches[1], 3)) == doctest::Approx(1).epsilon(1e-12));
}

TEST_CASE("parallel lines y(y-1) per-factor values") {
  Curve c = curve("y*(y-1)", true);
  GrowthFunction eta = parse_growth("on y: RHO; on y-1: RHO+1", XY);
  validate_factors(eta, c.f);
  auto& g = c.germs.at(0);
  std::vector<double> vals;
  for (auto& b : g.branches) vals.push_back(value(branch_value(select_expr(eta, b, c.f), b, 2)));
  CHECK(vals == std::vector<double>{0, 1});
  CHECK_THROWS(validate_factors(parse_growth("on y: RHO; on y-2: RHO", XY), c.f));
}

TEST_CASE("log|x| on the line y = 0 has value 0") {
  Curve c = curve("y", true);
  GrowthExpr eta = *parse_growth("log|x|", XY).global;
  auto v = branch_value(eta, c.germs.at(0).branches.at(0), 1);
  CHECK(value(v) == doctest::Approx(0).epsilon(1e-15));
}

TEST_CASE("value at an irrational point matches the numeric limit") {
  // On x^2 - 2y^2 + x = 0, y/x -> +-1/sqrt2; log|x| + log|y| - RHO - rho has value
  // log(1/sqrt2) - log(3/2) at both points.
  Curve c = curve("x^2 - 2*y^2 + x");
  GrowthExpr eta = *parse_growth("log|x|+log|y|-RHO", XY).global;
  double expect = std::log(1 / std::sqrt(2.0)) - std::log(1.5);
  for (auto& g : c.germs) CHECK(value(branch_value(eta, g.branches.at(0), 2)) == doctest::Approx(expect).epsilon(1e-12));
}

TEST_CASE("orders") {
  Curve c = curve("x - y^3", true);
  auto& b = c.germs.at(0).branches.at(0);
  GrowthOrder o = branch_order(*parse_growth("log|1+y|", XY).global, b, 3);
  CHECK(o.kind == GrowthOrder::FINITE);
  CHECK(o.value == Rational(1, 3));
  CHECK(branch_value(*parse_growth("log|1+y|", XY).global, b, 3).is_neg_inf());
  CHECK_THROWS_AS(branch_value(*parse_growth("2*log|x|", XY).global, b, 3), NotLelong);
  CHECK(branch_order(*parse_growth("2*log|x|", XY).global, b, 3).value == 2);
  CHECK(plane_order(*parse_growth("1/6*log|x^2+6x*y^2+15x*y+20x+15y^2+6y+1|", XY).global) == Rational(1, 2));
}

TEST_CASE("vanishing atoms") {
  Curve c = curve("y*(y-1)", true);
  auto& b = c.germs.at(0).branches.at(0);  // y = 0
  CHECK(branch_value(*parse_growth("log|y| + RHO", XY).global, b, 2).is_neg_inf());
  CHECK_THROWS_AS(branch_value(*parse_growth("RHO - log|y|", XY).global, b, 2), NotLelong);
  AtomAsymptotic a = atom_asymptotic(parse_poly("y", XY), b, 2);
  CHECK(a.vanishes);
}

TEST_CASE("tri-state comparison") {
  // 1/2 log 4 = log 2 exactly.
  auto a = ExtendedValue({logs({{Rational(1, 2), FieldElem(4)}})});
  auto b = ExtendedValue({logs({{Rational(1), FieldElem(2)}})});
  CHECK(compare(a, b).relation == Relation::EQUAL);
  // log 2 vs log 3: distinct.
  auto c = ExtendedValue({logs({{Rational(1), FieldElem(3)}})});
  CHECK(compare(a, c).relation == Relation::DISTINCT);
  // log 2 against a nearby rational.
  auto d = ExtendedValue({logs({}, Rational(69314718, 100000000))});
  CHECK(compare(a, d).relation == Relation::DISTINCT);
  // -inf only equals -inf.
  CHECK(compare(ExtendedValue::neg_inf(), ExtendedValue::neg_inf()).relation == Relation::EQUAL);
  CHECK(compare(ExtendedValue::neg_inf(), a).relation == Relation::DISTINCT);
}

TEST_CASE("near ties between algebraic logs are indeterminate") {
  // log(1/sqrt2) against a 24-digit decimal of it: no symbolic cancellation,
  // and the two differ by less than the default cap.
  Curve c = curve("x^2 - 2*y^2 + x");
  FieldElem s = c.germs.at(1).point.y;  // 1/sqrt2
  auto a = ExtendedValue({logs({{Rational(1), s}})});
  Rational near = -Rational(Integer("346573590279972654708616"), Integer("1000000000000000000000000"));
  auto b = ExtendedValue({logs({}, near)});
  Comparison r = compare(a, b);
  CHECK(r.relation == Relation::INDETERMINATE);
  CHECK(r.left->overlaps(*r.right));
  Rational fine(1, Integer("1000000000000000000000000000000"));
  CHECK(compare(a, b, Rational(1, 1000000000), fine).relation == Relation::DISTINCT);
  // Syntactic cancellation: 2 log|s| - log|s| = log|s|.
  auto same = ExtendedValue({logs({{Rational(2), s}, {Rational(-1), s}})});
  CHECK(compare(a, same).relation == Relation::EQUAL);
  // A rational offset is decided exactly, however small.
  auto off = ExtendedValue({logs({{Rational(1), s}}, Rational(1, Integer("100000000000000000000")))});
  CHECK(compare(a, off).relation == Relation::DISTINCT);
}

TEST_CASE("max-forms drop dominated candidates") {
  auto v = ExtendedValue({logs({}, Rational(1)), logs({{Rational(1), FieldElem(2)}})});
  CHECK(v.candidates().size() == 1);
  CHECK(value(v) == doctest::Approx(1));
}

TEST_CASE("RHO contributes exactly order one and value zero") {
  Curve c = curve("x*y - x^3 - 1");
  GrowthExpr eta = *parse_growth("RHO", XY).global;
  for (auto& b : c.germs.at(0).branches) {
    CHECK(branch_order(eta, b, 3).value == 1);
    CHECK(to_string(branch_value(eta, b, 3)) == "0");
  }
}

TEST_CASE("eval_growth") {
  GrowthExpr eta = *parse_growth("max(-log|x|, 2*log|x|+1)", XY).global;
  CHECK(static_cast<double>(eval_growth(eta, 2.0L, 0.0L)) == doctest::Approx(2 * std::log(2.0) + 1));
  CHECK(static_cast<double>(eval_growth(eta, 0.5L, 0.0L)) == doctest::Approx(std::log(2.0)));
  GrowthExpr l = *parse_growth("log|x|", XY).global;
  CHECK(std::isinf(static_cast<double>(eval_growth(l, 0.0L, 1.0L))));
}

}
