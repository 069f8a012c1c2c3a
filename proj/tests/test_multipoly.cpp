#include "lelong/multipoly.hpp"

#include <doctest.h>

using namespace lelong;

namespace {

const std::vector<std::string> XY{"x", "y"};

MultiPoly poly(const std::string& s) { return parse_poly(s, XY); }

// Q_k straight from its definition: sum over j of C(3k, j) x^[j/3] y^(j mod 3).
MultiPoly q_k(unsigned k) {
  MultiPoly q(XY);
  Integer binom = 1;
  for (unsigned j = 0; j <= 3 * k; ++j) {
    q.add_term({j / 3, j % 3}, Rational(binom));
    binom = binom * (3 * k - j) / (j + 1);
  }
  return q;
}

}  // namespace

TEST_SUITE("multipoly") {

TEST_CASE("parse examples") {
  MultiPoly f = poly("x*y - x^3 - 1");
  CHECK(f.terms().size() == 3);
  CHECK(f.coeff({1, 1}) == 1);
  CHECK(f.coeff({3, 0}) == -1);
  CHECK(f.coeff({0, 0}) == -1);
  CHECK(poly("0").is_zero());
  CHECK(to_string(parse_poly("(y+1)^3", {"y"})) == "y^3+3y^2+3y+1");
  CHECK(to_string(poly("x/2")) == "1/2*x");
  CHECK(poly("2x(y+1)") == poly("2*x*y + 2*x"));
  CHECK(to_string(f) == "-x^3+x*y-1");
}

TEST_CASE("parse errors carry positions") {
  auto pos = [](const std::string& s) -> long {
    try {
      parse_poly(s, XY);
    } catch (const ParseError& e) {
      return static_cast<long>(e.position);
    }
    return -1;
  };
  CHECK(pos("x + z") == 4);
  CHECK(pos("x +") == 3);
  CHECK(pos("(x") == 2);
  CHECK(pos("x/y") >= 0);
  CHECK(pos("x/0") >= 0);
  CHECK(pos("x^y") >= 0);
}

TEST_CASE("homogenize") {
  CHECK(to_string(homogenize(poly("x*y - x^3 - 1")).poly) == "-t^3+t*x*y-x^3");
  CHECK(to_string(homogenize(poly("x")).poly) == "x");
  CHECK(homogenize(poly("x - y^3")).poly == parse_poly("x*t^2 - y^3", {"t", "x", "y"}));
  CHECK_THROWS(homogenize(poly("0")));
  MultiPoly f = poly("3x^2 y - y + 7");
  CHECK(dehomogenize(homogenize(f)) == f);
}

TEST_CASE("substitute Q_1 with x = y^3") {
  MultiPoly y = MultiPoly::variable({"y"}, 0);
  MultiPoly r = substitute(poly("x + 3y^2 + 3y + 1"), {{"x", y.pow(3)}, {"y", y}});
  CHECK(r == parse_poly("(y+1)^3", {"y"}));
}

TEST_CASE("reduce matches the closed form of Q_k") {
  MultiPoly y = MultiPoly::variable({"y"}, 0);
  for (unsigned k = 1; k <= 5; ++k) {
    MultiPoly u = parse_poly("(y+1)^" + std::to_string(3 * k), {"y"});
    MultiPoly q = reduce_mod_relation(u, 3);
    CHECK(q == q_k(k));
    CHECK(q.total_degree() == static_cast<long>(k) + 1);
    CHECK(q.homogeneous_part(k + 1) == MultiPoly::monomial(XY, {k - 1, 2}, Rational(3 * k)));
    CHECK(substitute(q, {{"x", y.pow(3)}, {"y", y}}) == u);
  }
  CHECK(to_string(reduce_mod_relation(parse_poly("(y+1)^6", {"y"}), 3)) == "x^2+6x*y^2+15x*y+20x+15y^2+6y+1");
}

TEST_CASE("interpolation with degree k is infeasible") {
  for (unsigned k = 1; k <= 5; ++k) {
    MultiPoly u = parse_poly("(y+1)^" + std::to_string(3 * k), {"y"});
    InterpResult r = interp_exists(u, 3, k);
    CHECK_FALSE(r.feasible);
    REQUIRE(r.certificate);
    CHECK(*r.certificate == 3 * k - 1);
    REQUIRE_FALSE(r.farkas.empty());
    InterpResult ok = interp_exists(u, 3, k + 1);
    CHECK(ok.feasible);
    REQUIRE(ok.solution);
    CHECK(*ok.solution == q_k(k));
  }
}

TEST_CASE("bivariate gcd and division") {
  MultiPoly a = poly("(x+y)*(x-y^2+1)");
  MultiPoly b = poly("(x+y)*(y-3)");
  MultiPoly g = gcd2(a, b);
  CHECK(div2(g, poly("x+y")).is_constant());
  CHECK(div2(a, poly("x+y")) == poly("x-y^2+1"));
}

TEST_CASE("numeric evaluation") {
  MultiPoly f = poly("x*y - x^3 - 1");
  std::vector<std::complex<double>> pt{{2, 0}, {4.5, 0}};
  CHECK(std::abs(f.eval(pt)) < 1e-12);
  CHECK(f.max_term_abs(pt) == doctest::Approx(9.0));
  CHECK(f.eval_exact({Rational(1), Rational(2)}) == 0);
}

}
