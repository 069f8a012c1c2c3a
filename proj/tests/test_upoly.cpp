#include "lelong/linalg.hpp"
#include "lelong/roots.hpp"

#include <doctest.h>

using namespace lelong;

namespace {
QPoly P(std::vector<Rational> c) { return QPoly(std::move(c)); }
}

TEST_SUITE("upoly") {

TEST_CASE("division and gcd") {
  QPoly a = P({-1, 0, 1});   // z^2 - 1
  QPoly b = P({1, 1});       // z + 1
  auto [q, r] = divmod(a, b);
  CHECK(q == P({-1, 1}));
  CHECK(r.is_zero());
  CHECK(monic(gcd(a * P({2, 1}), P({2, 1}) * P({3, 1}))) == P({2, 1}));
  auto [g, s, t] = ext_gcd(P({1, 0, 1}), P({0, 1}));
  CHECK(s * P({1, 0, 1}) + t * P({0, 1}) == g);
}

TEST_CASE("squarefree decomposition") {
  QPoly f = P({-1, 1}) * P({-1, 1}) * P({-2, 1});
  CHECK(monic(squarefree_part(f)) == P({-1, 1}) * P({-2, 1}));
  auto parts = squarefree_decomposition(f);
  REQUIRE(parts.size() >= 2);
  CHECK(monic(parts[0]) == P({-2, 1}));
  CHECK(monic(parts[1]) == P({-1, 1}));
}

TEST_CASE("resultant of z^2-2 and z^2-3 is 1") {
  CHECK(resultant(P({-2, 0, 1}), P({-3, 0, 1})) == 1);
}

TEST_CASE("printer") {
  CHECK(to_string(P({1, -3, 0, 1})) == "z^3-3z+1");
  CHECK(to_string(P({Rational(1, 2)}), "w") == "1/2");
}

TEST_CASE("root isolation separates and encloses") {
  QPoly p = P({-2, 0, 1});
  auto d = isolate_roots(p, Rational(1, 1000000));
  REQUIRE(d.size() == 2);
  for (const auto& disk : d) {
    double re = to_double(disk.center.re);
    CHECK(std::abs(std::abs(re) - std::sqrt(2.0)) < 1e-6);
  }
  auto u = isolate_roots(P({1, 0, 0, 0, 0, 1}));  // z^5 + 1
  CHECK(u.size() == 5);
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = i + 1; j < u.size(); ++j) CHECK_FALSE(u[i].intersects(u[j]));
}

TEST_CASE("rational roots") {
  QPoly f = P({-1, 1}) * P({-1, 1}) * P({-2, 1}) * P({3, 2});
  auto r = rational_roots(f);
  REQUIRE(r.size() == 3);
  CHECK(r[0] == Rational(-3, 2));
  CHECK(r[1] == 1);
  CHECK(r[2] == 2);
  CHECK(rational_roots(P({-2, 0, 1})).empty());
}

TEST_CASE("exact linear algebra") {
  QMatrix a(2, 2);
  a << Rational(1), Rational(2), Rational(2), Rational(4);
  QVector b(2);
  b << Rational(1), Rational(3);
  auto s = solve_exact(a, b);
  CHECK_FALSE(s.consistent);
  REQUIRE_FALSE(s.certificates.empty());
  const QVector& y = s.certificates.front();
  CHECK((y.transpose() * a).isZero());
  CHECK(y.dot(b) != 0);
  b << Rational(1), Rational(2);
  s = solve_exact(a, b);
  CHECK(s.consistent);
  CHECK((a * s.solution - b).isZero());
  CHECK(rank_exact(a) == 1);
  QMatrix m(2, 2);
  m << Rational(0), Rational(1), Rational(2), Rational(0);
  CHECK(charpoly(m) == P({-2, 0, 1}));
}

}
