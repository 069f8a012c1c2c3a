#include "lelong/algebraic.hpp"
#include "lelong/asymptotics.hpp"
#include "lelong/roots.hpp"
#include "random_poly.hpp"

#include <doctest.h>

#include <cmath>

using namespace lelong;
using lelong::testing::random_poly;
using lelong::testing::random_rational;

namespace {
const std::vector<std::string> XY{"x", "y"};
constexpr int kInstances = 1000;
}  // namespace

TEST_SUITE("properties") {

TEST_CASE("evaluation is a ring homomorphism") {
  std::mt19937_64 rng(1);
  for (int i = 0; i < kInstances; ++i) {
    MultiPoly p = random_poly(rng, XY), q = random_poly(rng, XY);
    std::vector<Rational> pt{random_rational(rng), random_rational(rng)};
    Rational a = p.eval_exact(pt), b = q.eval_exact(pt);
    REQUIRE((p + q).eval_exact(pt) == a + b);
    REQUIRE((p - q).eval_exact(pt) == a - b);
    REQUIRE((p * q).eval_exact(pt) == a * b);
  }
}

TEST_CASE("print then parse is the identity") {
  std::mt19937_64 rng(2);
  for (int i = 0; i < kInstances; ++i) {
    MultiPoly p = random_poly(rng, XY, 6, 8);
    REQUIRE(parse_poly(to_string(p), XY) == p);
    Rational q = random_rational(rng, 1000, 1000);
    REQUIRE(parse_rational(to_string(q)) == q);
  }
}

TEST_CASE("homogenize is multiplicative and inverted by dehomogenize") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < kInstances; ++i) {
    MultiPoly p = random_poly(rng, XY), q = random_poly(rng, XY);
    if (p.is_zero() || q.is_zero()) continue;
    REQUIRE(homogenize(p * q).poly == homogenize(p).poly * homogenize(q).poly);
    REQUIRE(dehomogenize(homogenize(p)) == p);
  }
}

TEST_CASE("substitution is a homomorphism") {
  std::mt19937_64 rng(4);
  for (int i = 0; i < kInstances; ++i) {
    MultiPoly p = random_poly(rng, XY, 3), q = random_poly(rng, XY, 3);
    std::map<std::string, MultiPoly> s{{"x", random_poly(rng, XY, 2, 3)}, {"y", random_poly(rng, XY, 2, 3)}};
    REQUIRE(substitute(p * q, s) == substitute(p, s) * substitute(q, s));
    REQUIRE(substitute(p + q, s) == substitute(p, s) + substitute(q, s));
  }
}

TEST_CASE("reduce then substitute back recovers the input") {
  std::mt19937_64 rng(5);
  MultiPoly y = MultiPoly::variable({"y"}, 0);
  for (int i = 0; i < kInstances; ++i) {
    MultiPoly u = random_poly(rng, {"y"}, 12, 6);
    unsigned e = 1 + static_cast<unsigned>(rng() % 4);
    MultiPoly r = reduce_mod_relation(u, e);
    for (const auto& [ex, c] : r.terms()) REQUIRE(ex[1] < e);
    REQUIRE(substitute(r, {{"x", y.pow(e)}, {"y", y}}) == u);
  }
}

TEST_CASE("field arithmetic in Q(cbrt 2)") {
  QPoly m(std::vector<Rational>{-2, 0, 0, 1});
  auto disks = isolate_roots(m, Rational(1, 1000));
  FieldPtr k;
  for (const auto& d : disks)
    if (d.center.im.is_zero() || std::abs(to_double(d.center.im)) < 1e-6) k = std::make_shared<NumberField>(m, d);
  REQUIRE(k);
  std::mt19937_64 rng(6);
  auto elem = [&] {
    return FieldElem(k, QPoly(std::vector<Rational>{random_rational(rng), random_rational(rng), random_rational(rng)}));
  };
  for (int i = 0; i < kInstances; ++i) {
    FieldElem a = elem(), b = elem();
    REQUIRE((a + b) - b == a);
    if (!is_zero(b)) REQUIRE((a * b) / b == a);
    auto ab = approx(a * b), pa = approx(a) * approx(b);
    REQUIRE(std::abs(ab - pa) <= 1e-9 * (1 + std::abs(pa)));
  }
}

TEST_CASE("growth expressions print and reparse") {
  std::mt19937_64 rng(7);
  const char* atoms[] = {"x", "y", "x+y", "x*y-1", "2x-y^2"};
  auto sum = [&](const std::string& item) {
    Rational q = random_rational(rng);
    return (q < 0 ? " - " : " + ") + to_string(abs(q)) + (item.empty() ? "" : "*" + item);
  };
  for (int i = 0; i < kInstances; ++i) {
    std::string s = "max(";
    int terms = 1 + static_cast<int>(rng() % 3);
    for (int t = 0; t < terms; ++t) {
      s += (t ? ", " : "") + to_string(random_rational(rng)) + "*log|" + atoms[rng() % 5] + "|" + sum("RHO") + sum("");
    }
    s += ")";
    GrowthFunction g = parse_growth(s, XY);
    REQUIRE(to_string(parse_growth(to_string(g), XY)) == to_string(g));
  }
}

TEST_CASE("theta bounds and scale invariance") {
  std::mt19937_64 rng(8);
  std::normal_distribution<double> n(0, 1);
  std::uniform_real_distribution<double> e(-6, 6);
  for (int dim = 1; dim <= 5; ++dim) {
    const double m = std::log(std::sqrt(dim + 1.0));
    for (int i = 0; i < kInstances; ++i) {
      std::vector<std::complex<double>> z(static_cast<std::size_t>(dim + 1));
      for (auto& c : z) c = {n(rng), n(rng)};
      double th = theta(z);
      REQUIRE(th <= 0);
      REQUIRE(th >= -m - 1e-15);
      std::complex<double> lambda = std::polar(std::pow(10.0, e(rng)), n(rng));
      for (auto& c : z) c *= lambda;
      REQUIRE(std::abs(theta(z) - th) <= 1e-12);
    }
  }
}

}
