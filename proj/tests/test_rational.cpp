#include "lelong/rational.hpp"

#include <doctest.h>

#include <cmath>

using namespace lelong;

TEST_SUITE("rational") {

TEST_CASE("parse and print") {
  CHECK(to_string(parse_rational("6/4")) == "3/2");
  CHECK(to_string(parse_rational("-7")) == "-7");
  CHECK(to_string(parse_rational(" 0/5 ")) == "0");
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("x"));
  CHECK(to_decimal(Rational(1, 3), 5) == "0.33333");
}

TEST_CASE("floor, ceil, pow") {
  CHECK(floor(Rational(-7, 2)) == -4);
  CHECK(ceil(Rational(-7, 2)) == -3);
  CHECK(ceil(Rational(6, 3)) == 2);
  CHECK(pow(Rational(2, 3), -2) == Rational(9, 4));
  CHECK(from_double(0.375) == Rational(3, 8));
}

TEST_CASE("dyadic rounding brackets") {
  Rational q(1, 3);
  Rational lo = round_down(q, 20), hi = round_up(q, 20);
  CHECK(lo <= q);
  CHECK(q <= hi);
  CHECK(hi - lo <= Rational(1, 1 << 20));
}

TEST_CASE("log and exp enclosures contain libm values") {
  for (int k = 1; k <= 40; ++k) {
    Rational x(k, 7);
    Interval l = log_enclosure(x, 80);
    CHECK(l.width() < Rational(1, 1000000000));
    CHECK(to_double(l.lo) <= std::log(k / 7.0) + 1e-15);
    CHECK(to_double(l.hi) >= std::log(k / 7.0) - 1e-15);
    Interval e = exp_enclosure(Rational(k - 20, 5), 80);
    double ev = std::exp((k - 20) / 5.0);
    CHECK(std::abs(to_double(e.midpoint()) - ev) <= 1e-14 * ev);
  }
  CHECK_THROWS(log_enclosure(Rational(0), 64));
  // log 1 = 0 exactly inside.
  CHECK(log_enclosure(Rational(1), 64).contains(Rational(0)));
}

TEST_CASE("square roots") {
  Rational lo = sqrt_lower(Rational(2), 60), hi = sqrt_upper(Rational(2), 60);
  CHECK(lo * lo <= 2);
  CHECK(hi * hi >= 2);
  CHECK(sqrt_lower(Rational(9, 4), 30) <= Rational(3, 2));
}

}
