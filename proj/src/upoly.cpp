#include "lelong/upoly.hpp"

namespace lelong {

QPoly primitive_integer(const QPoly& p) {
  if (p.is_zero()) return p;
  Integer l = 1;
  for (const auto& c : p.coeffs()) l = boost::multiprecision::lcm(l, Integer(denominator(c)));
  Integer g = 0;
  for (const auto& c : p.coeffs()) g = boost::multiprecision::gcd(g, Integer(numerator(c) * (l / denominator(c))));
  Rational f(l, g);
  if (p.lead() < 0) f = -f;
  return p * f;
}

std::string to_string(const QPoly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::string out;
  for (long k = p.degree(); k >= 0; --k) {
    const Rational& c = p.coeffs()[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    Rational a = abs(c);
    if (c < 0) out += "-";
    else if (!out.empty()) out += "+";
    bool unit = a == 1;
    if (k == 0 || !unit) {
      out += to_string(a);
      if (k > 0) out += (denominator(a) == 1 ? "" : "*");
    }
    if (k > 0) out += var;
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

}  // namespace lelong
