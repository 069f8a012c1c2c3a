#pragma once

#include "lelong/rational.hpp"
#include "lelong/upoly.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lelong {

using Exponents = std::vector<unsigned>;

/// Sparse multivariate polynomial with rational coefficients over a named,
/// ordered variable list. Terms iterate in lex-descending order.
class MultiPoly {
 public:
  using TermMap = std::map<Exponents, Rational, std::greater<Exponents>>;

  MultiPoly() = default;
  explicit MultiPoly(std::vector<std::string> vars);
  MultiPoly(std::vector<std::string> vars, const Rational& constant);

  static MultiPoly variable(const std::vector<std::string>& vars, std::size_t index);
  static MultiPoly variable(const std::vector<std::string>& vars, const std::string& name);
  static MultiPoly monomial(const std::vector<std::string>& vars, Exponents e, const Rational& c);

  const std::vector<std::string>& vars() const { return vars_; }
  std::size_t nvars() const { return vars_.size(); }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::optional<std::size_t> var_index(const std::string& name) const;

  /// -1 for the zero polynomial.
  long total_degree() const;
  long degree_in(std::size_t var) const;
  Rational coeff(const Exponents& e) const;
  /// Coefficient of the lex-leading term.
  Rational lead_coeff() const;

  void add_term(const Exponents& e, const Rational& c);

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& s);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator-(MultiPoly a) { return a *= Rational(-1); }
  friend MultiPoly operator*(MultiPoly a, const Rational& s) { return a *= s; }
  friend MultiPoly operator*(const Rational& s, MultiPoly a) { return a *= s; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.vars_ == b.vars_ && a.terms_ == b.terms_; }

  MultiPoly pow(unsigned k) const;
  /// Terms of total degree exactly k.
  MultiPoly homogeneous_part(long k) const;
  /// Same terms over a different variable list; `map[i]` is the new index of
  /// old variable i.
  MultiPoly relabel(const std::vector<std::string>& vars, const std::vector<std::size_t>& map) const;

  template <class T>
  T eval(const std::vector<T>& point) const {
    T acc(0);
    for (const auto& [e, c] : terms_) {
      T m(to_double(c));
      for (std::size_t i = 0; i < e.size(); ++i)
        for (unsigned k = 0; k < e[i]; ++k) m *= point[i];
      acc += m;
    }
    return acc;
  }
  /// Largest |monomial| at the point, for relative residuals.
  template <class T>
  double max_term_abs(const std::vector<T>& point) const {
    double best = 0;
    for (const auto& [e, c] : terms_) {
      T m(to_double(c));
      for (std::size_t i = 0; i < e.size(); ++i)
        for (unsigned k = 0; k < e[i]; ++k) m *= point[i];
      best = std::max(best, static_cast<double>(std::abs(m)));
    }
    return best;
  }
  Rational eval_exact(const std::vector<Rational>& point) const;

 private:
  void check_vars(const MultiPoly& o) const;
  std::vector<std::string> vars_;
  TermMap terms_;
};

/// Canonical text form, e.g. "x+3y^2+3y+1" or "-x^3+x*y-1".
std::string to_string(const MultiPoly& p);

struct ParseError : std::runtime_error {
  ParseError(std::size_t pos, const std::string& msg);
  std::size_t position;
};

/// Grammar: integers, `+ - * / ^ ( )`, declared variable names, implicit
/// multiplication before a variable or parenthesis. Division only by nonzero
/// constants; exponents are non-negative integers.
MultiPoly parse_poly(const std::string& text, const std::vector<std::string>& vars);

/// Homogeneous polynomial in (t, x, y, ...), with t first.
struct HomogPoly {
  MultiPoly poly;
  long degree = 0;
};

HomogPoly homogenize(const MultiPoly& p, const std::string& t = "t");
/// Sets t = 1 and drops t from the variable list.
MultiPoly dehomogenize(const HomogPoly& h);

/// Replaces every variable of p by the assigned polynomial. All images share
/// one variable list, which becomes the result's.
MultiPoly substitute(const MultiPoly& p, const std::map<std::string, MultiPoly>& assignment);

/// y^j -> x^(j div e) y^(j mod e) for a polynomial in y alone.
MultiPoly reduce_mod_relation(const MultiPoly& u, unsigned e, const std::string& x = "x", const std::string& y = "y");

struct InterpResult {
  bool feasible = false;
  /// Q of total degree <= d with Q(y^e, y) = target.
  std::optional<MultiPoly> solution;
  /// Exponent s of an unreachable monomial y^s carrying a nonzero target coefficient.
  std::optional<unsigned> certificate;
  /// Farkas vector over the rows y^0..y^S: zero on every column, nonzero on the target.
  std::vector<Rational> farkas;
};

InterpResult interp_exists(const MultiPoly& target, unsigned e, unsigned d, const std::string& x = "x",
                           const std::string& y = "y");

MultiPoly derivative(const MultiPoly& p, std::size_t var);

/// Univariate view: p must involve only variable `var`.
QPoly to_upoly(const MultiPoly& p, std::size_t var);
MultiPoly from_upoly(const QPoly& p, const std::vector<std::string>& vars, std::size_t var);

/// Greatest common divisor of two polynomials in two variables, normalised
/// to a lex-leading coefficient of 1.
MultiPoly gcd2(const MultiPoly& a, const MultiPoly& b);
/// Exact quotient in two variables; throws if b does not divide a.
MultiPoly div2(const MultiPoly& a, const MultiPoly& b);

}  // namespace lelong
