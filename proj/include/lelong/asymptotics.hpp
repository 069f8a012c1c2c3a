#pragma once

#include "lelong/puiseux.hpp"

#include <complex>
#include <optional>
#include <string>
#include <vector>

namespace lelong {

/// log|P| for a polynomial P, or the potential RHO = log sqrt(1 + |x|^2 + |y|^2).
struct Atom {
  bool rho = false;
  MultiPoly poly;
};

struct WeightedAtom {
  Rational weight;
  Atom atom;
};

/// constant + sum of weighted atoms.
struct GrowthTerm {
  Rational constant;
  std::vector<WeightedAtom> atoms;
};

/// Pointwise maximum of terms.
struct GrowthExpr {
  std::vector<GrowthTerm> terms;
};

/// Either one expression for the whole curve or one per curve factor.
struct GrowthFunction {
  std::optional<GrowthExpr> global;
  std::vector<std::pair<MultiPoly, GrowthExpr>> per_factor;
  bool is_per_factor() const { return !global.has_value(); }
};

/// Grammar: `max(term, ...)` or a single term; a term is a +/- separated sum
/// of `c`, `[q*]log|POLY|` and `[q*]RHO` with rational q and c. Per factor:
/// `on POLY: expr; on POLY: expr`.
GrowthFunction parse_growth(const std::string& text, const std::vector<std::string>& vars);
std::string to_string(const GrowthExpr& e);
std::string to_string(const GrowthFunction& g);

/// log sqrt(|t|^2 + |z|^2).
double rho(std::complex<double> t, const std::vector<std::complex<double>>& z);
long double rho_ld(const std::vector<std::complex<long double>>& v);
/// log(max|z_i| / |z|).
double theta(const std::vector<std::complex<double>>& z);

/// Numeric value of the expression at an affine point; -inf where a
/// positive-weight log atom vanishes.
long double eval_growth(const GrowthExpr& e, std::complex<long double> x, std::complex<long double> y);

/// c + sum r_i log|alpha_i| + r_n log |(1, b)| where b is the point's
/// non-chart coordinate (the last part is absent at rational points).
struct SymbolicValue {
  Rational constant;
  std::vector<std::pair<Rational, FieldElem>> logs;
  Rational norm_weight;
  FieldElem norm_center;

  /// Certified enclosure; width roughly 2^-bits.
  Interval enclosure(unsigned bits) const;
  bool is_rational_only() const;
};

SymbolicValue operator-(const SymbolicValue& a, const SymbolicValue& b);
std::string to_string(const SymbolicValue& v);

/// -inf, or the maximum of finitely many symbolic values.
class ExtendedValue {
 public:
  static ExtendedValue neg_inf() { return {}; }
  explicit ExtendedValue(std::vector<SymbolicValue> candidates);

  bool is_neg_inf() const { return cands_.empty(); }
  const std::vector<SymbolicValue>& candidates() const { return cands_; }
  /// Enclosure of width at most `width` (empty optional for -inf).
  std::optional<Interval> enclosure(const Rational& width) const;

 private:
  ExtendedValue() = default;
  std::vector<SymbolicValue> cands_;
};

std::string to_string(const ExtendedValue& v);

enum class Relation { EQUAL, DISTINCT, INDETERMINATE };
std::string to_string(Relation r);

struct Comparison {
  Relation relation = Relation::INDETERMINATE;
  std::optional<Interval> left, right;
};

/// Tri-state comparison. Rational-only values are decided exactly; the rest
/// by syntactic cancellation or disjoint enclosures, refined from `target`
/// down to `cap`.
Comparison compare(const ExtendedValue& a, const ExtendedValue& b, const Rational& target = Rational(1, 1000000000),
                   const Rational& cap = Rational(1, 1000000000000000LL));

struct NotLelong : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Growth order q and leading data of log|P| along a branch.
struct AtomAsymptotic {
  bool vanishes = false;
  Rational order;  // q with log|P| = q log|z| + O(1)
  FieldElem lead;  // leading coefficient h
  long valuation = 0;
};

/// Requires branch terms through s^(deg P * curve_degree); extends the branch
/// when needed.
AtomAsymptotic atom_asymptotic(const MultiPoly& p, PuiseuxBranch& b, long curve_degree,
                               const PuiseuxOptions& opt = {});

/// limsup of eta - rho along the branch.
ExtendedValue branch_value(const GrowthExpr& eta, PuiseuxBranch& b, long curve_degree, const PuiseuxOptions& opt = {});

/// A growth order that may be infinite: -inf when every term is -inf along
/// the branch, +inf when some term is +inf.
struct GrowthOrder {
  enum Kind { NEG_INF, FINITE, POS_INF } kind = NEG_INF;
  Rational value;
};
std::string to_string(const GrowthOrder& o);
GrowthOrder max(const GrowthOrder& a, const GrowthOrder& b);

/// Largest term growth order along the branch.
GrowthOrder branch_order(const GrowthExpr& eta, PuiseuxBranch& b, long curve_degree,
                                     const PuiseuxOptions& opt = {});

/// Order on the whole plane: max over terms of sum w_i deg P_i + w_rho.
Rational plane_order(const GrowthExpr& eta);

/// The expression that applies to a branch: the global one, or the one for
/// the factor that vanishes on the branch's component.
const GrowthExpr& select_expr(const GrowthFunction& g, PuiseuxBranch& b, const MultiPoly& curve,
                              const PuiseuxOptions& opt = {});

/// Checks the per-factor list multiplies to the curve up to a constant.
void validate_factors(const GrowthFunction& g, const MultiPoly& curve);

}  // namespace lelong
