#include "lelong/criterion.hpp"

namespace lelong {

std::string to_string(Status s) {
  switch (s) {
    case Status::EXTENDABLE: return "EXTENDABLE";
    case Status::OBSTRUCTED: return "OBSTRUCTED";
    case Status::INDETERMINATE: return "INDETERMINATE";
  }
  return "?";
}

std::vector<GermDecomposition> germs_at_infinity(const CurveAtInfinity& c, const Rational& order,
                                                 const PuiseuxOptions& opt) {
  std::vector<GermDecomposition> out;
  for (const auto& p : c.points)
    out.push_back(puiseux_branches(local_equation(c.closure, p.point, default_chart(p.point)), order, opt));
  return out;
}

namespace {

std::string monomial(const FieldElem& c, const std::string& var, long k) {
  std::string coef = to_string(c);
  std::string pw = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
  if (pw.empty()) return coef;
  if (coef == "1") return pw;
  if (coef == "-1") return "-" + pw;
  return coef + "*" + pw;
}

std::string join_terms(const std::vector<std::string>& t) {
  std::string out;
  for (const auto& s : t) {
    if (out.empty() || s.front() == '-') out += s;
    else out += "+" + s;
  }
  return out;
}

}  // namespace

std::string leading_terms(const PuiseuxBranch& b, std::size_t count) {
  std::string var = b.chart == Chart::X1 ? "y" : "x";
  std::vector<std::string> t;
  bool more = false;
  if (!is_zero(b.center)) t.push_back(to_string(b.center));
  for (std::size_t k = 0; k < b.w.size(); ++k) {
    if (is_zero(b.w[k])) continue;
    if (t.size() >= count + (is_zero(b.center) ? 0 : 1)) {
      more = true;
      break;
    }
    t.push_back(monomial(b.w[k], "s", static_cast<long>(k)));
  }
  if (!b.exact) more = true;
  std::string out = "t=" + (b.ramification == 1 ? std::string("s") : "s^" + std::to_string(b.ramification));
  out += ", " + var + "=" + (t.empty() ? "0" : join_terms(t));
  if (more) out += "+...";
  return out;
}

Verdict check_extendable(const MultiPoly& f, const GrowthFunction& eta, const CheckOptions& opt) {
  validate_factors(eta, f);
  CurveAtInfinity c = closure(f, opt.closure);
  auto germs = germs_at_infinity(c, Rational(2), opt.puiseux);
  const long d = f.total_degree();
  Verdict v;
  for (std::size_t pi = 0; pi < germs.size(); ++pi) {
    auto& g = germs[pi];
    PointReport pr;
    pr.point = g.point;
    pr.chart = g.chart;
    pr.multiplicity = c.points[pi].multiplicity;
    pr.series_count = g.series_count;
    pr.all_neg_inf = true;
    for (auto& b : g.branches) {
      BranchReport br;
      br.value = branch_value(select_expr(eta, b, f, opt.puiseux), b, d, opt.puiseux);
      br.id = b.id;
      br.ramification = b.ramification;
      br.smooth = b.smooth;
      br.tangent = to_string(b.tangent);
      br.leading = leading_terms(b);
      br.enclosure = br.value.enclosure(opt.target);
      pr.all_neg_inf = pr.all_neg_inf && br.value.is_neg_inf();
      pr.branches.push_back(std::move(br));
    }
    for (std::size_t i = 0; i < pr.branches.size(); ++i)
      for (std::size_t j = i + 1; j < pr.branches.size(); ++j) {
        PairReport pair{pi, pr.branches[i].id, pr.branches[j].id,
                        compare(pr.branches[i].value, pr.branches[j].value, opt.target, opt.cap)};
        if (pair.comparison.relation == Relation::DISTINCT && !v.witness) v.witness = pair;
        if (pair.comparison.relation == Relation::INDETERMINATE && !v.near_tie) v.near_tie = pair;
      }
    v.points.push_back(std::move(pr));
  }
  if (v.witness) v.status = Status::OBSTRUCTED;
  else if (v.near_tie) v.status = Status::INDETERMINATE;
  return v;
}

GrowthOrder lelong_order(const MultiPoly& f, const GrowthFunction& eta, const CheckOptions& opt) {
  validate_factors(eta, f);
  CurveAtInfinity c = closure(f, opt.closure);
  GrowthOrder out;
  const long d = f.total_degree();
  for (auto& g : germs_at_infinity(c, Rational(2), opt.puiseux))
    for (auto& b : g.branches) out = max(out, branch_order(select_expr(eta, b, f, opt.puiseux), b, d, opt.puiseux));
  return out;
}

ExtendabilityReport always_extendable(const MultiPoly& f, const CheckOptions& opt) {
  CurveAtInfinity c = closure(f, opt.closure);
  ExtendabilityReport r;
  for (const auto& g : germs_at_infinity(c, Rational(1), opt.puiseux)) {
    r.points.push_back({g.point, g.series_count, static_cast<long>(g.branches.size())});
    if (g.branches.size() != 1) r.always = false;
  }
  return r;
}

GrowthFunction apply(const LinearChange& m, const GrowthFunction& eta) {
  auto map_expr = [&](GrowthExpr e) {
    for (auto& t : e.terms)
      for (auto& a : t.atoms)
        if (!a.atom.rho) a.atom.poly = apply(m, a.atom.poly);
    return e;
  };
  GrowthFunction out;
  if (eta.global) out.global = map_expr(*eta.global);
  for (const auto& [f, e] : eta.per_factor) out.per_factor.emplace_back(apply(m, f), map_expr(e));
  return out;
}

}  // namespace lelong
