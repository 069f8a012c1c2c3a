#include "lelong/asymptotics.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>

namespace lelong {

// ---------------------------------------------------------------- grammar

namespace {

class GrowthParser {
 public:
  GrowthParser(const std::string& s, const std::vector<std::string>& vars) : s_(s), vars_(vars) {}

  GrowthFunction run() {
    GrowthFunction g;
    skip();
    std::size_t mark = pos_;
    if (keyword("on")) {
      pos_ = mark;
      do {
        if (!keyword("on")) throw ParseError(pos_, "expected 'on'");
        std::size_t start = pos_;
        std::size_t colon = s_.find(':', pos_);
        if (colon == std::string::npos) throw ParseError(pos_, "expected ':' after factor");
        MultiPoly f = sub_poly(start, colon);
        pos_ = colon + 1;
        GrowthExpr e = expr();
        g.per_factor.emplace_back(std::move(f), std::move(e));
        skip();
      } while (eat(';'));
    } else {
      g.global = expr();
    }
    skip();
    if (pos_ != s_.size()) throw ParseError(pos_, std::string("unexpected '") + s_[pos_] + "'");
    return g;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  bool keyword(const std::string& k) {
    skip();
    if (s_.compare(pos_, k.size(), k) != 0) return false;
    std::size_t end = pos_ + k.size();
    if (end < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[end])) || s_[end] == '_')) return false;
    pos_ = end;
    return true;
  }
  MultiPoly sub_poly(std::size_t start, std::size_t end) {
    try {
      return parse_poly(s_.substr(start, end - start), vars_);
    } catch (const ParseError& e) {
      throw ParseError(start + e.position, std::string(e.what()).substr(std::string(e.what()).find(": ") + 2));
    }
  }

  GrowthExpr expr() {
    GrowthExpr e;
    if (keyword("max")) {
      if (!eat('(')) throw ParseError(pos_, "expected '(' after max");
      do {
        e.terms.push_back(term());
      } while (eat(','));
      if (!eat(')')) throw ParseError(pos_, "expected ')' or ','");
    } else {
      e.terms.push_back(term());
    }
    return e;
  }

  GrowthTerm term() {
    GrowthTerm t;
    skip();
    Rational sign = 1;
    if (eat('-')) sign = -1;
    else eat('+');
    item(t, sign);
    for (;;) {
      if (eat('+')) item(t, Rational(1));
      else if (eat('-')) item(t, Rational(-1));
      else return t;
    }
  }

  std::optional<Rational> number() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) return std::nullopt;
    Rational q(Integer(s_.substr(start, pos_ - start)));
    skip();
    if (pos_ < s_.size() && s_[pos_] == '/') {
      ++pos_;
      skip();
      std::size_t ds = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (ds == pos_) throw ParseError(ds, "expected a denominator");
      Integer d(s_.substr(ds, pos_ - ds));
      if (d == 0) throw ParseError(ds, "zero denominator");
      q /= Rational(d);
    }
    return q;
  }

  void item(GrowthTerm& t, const Rational& sign) {
    std::size_t at = pos_;
    std::optional<Rational> coef = number();
    if (coef) {
      if (!eat('*')) {
        t.constant += sign * *coef;
        return;
      }
    }
    Rational w = sign * (coef ? *coef : Rational(1));
    if (keyword("RHO")) {
      t.atoms.push_back({w, Atom{true, MultiPoly(vars_)}});
      return;
    }
    if (keyword("log")) {
      if (!eat('|')) throw ParseError(pos_, "expected '|' after log");
      std::size_t start = pos_;
      std::size_t bar = s_.find('|', pos_);
      if (bar == std::string::npos) throw ParseError(pos_, "unterminated log|...|");
      MultiPoly p = sub_poly(start, bar);
      if (p.is_zero()) throw ParseError(start, "log of the zero polynomial");
      pos_ = bar + 1;
      t.atoms.push_back({w, Atom{false, std::move(p)}});
      return;
    }
    skip();
    throw ParseError(at, "expected a number, log|...| or RHO");
  }

  const std::string& s_;
  const std::vector<std::string>& vars_;
  std::size_t pos_ = 0;
};

std::string weight_prefix(const Rational& w, bool first) {
  std::string out;
  if (w < 0) out = "-";
  else if (!first) out = "+";
  Rational a = abs(w);
  if (a != 1) out += to_string(a) + "*";
  return out;
}

std::string term_string(const GrowthTerm& t) {
  std::string out;
  for (const auto& a : t.atoms) {
    out += weight_prefix(a.weight, out.empty());
    out += a.atom.rho ? "RHO" : "log|" + to_string(a.atom.poly) + "|";
  }
  if (!t.constant.is_zero() || out.empty()) {
    if (out.empty()) out = to_string(t.constant);
    else out += (t.constant < 0 ? "-" : "+") + to_string(abs(t.constant));
  }
  return out;
}

}  // namespace

GrowthFunction parse_growth(const std::string& text, const std::vector<std::string>& vars) {
  return GrowthParser(text, vars).run();
}

std::string to_string(const GrowthExpr& e) {
  if (e.terms.size() == 1) return term_string(e.terms.front());
  std::string out = "max(";
  for (std::size_t i = 0; i < e.terms.size(); ++i) out += (i ? ", " : "") + term_string(e.terms[i]);
  return out + ")";
}

std::string to_string(const GrowthFunction& g) {
  if (g.global) return to_string(*g.global);
  std::string out;
  for (const auto& [f, e] : g.per_factor) out += (out.empty() ? "" : "; ") + std::string("on ") + to_string(f) + ": " + to_string(e);
  return out;
}

// ---------------------------------------------------------------- potentials

double rho(std::complex<double> t, const std::vector<std::complex<double>>& z) {
  std::vector<std::complex<long double>> v{{t.real(), t.imag()}};
  for (auto c : z) v.emplace_back(c.real(), c.imag());
  return static_cast<double>(rho_ld(v));
}

long double rho_ld(const std::vector<std::complex<long double>>& v) {
  long double m = 0;
  std::size_t at = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (std::abs(v[i]) > m) {
      m = std::abs(v[i]);
      at = i;
    }
  if (m == 0) throw std::invalid_argument("rho of the zero vector");
  long double s = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i == at) continue;
    long double r = std::abs(v[i]) / m;
    s += r * r;
  }
  return std::log(m) + 0.5L * std::log1p(s);
}

double theta(const std::vector<std::complex<double>>& z) {
  double m = 0;
  std::size_t at = 0;
  for (std::size_t i = 0; i < z.size(); ++i)
    if (std::abs(z[i]) > m) {
      m = std::abs(z[i]);
      at = i;
    }
  if (m == 0) throw std::invalid_argument("theta of the zero vector");
  double s = 0;
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (i == at) continue;
    double r = std::abs(z[i]) / m;
    s += r * r;
  }
  return -0.5 * std::log1p(s);
}

long double eval_growth(const GrowthExpr& e, std::complex<long double> x, std::complex<long double> y) {
  const long double inf = std::numeric_limits<long double>::infinity();
  long double best = -inf;
  std::vector<std::complex<long double>> pt{x, y};
  for (const auto& t : e.terms) {
    long double v = to_double(t.constant);
    for (const auto& a : t.atoms) {
      long double w = to_double(a.weight);
      if (a.atom.rho) {
        v += w * rho_ld({1.0L, x, y});
        continue;
      }
      long double m = std::abs(a.atom.poly.eval(pt));
      if (m == 0) v += w > 0 ? -inf : inf;
      else v += w * std::log(m);
    }
    best = std::max(best, v);
  }
  return best;
}

// ---------------------------------------------------------------- values

namespace {

Interval abs_interval(const FieldElem& a, unsigned bits) {
  if (a.is_rational()) return Interval(abs(a.rational()));
  Rational rad(Integer(1), Integer(1) << (bits + 8));
  for (int it = 0; it < 40; ++it) {
    Interval i = enclose(a, rad).abs_enclosure(bits + 8);
    if (i.lo > 0 && i.width() * (Integer(1) << bits) <= i.lo) return i;
    rad /= Rational(Integer(1) << 16);
  }
  throw std::runtime_error("could not separate an algebraic number from zero");
}

Interval scale(const Rational& r, const Interval& i) { return r * i; }

}  // namespace

bool SymbolicValue::is_rational_only() const {
  for (const auto& [r, a] : logs)
    if (!a.is_rational()) return false;
  return norm_weight.is_zero() || norm_center.is_rational();
}

Interval SymbolicValue::enclosure(unsigned bits) const {
  Interval acc(constant);
  for (const auto& [r, a] : logs) acc = acc + scale(r, log_enclosure(abs_interval(a, bits), bits));
  if (!norm_weight.is_zero()) {
    Interval m = abs_interval(norm_center, bits);
    if (norm_center.is_rational() && norm_center.rational().is_zero()) m = Interval(Rational(0));
    Interval sq = mul_nonneg(m, m);
    Interval arg(sq.lo + 1, sq.hi + 1);
    acc = acc + scale(norm_weight / 2, log_enclosure(arg, bits));
  }
  return acc;
}

SymbolicValue operator-(const SymbolicValue& a, const SymbolicValue& b) {
  SymbolicValue d = a;
  d.constant -= b.constant;
  for (const auto& [r, x] : b.logs) d.logs.emplace_back(-r, x);
  if (!b.norm_weight.is_zero()) {
    if (!d.norm_weight.is_zero() && !(d.norm_center.field() == b.norm_center.field() &&
                                      d.norm_center.rep() == b.norm_center.rep()))
      throw std::logic_error("comparing values at different points");
    d.norm_center = b.norm_center;
    d.norm_weight -= b.norm_weight;
  }
  return d;
}

std::string to_string(const SymbolicValue& v) {
  std::string out;
  if (!v.constant.is_zero()) out = to_string(v.constant);
  for (const auto& [r, a] : v.logs) {
    if (a.is_rational() && abs(a.rational()) == 1) continue;
    out += weight_prefix(r, out.empty());
    out += "log|" + to_string(a) + "|";
  }
  if (!v.norm_weight.is_zero() && !(v.norm_center.is_rational() && v.norm_center.rational().is_zero())) {
    out += weight_prefix(v.norm_weight, out.empty());
    out += "log|(1," + to_string(v.norm_center) + ")|";
  }
  return out.empty() ? "0" : out;
}

namespace {

// Collects like terms. Returns the irrational remainder and the rational
// logarithms separately.
struct Reduced {
  Rational constant;
  std::vector<std::pair<Rational, Rational>> rational_logs;  // (weight, |q|)
  std::vector<std::pair<Rational, FieldElem>> other;
  Rational norm_weight;
  FieldElem norm_center;
};

Reduced reduce(const SymbolicValue& v) {
  Reduced r;
  r.constant = v.constant;
  for (const auto& [w, a] : v.logs) {
    if (w.is_zero()) continue;
    if (a.is_rational()) {
      Rational q = abs(a.rational());
      if (q == 1) continue;
      auto it = std::find_if(r.rational_logs.begin(), r.rational_logs.end(), [&](const auto& p) { return p.second == q; });
      if (it == r.rational_logs.end()) r.rational_logs.emplace_back(w, q);
      else it->first += w;
      continue;
    }
    auto it = std::find_if(r.other.begin(), r.other.end(), [&](const auto& p) {
      return p.second.field() == a.field() && p.second.rep() == a.rep();
    });
    if (it == r.other.end()) r.other.emplace_back(w, a);
    else it->first += w;
  }
  std::erase_if(r.rational_logs, [](const auto& p) { return p.first.is_zero(); });
  std::erase_if(r.other, [](const auto& p) { return p.first.is_zero(); });
  r.norm_weight = v.norm_weight;
  r.norm_center = v.norm_center;
  if (!r.norm_weight.is_zero() && r.norm_center.is_rational()) {
    Rational q = 1 + r.norm_center.rational() * r.norm_center.rational();
    if (q != 1) r.rational_logs.emplace_back(r.norm_weight / 2, q);
    r.norm_weight = 0;
  }
  return r;
}

// Exact zero test: nullopt when irrational parts survive cancellation.
std::optional<bool> exact_zero(const SymbolicValue& v) {
  Reduced r = reduce(v);
  if (!r.other.empty() || !r.norm_weight.is_zero()) return std::nullopt;
  if (r.rational_logs.empty()) return r.constant.is_zero();
  // A nonzero rational is never a logarithm of a nonzero algebraic number
  // (Lindemann), so a nonzero constant decides the question.
  if (!r.constant.is_zero()) return false;
  Integer den = 1;
  for (const auto& [w, q] : r.rational_logs) den = boost::multiprecision::lcm(den, Integer(denominator(w)));
  Rational prod = 1;
  for (const auto& [w, q] : r.rational_logs) {
    Integer e = numerator(w) * (den / denominator(w));
    if (abs(e) > 1000000) return std::nullopt;
    prod *= lelong::pow(q, static_cast<long>(e));
  }
  return prod == 1;
}

unsigned bits_for(const Rational& width) {
  // 2^-bits <= width / 4.
  unsigned b = 4;
  Rational w = width;
  while (w < 1 && b < 100000) {
    w *= 2;
    ++b;
  }
  return b + 8;
}

}  // namespace

ExtendedValue::ExtendedValue(std::vector<SymbolicValue> candidates) {
  // Drop candidates that are certainly dominated or duplicated.
  for (auto& c : candidates) {
    bool keep = true;
    for (std::size_t i = 0; i < cands_.size() && keep; ++i) {
      auto z = exact_zero(c - cands_[i]);
      if (z && *z) {
        keep = false;
        break;
      }
      Interval a, b;
      for (unsigned bits = 64; bits <= 1024; bits *= 2) {
        a = c.enclosure(bits);
        b = cands_[i].enclosure(bits);
        if (!a.overlaps(b)) break;
        if (!z) break;  // undecided symbolically: one numeric look only
      }
      if (!a.overlaps(b)) {
        if (a.hi < b.lo) keep = false;
        else cands_.erase(cands_.begin() + static_cast<long>(i--));
      }
    }
    if (keep) cands_.push_back(std::move(c));
  }
}

std::optional<Interval> ExtendedValue::enclosure(const Rational& width) const {
  if (cands_.empty()) return std::nullopt;
  Interval best;
  for (unsigned bits = bits_for(width);; bits *= 2) {
    bool first = true;
    for (const auto& c : cands_) {
      Interval i = c.enclosure(bits);
      if (first) best = i;
      else best = {std::max(best.lo, i.lo), std::max(best.hi, i.hi)};
      first = false;
    }
    if (best.width() <= width || bits > 8192) return best;
  }
}

std::string to_string(const ExtendedValue& v) {
  if (v.is_neg_inf()) return "-inf";
  if (v.candidates().size() == 1) return to_string(v.candidates().front());
  std::string out = "max(";
  for (std::size_t i = 0; i < v.candidates().size(); ++i) out += (i ? ", " : "") + to_string(v.candidates()[i]);
  return out + ")";
}

std::string to_string(Relation r) {
  switch (r) {
    case Relation::EQUAL: return "EQUAL";
    case Relation::DISTINCT: return "DISTINCT";
    case Relation::INDETERMINATE: return "INDETERMINATE";
  }
  return "?";
}

Comparison compare(const ExtendedValue& a, const ExtendedValue& b, const Rational& target, const Rational& cap) {
  Comparison out;
  if (a.is_neg_inf() || b.is_neg_inf()) {
    out.relation = a.is_neg_inf() && b.is_neg_inf() ? Relation::EQUAL : Relation::DISTINCT;
    out.left = a.enclosure(target);
    out.right = b.enclosure(target);
    return out;
  }
  std::optional<bool> exact;
  if (a.candidates().size() == 1 && b.candidates().size() == 1) {
    exact = exact_zero(a.candidates().front() - b.candidates().front());
  } else if (a.candidates().size() == b.candidates().size()) {
    bool all = true;
    for (std::size_t i = 0; i < a.candidates().size() && all; ++i) {
      auto z = exact_zero(a.candidates()[i] - b.candidates()[i]);
      all = z && *z;
    }
    if (all) exact = true;
  }
  if (exact && *exact) {
    out.relation = Relation::EQUAL;
    out.left = a.enclosure(target);
    out.right = b.enclosure(target);
    return out;
  }
  // Certainly distinct, or undecided: refine until the enclosures separate.
  Rational w = target;
  for (int it = 0; it < 64; ++it) {
    out.left = a.enclosure(w);
    out.right = b.enclosure(w);
    if (!out.left->overlaps(*out.right)) {
      out.relation = Relation::DISTINCT;
      return out;
    }
    if (!exact && w <= cap) break;
    w = exact ? w / 1024 : std::max(cap, Rational(w / 1024));
  }
  out.relation = Relation::INDETERMINATE;
  return out;
}

// ---------------------------------------------------------------- branches

std::string to_string(const GrowthOrder& o) {
  switch (o.kind) {
    case GrowthOrder::NEG_INF: return "-inf";
    case GrowthOrder::POS_INF: return "+inf";
    case GrowthOrder::FINITE: return to_string(o.value);
  }
  return "?";
}

GrowthOrder max(const GrowthOrder& a, const GrowthOrder& b) {
  if (a.kind == GrowthOrder::POS_INF || b.kind == GrowthOrder::NEG_INF) return a;
  if (b.kind == GrowthOrder::POS_INF || a.kind == GrowthOrder::NEG_INF) return b;
  return a.value >= b.value ? a : b;
}

namespace {

// P^(s^e, x^(s), y^(s)) through s^(len-1).
Series compose_series(const MultiPoly& p, PuiseuxBranch& b, std::size_t len) {
  HomogPoly h = homogenize(p);
  Series xh = b.chart_x(), yh = b.chart_y();
  std::vector<Series> xp{Series{FieldElem(1)}}, yp{Series{FieldElem(1)}};
  Series out(len);
  for (const auto& [e, c] : h.poly.terms()) {
    std::size_t shift = static_cast<std::size_t>(b.ramification) * e[0];
    if (shift >= len) continue;
    while (xp.size() <= e[1]) xp.push_back(series_mul(xp.back(), xh, len));
    while (yp.size() <= e[2]) yp.push_back(series_mul(yp.back(), yh, len));
    Series m = series_mul(xp[e[1]], yp[e[2]], len - shift);
    for (std::size_t k = 0; k < m.size(); ++k) out[k + shift] = out[k + shift] + FieldElem(c) * m[k];
  }
  return out;
}

// First nonzero coefficient index within the series, or -1.
long valuation(const Series& s) {
  for (std::size_t k = 0; k < s.size(); ++k)
    if (!is_zero(s[k])) return static_cast<long>(k);
  return -1;
}

// ord_s P along the branch if it is at most `bound`; -1 when P vanishes on
// the branch's component (certified by the intersection bound).
std::pair<long, Series> order_along(const MultiPoly& p, PuiseuxBranch& b, long bound, const PuiseuxOptions& opt) {
  std::size_t len;
  if (b.exact) {
    long dp = std::max<long>(p.total_degree(), 0);
    len = static_cast<std::size_t>(b.ramification * dp + dp * static_cast<long>(b.w.size()) + 1);
  } else {
    extend_branch(b, bound, opt);
    len = static_cast<std::size_t>(bound + 1);
  }
  Series h = compose_series(p, b, len);
  return {valuation(h), std::move(h)};
}

FieldElem point_center(const PuiseuxBranch& b) {
  return b.chart == Chart::X1 ? b.point.y / b.point.x : b.point.x / b.point.y;
}

}  // namespace

AtomAsymptotic atom_asymptotic(const MultiPoly& p, PuiseuxBranch& b, long curve_degree, const PuiseuxOptions& opt) {
  AtomAsymptotic out;
  long dp = p.total_degree();
  if (dp < 0) throw std::invalid_argument("log of the zero polynomial");
  auto [v, h] = order_along(p, b, dp * curve_degree, opt);
  if (v < 0) {
    out.vanishes = true;
    return out;
  }
  out.valuation = v;
  out.order = Rational(dp) - Rational(v, b.ramification);
  out.lead = h[static_cast<std::size_t>(v)];
  return out;
}

namespace {

struct TermData {
  bool neg_inf = false;
  Rational order;
  SymbolicValue kappa;
};

TermData analyse_term(const GrowthTerm& t, PuiseuxBranch& b, long curve_degree, const PuiseuxOptions& opt) {
  TermData d;
  d.kappa.constant = t.constant;
  Rational rho_w = 0;
  for (const auto& a : t.atoms) {
    if (a.atom.rho) {
      rho_w += a.weight;
      continue;
    }
    if (a.weight.is_zero()) continue;
    AtomAsymptotic as = atom_asymptotic(a.atom.poly, b, curve_degree, opt);
    if (as.vanishes) {
      if (a.weight > 0) {
        d.neg_inf = true;
        continue;
      }
      throw NotLelong("log|" + to_string(a.atom.poly) + "| has negative weight and vanishes on a branch at " +
                      to_string(b.point));
    }
    d.order += a.weight * as.order;
    d.kappa.logs.emplace_back(a.weight, as.lead);
  }
  d.order += rho_w;
  d.kappa.norm_weight = rho_w - 1;
  d.kappa.norm_center = point_center(b);
  return d;
}

}  // namespace

ExtendedValue branch_value(const GrowthExpr& eta, PuiseuxBranch& b, long curve_degree, const PuiseuxOptions& opt) {
  std::vector<SymbolicValue> cands;
  std::vector<TermData> terms;
  for (const auto& t : eta.terms) terms.push_back(analyse_term(t, b, curve_degree, opt));
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const auto& d = terms[i];
    if (d.neg_inf) continue;
    if (d.order > 1)
      throw NotLelong("term " + term_string(eta.terms[i]) + " grows with order " + to_string(d.order) +
                      " > 1 along a branch at " + to_string(b.point));
    if (d.order == 1) cands.push_back(d.kappa);
  }
  if (cands.empty()) return ExtendedValue::neg_inf();
  return ExtendedValue(std::move(cands));
}

GrowthOrder branch_order(const GrowthExpr& eta, PuiseuxBranch& b, long curve_degree, const PuiseuxOptions& opt) {
  GrowthOrder out;
  for (const auto& t : eta.terms) {
    TermData d;
    try {
      d = analyse_term(t, b, curve_degree, opt);
    } catch (const NotLelong&) {
      return {GrowthOrder::POS_INF, Rational(0)};
    }
    if (d.neg_inf) continue;
    out = max(out, GrowthOrder{GrowthOrder::FINITE, d.order});
  }
  return out;
}

Rational plane_order(const GrowthExpr& eta) {
  std::optional<Rational> best;
  for (const auto& t : eta.terms) {
    Rational q = 0;
    for (const auto& a : t.atoms) {
      if (a.weight < 0) throw NotLelong("negative weights are not supported on the whole plane");
      q += a.weight * (a.atom.rho ? Rational(1) : Rational(a.atom.poly.total_degree()));
    }
    if (!best || q > *best) best = q;
  }
  return best.value_or(Rational(0));
}

void validate_factors(const GrowthFunction& g, const MultiPoly& curve) {
  if (!g.is_per_factor()) return;
  MultiPoly prod(curve.vars(), Rational(1));
  for (const auto& [f, e] : g.per_factor) {
    if (f.total_degree() < 1) throw std::invalid_argument("factor " + to_string(f) + " is constant");
    prod = prod * f;
  }
  if (prod.is_zero() || !(prod * (curve.lead_coeff() / prod.lead_coeff()) == curve))
    throw std::invalid_argument("the listed factors do not multiply to the curve equation");
}

const GrowthExpr& select_expr(const GrowthFunction& g, PuiseuxBranch& b, const MultiPoly& curve,
                              const PuiseuxOptions& opt) {
  if (g.global) return *g.global;
  const long d = curve.total_degree();
  const GrowthExpr* hit = nullptr;
  for (const auto& [f, e] : g.per_factor) {
    long df = f.total_degree();
    bool on = df == d;
    if (!on) on = order_along(f, b, df * (d - df), opt).first < 0;
    if (on) {
      if (hit) throw std::logic_error("branch lies on two factors; the curve is not squarefree");
      hit = &e;
    }
  }
  if (!hit) throw std::logic_error("branch lies on none of the listed factors");
  return *hit;
}

}  // namespace lelong
