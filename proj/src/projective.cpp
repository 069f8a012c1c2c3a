#include "lelong/projective.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace lelong {

FieldPtr ProjPoint::field() const {
  if (y.field()) return y.field();
  if (x.field()) return x.field();
  return t.field();
}

std::string to_string(const ProjPoint& p) {
  return "[" + to_string(p.t) + ":" + to_string(p.x) + ":" + to_string(p.y) + "]";
}

ProjPoint parse_point(const std::string& text) {
  std::string s;
  for (char c : text)
    if (c != '[' && c != ']' && c != ' ') s += c;
  std::vector<Rational> v;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, ':')) v.push_back(parse_rational(part));
  if (v.size() != 3) throw std::invalid_argument("expected a point t:x:y, got '" + text + "'");
  if (!v[1].is_zero()) return {FieldElem(v[0] / v[1]), FieldElem(1), FieldElem(v[2] / v[1])};
  if (!v[2].is_zero()) return {FieldElem(v[0] / v[2]), FieldElem(0), FieldElem(1)};
  if (!v[0].is_zero()) return {FieldElem(1), FieldElem(0), FieldElem(0)};
  throw std::invalid_argument("the zero vector is not a projective point");
}

namespace {

bool same_value(const FieldElem& a, const FieldElem& b) {
  if (a.is_rational() && b.is_rational()) return a.rational() == b.rational();
  if (a.is_rational() || b.is_rational()) {
    // Irrational representatives never equal rationals here; see closure().
    return false;
  }
  if (a.field() == b.field()) return a == b;
  return false;
}

}  // namespace

bool same_point(const ProjPoint& a, const ProjPoint& b) {
  return same_value(a.t, b.t) && same_value(a.x, b.x) && same_value(a.y, b.y);
}

std::string to_string(Chart c) { return c == Chart::X1 ? "x=1" : "y=1"; }

bool in_chart(const ProjPoint& p, Chart c) { return c == Chart::X1 ? !is_zero(p.x) : !is_zero(p.y); }

Chart default_chart(const ProjPoint& p) { return in_chart(p, Chart::X1) ? Chart::X1 : Chart::Y1; }

MultiPoly repeated_part(const MultiPoly& f) { return gcd2(gcd2(f, derivative(f, 0)), derivative(f, 1)); }

std::vector<std::size_t> coordinate_line_factors(const MultiPoly& f) {
  std::vector<std::size_t> out;
  if (f.is_zero()) return out;
  for (std::size_t v = 0; v < f.nvars(); ++v) {
    bool divides = std::all_of(f.terms().begin(), f.terms().end(), [&](const auto& kv) { return kv.first[v] > 0; });
    if (divides) out.push_back(v);
  }
  return out;
}

CurveAtInfinity closure(const MultiPoly& f, const ClosureOptions& opt) {
  if (f.nvars() != 2) throw CurveError("a plane curve needs exactly two variables");
  if (f.is_zero()) throw CurveError("the zero polynomial does not define a curve");
  if (f.total_degree() < 1) throw CurveError("a nonzero constant does not define a curve");
  MultiPoly rep = repeated_part(f);
  if (rep.total_degree() > 0) throw CurveError("curve equation is not squarefree; repeated factor " + to_string(rep));
  if (!opt.allow_coordinate_lines) {
    auto lines = coordinate_line_factors(f);
    if (!lines.empty())
      throw CurveError("component {" + f.vars()[lines.front()] +
                       "=0} is a coordinate line; pass allow_coordinate_lines or use a shear");
  }
  CurveAtInfinity out;
  out.affine = f;
  out.closure = homogenize(f);
  const long d = out.closure.degree;
  // f(b) = F_d(1, b).
  std::vector<Rational> coeffs(static_cast<std::size_t>(d + 1));
  const MultiPoly fd = f.homogeneous_part(d);
  for (const auto& [e, c] : fd.terms()) coeffs[e[1]] += c;
  QPoly top(std::move(coeffs));

  for (auto [k, factor] : [&] {
         std::vector<std::pair<long, QPoly>> v;
         auto parts = squarefree_decomposition(top);
         for (std::size_t i = 0; i < parts.size(); ++i)
           if (parts[i].degree() >= 1) v.emplace_back(static_cast<long>(i + 1), parts[i]);
         return v;
       }()) {
    std::vector<FieldElem> kc(factor.coeffs().begin(), factor.coeffs().end());
    for (const auto& r : adjoin_roots(KPoly(std::move(kc)), nullptr, opt.field_degree_cap))
      out.points.push_back({ProjPoint{FieldElem(0), FieldElem(1), r.root}, k});
  }
  std::sort(out.points.begin(), out.points.end(), [](const PointAtInfinity& a, const PointAtInfinity& b) {
    const FieldElem& u = a.point.y;
    const FieldElem& v = b.point.y;
    if (u.is_rational() && v.is_rational()) return u.rational() < v.rational();
    if (u.is_rational() != v.is_rational()) return u.is_rational();
    auto cu = approx(u), cv = approx(v);
    if (cu.real() != cv.real()) return cu.real() < cv.real();
    return cu.imag() < cv.imag();
  });
  long at_y = d - top.degree();
  if (at_y > 0) out.points.push_back({ProjPoint{FieldElem(0), FieldElem(0), FieldElem(1)}, at_y});
  return out;
}

void LocalPoly::add(long i, long j, const FieldElem& c) {
  if (c.is_rational() && c.rational().is_zero()) return;
  auto [it, inserted] = terms.emplace(std::make_pair(i, j), c);
  if (!inserted) {
    it->second = it->second + c;
    if (lelong::is_zero(it->second)) terms.erase(it);
  }
}

FieldPtr LocalPoly::field() const {
  for (const auto& [k, c] : terms)
    if (c.field()) return c.field();
  return nullptr;
}

long LocalPoly::order_at_zero() const {
  long best = -1;
  for (const auto& [k, c] : terms)
    if (k.first == 0 && (best < 0 || k.second < best)) best = k.second;
  return best;
}

namespace {

std::vector<FieldElem> binomial_powers(const FieldElem& center, long e) {
  // Coefficients of (center + w)^e.
  std::vector<FieldElem> out(static_cast<std::size_t>(e + 1));
  Integer binom = 1;
  FieldElem cp(1);
  std::vector<FieldElem> cpow(static_cast<std::size_t>(e + 1));
  for (long k = 0; k <= e; ++k) {
    cpow[static_cast<std::size_t>(k)] = cp;
    cp = cp * center;
  }
  for (long k = 0; k <= e; ++k) {
    out[static_cast<std::size_t>(k)] = FieldElem(Rational(binom)) * cpow[static_cast<std::size_t>(e - k)];
    binom = binom * (e - k) / (k + 1);
  }
  return out;
}

}  // namespace

LocalEquation local_equation(const HomogPoly& closure, const ProjPoint& p, Chart chart) {
  if (!in_chart(p, chart)) throw std::invalid_argument("point " + to_string(p) + " is not in chart " + to_string(chart));
  if (closure.poly.nvars() != 3) throw std::invalid_argument("closure must be in (t, x, y)");
  LocalEquation out;
  out.point = p;
  out.chart = chart;
  // Normalised so the chart coordinate is 1.
  out.center = chart == Chart::X1 ? p.y / p.x : p.x / p.y;
  FieldElem t0 = chart == Chart::X1 ? p.t / p.x : p.t / p.y;
  if (!is_zero(t0)) throw std::invalid_argument("local equations are only built at points at infinity");
  const std::size_t wvar = chart == Chart::X1 ? 2 : 1;
  std::map<long, std::vector<FieldElem>> cache;
  for (const auto& [e, c] : closure.poly.terms()) {
    long k = e[wvar];
    auto it = cache.find(k);
    if (it == cache.end()) it = cache.emplace(k, binomial_powers(out.center, k)).first;
    for (long j = 0; j <= k; ++j) out.poly.add(e[0], j, FieldElem(c) * it->second[static_cast<std::size_t>(j)]);
  }
  return out;
}

MultiPoly chart_local_equation(const CurveAtInfinity& c, const ProjPoint& p, Chart chart) {
  LocalEquation le = local_equation(c.closure, p, chart);
  MultiPoly out({"t", chart == Chart::X1 ? "y" : "x"});
  for (const auto& [k, v] : le.poly.terms) {
    if (!v.is_rational()) throw std::invalid_argument("point has irrational coordinates; use local_equation");
    out.add_term({static_cast<unsigned>(k.first), static_cast<unsigned>(k.second)}, v.rational());
  }
  return out;
}

MultiPoly apply(const LinearChange& m, const MultiPoly& p) {
  if (m.det().is_zero()) throw std::invalid_argument("singular linear change");
  const auto& v = p.vars();
  MultiPoly x = MultiPoly::variable(v, 0), y = MultiPoly::variable(v, 1);
  MultiPoly one(v, Rational(1));
  return substitute(p, {{v[0], m.a * x + m.b * y + m.e * one}, {v[1], m.c * x + m.d * y + m.f * one}});
}

LinearChange random_linear_change(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(-3, 3);
  for (;;) {
    LinearChange m{dist(rng), dist(rng), dist(rng), dist(rng)};
    if (!m.det().is_zero()) return m;
  }
}

LinearChange random_affine_change(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
  auto q = [&] { return Rational(num(rng)) / den(rng); };
  for (;;) {
    LinearChange m{q(), q(), q(), q(), q(), q()};
    if (!m.det().is_zero()) return m;
  }
}

}  // namespace lelong
