#include "lelong/puiseux.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace lelong {

struct PuiseuxBranch::Leaf {
  LocalPoly g;       // leaf equation in (s, v), ord_v G(0, v) = 1
  Series prefix;     // W = prefix + s^shift * v(s)
  long shift = 0;
};

namespace {

std::vector<std::pair<long, long>> lower_hull_path(std::vector<std::pair<long, long>> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  std::vector<std::pair<long, long>> path;
  if (pts.empty()) return path;
  long jmin = pts.front().second;
  for (const auto& p : pts) jmin = std::min(jmin, p.second);
  // Start: smallest t-exponent, lowest w-exponent among those.
  auto cur = pts.front();
  path.push_back(cur);
  while (cur.second > jmin) {
    const std::pair<long, long>* best = nullptr;
    Rational best_slope;
    for (const auto& p : pts) {
      if (p.second >= cur.second || p.first < cur.first) continue;
      Rational s(p.first - cur.first, cur.second - p.second);
      if (!best || s < best_slope || (s == best_slope && p.second < best->second)) {
        best = &p;
        best_slope = s;
      }
    }
    if (!best) break;
    cur = *best;
    path.push_back(cur);
  }
  return path;
}

NewtonPolygon polygon_from_support(std::vector<std::pair<long, long>> support) {
  NewtonPolygon np;
  std::sort(support.begin(), support.end());
  np.support = support;
  auto path = lower_hull_path(support);
  for (std::size_t k = 1; k < path.size(); ++k) {
    HullSegment seg;
    seg.i1 = path[k - 1].first;
    seg.j1 = path[k - 1].second;
    seg.i2 = path[k].first;
    seg.j2 = path[k].second;
    long num = seg.i2 - seg.i1, den = seg.j1 - seg.j2;
    long g = std::gcd(num, den);
    seg.p = num / g;
    seg.q = den / g;
    for (const auto& pt : support) {
      // On the edge: q*i + p*j equals the edge value.
      if (seg.q * pt.first + seg.p * pt.second == seg.q * seg.i1 + seg.p * seg.j1 && pt.second <= seg.j1 &&
          pt.second >= seg.j2)
        seg.points.push_back(pt);
    }
    np.segments.push_back(std::move(seg));
  }
  return np;
}

}  // namespace

NewtonPolygon newton_polygon(const LocalPoly& g) {
  if (g.is_zero()) throw std::invalid_argument("Newton polygon of the zero polynomial");
  if (g.terms.count({0, 0})) throw std::invalid_argument("local equation does not vanish at the origin");
  std::vector<std::pair<long, long>> support;
  for (const auto& [k, c] : g.terms) support.push_back(k);
  return polygon_from_support(std::move(support));
}

NewtonPolygon newton_polygon(const MultiPoly& g) {
  if (g.nvars() != 2) throw std::invalid_argument("local equation must have two variables");
  LocalPoly lp;
  for (const auto& [e, c] : g.terms()) lp.add(e[0], e[1], FieldElem(c));
  return newton_polygon(lp);
}

std::string to_string(const TangentLine& l) {
  std::string out;
  auto term = [&](const FieldElem& c, const std::string& v) {
    if (c.is_rational() && c.rational().is_zero()) return;
    std::string s;
    if (c.is_rational()) {
      const Rational& q = c.rational();
      Rational a = abs(q);
      s = q < 0 ? "-" : (out.empty() ? "" : "+");
      if (a != 1) s += to_string(a) + (denominator(a) == 1 ? "" : "*");
    } else {
      s = (out.empty() ? "" : "+") + std::string("(") + to_string(c) + ")*";
    }
    out += s + v;
  };
  term(l.cy, "y");
  term(l.cx, "x");
  term(l.ct, "t");
  return out + "=0";
}

long PuiseuxBranch::leading_exponent() const {
  for (std::size_t k = 0; k < w.size(); ++k)
    if (!is_zero(w[k])) return static_cast<long>(k);
  return -1;
}

FieldPtr PuiseuxBranch::field() const {
  for (const auto& c : w)
    if (c.field()) return c.field();
  return center.field();
}

Series PuiseuxBranch::chart_x() const {
  if (chart == Chart::X1) return {FieldElem(1)};
  Series s = w;
  if (s.empty()) s.resize(1);
  s[0] = s[0] + center;
  return s;
}

Series PuiseuxBranch::chart_y() const {
  if (chart == Chart::Y1) return {FieldElem(1)};
  Series s = w;
  if (s.empty()) s.resize(1);
  s[0] = s[0] + center;
  return s;
}

Series series_mul(const Series& a, const Series& b, std::size_t len) {
  Series out(std::min(len, a.size() + b.size() - (a.empty() || b.empty() ? 0 : 1)));
  for (std::size_t i = 0; i < a.size() && i < len; ++i) {
    if (a[i].is_rational() && a[i].rational().is_zero()) continue;
    for (std::size_t j = 0; j < b.size() && i + j < len; ++j) out[i + j] = out[i + j] + a[i] * b[j];
  }
  return out;
}

namespace {

LocalPoly map_poly(const LocalPoly& g, const Embedding& e) {
  LocalPoly out;
  for (const auto& [k, c] : g.terms) out.terms.emplace(k, e(c));
  return out;
}

Series map_series(const Series& s, const Embedding& e) {
  Series out;
  for (const auto& c : s) out.push_back(e(c));
  return out;
}

// G(s^q, s^p (c + w)) / s^beta.
LocalPoly edge_substitute(const LocalPoly& g, long p, long q, const FieldElem& c, long beta) {
  long jmax = 0;
  for (const auto& [k, v] : g.terms) jmax = std::max(jmax, k.second);
  std::vector<FieldElem> cpow(static_cast<std::size_t>(jmax + 1));
  cpow[0] = FieldElem(1);
  for (long k = 1; k <= jmax; ++k) cpow[static_cast<std::size_t>(k)] = cpow[static_cast<std::size_t>(k - 1)] * c;
  LocalPoly out;
  for (const auto& [k, a] : g.terms) {
    auto [i, j] = k;
    long base = q * i + p * j - beta;
    if (base < 0) throw std::logic_error("edge substitution below the Newton polygon");
    Integer binom = 1;
    for (long m = 0; m <= j; ++m) {
      out.add(base, m, a * FieldElem(Rational(binom)) * cpow[static_cast<std::size_t>(j - m)]);
      binom = binom * (j - m) / (m + 1);
    }
  }
  return out;
}

// Coefficients b_1..b_count of the unique v(s) = O(s) with G(s, v) = 0.
Series leaf_series(const LocalPoly& g, long count) {
  FieldElem gw = g.terms.at({0, 1});
  long jmax = 0;
  for (const auto& [k, v] : g.terms) jmax = std::max(jmax, k.second);
  // powers[j][m] = [s^m] v^j for j >= 1, over the coefficients found so far.
  std::vector<Series> powers(static_cast<std::size_t>(jmax + 1), Series(static_cast<std::size_t>(count + 1)));
  Series b(static_cast<std::size_t>(count + 1));
  for (long n = 1; n <= count; ++n) {
    for (long j = 2; j <= jmax; ++j) {
      FieldElem acc(0);
      for (long k = 1; k < n; ++k) {
        const FieldElem& bk = b[static_cast<std::size_t>(k)];
        if (bk.is_rational() && bk.rational().is_zero()) continue;
        acc = acc + bk * powers[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(n - k)];
      }
      powers[static_cast<std::size_t>(j)][static_cast<std::size_t>(n)] = acc;
    }
    FieldElem rhs(0);
    for (const auto& [key, a] : g.terms) {
      auto [i, j] = key;
      long m = n - i;
      if (m < 0) continue;
      if (j == 0) {
        if (m == 0) rhs = rhs + a;
      } else if (j == 1) {
        if (i >= 1 && m >= 1) rhs = rhs + a * b[static_cast<std::size_t>(m)];
      } else if (m >= 1) {
        rhs = rhs + a * powers[static_cast<std::size_t>(j)][static_cast<std::size_t>(m)];
      }
    }
    b[static_cast<std::size_t>(n)] = -rhs / gw;
    powers[1][static_cast<std::size_t>(n)] = b[static_cast<std::size_t>(n)];
  }
  return b;
}

struct RawBranch {
  FieldPtr field;
  Embedding embed;  // point field -> branch field
  Series w;
  long ramification = 1;
  long order = 0;
  bool exact = false;
  std::shared_ptr<PuiseuxBranch::Leaf> leaf;
};

long ceil_long(const Rational& q) { return static_cast<long>(ceil(q)); }

class Expander {
 public:
  Expander(const Rational& order, const PuiseuxOptions& opt) : order_(order), opt_(opt) {}

  void run(const LocalPoly& g, const FieldPtr& field, const Embedding& embed, Series prefix, long shift, long ram,
           long mult) {
    if (mult == 1) {
      leaf(g, field, embed, std::move(prefix), shift, ram);
      return;
    }
    LocalPoly cur = g;
    long jmin = -1;
    for (const auto& [k, c] : cur.terms) jmin = jmin < 0 ? k.second : std::min(jmin, k.second);
    if (jmin >= 2) throw std::invalid_argument("local equation is not squarefree");
    if (jmin == 1) {
      RawBranch rb{field, embed, prefix, ram, 0, true, nullptr};
      rb.order = std::max(needed(ram), static_cast<long>(prefix.size()) - 1);
      rb.w.resize(static_cast<std::size_t>(rb.order + 1));
      out.push_back(std::move(rb));
      LocalPoly divided;
      for (const auto& [k, c] : cur.terms) divided.terms.emplace(std::make_pair(k.first, k.second - 1), c);
      cur = std::move(divided);
    }
    NewtonPolygon np = newton_polygon_any(cur);
    for (const auto& seg : np.segments) {
      std::vector<FieldElem> coeffs(static_cast<std::size_t>((seg.j1 - seg.j2) / seg.q + 1));
      for (const auto& pt : seg.points) coeffs[static_cast<std::size_t>((pt.second - seg.j2) / seg.q)] = cur.terms.at(pt);
      KPoly phi(std::move(coeffs));
      const long beta = seg.q * seg.i1 + seg.p * seg.j1;
      for (const auto& ur : adjoin_roots(phi, field, opt_.degree_cap)) {
        FieldElem c = ur.root;
        FieldPtr f2 = ur.field;
        Embedding total = ur.embed;
        if (seg.q > 1) {
          std::vector<FieldElem> zq(static_cast<std::size_t>(seg.q + 1));
          zq[0] = -ur.root;
          zq.back() = FieldElem(1);
          auto cr = adjoin_roots(KPoly(std::move(zq)), ur.field, opt_.degree_cap, true);
          c = cr.front().root;
          f2 = cr.front().field;
          total = compose(ur.embed, cr.front().embed);
        }
        LocalPoly g1 = edge_substitute(map_poly(cur, total), seg.p, seg.q, c, beta);
        long r = g1.order_at_zero();
        Series next;
        Series mapped = map_series(prefix, total);
        for (std::size_t k = 0; k < mapped.size(); ++k) {
          std::size_t at = k * static_cast<std::size_t>(seg.q);
          if (next.size() <= at) next.resize(at + 1);
          next[at] = mapped[k];
        }
        long nshift = shift * seg.q + seg.p;
        if (static_cast<long>(next.size()) <= nshift) next.resize(static_cast<std::size_t>(nshift + 1));
        next[static_cast<std::size_t>(nshift)] = next[static_cast<std::size_t>(nshift)] + c;
        run(g1, f2, compose(embed, total), std::move(next), nshift, ram * seg.q, r);
      }
    }
  }

  std::vector<RawBranch> out;

 private:
  static NewtonPolygon newton_polygon_any(const LocalPoly& g) {
    std::vector<std::pair<long, long>> support;
    for (const auto& [k, c] : g.terms) support.push_back(k);
    return polygon_from_support(std::move(support));
  }

  long needed(long ram) const {
    long n = ceil_long(order_ * ram);
    if (n > opt_.trunc_cap)
      throw TruncationError("branch needs " + std::to_string(n) + " terms; truncation cap is " +
                            std::to_string(opt_.trunc_cap));
    return n;
  }

  void leaf(const LocalPoly& g, const FieldPtr& field, const Embedding& embed, Series prefix, long shift, long ram) {
    RawBranch rb{field, embed, std::move(prefix), ram, 0, false, nullptr};
    long n = std::max(needed(ram), shift + 1);
    rb.order = n;
    bool has_const = false;
    for (const auto& [k, c] : g.terms) has_const = has_const || k.second == 0;
    rb.w.resize(static_cast<std::size_t>(std::max<long>(n + 1, static_cast<long>(rb.w.size()))));
    if (!has_const) {
      rb.exact = true;
    } else {
      Series v = leaf_series(g, n - shift);
      for (long k = 1; k <= n - shift; ++k)
        rb.w[static_cast<std::size_t>(shift + k)] = rb.w[static_cast<std::size_t>(shift + k)] + v[static_cast<std::size_t>(k)];
      auto lf = std::make_shared<PuiseuxBranch::Leaf>();
      lf->g = g;
      lf->shift = shift;
      lf->prefix = rb.w;
      lf->prefix.resize(static_cast<std::size_t>(shift + 1));
      rb.leaf = lf;
    }
    out.push_back(std::move(rb));
  }

  Rational order_;
  PuiseuxOptions opt_;
};

TangentLine tangent_of(const PuiseuxBranch& b) {
  long k = b.leading_exponent();
  long e = b.ramification;
  FieldElem zero(0), one(1);
  FieldElem c = (k == e) ? b.w[static_cast<std::size_t>(k)] : zero;
  bool along_t = k < 0 || k > e;
  bool along_w = k >= 0 && k < e;
  if (along_w) return {one, zero, zero};
  FieldElem ct = along_t ? zero : -c;
  if (b.chart == Chart::X1) return {ct, -b.center, one};
  return {ct, one, -b.center};
}

}  // namespace

GermDecomposition puiseux_branches(const LocalEquation& eq, const Rational& order, const PuiseuxOptions& opt) {
  long m0 = eq.poly.order_at_zero();
  if (m0 < 0) throw std::invalid_argument("local equation vanishes identically on t = 0");
  if (m0 == 0) throw std::invalid_argument("point is not on the curve");
  Expander ex(order, opt);
  FieldPtr base = eq.poly.field();
  if (!base) base = eq.center.field();
  Embedding id{base, base, QPoly::x()};
  ex.run(eq.poly, base, id, Series{}, 0, 1, m0);

  GermDecomposition out;
  out.point = eq.point;
  out.chart = eq.chart;
  out.local_degree = m0;
  for (auto& rb : ex.out) {
    PuiseuxBranch b;
    b.point = eq.point;
    b.chart = eq.chart;
    b.center = rb.embed(eq.center);
    b.ramification = rb.ramification;
    b.w = std::move(rb.w);
    b.order = rb.order;
    b.exact = rb.exact;
    b.leaf = rb.leaf;
    b.tangent = tangent_of(b);
    long k = b.leading_exponent();
    b.smooth = b.ramification == 1 || k == 1;
    out.series_count += b.ramification;
    out.branches.push_back(std::move(b));
  }
  // Descending leading t-exponent (W = 0 first), then leading coefficient.
  auto key = [](const PuiseuxBranch& b) {
    long k = b.leading_exponent();
    return k < 0 ? std::optional<Rational>() : std::optional<Rational>(Rational(k, b.ramification));
  };
  std::stable_sort(out.branches.begin(), out.branches.end(), [&](const PuiseuxBranch& a, const PuiseuxBranch& b) {
    auto ka = key(a), kb = key(b);
    if (!ka || !kb) return !ka && kb.has_value();
    if (*ka != *kb) return *ka > *kb;
    auto ca = approx(a.w[static_cast<std::size_t>(a.leading_exponent())]);
    auto cb = approx(b.w[static_cast<std::size_t>(b.leading_exponent())]);
    if (ca.real() != cb.real()) return ca.real() < cb.real();
    return ca.imag() < cb.imag();
  });
  for (std::size_t i = 0; i < out.branches.size(); ++i) out.branches[i].id = static_cast<long>(i);
  return out;
}

void extend_branch(PuiseuxBranch& b, long order, const PuiseuxOptions& opt) {
  if (order <= b.order) return;
  if (order > opt.trunc_cap)
    throw TruncationError("branch needs " + std::to_string(order) + " terms; truncation cap is " +
                          std::to_string(opt.trunc_cap));
  if (b.exact || !b.leaf) {
    b.w.resize(static_cast<std::size_t>(order + 1));
    b.order = order;
    return;
  }
  const auto& lf = *b.leaf;
  Series v = leaf_series(lf.g, order - lf.shift);
  Series w = lf.prefix;
  w.resize(static_cast<std::size_t>(order + 1));
  for (long k = 1; k <= order - lf.shift; ++k)
    w[static_cast<std::size_t>(lf.shift + k)] = w[static_cast<std::size_t>(lf.shift + k)] + v[static_cast<std::size_t>(k)];
  b.w = std::move(w);
  b.order = order;
}

namespace {

using CLD = std::complex<long double>;

CLD horner(const std::vector<CLD>& c, CLD s) {
  CLD acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * s + *it;
  return acc;
}

std::vector<CLD> approx_series(const Series& s) {
  std::vector<CLD> out;
  for (const auto& c : s) {
    auto z = approx(c);
    out.emplace_back(z.real(), z.imag());
  }
  return out;
}

}  // namespace

std::pair<CLD, CLD> branch_affine(const PuiseuxBranch& b, CLD s) {
  CLD t = std::pow(s, static_cast<long double>(b.ramification));
  CLD xh = horner(approx_series(b.chart_x()), s);
  CLD yh = horner(approx_series(b.chart_y()), s);
  return {xh / t, yh / t};
}

std::vector<AffinePoint> branch_points(const PuiseuxBranch& b, const MultiPoly& f, const std::vector<double>& t_values) {
  std::vector<CLD> wc = approx_series(b.w);
  long lead = b.leading_exponent();
  long last = -1;
  for (long k = static_cast<long>(wc.size()) - 1; k >= 0; --k)
    if (std::abs(wc[static_cast<std::size_t>(k)]) != 0) {
      last = k;
      break;
    }
  std::vector<AffinePoint> out;
  for (double tv : t_values) {
    if (!(tv > 0)) throw std::invalid_argument("parameter magnitudes must be positive");
    long double s = std::pow(static_cast<long double>(tv), 1.0L / static_cast<long double>(b.ramification));
    if (!b.exact && lead >= 0 && last > lead) {
      long double ratio = std::abs(wc[static_cast<std::size_t>(last)]) * std::pow(s, static_cast<long double>(last)) /
                          (std::abs(wc[static_cast<std::size_t>(lead)]) * std::pow(s, static_cast<long double>(lead)));
      if (ratio > 1e-3L)
        throw std::runtime_error("parameter " + std::to_string(tv) + " is outside the series' heuristic radius");
    }
    auto [x, y] = branch_affine(b, CLD(s, 0));
    std::vector<CLD> pt{x, y};
    AffinePoint ap;
    ap.x = {static_cast<double>(x.real()), static_cast<double>(x.imag())};
    ap.y = {static_cast<double>(y.real()), static_cast<double>(y.imag())};
    ap.residual = static_cast<double>(std::abs(f.eval(pt)));
    double scale = f.max_term_abs(pt);
    ap.relative_residual = scale > 0 ? ap.residual / scale : ap.residual;
    out.push_back(ap);
  }
  return out;
}

}  // namespace lelong
