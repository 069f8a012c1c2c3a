#include "lelong/report.hpp"

#include <sstream>

namespace lelong {

std::string decimal_outward(const Rational& q, int digits, bool up) {
  Integer scale = boost::multiprecision::pow(Integer(10), static_cast<unsigned>(digits));
  Integer n = up ? ceil(q * Rational(scale)) : floor(q * Rational(scale));
  bool neg = n < 0;
  std::string s = (neg ? -n : n).str();
  if (static_cast<int>(s.size()) <= digits) s = std::string(static_cast<std::size_t>(digits) + 1 - s.size(), '0') + s;
  s.insert(s.size() - static_cast<std::size_t>(digits), ".");
  return (neg ? "-" : "") + s;
}

std::vector<std::string> enclosure_strings(const std::optional<Interval>& i, int digits) {
  if (!i) return {};
  return {decimal_outward(i->lo, digits, false), decimal_outward(i->hi, digits, true)};
}

VerdictDoc make_doc(const Verdict& v) {
  VerdictDoc d;
  d.status = to_string(v.status);
  for (const auto& p : v.points) {
    PointDoc pd;
    pd.point = to_string(p.point);
    pd.chart = to_string(p.chart);
    pd.multiplicity = p.multiplicity;
    pd.series = p.series_count;
    pd.all_neg_inf = p.all_neg_inf;
    for (const auto& b : p.branches)
      pd.branches.push_back({b.id, b.ramification, b.tangent, b.leading, to_string(b.value),
                             enclosure_strings(b.enclosure), b.smooth});
    d.points.push_back(std::move(pd));
  }
  auto pair = [&](const PairReport& r) {
    return PairDoc{to_string(v.points[r.point].point), r.first, r.second, to_string(r.comparison.relation),
                   enclosure_strings(r.comparison.left), enclosure_strings(r.comparison.right)};
  };
  if (v.witness) d.witness.push_back(pair(*v.witness));
  if (v.near_tie) d.near_tie.push_back(pair(*v.near_tie));
  return d;
}

ClosureDoc make_doc(const CurveAtInfinity& c) {
  ClosureDoc d{to_string(c.affine), to_string(c.closure.poly), {}};
  for (const auto& p : c.points) d.points.push_back({to_string(p.point), p.multiplicity});
  return d;
}

GermDoc make_doc(const GermDecomposition& g) {
  GermDoc d{to_string(g.point), to_string(g.chart), g.series_count, g.local_degree, {}};
  for (const auto& b : g.branches)
    d.branches.push_back({b.id, b.ramification, to_string(b.tangent), leading_terms(b), "", {}, b.smooth});
  return d;
}

ScheduleDoc make_doc(const GrowthSchedule& s, const SupCertificate& cert) {
  ScheduleDoc d;
  d.c = to_string(s.c);
  d.terms = s.length();
  for (long j = 0; j <= s.length(); ++j) {
    const auto k = static_cast<std::size_t>(j);
    d.rows.push_back({j, to_string(s.m[k]), to_string(s.gamma[k]), to_decimal(s.gamma[k], 15),
                      j == 0 ? std::string() : to_string(s.a[k]), to_string(s.x(j))});
  }
  d.certificate = {cert.ok,
                   cert.last_below_c,
                   cert.products_ok,
                   cert.tail_ok,
                   decimal_outward(cert.tail_bound, 20, true),
                   cert.failing_index,
                   cert.message};
  return d;
}

namespace {

std::string ld(long double v) {
  std::ostringstream o;
  o.precision(17);
  o << static_cast<double>(v);
  return o.str();
}

std::string interval_text(const std::vector<std::string>& e) {
  return e.empty() ? "-inf" : "[" + e[0] + ", " + e[1] + "]";
}

}  // namespace

SampleDoc make_doc(const ConvergenceReport& r, const std::string& point, char pivot, const ExtendedValue& value) {
  SampleDoc d;
  d.point = point;
  d.branch = r.branch_id;
  d.pivot = std::string(1, pivot);
  d.value = to_string(value);
  d.trend = to_string(r.trend);
  d.enclosure = enclosure_strings(r.target);
  for (std::size_t i = 0; i < r.samples.size(); ++i) {
    const auto& s = r.samples[i];
    d.rows.push_back({s.radius, ld(s.value), ld(r.errors[i]), ld(s.max_residual), s.used, s.skipped});
  }
  return d;
}

std::string render(const VerdictDoc& d) {
  std::ostringstream o;
  o << "status: " << d.status << "\n";
  for (const auto& p : d.points) {
    o << "point " << p.point << " (chart " << p.chart << ", multiplicity " << p.multiplicity << ", " << p.series
      << " series, " << p.branches.size() << (p.branches.size() == 1 ? " component)" : " components)") << (p.all_neg_inf ? " all values -inf" : "") << "\n";
    for (const auto& b : p.branches)
      o << "  branch " << b.id << ": " << b.leading << "; tangent " << b.tangent << "; value " << b.value << " in "
        << interval_text(b.enclosure) << "\n";
  }
  for (const auto& w : d.witness)
    o << "witness: " << w.point << " branches " << w.first << " and " << w.second << " " << w.relation << " "
      << interval_text(w.left) << " vs " << interval_text(w.right) << "\n";
  for (const auto& w : d.near_tie)
    o << "near tie: " << w.point << " branches " << w.first << " and " << w.second << " " << interval_text(w.left)
      << " vs " << interval_text(w.right) << "\n";
  return o.str();
}

std::string render(const ClosureDoc& d) {
  std::ostringstream o;
  o << "curve: " << d.curve << "\nclosure: " << d.closure << "\n";
  for (const auto& p : d.points) o << "point " << p.point << " multiplicity " << p.multiplicity << "\n";
  return o.str();
}

std::string render(const GermDoc& d) {
  std::ostringstream o;
  o << "point " << d.point << " (chart " << d.chart << "): " << d.series << " series, " << d.branches.size()
    << (d.branches.size() == 1 ? " component\n" : " components\n");
  for (const auto& b : d.branches)
    o << "  branch " << b.id << ": " << b.leading << "; tangent " << b.tangent << (b.smooth ? "; smooth" : "; singular")
      << "\n";
  return o.str();
}

std::string render(const SampleDoc& d) {
  std::ostringstream o;
  o << "point " << d.point << " branch " << d.branch << " (radii in |" << d.pivot << "|), symbolic value " << d.value
    << " in " << interval_text(d.enclosure) << "\n";
  o << "radius\tmax(eta-rho)\terror\tresidual\n";
  for (const auto& r : d.rows) o << r.radius << '\t' << r.value << '\t' << r.error << '\t' << r.residual << "\n";
  o << "trend: " << d.trend << "\n";
  return o.str();
}

}  // namespace lelong
