#include "lelong/schedule.hpp"

#include <algorithm>
#include <sstream>

namespace lelong {

namespace {

constexpr unsigned kLogBits = 256;
const Rational kZero(0);

Rational pow2(long j) { return Rational(Integer(1) << static_cast<unsigned>(j)); }

}  // namespace

const Rational& GrowthSchedule::m_at(long j) const {
  if (j < -1 || j > length()) throw ScheduleError("index " + std::to_string(j) + " outside the schedule");
  return j < 0 ? kZero : m[static_cast<std::size_t>(j)];
}

Rational GrowthSchedule::x(long j) const {
  const Rational& g = gamma.at(static_cast<std::size_t>(j));
  return (g - 1) * m_at(j) - g * m_at(j - 1) - j;
}

GrowthSchedule build_schedule(const Rational& c, long J) {
  if (c <= 1) throw ScheduleError("target c must exceed 1");
  if (J < 1) throw ScheduleError("length must be at least 1");
  GrowthSchedule s;
  s.c = c;
  s.log_c = log_enclosure(c, kLogBits);
  s.m = {Rational(0)};
  s.gamma = {Rational(1)};
  s.a = {Rational(0)};
  extend_schedule(s, J);
  return s;
}

void extend_schedule(GrowthSchedule& s, long J) {
  const Rational& L = s.log_c.lo;
  for (long j = s.length() + 1; j <= J; ++j) {
    const Rational& m1 = s.m_at(j - 1);
    const Rational& m2 = s.m_at(j - 2);
    Rational num = m1 - m2 + 1;
    // Least integer gap with num / gap <= L / 2^j.
    Integer gap = ceil(num * pow2(j) / L);
    if (gap < 1) gap = 1;
    Rational mj = m1 + Rational(gap);
    const Rational& g1 = s.gamma.back();
    s.gamma.push_back((g1 * (mj - m2) + 1) / (mj - m1));
    s.a.push_back(num / (mj - m1));
    s.m.push_back(std::move(mj));
  }
}

SupCertificate certify_sup(const GrowthSchedule& s) {
  SupCertificate cert;
  const long J = s.length();
  cert.products_ok = true;
  for (long j = 1; j <= J; ++j) {
    const auto k = static_cast<std::size_t>(j);
    if (s.gamma[k] > s.gamma[k - 1] * (1 + s.a[k]) || s.gamma[k] <= s.gamma[k - 1]) {
      cert.products_ok = false;
      cert.failing_index = j;
      cert.message = "gamma_" + std::to_string(j) + " breaks gamma_j <= gamma_{j-1}(1+a_j)";
      break;
    }
  }
  cert.last_below_c = s.gamma.back() < s.c;
  if (!cert.last_below_c && cert.failing_index < 0) {
    cert.failing_index = J;
    cert.message = "gamma_J >= c";
  }
  // sup_{j>J} gamma_j <= gamma_J exp(2^-J log c).
  Interval e = exp_enclosure(Rational(s.log_c.hi / pow2(J)), kLogBits);
  cert.tail_bound = s.gamma.back() * e.hi;
  cert.tail_ok = cert.tail_bound < s.c;
  if (!cert.tail_ok && cert.failing_index < 0) {
    cert.failing_index = J;
    cert.message = "tail bound gamma_J c^(2^-J) is not below c";
  }
  cert.ok = cert.products_ok && cert.last_below_c && cert.tail_ok;
  return cert;
}

Rational rho_j(const Rational& u, long j, const GrowthSchedule& s) {
  if (j < 0 || j > s.length()) throw ScheduleError("index " + std::to_string(j) + " outside the schedule");
  Rational d = u - s.m_at(j - 1);
  if (d < 0) d = 0;
  return s.gamma[static_cast<std::size_t>(j)] * d - j;
}

double rho_j(double u, long j, const GrowthSchedule& s) { return to_double(rho_j(from_double(u), j, s)); }

Rational envelope(const Rational& u, const GrowthSchedule& s) {
  if (u > s.m.back())
    throw ScheduleError("u = " + to_decimal(u, 6) + " exceeds m_J; build a longer schedule");
  if (u <= s.m_at(1)) return u > 0 ? s.gamma[1] * u : Rational(0);
  // First j with u <= m_j.
  auto it = std::lower_bound(s.m.begin() + 1, s.m.end(), u);
  return s.gamma[static_cast<std::size_t>(it - s.m.begin())] * u;
}

double envelope(double u, const GrowthSchedule& s) { return to_double(envelope(from_double(u), s)); }

DominationReport verify_rho_domination(const GrowthSchedule& s, const std::vector<Rational>& grid) {
  DominationReport r;
  for (long j = 0; j <= s.length(); ++j)
    for (const auto& u : grid) {
      if (u < s.m_at(j)) continue;
      ++r.checks;
      if (rho_j(u, j, s) < u) r.violations.emplace_back(j, u);
    }
  r.ok = r.violations.empty();
  return r;
}

std::string schedule_table(const GrowthSchedule& s, const SupCertificate& cert) {
  std::ostringstream out;
  out << "c = " << to_string(s.c) << ", J = " << s.length() << "\n";
  out << "j\tm_j\tgamma_j\tgamma_j~\ta_j\tx_j\n";
  for (long j = 0; j <= s.length(); ++j) {
    const auto k = static_cast<std::size_t>(j);
    out << j << '\t' << to_string(s.m[k]) << '\t' << to_string(s.gamma[k]) << '\t' << to_decimal(s.gamma[k], 15)
        << '\t' << (j == 0 ? std::string("-") : to_string(s.a[k])) << '\t' << to_string(s.x(j)) << "\n";
  }
  out << "certificate: " << (cert.ok ? "PASS" : "FAIL") << "\n";
  out << "  gamma_J < c: " << (cert.last_below_c ? "yes" : "no") << "\n";
  out << "  gamma_j <= gamma_{j-1}(1+a_j): " << (cert.products_ok ? "yes" : "no") << "\n";
  out << "  tail bound gamma_J*c^(2^-J) <= " << to_decimal(cert.tail_bound, 15) << (cert.tail_ok ? " < c" : " >= c")
      << "\n";
  if (!cert.message.empty()) out << "  failure at j=" << cert.failing_index << ": " << cert.message << "\n";
  return out.str();
}

}  // namespace lelong
