#pragma once

#include "lelong/rational.hpp"

#include <string>
#include <vector>

namespace lelong {

/// m_j, gamma_j, a_j for 0 <= j <= J with m_{-1} = m_0 = 0, gamma_0 = 1.
struct GrowthSchedule {
  Rational c;
  /// Certified enclosure of log c used to pick m_j.
  Interval log_c;
  std::vector<Rational> m, gamma, a;

  long length() const { return static_cast<long>(m.size()) - 1; }
  /// m_j for j >= -1.
  const Rational& m_at(long j) const;
  /// (gamma_j - 1) m_j - gamma_j m_{j-1} - j.
  Rational x(long j) const;
};

struct ScheduleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

GrowthSchedule build_schedule(const Rational& c, long J);
/// Appends terms until the schedule has length J.
void extend_schedule(GrowthSchedule& s, long J);

struct SupCertificate {
  bool ok = false;
  bool last_below_c = false;
  bool products_ok = false;
  bool tail_ok = false;
  /// Upper bound for gamma_J * c^(2^-J).
  Rational tail_bound;
  long failing_index = -1;
  std::string message;
};

SupCertificate certify_sup(const GrowthSchedule& s);

/// gamma_j max(u - m_{j-1}, 0) - j.
Rational rho_j(const Rational& u, long j, const GrowthSchedule& s);
double rho_j(double u, long j, const GrowthSchedule& s);

/// gamma_1 max(u, 0) for u <= m_1, gamma_j u on (m_{j-1}, m_j].
Rational envelope(const Rational& u, const GrowthSchedule& s);
double envelope(double u, const GrowthSchedule& s);

struct DominationReport {
  bool ok = true;
  long checks = 0;
  std::vector<std::pair<long, Rational>> violations;
};

/// rho_j(u) >= u for every grid u >= m_j and j <= J.
DominationReport verify_rho_domination(const GrowthSchedule& s, const std::vector<Rational>& grid);

/// Columns j, m_j, gamma_j, decimal gamma_j, a_j, x_j, then the certificate.
std::string schedule_table(const GrowthSchedule& s, const SupCertificate& cert);

}  // namespace lelong
