#pragma once

#include "lelong/criterion.hpp"
#include "lelong/oracle.hpp"
#include "lelong/schedule.hpp"

#include <json.hpp>

namespace lelong {

// Plain documents behind every --json output. Enclosures are [lo, hi]
// decimal strings rounded outward; an empty list stands for -inf.

/// Decimal string with `digits` fractional digits, rounded down or up.
std::string decimal_outward(const Rational& q, int digits, bool up);
std::vector<std::string> enclosure_strings(const std::optional<Interval>& i, int digits = 20);

struct BranchDoc {
  long id = 0;
  long ramification = 1;
  std::string tangent, leading, value;
  std::vector<std::string> enclosure;
  bool smooth = false;
};

struct PointDoc {
  std::string point, chart;
  long multiplicity = 0, series = 0;
  bool all_neg_inf = false;
  std::vector<BranchDoc> branches;
};

struct PairDoc {
  std::string point;
  long first = 0, second = 0;
  std::string relation;
  std::vector<std::string> left, right;
};

struct VerdictDoc {
  std::string status;
  std::vector<PointDoc> points;
  /// At most one entry each.
  std::vector<PairDoc> witness, near_tie;
};

struct ClosurePointDoc {
  std::string point;
  long multiplicity = 0;
};

struct ClosureDoc {
  std::string curve, closure;
  std::vector<ClosurePointDoc> points;
};

struct GermDoc {
  std::string point, chart;
  long series = 0, local_degree = 0;
  std::vector<BranchDoc> branches;
};

struct OrderDoc {
  std::string mode, order;
};

struct ScheduleRowDoc {
  long j = 0;
  std::string m, gamma, gamma_decimal, a, x;
};

struct CertificateDoc {
  bool ok = false, last_below_c = false, products_ok = false, tail_ok = false;
  std::string tail_bound;
  long failing_index = -1;
  std::string message;
};

struct ScheduleDoc {
  std::string c;
  long terms = 0;
  std::vector<ScheduleRowDoc> rows;
  CertificateDoc certificate;
};

struct ReduceDoc {
  std::string target, result;
  long e = 0, degree = 0;
  bool substitutes_back = false;
};

struct InterpDoc {
  std::string target;
  long e = 0, d = 0;
  bool feasible = false;
  std::string solution;
  long certificate = -1;
};

struct SampleRowDoc {
  double radius = 0;
  std::string value, error, residual;
  int used = 0, skipped = 0;
};

struct SampleDoc {
  std::string point;
  long branch = 0;
  std::string pivot, value, trend;
  std::vector<std::string> enclosure;
  std::vector<SampleRowDoc> rows;
};

NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(BranchDoc, id, ramification, tangent, leading, value, enclosure, smooth)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(PointDoc, point, chart, multiplicity, series, all_neg_inf, branches)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(PairDoc, point, first, second, relation, left, right)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(VerdictDoc, status, points, witness, near_tie)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(ClosurePointDoc, point, multiplicity)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(ClosureDoc, curve, closure, points)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(GermDoc, point, chart, series, local_degree, branches)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(OrderDoc, mode, order)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(ScheduleRowDoc, j, m, gamma, gamma_decimal, a, x)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(CertificateDoc, ok, last_below_c, products_ok, tail_ok, tail_bound, failing_index,
                                   message)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(ScheduleDoc, c, terms, rows, certificate)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(ReduceDoc, target, e, result, degree, substitutes_back)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(InterpDoc, target, e, d, feasible, solution, certificate)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(SampleRowDoc, radius, value, error, residual, used, skipped)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(SampleDoc, point, branch, pivot, value, trend, enclosure, rows)

VerdictDoc make_doc(const Verdict& v);
ClosureDoc make_doc(const CurveAtInfinity& c);
GermDoc make_doc(const GermDecomposition& g);
ScheduleDoc make_doc(const GrowthSchedule& s, const SupCertificate& cert);
SampleDoc make_doc(const ConvergenceReport& r, const std::string& point, char pivot, const ExtendedValue& value);

/// Human-readable layouts.
std::string render(const VerdictDoc& d);
std::string render(const ClosureDoc& d);
std::string render(const GermDoc& d);
std::string render(const SampleDoc& d);

}  // namespace lelong
