// lelong: command-line front end.
#include "lelong/problem.hpp"
#include "lelong/report.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace lelong;
using nlohmann::json;

namespace {

const std::vector<std::string> kVars{"x", "y"};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  bool json = false;
  std::string tol;
  long trunc_cap = 0;
  long shear = -1;
  int phases = 0;
  bool allow_lines = false;
};

template <class Doc>
void emit(const Common& c, const Doc& d, const std::string& text) {
  if (c.json) std::cout << json(d).dump(2) << "\n";
  else std::cout << text;
}

// Parse errors inside a problem file mention the line.
template <class F>
auto in_file(const ProblemFile& p, const std::string& key, F&& f) {
  try {
    return f();
  } catch (const ParseError& e) {
    auto it = p.entries.find(key);
    int line = it == p.entries.end() ? 0 : it->second.second;
    throw UsageError((line ? "line " + std::to_string(line) + ", " : std::string()) + key + ": " + e.what());
  }
}

struct Loaded {
  ProblemFile file;
  MultiPoly curve;
  GrowthFunction eta;
  bool has_eta = false;
  CheckOptions opt;
};

Loaded load(const std::string& path, const Common& c) {
  Loaded l;
  try {
    l.file = load_problem(path);
  } catch (const ProblemError& e) {
    throw UsageError(path + ": " + e.what());
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  l.curve = in_file(l.file, "curve", [&] { return parse_poly(l.file.curve, kVars); });
  if (!l.file.eta.empty()) {
    l.eta = in_file(l.file, "eta", [&] { return parse_growth(l.file.eta, kVars); });
    l.has_eta = true;
  }
  l.opt.closure.allow_coordinate_lines = c.allow_lines || l.file.allow_coordinate_lines;
  if (l.file.trunc_cap) l.opt.puiseux.trunc_cap = *l.file.trunc_cap;
  if (c.trunc_cap > 0) l.opt.puiseux.trunc_cap = c.trunc_cap;
  std::string tol = !c.tol.empty() ? c.tol : l.file.tol.value_or("");
  if (!tol.empty()) {
    Rational t;
    try {
      t = parse_rational(tol);
    } catch (const std::exception&) {
      throw UsageError("--tol expects a positive rational, got '" + tol + "'");
    }
    if (t <= 0) throw UsageError("--tol expects a positive rational");
    l.opt.target = t;
    if (l.opt.cap > t) l.opt.cap = t;
  }
  std::optional<std::uint64_t> seed = l.file.shear;
  if (c.shear >= 0) seed = static_cast<std::uint64_t>(c.shear);
  if (seed) {
    LinearChange m = random_linear_change(*seed);
    l.curve = apply(m, l.curve);
    if (l.has_eta) l.eta = apply(m, l.eta);
  }
  return l;
}

std::vector<GermDecomposition> germs(const Loaded& l, CurveAtInfinity& c) {
  c = closure(l.curve, l.opt.closure);
  return germs_at_infinity(c, Rational(2), l.opt.puiseux);
}

const GermDecomposition& pick_point(const std::vector<GermDecomposition>& g, const std::string& point) {
  if (point.empty()) {
    if (g.size() == 1) return g.front();
    throw UsageError("the curve has " + std::to_string(g.size()) + " points at infinity; choose one with --point");
  }
  ProjPoint p;
  try {
    p = parse_point(point);
  } catch (const std::exception& e) {
    throw UsageError(std::string("--point: ") + e.what());
  }
  for (const auto& d : g)
    if (same_point(d.point, p)) return d;
  throw UsageError("no point at infinity " + point);
}

std::vector<double> parse_radii(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("--radii expects comma-separated numbers, got '" + item + "'");
    }
  }
  if (out.empty()) throw UsageError("--radii is empty");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Extendability of logarithmic-growth functions on plane curves, and growth schedules"};
  app.require_subcommand(1);
  Common c;
  app.add_flag("--json", c.json, "machine-readable output");
  app.add_option("--tol", c.tol, "target enclosure width (rational)");
  app.add_option("--trunc-cap", c.trunc_cap, "maximum series order");
  app.add_option("--shear", c.shear, "seed of a random invertible linear change applied first");
  app.add_option("--phases", c.phases, "phases per radius for sample");
  app.add_flag("--allow-coordinate-lines", c.allow_lines, "accept components that are coordinate lines");

  std::string file, point, radii, eta_text, target, pivot;
  long branch = 0, e = 3, d = 0, terms = 0;
  std::string cval;
  bool plane = false;

  auto* closure_cmd = app.add_subcommand("closure", "points at infinity");
  closure_cmd->add_option("file", file, "problem file")->required();
  auto* branches_cmd = app.add_subcommand("branches", "germ decomposition at a point at infinity");
  branches_cmd->add_option("file", file, "problem file")->required();
  branches_cmd->add_option("--point", point, "e.g. 0:0:1 (all points when omitted)");
  auto* check_cmd = app.add_subcommand("check", "extendability verdict");
  check_cmd->add_option("file", file, "problem file")->required();
  auto* order_cmd = app.add_subcommand("order", "Lelong order of eta on the curve or on the plane");
  order_cmd->add_option("file", file, "problem file");
  order_cmd->add_flag("--plane", plane, "order on the whole plane");
  order_cmd->add_option("--eta", eta_text, "growth expression (with --plane)");
  auto* sched_cmd = app.add_subcommand("schedule", "growth schedule and certificate");
  sched_cmd->add_option("--c", cval, "target c > 1")->required();
  sched_cmd->add_option("--terms", terms, "length J")->required();
  auto* reduce_cmd = app.add_subcommand("reduce", "reduce a polynomial in y by x = y^e");
  reduce_cmd->add_option("--target", target, "polynomial in y")->required();
  reduce_cmd->add_option("--e", e, "exponent")->required();
  auto* interp_cmd = app.add_subcommand("interp", "is there Q of degree <= d with Q(y^e, y) = target?");
  interp_cmd->add_option("--target", target, "polynomial in y")->required();
  interp_cmd->add_option("--e", e, "exponent")->required();
  interp_cmd->add_option("--d", d, "degree bound")->required();
  auto* sample_cmd = app.add_subcommand("sample", "numeric check of a branch value");
  sample_cmd->add_option("file", file, "problem file")->required();
  sample_cmd->add_option("--point", point, "point at infinity");
  sample_cmd->add_option("--branch", branch, "branch id");
  sample_cmd->add_option("--radii", radii, "comma-separated |pivot| values")->required();
  sample_cmd->add_option("--pivot", pivot, "x or y");

  // Global options are accepted after the subcommand too.
  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    return app.exit(err) == 0 ? 0 : 1;
  }

  try {
    if (*closure_cmd) {
      Loaded l = load(file, c);
      auto doc = make_doc(closure(l.curve, l.opt.closure));
      emit(c, doc, render(doc));
      return 0;
    }
    if (*branches_cmd) {
      Loaded l = load(file, c);
      CurveAtInfinity cl;
      auto g = germs(l, cl);
      std::vector<GermDoc> docs;
      if (!point.empty()) docs.push_back(make_doc(pick_point(g, point)));
      else
        for (const auto& x : g) docs.push_back(make_doc(x));
      std::string text;
      for (const auto& x : docs) text += render(x);
      if (c.json) std::cout << json(docs).dump(2) << "\n";
      else std::cout << text;
      return 0;
    }
    if (*check_cmd) {
      Loaded l = load(file, c);
      if (!l.has_eta) throw UsageError(file + ": missing 'eta'");
      Verdict v = check_extendable(l.curve, l.eta, l.opt);
      auto doc = make_doc(v);
      emit(c, doc, render(doc));
      switch (v.status) {
        case Status::EXTENDABLE: return 0;
        case Status::OBSTRUCTED: return 3;
        case Status::INDETERMINATE: return 4;
      }
    }
    if (*order_cmd) {
      OrderDoc doc;
      if (plane) {
        if (eta_text.empty()) throw UsageError("order --plane needs --eta");
        GrowthFunction g;
        try {
          g = parse_growth(eta_text, kVars);
        } catch (const ParseError& err) {
          throw UsageError(std::string("--eta: ") + err.what());
        }
        if (!g.global) throw UsageError("per-factor expressions need a curve");
        doc = {"plane", to_string(plane_order(*g.global))};
      } else {
        if (file.empty()) throw UsageError("order needs a problem file or --plane");
        Loaded l = load(file, c);
        if (!l.has_eta) throw UsageError(file + ": missing 'eta'");
        doc = {"curve", to_string(lelong_order(l.curve, l.eta, l.opt))};
      }
      emit(c, doc, "order (" + doc.mode + "): " + doc.order + "\n");
      return 0;
    }
    if (*sched_cmd) {
      Rational cq;
      try {
        cq = parse_rational(cval);
      } catch (const std::exception&) {
        throw UsageError("--c expects a rational, got '" + cval + "'");
      }
      if (cq <= 1) throw UsageError("--c must exceed 1");
      if (terms < 1) throw UsageError("--terms must be at least 1");
      GrowthSchedule s = build_schedule(cq, terms);
      SupCertificate cert = certify_sup(s);
      emit(c, make_doc(s, cert), schedule_table(s, cert));
      return cert.ok ? 0 : 2;
    }
    if (*reduce_cmd || *interp_cmd) {
      if (e < 1) throw UsageError("--e must be positive");
      MultiPoly u;
      try {
        u = parse_poly(target, {"y"});
      } catch (const ParseError& err) {
        throw UsageError(std::string("--target: ") + err.what());
      }
      if (*reduce_cmd) {
        MultiPoly q = reduce_mod_relation(u, static_cast<unsigned>(e));
        MultiPoly back =
            substitute(q, {{"x", MultiPoly::variable({"y"}, 0).pow(static_cast<unsigned>(e))}, {"y", MultiPoly::variable({"y"}, 0)}});
        ReduceDoc doc{to_string(u), to_string(q), e, q.total_degree(), back == u};
        emit(c, doc,
             doc.result + "\ndegree " + std::to_string(doc.degree) + ", substitution x=y^" + std::to_string(e) +
                 (doc.substitutes_back ? " recovers the target\n" : " does NOT recover the target\n"));
        return 0;
      }
      if (d < 0) throw UsageError("--d must be nonnegative");
      InterpResult r = interp_exists(u, static_cast<unsigned>(e), static_cast<unsigned>(d));
      InterpDoc doc{to_string(u), e, d, r.feasible, r.solution ? to_string(*r.solution) : "",
                    r.certificate ? static_cast<long>(*r.certificate) : -1};
      std::string text = r.feasible ? "FEASIBLE: " + doc.solution + "\n"
                                    : "INFEASIBLE: y^" + std::to_string(doc.certificate) +
                                          " is not the image of any monomial of degree <= " + std::to_string(d) + "\n";
      emit(c, doc, text);
      return 0;
    }
    if (*sample_cmd) {
      Loaded l = load(file, c);
      if (!l.has_eta) throw UsageError(file + ": missing 'eta'");
      CurveAtInfinity cl;
      auto g = germs(l, cl);
      const GermDecomposition& gd = pick_point(g, point);
      if (branch < 0 || branch >= static_cast<long>(gd.branches.size()))
        throw UsageError("branch " + std::to_string(branch) + " does not exist at " + to_string(gd.point));
      PuiseuxBranch b = gd.branches[static_cast<std::size_t>(branch)];
      const GrowthExpr& ex = select_expr(l.eta, b, l.curve, l.opt.puiseux);
      ExtendedValue val = branch_value(ex, b, l.curve.total_degree(), l.opt.puiseux);
      SampleOptions so;
      if (c.phases > 0) so.phases = c.phases;
      else if (l.file.phases) so.phases = *l.file.phases;
      if (!pivot.empty()) {
        if (pivot != "x" && pivot != "y") throw UsageError("--pivot must be x or y");
        so.pivot = pivot[0];
      }
      auto pts = sample_curve(l.curve, b, parse_radii(radii), so);
      auto rep = empirical_value(ex, pts, val, b.id);
      auto doc = make_doc(rep, to_string(gd.point), sampling_pivot(b, so.pivot), val);
      emit(c, doc, render(doc));
      return 0;
    }
  } catch (const UsageError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 1;
  } catch (const ParseError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 1;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  }
  return 1;
}
