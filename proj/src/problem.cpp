#include "lelong/problem.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace lelong {

ProblemError::ProblemError(int l, const std::string& msg)
    : std::runtime_error("line " + std::to_string(l) + ": " + msg), line(l) {}

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

template <class T>
T number(const std::string& v, int line, const std::string& key) {
  std::istringstream in(v);
  T out{};
  if (!(in >> out) || !in.eof()) throw ProblemError(line, key + " expects an integer, got '" + v + "'");
  return out;
}

const std::set<std::string> kKeys{"curve", "eta", "tol", "trunc_cap", "shear", "phases", "allow_coordinate_lines",
                                  "point", "branch", "radii", "pivot"};

}  // namespace

ProblemFile parse_problem(const std::string& text) {
  ProblemFile p;
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    auto hash = raw.find('#');
    std::string s = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (s.empty()) continue;
    auto eq = s.find('=');
    if (eq == std::string::npos) throw ProblemError(line, "expected 'key = value'");
    std::string key = trim(s.substr(0, eq)), value = trim(s.substr(eq + 1));
    if (!kKeys.count(key)) throw ProblemError(line, "unknown key '" + key + "'");
    if (p.entries.count(key)) throw ProblemError(line, "duplicate key '" + key + "'");
    p.entries[key] = {value, line};
    if (key == "curve") p.curve = value;
    else if (key == "eta") p.eta = value;
    else if (key == "tol") p.tol = value;
    else if (key == "trunc_cap") p.trunc_cap = number<long>(value, line, key);
    else if (key == "shear") p.shear = number<std::uint64_t>(value, line, key);
    else if (key == "phases") p.phases = number<int>(value, line, key);
    else if (key == "allow_coordinate_lines") {
      if (value != "true" && value != "false") throw ProblemError(line, "allow_coordinate_lines expects true or false");
      p.allow_coordinate_lines = value == "true";
    }
  }
  if (p.curve.empty()) throw ProblemError(line, "missing 'curve'");
  return p;
}

ProblemFile load_problem(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_problem(ss.str());
}

}  // namespace lelong
