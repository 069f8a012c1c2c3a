#pragma once

#include "lelong/multipoly.hpp"

#include <map>
#include <optional>
#include <string>

namespace lelong {

/// `key = value` lines; '#' starts a comment. Required: curve.
struct ProblemFile {
  std::string curve;
  std::string eta;
  std::optional<std::string> tol;
  std::optional<long> trunc_cap;
  std::optional<std::uint64_t> shear;
  std::optional<int> phases;
  bool allow_coordinate_lines = false;
  /// Every raw entry with its line number.
  std::map<std::string, std::pair<std::string, int>> entries;
};

struct ProblemError : std::runtime_error {
  ProblemError(int line, const std::string& msg);
  int line;
};

ProblemFile parse_problem(const std::string& text);
ProblemFile load_problem(const std::string& path);

}  // namespace lelong
