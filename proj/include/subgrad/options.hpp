// Text forms of the solver configuration surface, shared by command-line
// flags and experiment spec files. Every accepted string round-trips:
// parse(to_string(x)) == x.
//
//   method:    baseline | ism | psm
//   schedule:  paper[:scale] | fixed:scale | power:scale,exp[,off_lo,off_hi]
//   search:    fixed | argmin[:r1,r2,...] | armijo-uniform:d | armijo-log:a,k

#pragma once

#include <string>
#include <vector>

#include "subgrad/linesearch.hpp"
#include "subgrad/schedule.hpp"
#include "subgrad/solver.hpp"

namespace subgrad {

struct ScheduleSpec {
  enum class Kind {
    kRange,  // "paper": lo = scale/(n+1001), hi = scale/(n+1)
    kFixed,  // "fixed": lo = hi = scale/n
    kPower,  // "power": lo = scale/(n+off_lo)^exp, hi = scale/(n+off_hi)^exp
  };

  Kind kind = Kind::kRange;
  double scale = 1.0;
  double exponent = 1.0;
  double offset_lo = 0.0;
  double offset_hi = 0.0;

  StepRangeSchedule build() const;
  bool collapsed() const;  // lo(n) == hi(n) for every n
  std::string to_string() const;
  static ScheduleSpec parse(const std::string& text);

  bool operator==(const ScheduleSpec&) const = default;
};

struct SearchSpec {
  StepSizeRule::Kind kind = StepSizeRule::Kind::kFixed;
  std::vector<double> ratios = StepSizeRule{}.ratios;
  double grid_interval = 0.25;
  int log_base = 8;
  int log_levels = 5;

  StepSizeRule build(double c1) const;
  std::string to_string() const;
  static SearchSpec parse(const std::string& text);

  bool operator==(const SearchSpec&) const = default;
};

std::string to_string(SolverMethod method);
SolverMethod parse_method(const std::string& text);

// One solver setup of a comparison experiment.
struct MethodSpec {
  std::string label;  // CSV label; empty means "method schedule search"
  SolverMethod method = SolverMethod::kParallel;
  ScheduleSpec schedule;
  SearchSpec search;
  double c1 = 1e-4;

  std::string display_label() const;

  bool operator==(const MethodSpec&) const = default;
};

}  // namespace subgrad
