// Run-time step-size selection inside a per-iteration range [lo, hi]:
// discrete argmin over a ratio grid, sufficient-decrease (Armijo) searches
// on uniform and logarithmic grids, and the degenerate fixed step.
//
// Every strategy evaluates only the single component it is given, is a pure
// function of its inputs, and returns a step that lies in [lo, hi] exactly.

#pragma once

#include <span>
#include <vector>

#include "subgrad/constraint.hpp"
#include "subgrad/linalg.hpp"
#include "subgrad/objective.hpp"

namespace subgrad {

struct StepRange {
  double lo = 0.0;
  double hi = 0.0;

  StepRange(double lo_value, double hi_value);
};

enum class SearchStatus {
  kSuccess,
  // No grid point satisfied the acceptance test; the range minimum is
  // returned so the caller can still make an admissible update.
  kFallback,
};

struct SearchOutcome {
  double step = 0.0;
  SearchStatus status = SearchStatus::kSuccess;
};

// Everything a strategy may consult when picking the step for one component:
// the feasible point the update starts from, the subgradient there, the
// component itself, and the constraint set.
struct SearchContext {
  const Vector& base_point;
  const Vector& direction;
  const ObjectiveComponent& component;
  const ConstraintSet& constraint;
};

// Evaluates f_i(P(x - step * g)) at step = r*hi + (1-r)*lo for every ratio r
// and returns the best candidate; ties keep the earliest ratio in list order.
SearchOutcome discrete_argmin(const SearchContext& ctx, const StepRange& range,
                              std::span<const double> ratios);

// Walks the grid fraction 0, d, 2d, ..., 1 (the endpoint 1 is always
// included exactly), mapping fraction t to step (1-t)*hi + t*lo, and returns
// the first step whose projected update satisfies
//   f_i(P(x - step*g)) <= f_i(x) - c1 * <x - P(x - step*g), g>.
SearchOutcome armijo_uniform(const SearchContext& ctx, const StepRange& range,
                             double grid_interval, double c1);

// Same acceptance test on the geometric fractions 1, 1/base, ..., 1/base^levels,
// mapping fraction t to step t*hi + (1-t)*lo.
SearchOutcome armijo_log(const SearchContext& ctx, const StepRange& range,
                         int base, int levels, double c1);

// Degenerate strategy for a collapsed range; requires lo == hi.
SearchOutcome fixed_step(const StepRange& range);

// Value-type strategy selection, serializable as solver configuration.
struct StepSizeRule {
  enum class Kind { kFixed, kDiscreteArgmin, kArmijoUniform, kArmijoLog };

  Kind kind = Kind::kFixed;
  std::vector<double> ratios = {0.0, 0.25, 0.5, 0.75, 1.0};  // discrete argmin
  double grid_interval = 0.25;                               // uniform Armijo
  int log_base = 8;                                          // logarithmic Armijo
  int log_levels = 5;
  double sufficient_decrease = 1e-4;  // c1

  bool operator==(const StepSizeRule&) const = default;
};

SearchOutcome select_step(const StepSizeRule& rule, const SearchContext& ctx,
                          const StepRange& range);

}  // namespace subgrad
