#include "subgrad/linesearch.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace subgrad {

namespace {

void check_context(const SearchContext& ctx) {
  check_same_dimension(ctx.base_point, ctx.direction);
  if (static_cast<int>(ctx.base_point.size()) != ctx.constraint.dimension()) {
    throw std::invalid_argument("search context dimension mismatch");
  }
}

// trial <- P(x - step * g)
void projected_update(const SearchContext& ctx, double step, Vector& trial) {
  const Vector& x = ctx.base_point;
  const Vector& g = ctx.direction;
  trial.resize(x.size());
  for (std::size_t j = 0; j < x.size(); ++j) trial[j] = x[j] - step * g[j];
  ctx.constraint.project_in_place(trial);
}

// Sufficient decrease against the projected displacement:
//   f_i(trial) <= f_i(x) - c1 * <x - trial, g>.
bool sufficient_decrease_holds(const SearchContext& ctx, const Vector& trial,
                               double base_value, double c1) {
  const double trial_value = ctx.component.value(trial);
  const double progress = displacement_inner(ctx.base_point, trial, ctx.direction);
  return trial_value <= base_value - c1 * progress;
}

}  // namespace

StepRange::StepRange(double lo_value, double hi_value) : lo(lo_value), hi(hi_value) {
  if (!(lo > 0.0) || !(lo <= hi) || !std::isfinite(hi)) {
    throw std::invalid_argument("step range requires 0 < lo <= hi < inf");
  }
}

SearchOutcome discrete_argmin(const SearchContext& ctx, const StepRange& range,
                              std::span<const double> ratios) {
  check_context(ctx);
  if (ratios.empty()) throw std::invalid_argument("ratio list must be nonempty");
  for (double r : ratios) {
    if (!(r >= 0.0 && r <= 1.0)) {
      throw std::invalid_argument("ratios must lie in [0, 1]");
    }
  }

  Vector trial;
  double best_step = 0.0;
  double best_value = 0.0;
  bool first = true;
  for (double r : ratios) {
    const double step = std::clamp(r * range.hi + (1.0 - r) * range.lo, range.lo, range.hi);
    projected_update(ctx, step, trial);
    const double value = ctx.component.value(trial);
    if (first || value < best_value) {
      best_step = step;
      best_value = value;
      first = false;
    }
  }
  return {best_step, SearchStatus::kSuccess};
}

SearchOutcome armijo_uniform(const SearchContext& ctx, const StepRange& range,
                             double grid_interval, double c1) {
  check_context(ctx);
  if (!(grid_interval > 0.0 && grid_interval <= 1.0)) {
    throw std::invalid_argument("grid interval must lie in (0, 1]");
  }
  if (!(c1 > 0.0 && c1 < 1.0)) {
    throw std::invalid_argument("sufficient-decrease constant must lie in (0, 1)");
  }

  const double base_value = ctx.component.value(ctx.base_point);
  const double snap = 1.0 - 1e-9 * grid_interval;
  Vector trial;
  for (long k = 0;; ++k) {
    double fraction = static_cast<double>(k) * grid_interval;
    const bool last = fraction >= snap;
    if (last) fraction = 1.0;  // the range minimum is always tested
    const double step =
        std::clamp((1.0 - fraction) * range.hi + fraction * range.lo, range.lo, range.hi);
    projected_update(ctx, step, trial);
    if (sufficient_decrease_holds(ctx, trial, base_value, c1)) {
      return {step, SearchStatus::kSuccess};
    }
    if (last) break;
  }
  return {range.lo, SearchStatus::kFallback};
}

SearchOutcome armijo_log(const SearchContext& ctx, const StepRange& range,
                         int base, int levels, double c1) {
  check_context(ctx);
  if (base < 2) throw std::invalid_argument("logarithmic grid base must be >= 2");
  if (levels < 1) throw std::invalid_argument("logarithmic grid needs >= 1 level");
  if (!(c1 > 0.0 && c1 < 1.0)) {
    throw std::invalid_argument("sufficient-decrease constant must lie in (0, 1)");
  }

  const double base_value = ctx.component.value(ctx.base_point);
  Vector trial;
  double fraction = 1.0;
  for (int k = 0; k <= levels; ++k) {
    const double step =
        std::clamp(fraction * range.hi + (1.0 - fraction) * range.lo, range.lo, range.hi);
    projected_update(ctx, step, trial);
    if (sufficient_decrease_holds(ctx, trial, base_value, c1)) {
      return {step, SearchStatus::kSuccess};
    }
    fraction /= static_cast<double>(base);
  }
  return {range.lo, SearchStatus::kFallback};
}

SearchOutcome fixed_step(const StepRange& range) {
  if (range.lo != range.hi) {
    throw std::invalid_argument("fixed step requires a collapsed range (lo == hi)");
  }
  return {range.lo, SearchStatus::kSuccess};
}

SearchOutcome select_step(const StepSizeRule& rule, const SearchContext& ctx,
                          const StepRange& range) {
  switch (rule.kind) {
    case StepSizeRule::Kind::kFixed:
      return fixed_step(range);
    case StepSizeRule::Kind::kDiscreteArgmin:
      return discrete_argmin(ctx, range, rule.ratios);
    case StepSizeRule::Kind::kArmijoUniform:
      return armijo_uniform(ctx, range, rule.grid_interval, rule.sufficient_decrease);
    case StepSizeRule::Kind::kArmijoLog:
      return armijo_log(ctx, range, rule.log_base, rule.log_levels,
                        rule.sufficient_decrease);
  }
  throw std::logic_error("unknown step-size rule");
}

}  // namespace subgrad
