#include "subgrad/solver.hpp"

#include <chrono>
#include <limits>

namespace subgrad {

namespace {

// out <- P(x - step * g)
void step_and_project(const ConstraintSet& constraint, const Vector& x, double step,
                      const Vector& g, Vector& out) {
  out.resize(x.size());
  for (std::size_t j = 0; j < x.size(); ++j) out[j] = x[j] - step * g[j];
  constraint.project_in_place(out);
}

}  // namespace

Vector baseline_step(const Problem& problem, const Vector& x, double step) {
  if (!(step > 0.0)) throw std::invalid_argument("baseline step must be positive");
  Vector sum_gradient;
  problem.component(0).subgradient(x, sum_gradient);
  Vector g;
  for (int i = 1; i < problem.component_count(); ++i) {
    problem.component(i).subgradient(x, g);
    for (std::size_t j = 0; j < sum_gradient.size(); ++j) sum_gradient[j] += g[j];
  }
  Vector next;
  step_and_project(problem.constraint(), x, step, sum_gradient, next);
  return next;
}

void ism_iteration(const Problem& problem, const StepSizeRule& rule,
                   const StepRange& range, Vector& x, IterationDiagnostics& diag) {
  const int count = problem.component_count();
  diag.steps.resize(count);
  diag.fallback_count = 0;
  Vector g;
  Vector next;
  for (int i = 0; i < count; ++i) {
    const ObjectiveComponent& component = problem.component(i);
    component.subgradient(x, g);
    const SearchContext ctx{x, g, component, problem.constraint()};
    const SearchOutcome outcome = select_step(rule, ctx, range);
    diag.steps[i] = outcome.step;
    if (outcome.status == SearchStatus::kFallback) ++diag.fallback_count;
    step_and_project(problem.constraint(), x, outcome.step, g, next);
    x.swap(next);
  }
}

void psm_iteration(const Problem& problem, const StepSizeRule& rule,
                   const StepRange& range, Vector& x, IterationDiagnostics& diag,
                   ThreadPool* pool, PsmScratch* scratch) {
  const int count = problem.component_count();
  diag.steps.resize(count);
  diag.fallback_count = 0;

  PsmScratch local;
  PsmScratch& buffers = scratch ? *scratch : local;
  buffers.updated.resize(count);
  buffers.gradients.resize(count);
  buffers.fallback_flags.assign(count, 0);

  const auto update_component = [&](std::size_t i) {
    const ObjectiveComponent& component = problem.component(static_cast<int>(i));
    Vector& g = buffers.gradients[i];
    component.subgradient(x, g);
    const SearchContext ctx{x, g, component, problem.constraint()};
    const SearchOutcome outcome = select_step(rule, ctx, range);
    diag.steps[i] = outcome.step;
    buffers.fallback_flags[i] = outcome.status == SearchStatus::kFallback ? 1 : 0;
    step_and_project(problem.constraint(), x, outcome.step, g, buffers.updated[i]);
  };

  if (pool != nullptr && pool->width() > 1) {
    pool->for_each_index(static_cast<std::size_t>(count), update_component);
  } else {
    for (int i = 0; i < count; ++i) update_component(static_cast<std::size_t>(i));
  }

  // Barycenter in ascending component order, independent of which thread
  // produced which update.
  x = buffers.updated[0];
  for (int i = 1; i < count; ++i) {
    const Vector& y = buffers.updated[i];
    for (std::size_t j = 0; j < x.size(); ++j) x[j] += y[j];
  }
  const double scale = static_cast<double>(count);
  for (double& v : x) v /= scale;
  for (char flag : buffers.fallback_flags) diag.fallback_count += flag;
}

double lemma_gap(const Problem& problem, const Vector& x_before,
                 const Vector& x_after, const Vector& reference,
                 std::span<const double> steps, const StepRange& range,
                 LemmaMode mode) {
  const int count = problem.component_count();
  if (static_cast<int>(steps.size()) != count) {
    throw std::invalid_argument("need one step per component for the lemma gap");
  }
  double weighted_progress = 0.0;
  for (int i = 0; i < count; ++i) {
    const ObjectiveComponent& component = problem.component(i);
    weighted_progress +=
        steps[i] * (component.value(x_before) - component.value(reference));
  }
  const double weight =
      mode == LemmaMode::kIncremental ? 2.0 : 2.0 / static_cast<double>(count);
  const double bound = problem.bound_sum();
  const double rhs = squared_distance(x_before, reference) -
                     weight * weighted_progress + range.hi * range.hi * bound * bound;
  const double lhs = squared_distance(x_after, reference);
  return rhs - lhs;
}

RunResult run(const Problem& problem, const Vector& initial_point,
              const SolverConfig& config) {
  if (config.max_iterations < 1) {
    throw std::invalid_argument("max_iterations must be >= 1");
  }
  if (config.threads < 1) throw std::invalid_argument("threads must be >= 1");
  if (config.early_stop && config.early_stop_window < 1) {
    throw std::invalid_argument("early-stop window must be >= 1");
  }

  if (config.strict_admissibility) {
    ScheduleReport report = config.schedule.validate();
    if (!report.usable()) throw InadmissibleScheduleError(std::move(report));
  }

  const int count = problem.component_count();
  Vector x = problem.constraint().project(initial_point);

  std::optional<Vector> reference;
  if (config.lemma_reference) {
    reference = problem.constraint().project(*config.lemma_reference);
  }
  Vector best_point = x;  // monitor default: best iterate seen so far
  double best_f = std::numeric_limits<double>::infinity();

  std::optional<ThreadPool> pool;
  if (config.method == SolverMethod::kParallel && config.threads > 1) {
    pool.emplace(config.threads);
  }

  RunResult result;
  result.trace.reserve(static_cast<std::size_t>(config.max_iterations));
  std::vector<double> best_f_history;
  if (config.early_stop) {
    best_f_history.reserve(static_cast<std::size_t>(config.max_iterations));
  }

  IterationDiagnostics diag;
  PsmScratch scratch;
  Vector x_previous;
  const auto start = std::chrono::steady_clock::now();
  for (long n = 1; n <= config.max_iterations; ++n) {
    const StepRange range = config.schedule.at(n);
    const double f_value = problem.value(x);
    if (f_value < best_f) {
      best_f = f_value;
      if (config.monitor_lemmas && !reference) best_point = x;
    }
    if (config.monitor_lemmas) x_previous = x;

    switch (config.method) {
      case SolverMethod::kBaseline: {
        const SearchOutcome outcome = fixed_step(range);
        x = baseline_step(problem, x, outcome.step);
        diag.steps.assign(1, outcome.step);
        diag.fallback_count = 0;
        break;
      }
      case SolverMethod::kIncremental:
        ism_iteration(problem, config.search, range, x, diag);
        break;
      case SolverMethod::kParallel:
        psm_iteration(problem, config.search, range, x, diag,
                      pool ? &*pool : nullptr, &scratch);
        break;
    }

    IterationRecord record;
    record.n = n;
    record.f_value = f_value;
    record.steps = diag.steps;
    record.fallback_count = diag.fallback_count;
    if (config.monitor_lemmas) {
      const Vector& y = reference ? *reference : best_point;
      const LemmaMode mode = config.method == SolverMethod::kParallel
                                 ? LemmaMode::kParallel
                                 : LemmaMode::kIncremental;
      // The baseline applies one whole-sum step; it satisfies the
      // incremental inequality with every per-component step equal to it.
      const std::vector<double> expanded(
          config.method == SolverMethod::kBaseline
              ? std::vector<double>(static_cast<std::size_t>(count), diag.steps[0])
              : diag.steps);
      record.lemma_gap = lemma_gap(problem, x_previous, x, y, expanded, range, mode);
    }
    record.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    result.trace.push_back(std::move(record));

    if (config.early_stop) {
      best_f_history.push_back(best_f);
      const long window = config.early_stop_window;
      if (n > window) {
        const double earlier = best_f_history[static_cast<std::size_t>(n - 1 - window)];
        if (earlier - best_f < config.early_stop_tolerance) break;
      }
    }
  }
  result.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  result.final_point = std::move(x);
  return result;
}

}  // namespace subgrad
