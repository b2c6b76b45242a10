// Outer iterations for minimizing f = sum f_i over a projectable set C:
//  - baseline: x <- P(x - s * g) with g a subgradient of the whole sum,
//  - incremental: K sequential per-component projected steps per iteration,
//  - parallel: K independent per-component steps averaged into the next
//    iterate (barycenter reduction in fixed component order).
// Step sizes come from a line-search rule restricted to a per-iteration
// range, and each iteration can be checked against the method's descent
// inequality at any feasible reference point.

#pragma once

#include <optional>
#include <span>
#include <stdexcept>

#include "subgrad/linesearch.hpp"
#include "subgrad/objective.hpp"
#include "subgrad/schedule.hpp"
#include "subgrad/thread_pool.hpp"

namespace subgrad {

enum class SolverMethod { kBaseline, kIncremental, kParallel };

struct SolverConfig {
  SolverMethod method = SolverMethod::kIncremental;
  StepRangeSchedule schedule = StepRangeSchedule::diminishing_range();
  StepSizeRule search;
  long max_iterations = 1000;

  // Parallel map width for the parallel method; 1 means sequential.
  unsigned threads = 1;

  // Per-iteration descent-inequality check. The reference defaults to the
  // best iterate seen so far; a supplied reference is projected onto C once.
  bool monitor_lemmas = false;
  std::optional<Vector> lemma_reference;

  // Refuse to run on a schedule whose admissibility check fails.
  bool strict_admissibility = true;

  // Stop once the running best objective improves by less than the
  // tolerance over a trailing window.
  bool early_stop = false;
  long early_stop_window = 100;
  double early_stop_tolerance = 1e-12;
};

struct IterationRecord {
  long n = 0;
  double f_value = 0.0;          // f(x_n), the point iteration n started from
  double elapsed_seconds = 0.0;  // cumulative, sampled once per outer iteration
  std::vector<double> steps;     // per-component steps chosen in iteration n
  int fallback_count = 0;
  std::optional<double> lemma_gap;
};

struct RunResult {
  Vector final_point;
  std::vector<IterationRecord> trace;
  double wall_seconds = 0.0;
};

struct IterationDiagnostics {
  std::vector<double> steps;
  int fallback_count = 0;
};

class InadmissibleScheduleError : public std::runtime_error {
 public:
  explicit InadmissibleScheduleError(ScheduleReport report)
      : std::runtime_error("schedule inadmissible: " + report.detail),
        report_(std::move(report)) {}
  const ScheduleReport& report() const { return report_; }

 private:
  ScheduleReport report_;
};

// x <- P(x - step * g) with g accumulated over all components at x.
Vector baseline_step(const Problem& problem, const Vector& x, double step);

// One incremental outer iteration; the K inner steps run in component order,
// each consuming the previous inner iterate.
void ism_iteration(const Problem& problem, const StepSizeRule& rule,
                   const StepRange& range, Vector& x, IterationDiagnostics& diag);

// Reusable per-component buffers for psm_iteration; avoids reallocating
// K update vectors every outer iteration.
struct PsmScratch {
  std::vector<Vector> updated;
  std::vector<Vector> gradients;
  std::vector<char> fallback_flags;
};

// One parallel outer iteration; the K per-component updates are independent
// and may run on a pool, the reduction is always in ascending component
// order, so the result is bit-identical for every pool width.
void psm_iteration(const Problem& problem, const StepSizeRule& rule,
                   const StepRange& range, Vector& x, IterationDiagnostics& diag,
                   ThreadPool* pool = nullptr, PsmScratch* scratch = nullptr);

enum class LemmaMode { kIncremental, kParallel };

// RHS - LHS of the per-iteration descent inequality
//   ||x' - y||^2 <= ||x - y||^2 - w * sum_i step_i (f_i(x) - f_i(y)) + hi^2 M^2
// with w = 2 for the incremental form and w = 2/K for the parallel form.
// Nonnegative values certify the iteration against the theory.
double lemma_gap(const Problem& problem, const Vector& x_before,
                 const Vector& x_after, const Vector& reference,
                 std::span<const double> steps, const StepRange& range,
                 LemmaMode mode);

// Projects the initial point onto C, then applies max_iterations outer
// iterations, recording one IterationRecord per iteration. Deterministic
// given (problem, initial point, config), including in parallel mode.
RunResult run(const Problem& problem, const Vector& initial_point,
              const SolverConfig& config);

}  // namespace subgrad
