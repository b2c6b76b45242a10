#include "subgrad/schedule.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "subgrad/numeric_io.hpp"

namespace subgrad {

namespace {

constexpr long kProbeLimit = 1'000'000;

double power_term(double scale, double exponent, double offset, long n) {
  const double base = static_cast<double>(n) + offset;
  if (exponent == 1.0) return scale / base;
  return scale / std::pow(base, exponent);
}

}  // namespace

StepRangeSchedule StepRangeSchedule::diminishing_range(double scale) {
  return power_law(scale, 1.0, 1001.0, 1.0);
}

StepRangeSchedule StepRangeSchedule::fixed_diminishing(double scale) {
  return power_law(scale, 1.0, 0.0, 0.0);
}

StepRangeSchedule StepRangeSchedule::power_law(double scale, double exponent,
                                               double offset_lo, double offset_hi) {
  if (!(scale > 0.0) || !std::isfinite(scale)) {
    throw std::invalid_argument("schedule scale must be positive and finite");
  }
  if (!(exponent >= 0.0) || !std::isfinite(exponent)) {
    throw std::invalid_argument("schedule exponent must be nonnegative and finite");
  }
  if (!(offset_lo >= offset_hi) || !(offset_hi >= 0.0) || !std::isfinite(offset_lo)) {
    throw std::invalid_argument("schedule offsets require offset_lo >= offset_hi >= 0");
  }
  return StepRangeSchedule(Family{PowerLaw{scale, exponent, offset_lo, offset_hi}});
}

StepRangeSchedule StepRangeSchedule::custom(std::function<StepRange(long)> fn,
                                            bool declared_admissible) {
  if (!fn) throw std::invalid_argument("custom schedule needs a range function");
  return StepRangeSchedule(Family{Custom{std::move(fn), declared_admissible}});
}

StepRange StepRangeSchedule::at(long n) const {
  if (n < 1) throw std::invalid_argument("schedule index must be >= 1");
  if (const auto* p = std::get_if<PowerLaw>(&family_)) {
    if (p->offset_lo == p->offset_hi) {
      const double step = power_term(p->scale, p->exponent, p->offset_hi, n);
      return StepRange(step, step);
    }
    return StepRange(power_term(p->scale, p->exponent, p->offset_lo, n),
                     power_term(p->scale, p->exponent, p->offset_hi, n));
  }
  return std::get<Custom>(family_).fn(n);
}

ScheduleReport StepRangeSchedule::validate() const {
  ScheduleReport report;
  if (const auto* p = std::get_if<PowerLaw>(&family_)) {
    // hi(n) ~ scale/n^e: the sum diverges iff e <= 1, the square-sum
    // converges iff e > 1/2. With shared scale and exponent the ratio
    // lo/hi -> 1 always, and hi - lo ~ C/n^{e+1} is summable for e > 1/2.
    if (p->exponent > 1.0) {
      report.verdict = ScheduleReport::Verdict::kInadmissible;
      report.violation = ScheduleReport::Violation::kSumConverges;
      report.detail = "sum of hi(n) converges (exponent " + format_double(p->exponent) +
                      " > 1); divergent total step is required";
      return report;
    }
    if (p->exponent <= 0.5) {
      report.verdict = ScheduleReport::Verdict::kInadmissible;
      report.violation = ScheduleReport::Violation::kSquareSumDiverges;
      report.detail = "sum of hi(n)^2 diverges (exponent " + format_double(p->exponent) +
                      " <= 1/2); convergent square-sum is required";
      return report;
    }
    report.verdict = ScheduleReport::Verdict::kAdmissible;
    report.detail = "power-law family with exponent in (1/2, 1] and matched "
                    "endpoints: all four step-range conditions hold";
    return report;
  }

  const auto& custom = std::get<Custom>(family_);
  if (!custom.declared_admissible) {
    report.verdict = ScheduleReport::Verdict::kInadmissible;
    report.violation = ScheduleReport::Violation::kNone;
    report.detail = "custom schedule declared inadmissible by its author";
    return report;
  }
  report.verdict = ScheduleReport::Verdict::kDeclared;
  // Finite probes only; they can catch blunders, not prove the series
  // conditions.
  double previous_ratio = 0.0;
  bool monotone = true;
  long first_break = 0;
  double final_ratio = 1.0;
  for (long n = 1; n <= kProbeLimit; ++n) {
    StepRange range(1.0, 1.0);
    try {
      range = custom.fn(n);
    } catch (const std::exception& e) {
      report.verdict = ScheduleReport::Verdict::kInadmissible;
      report.violation = ScheduleReport::Violation::kRangeInvalid;
      report.detail = "range invalid at n=" + std::to_string(n) + ": " + e.what();
      return report;
    }
    const double ratio = range.lo / range.hi;
    if (monotone && ratio < previous_ratio - 1e-12) {
      monotone = false;
      first_break = n;
    }
    previous_ratio = ratio;
    final_ratio = ratio;
  }
  std::ostringstream detail;
  detail << "declared admissible; probed n <= " << kProbeLimit
         << ": ranges valid, lo/hi at probe end = " << format_double(final_ratio);
  if (!monotone) {
    detail << ", ratio probe failed: not nondecreasing at n=" << first_break;
  }
  report.detail = detail.str();
  return report;
}

std::string StepRangeSchedule::describe() const {
  if (const auto* p = std::get_if<PowerLaw>(&family_)) {
    std::ostringstream out;
    if (p->offset_lo == p->offset_hi) {
      out << "fixed step " << format_double(p->scale) << "/(n+" << format_double(p->offset_hi)
          << ")^" << format_double(p->exponent);
    } else {
      out << "range [" << format_double(p->scale) << "/(n+" << format_double(p->offset_lo)
          << ")^" << format_double(p->exponent) << ", " << format_double(p->scale) << "/(n+"
          << format_double(p->offset_hi) << ")^" << format_double(p->exponent) << "]";
    }
    return out.str();
  }
  return "custom step-range schedule";
}

}  // namespace subgrad
