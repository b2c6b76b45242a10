// Step-range schedules n -> [lo(n), hi(n)] and their admissibility check.
//
// A schedule is admissible when
//   sum hi(n) = inf,  sum hi(n)^2 < inf,  lo(n)/hi(n) -> 1,
//   sum (hi(n) - lo(n)) < inf.
// These are series/limit conditions, so they are decided analytically per
// family; declared custom schedules only get finite sanity probes.

#pragma once

#include <functional>
#include <string>
#include <variant>

#include "subgrad/linesearch.hpp"

namespace subgrad {

struct ScheduleReport {
  enum class Verdict {
    kAdmissible,    // all four conditions hold, shown analytically
    kInadmissible,  // a named condition fails
    kDeclared,      // trusted by declaration; probed, not proven
  };
  enum class Violation {
    kNone,
    kSumConverges,       // sum hi(n) finite, no divergent total step
    kSquareSumDiverges,  // sum hi(n)^2 infinite
    kRatioLimitNotOne,   // lo(n)/hi(n) does not tend to 1
    kGapSumDiverges,     // sum (hi(n) - lo(n)) infinite
    kRangeInvalid,       // some n yields an invalid range
  };

  Verdict verdict = Verdict::kAdmissible;
  Violation violation = Violation::kNone;
  std::string detail;

  bool usable() const { return verdict != Verdict::kInadmissible; }
};

class StepRangeSchedule {
 public:
  // lo(n) = scale/(n + 1001), hi(n) = scale/(n + 1).
  static StepRangeSchedule diminishing_range(double scale = 1.0);

  // Collapsed range lo(n) = hi(n) = scale/n; recovers the classic
  // predetermined diminishing step-size.
  static StepRangeSchedule fixed_diminishing(double scale);

  // lo(n) = scale/(n + offset_lo)^exponent, hi(n) = scale/(n + offset_hi)^exponent
  // with offset_lo >= offset_hi >= 0.
  static StepRangeSchedule power_law(double scale, double exponent,
                                     double offset_lo = 0.0, double offset_hi = 0.0);

  // Arbitrary range function with admissibility asserted by the caller.
  static StepRangeSchedule custom(std::function<StepRange(long)> fn,
                                  bool declared_admissible);

  StepRange at(long n) const;  // n >= 1

  ScheduleReport validate() const;

  std::string describe() const;

 private:
  struct PowerLaw {
    double scale;
    double exponent;
    double offset_lo;
    double offset_hi;
  };
  struct Custom {
    std::function<StepRange(long)> fn;
    bool declared_admissible;
  };
  using Family = std::variant<PowerLaw, Custom>;

  explicit StepRangeSchedule(Family family) : family_(std::move(family)) {}

  Family family_;
};

}  // namespace subgrad
