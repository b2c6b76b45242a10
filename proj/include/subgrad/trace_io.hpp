#pragma once

#include <iosfwd>
#include <span>
#include <string>

#include "subgrad/solver.hpp"

namespace subgrad {

// One row per outer iteration:
//   n,f,elapsed_seconds,fallbacks,min_step,max_step[,lemma_gap]
// Floats carry 17 significant digits with '.' as the decimal separator;
// lines end with '\n'. The lemma_gap column is present only when requested.
void write_trace_csv(std::ostream& out, std::span<const IterationRecord> trace,
                     bool include_lemma_gap);

void save_trace_csv(const std::string& path, std::span<const IterationRecord> trace,
                    bool include_lemma_gap);

}  // namespace subgrad
