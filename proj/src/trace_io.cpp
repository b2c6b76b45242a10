#include "subgrad/trace_io.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <stdexcept>

#include "subgrad/numeric_io.hpp"

namespace subgrad {

void write_trace_csv(std::ostream& out, std::span<const IterationRecord> trace,
                     bool include_lemma_gap) {
  out << "n,f,elapsed_seconds,fallbacks,min_step,max_step";
  if (include_lemma_gap) out << ",lemma_gap";
  out << '\n';
  for (const IterationRecord& record : trace) {
    const auto [min_it, max_it] =
        std::minmax_element(record.steps.begin(), record.steps.end());
    out << record.n << ',' << format_double(record.f_value) << ','
        << format_double(record.elapsed_seconds) << ',' << record.fallback_count << ','
        << format_double(*min_it) << ',' << format_double(*max_it);
    if (include_lemma_gap) {
      out << ',' << format_double(record.lemma_gap.value_or(0.0));
    }
    out << '\n';
  }
}

void save_trace_csv(const std::string& path, std::span<const IterationRecord> trace,
                    bool include_lemma_gap) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  write_trace_csv(out, trace, include_lemma_gap);
  out.flush();
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace subgrad
