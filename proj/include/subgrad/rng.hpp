#pragma once

#include <cstdint>
#include <random>

namespace subgrad {

// Seeded draws on open intervals. Built directly on the mt19937_64 output
// sequence, which the standard pins down exactly, so a seed yields the same
// stream on every platform and build.
class UniformRng {
 public:
  explicit UniformRng(std::uint64_t seed) : engine_(seed) {}

  // Uniform on (0, 1); endpoints are unreachable by construction.
  double open_unit() {
    const std::uint64_t bits = engine_() >> 11;  // 53 random bits
    return (static_cast<double>(bits) + 0.5) * 0x1.0p-53;
  }

  // Uniform on (lo, hi), strictly between the endpoints.
  double open(double lo, double hi) {
    for (;;) {
      const double v = lo + open_unit() * (hi - lo);
      if (lo < v && v < hi) return v;
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace subgrad
