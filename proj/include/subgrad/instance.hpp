// Seeded benchmark instances: K weighted-L1 components over the unit ball,
// with a flat text serialization that round-trips bit-exactly.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "subgrad/objective.hpp"

namespace subgrad {

struct L1Instance {
  int dimension = 0;
  std::uint64_t seed = 0;
  std::vector<Vector> weights;  // K rows, entries in (0, 1)
  std::vector<Vector> targets;  // K rows, entries in (-1, 0)

  int component_count() const { return static_cast<int>(weights.size()); }

  // K L1 components constrained to the unit ball.
  Problem to_problem() const;
};

// Deterministic: a seed fixes the instance bit-for-bit. Weights are drawn
// uniformly on (0,1) and targets on (-1,0), component by component.
L1Instance generate_instance(std::uint64_t seed, int dimension, int components);

// Coordinates uniform on (-2, 2). The draw is not projected here; the solver
// projects onto the constraint set before iterating.
Vector generate_initial_point(std::uint64_t seed, int dimension);

// Text format: one header line "N K seed", then the K weight rows and the
// K target rows, whitespace-separated with 17 significant digits.
void write_instance(const L1Instance& instance, std::ostream& out);
L1Instance read_instance(std::istream& in);

void save_instance(const L1Instance& instance, const std::string& path);
L1Instance load_instance(const std::string& path);

}  // namespace subgrad
