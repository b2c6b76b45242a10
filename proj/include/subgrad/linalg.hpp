// Dense vector arithmetic on plain std::vector<double>.
//
// All reductions accumulate in ascending index order so that results are
// reproducible across runs and thread counts.

#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace subgrad {

using Vector = std::vector<double>;

inline void check_same_dimension(const Vector& x, const Vector& y) {
  if (x.size() != y.size()) {
    throw std::invalid_argument("vector dimensions differ: " +
                                std::to_string(x.size()) + " vs " +
                                std::to_string(y.size()));
  }
}

inline double inner(const Vector& x, const Vector& y) {
  check_same_dimension(x, y);
  double sum = 0.0;
  for (std::size_t j = 0; j < x.size(); ++j) sum += x[j] * y[j];
  return sum;
}

inline double squared_norm(const Vector& x) {
  double sum = 0.0;
  for (double v : x) sum += v * v;
  return sum;
}

inline double norm(const Vector& x) { return std::sqrt(squared_norm(x)); }

inline double squared_distance(const Vector& x, const Vector& y) {
  check_same_dimension(x, y);
  double sum = 0.0;
  for (std::size_t j = 0; j < x.size(); ++j) {
    const double d = x[j] - y[j];
    sum += d * d;
  }
  return sum;
}

inline double distance(const Vector& x, const Vector& y) {
  return std::sqrt(squared_distance(x, y));
}

// <x - y, g> without materializing x - y.
inline double displacement_inner(const Vector& x, const Vector& y,
                                 const Vector& g) {
  check_same_dimension(x, y);
  check_same_dimension(x, g);
  double sum = 0.0;
  for (std::size_t j = 0; j < x.size(); ++j) sum += (x[j] - y[j]) * g[j];
  return sum;
}

inline bool all_finite(const Vector& x) {
  for (double v : x) {
    if (!std::isfinite(v)) return false;
  }
  return true;
}

}  // namespace subgrad
