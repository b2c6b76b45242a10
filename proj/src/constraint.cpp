#include "subgrad/constraint.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace subgrad {

ConstraintSet::ConstraintSet(int dimension, Shape shape)
    : dimension_(dimension), shape_(std::move(shape)) {
  if (dimension_ < 1) throw std::invalid_argument("constraint dimension must be >= 1");
}

ConstraintSet ConstraintSet::whole_space(int dimension) {
  return ConstraintSet(dimension, WholeSpace{});
}

ConstraintSet ConstraintSet::ball(int dimension, double radius) {
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    throw std::invalid_argument("ball radius must be positive and finite");
  }
  return ConstraintSet(dimension, Ball{radius});
}

ConstraintSet ConstraintSet::box(Vector lower, Vector upper) {
  check_same_dimension(lower, upper);
  if (lower.empty()) throw std::invalid_argument("box bounds must be nonempty");
  for (std::size_t j = 0; j < lower.size(); ++j) {
    if (!(lower[j] <= upper[j])) {
      throw std::invalid_argument("box requires lower <= upper in every coordinate");
    }
  }
  const int dim = static_cast<int>(lower.size());
  return ConstraintSet(dim, Box{std::move(lower), std::move(upper)});
}

ConstraintSet ConstraintSet::halfspace(Vector normal, double offset) {
  if (normal.empty()) throw std::invalid_argument("halfspace normal must be nonempty");
  const double nn = squared_norm(normal);
  if (!(nn > 0.0)) throw std::invalid_argument("halfspace normal must be nonzero");
  const int dim = static_cast<int>(normal.size());
  return ConstraintSet(dim, Halfspace{std::move(normal), offset, nn});
}

void ConstraintSet::project_in_place(Vector& x) const {
  if (static_cast<int>(x.size()) != dimension_) {
    throw std::invalid_argument("point dimension does not match constraint set");
  }
  std::visit(
      [&x](const auto& shape) {
        using T = std::decay_t<decltype(shape)>;
        if constexpr (std::is_same_v<T, WholeSpace>) {
          // identity
        } else if constexpr (std::is_same_v<T, Ball>) {
          const double r = norm(x);
          // Points with ||x|| <= radius (boundary included) stay put.
          if (r > shape.radius) {
            const double scale = shape.radius / r;
            for (double& v : x) v *= scale;
          }
        } else if constexpr (std::is_same_v<T, Box>) {
          for (std::size_t j = 0; j < x.size(); ++j) {
            x[j] = std::clamp(x[j], shape.lower[j], shape.upper[j]);
          }
        } else {
          const double slack = inner(shape.normal, x) - shape.offset;
          if (slack > 0.0) {
            const double scale = slack / shape.normal_squared_norm;
            for (std::size_t j = 0; j < x.size(); ++j) {
              x[j] -= scale * shape.normal[j];
            }
          }
        }
      },
      shape_);
}

Vector ConstraintSet::project(const Vector& x) const {
  Vector result = x;
  project_in_place(result);
  return result;
}

double ConstraintSet::violation(const Vector& x) const {
  if (static_cast<int>(x.size()) != dimension_) {
    throw std::invalid_argument("point dimension does not match constraint set");
  }
  return std::visit(
      [&x](const auto& shape) -> double {
        using T = std::decay_t<decltype(shape)>;
        if constexpr (std::is_same_v<T, WholeSpace>) {
          return 0.0;
        } else if constexpr (std::is_same_v<T, Ball>) {
          return norm(x) - shape.radius;
        } else if constexpr (std::is_same_v<T, Box>) {
          double worst = 0.0;
          for (std::size_t j = 0; j < x.size(); ++j) {
            worst = std::max(worst, shape.lower[j] - x[j]);
            worst = std::max(worst, x[j] - shape.upper[j]);
          }
          return worst;
        } else {
          return inner(shape.normal, x) - shape.offset;
        }
      },
      shape_);
}

std::string ConstraintSet::describe() const {
  return std::visit(
      [this](const auto& shape) -> std::string {
        using T = std::decay_t<decltype(shape)>;
        if constexpr (std::is_same_v<T, WholeSpace>) {
          return "whole space R^" + std::to_string(dimension_);
        } else if constexpr (std::is_same_v<T, Ball>) {
          return "ball ||x|| <= " + std::to_string(shape.radius) + " in R^" +
                 std::to_string(dimension_);
        } else if constexpr (std::is_same_v<T, Box>) {
          return "box in R^" + std::to_string(dimension_);
        } else {
          return "halfspace in R^" + std::to_string(dimension_);
        }
      },
      shape_);
}

}  // namespace subgrad
