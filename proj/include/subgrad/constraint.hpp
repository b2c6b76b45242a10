// Closed convex constraint sets with closed-form metric projections.

#pragma once

#include <variant>

#include "subgrad/linalg.hpp"

namespace subgrad {

// Supported sets: whole space, Euclidean ball around the origin,
// coordinatewise box, and a single halfspace {x : <normal, x> <= offset}.
// Every kind admits an exact one-pass projection; the projection is
// nonexpansive and leaves feasible points unchanged.
class ConstraintSet {
 public:
  static ConstraintSet whole_space(int dimension);
  static ConstraintSet ball(int dimension, double radius);
  static ConstraintSet unit_ball(int dimension) { return ball(dimension, 1.0); }
  static ConstraintSet box(Vector lower, Vector upper);
  static ConstraintSet halfspace(Vector normal, double offset);

  int dimension() const { return dimension_; }

  void project_in_place(Vector& x) const;
  Vector project(const Vector& x) const;

  // Signed residual of the defining inequality; <= 0 inside the set.
  // Identically 0 for the whole space.
  double violation(const Vector& x) const;
  bool contains(const Vector& x, double tolerance = 0.0) const {
    return violation(x) <= tolerance;
  }

  std::string describe() const;

 private:
  struct WholeSpace {};
  struct Ball {
    double radius;
  };
  struct Box {
    Vector lower, upper;
  };
  struct Halfspace {
    Vector normal;
    double offset;
    double normal_squared_norm;
  };
  using Shape = std::variant<WholeSpace, Ball, Box, Halfspace>;

  ConstraintSet(int dimension, Shape shape);

  int dimension_;
  Shape shape_;
};

}  // namespace subgrad
