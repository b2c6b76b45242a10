// Composite objective f = f_1 + ... + f_K of nonnegative convex components,
// each exposing a value oracle, a subgradient oracle, and a norm bound on
// its subgradients over the feasible set.

#pragma once

#include <memory>
#include <vector>

#include "subgrad/constraint.hpp"
#include "subgrad/linalg.hpp"

namespace subgrad {

class ObjectiveComponent {
 public:
  virtual ~ObjectiveComponent() = default;

  virtual int dimension() const = 0;

  // f_i(x); nonnegative.
  virtual double value(const Vector& x) const = 0;

  // Writes one subgradient of f_i at x into `out` (resized as needed).
  virtual void subgradient(const Vector& x, Vector& out) const = 0;

  // M_i with ||g|| <= M_i for every produced subgradient at feasible x.
  virtual double subgradient_bound() const = 0;

  Vector subgradient(const Vector& x) const {
    Vector g;
    subgradient(x, g);
    return g;
  }
};

// Weighted L1 distance to a target point: x -> sum_j w_j |x_j - t_j|,
// with all weights strictly positive. The subgradient selection is
// w_j * sign(x_j - t_j) with sign(0) = 0, the minimal-norm element, so the
// oracle is deterministic and ||g|| <= ||w|| always holds.
class L1Component final : public ObjectiveComponent {
 public:
  L1Component(Vector weights, Vector targets);

  using ObjectiveComponent::subgradient;

  int dimension() const override { return static_cast<int>(weights_.size()); }
  double value(const Vector& x) const override;
  void subgradient(const Vector& x, Vector& out) const override;
  double subgradient_bound() const override { return bound_; }

  const Vector& weights() const { return weights_; }
  const Vector& targets() const { return targets_; }

 private:
  Vector weights_;
  Vector targets_;
  double bound_;
};

class Problem {
 public:
  Problem(std::vector<std::shared_ptr<const ObjectiveComponent>> components,
          ConstraintSet constraint);

  int dimension() const { return constraint_.dimension(); }
  int component_count() const { return static_cast<int>(components_.size()); }
  const ObjectiveComponent& component(int i) const { return *components_[i]; }
  const ConstraintSet& constraint() const { return constraint_; }

  // M = sum of the component bounds, exactly as accumulated at construction.
  double bound_sum() const { return bound_sum_; }

  // f(x), summed over components in index order.
  double value(const Vector& x) const;

 private:
  std::vector<std::shared_ptr<const ObjectiveComponent>> components_;
  ConstraintSet constraint_;
  double bound_sum_;
};

}  // namespace subgrad
