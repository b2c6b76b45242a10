#include "subgrad/objective.hpp"

#include <cmath>
#include <stdexcept>

namespace subgrad {

L1Component::L1Component(Vector weights, Vector targets)
    : weights_(std::move(weights)), targets_(std::move(targets)) {
  check_same_dimension(weights_, targets_);
  if (weights_.empty()) {
    throw std::invalid_argument("L1 component needs at least one coordinate");
  }
  for (double w : weights_) {
    if (!(w > 0.0) || !std::isfinite(w)) {
      throw std::invalid_argument("L1 weights must be positive and finite");
    }
  }
  if (!all_finite(targets_)) {
    throw std::invalid_argument("L1 targets must be finite");
  }
  bound_ = norm(weights_);
}

double L1Component::value(const Vector& x) const {
  check_same_dimension(x, weights_);
  double sum = 0.0;
  for (std::size_t j = 0; j < x.size(); ++j) {
    sum += weights_[j] * std::abs(x[j] - targets_[j]);
  }
  return sum;
}

void L1Component::subgradient(const Vector& x, Vector& out) const {
  check_same_dimension(x, weights_);
  out.resize(x.size());
  for (std::size_t j = 0; j < x.size(); ++j) {
    const double d = x[j] - targets_[j];
    if (d > 0.0) {
      out[j] = weights_[j];
    } else if (d < 0.0) {
      out[j] = -weights_[j];
    } else {
      out[j] = 0.0;
    }
  }
}

Problem::Problem(std::vector<std::shared_ptr<const ObjectiveComponent>> components,
                 ConstraintSet constraint)
    : components_(std::move(components)), constraint_(std::move(constraint)) {
  if (components_.empty()) {
    throw std::invalid_argument("problem needs at least one objective component");
  }
  bound_sum_ = 0.0;
  for (const auto& c : components_) {
    if (!c) throw std::invalid_argument("null objective component");
    if (c->dimension() != constraint_.dimension()) {
      throw std::invalid_argument("component dimension does not match constraint set");
    }
    const double bound = c->subgradient_bound();
    if (!(bound > 0.0) || !std::isfinite(bound)) {
      throw std::invalid_argument("subgradient bound must be positive and finite");
    }
    bound_sum_ += bound;
  }
}

double Problem::value(const Vector& x) const {
  double sum = 0.0;
  for (const auto& c : components_) sum += c->value(x);
  return sum;
}

}  // namespace subgrad
