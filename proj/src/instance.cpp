#include "subgrad/instance.hpp"

#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "subgrad/numeric_io.hpp"
#include "subgrad/rng.hpp"

namespace subgrad {

namespace {

// Keeps the initial-point stream independent of the instance stream when the
// same seed is reused for both.
constexpr std::uint64_t kInitialPointSalt = 0x9e3779b97f4a7c15ull;

void check_shape(int dimension, int components) {
  if (dimension < 1) throw std::invalid_argument("dimension must be >= 1");
  if (components < 1) throw std::invalid_argument("component count must be >= 1");
}

}  // namespace

Problem L1Instance::to_problem() const {
  std::vector<std::shared_ptr<const ObjectiveComponent>> components;
  components.reserve(weights.size());
  for (std::size_t i = 0; i < weights.size(); ++i) {
    components.push_back(std::make_shared<L1Component>(weights[i], targets[i]));
  }
  return Problem(std::move(components), ConstraintSet::unit_ball(dimension));
}

L1Instance generate_instance(std::uint64_t seed, int dimension, int components) {
  check_shape(dimension, components);
  UniformRng rng(seed);
  L1Instance instance;
  instance.dimension = dimension;
  instance.seed = seed;
  instance.weights.resize(components);
  instance.targets.resize(components);
  for (auto& row : instance.weights) {
    row.resize(dimension);
    for (double& v : row) v = rng.open(0.0, 1.0);
  }
  for (auto& row : instance.targets) {
    row.resize(dimension);
    for (double& v : row) v = rng.open(-1.0, 0.0);
  }
  return instance;
}

Vector generate_initial_point(std::uint64_t seed, int dimension) {
  if (dimension < 1) throw std::invalid_argument("dimension must be >= 1");
  UniformRng rng(seed ^ kInitialPointSalt);
  Vector x(dimension);
  for (double& v : x) v = rng.open(-2.0, 2.0);
  return x;
}

void write_instance(const L1Instance& instance, std::ostream& out) {
  out << instance.dimension << ' ' << instance.component_count() << ' '
      << instance.seed << '\n';
  const auto write_rows = [&out](const std::vector<Vector>& rows) {
    for (const Vector& row : rows) {
      for (std::size_t j = 0; j < row.size(); ++j) {
        if (j > 0) out << ' ';
        out << format_double(row[j]);
      }
      out << '\n';
    }
  };
  write_rows(instance.weights);
  write_rows(instance.targets);
}

L1Instance read_instance(std::istream& in) {
  L1Instance instance;
  int components = 0;
  if (!(in >> instance.dimension >> components >> instance.seed)) {
    throw std::runtime_error("instance header malformed; expected \"N K seed\"");
  }
  check_shape(instance.dimension, components);
  const auto read_rows = [&](std::vector<Vector>& rows, const char* what) {
    rows.resize(components);
    for (Vector& row : rows) {
      row.resize(instance.dimension);
      for (double& v : row) {
        if (!(in >> v)) {
          throw std::runtime_error(std::string("instance truncated while reading ") + what);
        }
      }
    }
  };
  read_rows(instance.weights, "weights");
  read_rows(instance.targets, "targets");
  return instance;
}

void save_instance(const L1Instance& instance, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  write_instance(instance, out);
  out.flush();
  if (!out) throw std::runtime_error("write failed: " + path);
}

L1Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open instance file: " + path);
  try {
    return read_instance(in);
  } catch (const std::runtime_error& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

}  // namespace subgrad
