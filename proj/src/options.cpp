#include "subgrad/options.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include "subgrad/numeric_io.hpp"

namespace subgrad {

namespace {

std::vector<std::string> split(const std::string& text, char separator) {
  std::vector<std::string> parts;
  std::string current;
  for (char c : text) {
    if (c == separator) {
      parts.push_back(current);
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  parts.push_back(current);
  return parts;
}

double parse_number(const std::string& text, const std::string& what) {
  const char* begin = text.c_str();
  char* end = nullptr;
  const double value = std::strtod(begin, &end);
  if (end == begin || *end != '\0') {
    throw std::invalid_argument("cannot parse " + what + " from '" + text + "'");
  }
  return value;
}

int parse_integer(const std::string& text, const std::string& what) {
  const double value = parse_number(text, what);
  const int as_int = static_cast<int>(value);
  if (static_cast<double>(as_int) != value) {
    throw std::invalid_argument(what + " must be an integer, got '" + text + "'");
  }
  return as_int;
}

// Splits "name[:args]" and returns the args list (empty when absent).
std::pair<std::string, std::vector<std::string>> split_spec(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) return {text, {}};
  return {text.substr(0, colon), split(text.substr(colon + 1), ',')};
}

}  // namespace

StepRangeSchedule ScheduleSpec::build() const {
  switch (kind) {
    case Kind::kRange:
      return StepRangeSchedule::diminishing_range(scale);
    case Kind::kFixed:
      return StepRangeSchedule::fixed_diminishing(scale);
    case Kind::kPower:
      return StepRangeSchedule::power_law(scale, exponent, offset_lo, offset_hi);
  }
  throw std::logic_error("unknown schedule kind");
}

bool ScheduleSpec::collapsed() const {
  return kind == Kind::kFixed || (kind == Kind::kPower && offset_lo == offset_hi);
}

std::string ScheduleSpec::to_string() const {
  switch (kind) {
    case Kind::kRange:
      return "paper:" + format_double(scale);
    case Kind::kFixed:
      return "fixed:" + format_double(scale);
    case Kind::kPower:
      return "power:" + format_double(scale) + "," + format_double(exponent) + "," +
             format_double(offset_lo) + "," + format_double(offset_hi);
  }
  throw std::logic_error("unknown schedule kind");
}

ScheduleSpec ScheduleSpec::parse(const std::string& text) {
  const auto [name, args] = split_spec(text);
  ScheduleSpec spec;
  if (name == "paper" || name == "fixed") {
    spec.kind = name == "paper" ? Kind::kRange : Kind::kFixed;
    if (name == "fixed" && args.empty()) {
      throw std::invalid_argument("schedule 'fixed' needs a scale, e.g. fixed:1e-3");
    }
    if (args.size() > 1) {
      throw std::invalid_argument("schedule '" + name + "' takes one scale argument");
    }
    if (!args.empty()) spec.scale = parse_number(args[0], "schedule scale");
    if (spec.kind == Kind::kRange) {
      spec.offset_lo = 1001.0;
      spec.offset_hi = 1.0;
    }
    return spec;
  }
  if (name == "power") {
    if (args.size() != 2 && args.size() != 4) {
      throw std::invalid_argument(
          "schedule 'power' takes scale,exponent[,offset_lo,offset_hi]");
    }
    spec.kind = Kind::kPower;
    spec.scale = parse_number(args[0], "schedule scale");
    spec.exponent = parse_number(args[1], "schedule exponent");
    if (args.size() == 4) {
      spec.offset_lo = parse_number(args[2], "schedule offset_lo");
      spec.offset_hi = parse_number(args[3], "schedule offset_hi");
    }
    return spec;
  }
  throw std::invalid_argument("unknown schedule '" + name +
                              "'; expected paper[:c], fixed:c or power:c,p[,olo,ohi]");
}

StepSizeRule SearchSpec::build(double c1) const {
  StepSizeRule rule;
  rule.kind = kind;
  rule.ratios = ratios;
  rule.grid_interval = grid_interval;
  rule.log_base = log_base;
  rule.log_levels = log_levels;
  rule.sufficient_decrease = c1;
  return rule;
}

std::string SearchSpec::to_string() const {
  switch (kind) {
    case StepSizeRule::Kind::kFixed:
      return "fixed";
    case StepSizeRule::Kind::kDiscreteArgmin: {
      std::ostringstream out;
      out << "argmin:";
      for (std::size_t i = 0; i < ratios.size(); ++i) {
        if (i > 0) out << ',';
        out << format_double(ratios[i]);
      }
      return out.str();
    }
    case StepSizeRule::Kind::kArmijoUniform:
      return "armijo-uniform:" + format_double(grid_interval);
    case StepSizeRule::Kind::kArmijoLog:
      return "armijo-log:" + std::to_string(log_base) + "," + std::to_string(log_levels);
  }
  throw std::logic_error("unknown search kind");
}

SearchSpec SearchSpec::parse(const std::string& text) {
  const auto [name, args] = split_spec(text);
  SearchSpec spec;
  if (name == "fixed") {
    if (!args.empty()) throw std::invalid_argument("search 'fixed' takes no arguments");
    spec.kind = StepSizeRule::Kind::kFixed;
    return spec;
  }
  if (name == "argmin") {
    spec.kind = StepSizeRule::Kind::kDiscreteArgmin;
    if (!args.empty()) {
      spec.ratios.clear();
      for (const std::string& arg : args) {
        spec.ratios.push_back(parse_number(arg, "argmin ratio"));
      }
    }
    return spec;
  }
  if (name == "armijo-uniform") {
    if (args.size() != 1) {
      throw std::invalid_argument("search 'armijo-uniform' takes one grid interval");
    }
    spec.kind = StepSizeRule::Kind::kArmijoUniform;
    spec.grid_interval = parse_number(args[0], "grid interval");
    return spec;
  }
  if (name == "armijo-log") {
    if (args.size() != 2) {
      throw std::invalid_argument("search 'armijo-log' takes base,levels, e.g. armijo-log:8,5");
    }
    spec.kind = StepSizeRule::Kind::kArmijoLog;
    spec.log_base = parse_integer(args[0], "logarithmic base");
    spec.log_levels = parse_integer(args[1], "logarithmic level count");
    return spec;
  }
  throw std::invalid_argument(
      "unknown search '" + name +
      "'; expected fixed, argmin[:r1,...], armijo-uniform:d or armijo-log:a,k");
}

std::string to_string(SolverMethod method) {
  switch (method) {
    case SolverMethod::kBaseline:
      return "baseline";
    case SolverMethod::kIncremental:
      return "ism";
    case SolverMethod::kParallel:
      return "psm";
  }
  throw std::logic_error("unknown solver method");
}

SolverMethod parse_method(const std::string& text) {
  if (text == "baseline") return SolverMethod::kBaseline;
  if (text == "ism") return SolverMethod::kIncremental;
  if (text == "psm") return SolverMethod::kParallel;
  throw std::invalid_argument("unknown method '" + text +
                              "'; expected baseline, ism or psm");
}

std::string MethodSpec::display_label() const {
  std::string text = label.empty() ? subgrad::to_string(method) + " " +
                                         schedule.to_string() + " " +
                                         search.to_string()
                                   : label;
  // labels end up as single CSV fields
  std::replace(text.begin(), text.end(), ',', ';');
  return text;
}

}  // namespace subgrad
