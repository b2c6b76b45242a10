// Command-line benchmark harness: instance generation, solver runs with
// trace export, paired multi-core/sequential speedup measurement, and
// multi-seed method comparisons.
//
// Exit codes: 0 success, 2 invalid configuration, 3 inadmissible schedule
// (strict mode), 4 I/O error.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "subgrad/instance.hpp"
#include "subgrad/numeric_io.hpp"
#include "subgrad/options.hpp"
#include "subgrad/solver.hpp"
#include "subgrad/trace_io.hpp"

namespace {

using nlohmann::ordered_json;
using namespace subgrad;

constexpr int kExitInvalidConfig = 2;
constexpr int kExitInadmissibleSchedule = 3;
constexpr int kExitIoError = 4;

unsigned resolve_threads(const std::string& text, int component_count) {
  if (text == "auto") {
    const unsigned hardware = ThreadPool::hardware_width();
    return std::max(1u, std::min(hardware, static_cast<unsigned>(component_count)));
  }
  try {
    const long value = std::stol(text);
    if (value < 1) throw std::invalid_argument("");
    return static_cast<unsigned>(value);
  } catch (const std::exception&) {
    throw std::invalid_argument("--threads expects a positive integer or 'auto', got '" +
                                text + "'");
  }
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  return out;
}

// ---------------------------------------------------------------------------
// generate

struct GenerateOptions {
  std::uint64_t seed = 1;
  int dimension = 1000;
  int components = 16;
  std::string out_path;
};

int cmd_generate(const GenerateOptions& opt) {
  const L1Instance instance = generate_instance(opt.seed, opt.dimension, opt.components);
  save_instance(instance, opt.out_path);
  std::cout << "wrote instance N=" << instance.dimension << " K="
            << instance.component_count() << " seed=" << instance.seed << " to "
            << opt.out_path << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// run

struct RunOptions {
  std::string instance_path;
  std::optional<std::uint64_t> seed;
  int dimension = 1000;
  int components = 16;
  std::string method = "psm";
  std::string schedule = "paper:1";
  std::string search = "armijo-log:8,5";
  double c1 = 1e-4;
  long max_iterations = 1000;
  std::string threads = "1";
  bool monitor_lemmas = false;
  bool strict = true;
  std::string out_path;
};

L1Instance resolve_instance(const std::string& path, std::optional<std::uint64_t> seed,
                            int dimension, int components) {
  if (!path.empty()) return load_instance(path);
  if (!seed) {
    throw std::invalid_argument("need --instance FILE or --seed to generate one in place");
  }
  return generate_instance(*seed, dimension, components);
}

SolverConfig make_config(const MethodSpec& spec, long max_iterations, unsigned threads,
                         bool monitor, bool strict) {
  if (spec.method == SolverMethod::kBaseline && !spec.schedule.collapsed()) {
    throw std::invalid_argument(
        "--method baseline applies one whole-sum step and needs a collapsed "
        "schedule (fixed:c or power with equal offsets)");
  }
  if (spec.search.kind == StepSizeRule::Kind::kFixed &&
      spec.method != SolverMethod::kBaseline && !spec.schedule.collapsed()) {
    throw std::invalid_argument(
        "--search fixed needs a collapsed schedule (fixed:c); pick a line "
        "search for a genuine step-range");
  }
  SolverConfig config;
  config.method = spec.method;
  config.schedule = spec.schedule.build();
  config.search = spec.search.build(spec.c1);
  config.max_iterations = max_iterations;
  config.threads = threads;
  config.monitor_lemmas = monitor;
  config.strict_admissibility = strict;
  return config;
}

int cmd_run(const RunOptions& opt) {
  const L1Instance instance =
      resolve_instance(opt.instance_path, opt.seed, opt.dimension, opt.components);
  const Problem problem = instance.to_problem();

  MethodSpec spec;
  spec.method = parse_method(opt.method);
  spec.schedule = ScheduleSpec::parse(opt.schedule);
  spec.search = SearchSpec::parse(opt.search);
  spec.c1 = opt.c1;

  const unsigned threads = resolve_threads(opt.threads, problem.component_count());
  const SolverConfig config =
      make_config(spec, opt.max_iterations, threads, opt.monitor_lemmas, opt.strict);

  const std::uint64_t init_seed = opt.seed ? *opt.seed : instance.seed;
  const Vector x1 = generate_initial_point(init_seed, instance.dimension);

  const RunResult result = run(problem, x1, config);
  if (!opt.out_path.empty()) {
    save_trace_csv(opt.out_path, result.trace, opt.monitor_lemmas);
  }
  std::cout << spec.display_label() << ": " << result.trace.size() << " iterations, f="
            << format_double(result.trace.back().f_value) << ", wall="
            << format_double(result.wall_seconds) << "s\n";
  return 0;
}

// ---------------------------------------------------------------------------
// bench-speedup

struct SpeedupOptions {
  std::string instance_path;
  std::optional<std::uint64_t> seed;
  int dimension = 1000;
  int components = 16;
  long max_iterations = 1000;
  std::string out_path;
};

int cmd_bench_speedup(const SpeedupOptions& opt) {
  const L1Instance instance =
      resolve_instance(opt.instance_path, opt.seed, opt.dimension, opt.components);
  const Problem problem = instance.to_problem();
  const Vector x1 = generate_initial_point(opt.seed ? *opt.seed : instance.seed,
                                           instance.dimension);

  struct Row {
    std::string label;
    MethodSpec spec;
  };
  std::vector<Row> rows;
  {
    MethodSpec fixed_large;
    fixed_large.method = SolverMethod::kParallel;
    fixed_large.schedule = ScheduleSpec::parse("fixed:1");
    fixed_large.search = SearchSpec::parse("fixed");
    rows.push_back({"psm step 1/n", fixed_large});

    MethodSpec fixed_small = fixed_large;
    fixed_small.schedule = ScheduleSpec::parse("fixed:1e-3");
    rows.push_back({"psm step 1e-3/n", fixed_small});

    MethodSpec searched;
    searched.method = SolverMethod::kParallel;
    searched.schedule = ScheduleSpec::parse("paper:1");
    searched.search = SearchSpec::parse("armijo-log:8,5");
    rows.push_back({"psm line-search", searched});
  }

  const unsigned hardware = ThreadPool::hardware_width();
  const unsigned multi_threads = resolve_threads("auto", problem.component_count());
  const bool applicable = hardware >= 2;

  auto out = open_output(opt.out_path.empty() ? "speedup.csv" : opt.out_path);
  out << "method,mode,time_seconds,final_f,acceleration_ratio\n";
  for (const Row& row : rows) {
    const SolverConfig multi_config =
        make_config(row.spec, opt.max_iterations, multi_threads, false, true);
    SolverConfig seq_config = multi_config;
    seq_config.threads = 1;

    const RunResult sequential = run(problem, x1, seq_config);
    const RunResult multi = run(problem, x1, multi_config);

    const double f_seq = sequential.trace.back().f_value;
    const double f_multi = multi.trace.back().f_value;
    const std::string ratio =
        applicable ? format_double(multi.wall_seconds / sequential.wall_seconds)
                   : "na";
    out << row.label << ",multi-core," << format_double(multi.wall_seconds) << ','
        << format_double(f_multi) << ',' << ratio << '\n';
    out << row.label << ",sequential," << format_double(sequential.wall_seconds) << ','
        << format_double(f_seq) << ',' << ratio << '\n';
    std::cout << row.label << ": multi " << format_double(multi.wall_seconds) << "s ("
              << multi_threads << " threads), sequential "
              << format_double(sequential.wall_seconds) << "s, ratio " << ratio
              << ", |f_multi - f_seq| = " << format_double(std::abs(f_multi - f_seq))
              << "\n";
  }
  out.flush();
  if (!out) throw std::runtime_error("write failed");
  return 0;
}

// ---------------------------------------------------------------------------
// compare

struct ExperimentSpec {
  int dimension = 200;
  int components = 8;
  std::vector<std::uint64_t> seeds;
  long max_iterations = 2000;
  std::string threads = "1";
  // "both": instance and initial point drawn per seed; "initial_only":
  // one instance from the first seed, only the initial point varies.
  std::string randomize = "both";
  std::vector<MethodSpec> methods;
};

ExperimentSpec default_experiment() {
  ExperimentSpec spec;
  for (std::uint64_t s = 1; s <= 10; ++s) spec.seeds.push_back(s);
  const auto add = [&spec](SolverMethod method, const std::string& schedule,
                           const std::string& search) {
    MethodSpec m;
    m.method = method;
    m.schedule = ScheduleSpec::parse(schedule);
    m.search = SearchSpec::parse(search);
    spec.methods.push_back(std::move(m));
  };
  for (const char* scale : {"1", "1e-2", "1e-3"}) {
    add(SolverMethod::kIncremental, std::string("fixed:") + scale, "fixed");
    add(SolverMethod::kParallel, std::string("fixed:") + scale, "fixed");
  }
  add(SolverMethod::kIncremental, "paper:1", "armijo-log:8,5");
  add(SolverMethod::kParallel, "paper:1", "armijo-log:8,5");
  return spec;
}

ExperimentSpec parse_experiment(const ordered_json& json) {
  ExperimentSpec spec;
  spec.dimension = json.value("dimension", spec.dimension);
  spec.components = json.value("components", spec.components);
  spec.max_iterations = json.value("max_iterations", spec.max_iterations);
  if (json.contains("threads")) {
    const auto& threads = json["threads"];
    spec.threads = threads.is_number() ? std::to_string(threads.get<long>())
                                       : threads.get<std::string>();
  }
  spec.randomize = json.value("randomize", spec.randomize);
  if (spec.randomize != "both" && spec.randomize != "initial_only") {
    throw std::invalid_argument("randomize must be 'both' or 'initial_only'");
  }
  if (!json.contains("seeds") || !json["seeds"].is_array() || json["seeds"].empty()) {
    throw std::invalid_argument("experiment spec needs a nonempty 'seeds' array");
  }
  for (const auto& s : json["seeds"]) spec.seeds.push_back(s.get<std::uint64_t>());
  if (!json.contains("methods") || !json["methods"].is_array() ||
      json["methods"].empty()) {
    throw std::invalid_argument("experiment spec needs a nonempty 'methods' array");
  }
  for (const auto& m : json["methods"]) {
    MethodSpec method;
    method.label = m.value("label", std::string{});
    method.method = parse_method(m.value("method", std::string("psm")));
    method.schedule = ScheduleSpec::parse(m.value("schedule", std::string("paper:1")));
    method.search = SearchSpec::parse(m.value("search", std::string("armijo-log:8,5")));
    method.c1 = m.value("c1", 1e-4);
    spec.methods.push_back(std::move(method));
  }
  return spec;
}

ordered_json experiment_to_json(const ExperimentSpec& spec) {
  ordered_json json;
  json["dimension"] = spec.dimension;
  json["components"] = spec.components;
  json["seeds"] = spec.seeds;
  json["max_iterations"] = spec.max_iterations;
  json["threads"] = spec.threads;
  json["randomize"] = spec.randomize;
  json["methods"] = ordered_json::array();
  for (const MethodSpec& m : spec.methods) {
    ordered_json entry;
    if (!m.label.empty()) entry["label"] = m.label;
    entry["method"] = to_string(m.method);
    entry["schedule"] = m.schedule.to_string();
    entry["search"] = m.search.to_string();
    entry["c1"] = m.c1;
    json["methods"].push_back(std::move(entry));
  }
  return json;
}

struct CompareOptions {
  std::string spec_path;
  std::string out_path = "compare.csv";
  std::string time_out_path;
  std::string dump_spec_path;
};

int cmd_compare(const CompareOptions& opt) {
  ExperimentSpec spec;
  if (opt.spec_path.empty()) {
    spec = default_experiment();
  } else {
    std::ifstream in(opt.spec_path);
    if (!in) throw std::runtime_error("cannot open spec file: " + opt.spec_path);
    try {
      ordered_json json;
      in >> json;
      spec = parse_experiment(json);
    } catch (const nlohmann::json::exception& e) {
      throw std::invalid_argument(opt.spec_path + ": " + e.what());
    }
  }
  if (!opt.dump_spec_path.empty()) {
    auto out = open_output(opt.dump_spec_path);
    out << experiment_to_json(spec).dump(2) << '\n';
  }

  // Aggregation order is canonical (ascending seed), so permuting the seed
  // list cannot change the means.
  std::vector<std::uint64_t> seeds = spec.seeds;
  std::sort(seeds.begin(), seeds.end());

  auto out = open_output(opt.out_path);
  out << "method,n,mean_f,mean_elapsed\n";

  struct TimedTrace {
    std::vector<double> f;
    std::vector<double> elapsed;
  };
  std::map<std::string, std::vector<TimedTrace>> per_method_traces;

  for (const MethodSpec& method : spec.methods) {
    const std::string label = method.display_label();
    std::vector<double> sum_f(static_cast<std::size_t>(spec.max_iterations), 0.0);
    std::vector<double> sum_elapsed(sum_f.size(), 0.0);
    for (std::uint64_t seed : seeds) {
      try {
        const std::uint64_t instance_seed =
            spec.randomize == "both" ? seed : seeds.front();
        const L1Instance instance =
            generate_instance(instance_seed, spec.dimension, spec.components);
        const Problem problem = instance.to_problem();
        const unsigned threads =
            resolve_threads(spec.threads, problem.component_count());
        const SolverConfig config =
            make_config(method, spec.max_iterations, threads, false, true);
        const Vector x1 = generate_initial_point(seed, spec.dimension);
        const RunResult result = run(problem, x1, config);
        TimedTrace timed;
        for (std::size_t i = 0; i < result.trace.size(); ++i) {
          sum_f[i] += result.trace[i].f_value;
          sum_elapsed[i] += result.trace[i].elapsed_seconds;
          timed.f.push_back(result.trace[i].f_value);
          timed.elapsed.push_back(result.trace[i].elapsed_seconds);
        }
        per_method_traces[label].push_back(std::move(timed));
      } catch (const InadmissibleScheduleError&) {
        throw;
      } catch (const std::exception& e) {
        throw std::runtime_error("method '" + label + "' failed on seed " +
                                 std::to_string(seed) + ": " + e.what());
      }
    }
    const double count = static_cast<double>(seeds.size());
    for (std::size_t i = 0; i < sum_f.size(); ++i) {
      out << label << ',' << (i + 1) << ',' << format_double(sum_f[i] / count) << ','
          << format_double(sum_elapsed[i] / count) << '\n';
    }
    std::cout << label << ": mean final f = "
              << format_double(sum_f.back() / count) << "\n";
  }
  out.flush();
  if (!out) throw std::runtime_error("write failed: " + opt.out_path);

  // Optional time-indexed view: piecewise-constant interpolation of each
  // run onto a common 100-point grid spanning the shortest run.
  if (!opt.time_out_path.empty()) {
    double horizon = std::numeric_limits<double>::infinity();
    for (const auto& [label, traces] : per_method_traces) {
      for (const TimedTrace& t : traces) horizon = std::min(horizon, t.elapsed.back());
    }
    auto tout = open_output(opt.time_out_path);
    tout << "method,t,mean_f\n";
    constexpr int kGridPoints = 100;
    for (const MethodSpec& method : spec.methods) {
      const std::string label = method.display_label();
      const auto& traces = per_method_traces[label];
      for (int k = 1; k <= kGridPoints; ++k) {
        const double t = horizon * static_cast<double>(k) / kGridPoints;
        double sum = 0.0;
        for (const TimedTrace& trace : traces) {
          // last recorded value at or before t; first record if none
          std::size_t idx = 0;
          while (idx + 1 < trace.elapsed.size() && trace.elapsed[idx + 1] <= t) ++idx;
          sum += trace.f[idx];
        }
        tout << label << ',' << format_double(t) << ','
             << format_double(sum / static_cast<double>(traces.size())) << '\n';
      }
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Benchmark harness for incremental and parallel subgradient methods "
               "with run-time step-size selection"};
  app.require_subcommand(1);

  GenerateOptions generate_opt;
  CLI::App* generate = app.add_subcommand(
      "generate", "Generate a seeded weighted-L1 instance over the unit ball");
  generate->add_option("--seed", generate_opt.seed, "Instance seed")->required();
  generate->add_option("-N,--dim", generate_opt.dimension, "Dimension")->capture_default_str();
  generate->add_option("-K,--components", generate_opt.components,
                       "Number of objective components")->capture_default_str();
  generate->add_option("--out", generate_opt.out_path, "Output instance file")
      ->required();

  RunOptions run_opt;
  CLI::App* run_cmd =
      app.add_subcommand("run", "Run one solver on an instance and export the trace");
  run_cmd->add_option("--instance", run_opt.instance_path, "Instance file");
  run_cmd->add_option("--seed", run_opt.seed,
                      "Initial-point seed; also generates the instance when no "
                      "--instance is given (defaults to the instance's seed)");
  run_cmd->add_option("-N,--dim", run_opt.dimension, "Dimension when generating")->capture_default_str();
  run_cmd->add_option("-K,--components", run_opt.components,
                      "Components when generating")->capture_default_str();
  run_cmd->add_option("--method", run_opt.method, "baseline | ism | psm")->capture_default_str();
  run_cmd->add_option("--schedule", run_opt.schedule,
                      "paper[:c] | fixed:c | power:c,p[,olo,ohi]")->capture_default_str();
  run_cmd->add_option("--search", run_opt.search,
                      "fixed | argmin[:r1,...] | armijo-uniform:d | armijo-log:a,k")->capture_default_str();
  run_cmd->add_option("--c1", run_opt.c1, "Sufficient-decrease constant")->capture_default_str();
  run_cmd->add_option("--max-iter", run_opt.max_iterations, "Outer iterations")->capture_default_str();
  run_cmd->add_option("--threads", run_opt.threads,
                      "Parallel map width for psm: positive integer or 'auto'")->capture_default_str();
  run_cmd->add_flag("--monitor-lemmas", run_opt.monitor_lemmas,
                    "Check the descent inequality each iteration and add the "
                    "lemma_gap column");
  run_cmd->add_flag("!--no-strict", run_opt.strict,
                    "Allow schedules that fail the admissibility check");
  run_cmd->add_option("--out", run_opt.out_path, "Trace CSV path");

  SpeedupOptions speedup_opt;
  CLI::App* speedup = app.add_subcommand(
      "bench-speedup", "Paired multi-core vs sequential timing of the parallel method");
  speedup->add_option("--instance", speedup_opt.instance_path, "Instance file");
  speedup->add_option("--seed", speedup_opt.seed, "Seed when generating in place");
  speedup->add_option("-N,--dim", speedup_opt.dimension, "Dimension when generating")->capture_default_str();
  speedup->add_option("-K,--components", speedup_opt.components,
                      "Components when generating")->capture_default_str();
  speedup->add_option("--max-iter", speedup_opt.max_iterations, "Outer iterations")->capture_default_str();
  speedup->add_option("--out", speedup_opt.out_path, "Speedup CSV path (default speedup.csv)");

  CompareOptions compare_opt;
  CLI::App* compare = app.add_subcommand(
      "compare", "Multi-seed comparison of several methods; aggregates per iteration");
  compare->add_option("--spec", compare_opt.spec_path,
                      "Experiment spec JSON (omit for the built-in desk-scale sweep)");
  compare->add_option("--out", compare_opt.out_path, "Aggregate CSV path")->capture_default_str();
  compare->add_option("--time-out", compare_opt.time_out_path,
                      "Optional time-indexed aggregate CSV");
  compare->add_option("--dump-spec", compare_opt.dump_spec_path,
                      "Write the effective experiment spec as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalidConfig;
  }

  try {
    if (generate->parsed()) return cmd_generate(generate_opt);
    if (run_cmd->parsed()) return cmd_run(run_opt);
    if (speedup->parsed()) return cmd_bench_speedup(speedup_opt);
    if (compare->parsed()) return cmd_compare(compare_opt);
  } catch (const InadmissibleScheduleError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInadmissibleSchedule;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIoError;
  }
  return 0;
}
