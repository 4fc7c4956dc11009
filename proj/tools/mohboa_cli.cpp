// Command-line front end. Talks to the library only through mohboa.h.

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "mohboa/mohboa.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct CliError {
  int code;
};

void check(mohboa_status status) {
  if (status == MOHBOA_OK) return;
  std::cerr << "error: " << mohboa_last_error() << '\n';
  throw CliError{status == MOHBOA_INVALID_ARGUMENT ? kExitUsage : kExitFailure};
}

template <class T, void (*Destroy)(T*)>
struct Handle {
  T* ptr = nullptr;
  Handle() = default;
  Handle(const Handle&) = delete;
  Handle& operator=(const Handle&) = delete;
  ~Handle() { Destroy(ptr); }
  T** out() { return &ptr; }
  T* get() const { return ptr; }
};

using Config = Handle<mohboa_config, mohboa_config_destroy>;

struct ProblemFlags {
  std::string problem = "onemax-zeromax";
  std::size_t size = 0;
  std::string partition = "contiguous";
};

struct AlgoFlags {
  std::string algo = "hboa";
  std::string clustering = "auto";
  std::string replacement = "rtr";
  std::string max_gens_mult;
  std::string pc = "0.6";
  std::string pm = "auto";
  std::string rtr_window = "auto";
  std::string crowding = "raw";
};

void add_problem_flags(CLI::App* app, ProblemFlags& f) {
  app->add_option("--problem", f.problem, "onemax-zeromax | trap5-invtrap5")->required();
  app->add_option("--size", f.size, "problem size in bits")->required();
  app->add_option("--partition", f.partition, "trap partition: contiguous | shuffled");
}

void add_algo_flags(CLI::App* app, AlgoFlags& f) {
  app->add_option("--algo", f.algo, "umda | ga | hboa");
  app->add_option("--clustering", f.clustering, "auto | off | K");
  app->add_option("--replacement", f.replacement, "elitist | rtr | rtr-objective");
  app->add_option("--max-gens-mult", f.max_gens_mult, "generation cap as a multiple of n");
  app->add_option("--pc", f.pc, "crossover probability");
  app->add_option("--pm", f.pm, "per-bit mutation probability or auto (1/n)");
  app->add_option("--rtr-window", f.rtr_window, "RTR window size or auto");
  app->add_option("--crowding", f.crowding, "raw | normalized");
}

void set(mohboa_config* cfg, const char* key, const std::string& value) {
  check(mohboa_config_set(cfg, key, value.c_str()));
}

void apply_problem(mohboa_config* cfg, const ProblemFlags& p, std::uint64_t partition_seed) {
  set(cfg, "problem", p.problem);
  set(cfg, "size", std::to_string(p.size));
  set(cfg, "partition", p.partition);
  set(cfg, "partition-seed", std::to_string(partition_seed));
}

void apply_algo(mohboa_config* cfg, const AlgoFlags& a) {
  set(cfg, "algo", a.algo);
  set(cfg, "clustering", a.clustering);
  set(cfg, "replacement", a.replacement);
  if (!a.max_gens_mult.empty()) set(cfg, "max-gens-mult", a.max_gens_mult);
  set(cfg, "pc", a.pc);
  set(cfg, "pm", a.pm);
  set(cfg, "rtr-window", a.rtr_window);
  set(cfg, "crowding", a.crowding);
}

struct BisectFlags {
  std::size_t reps = 10;
  std::size_t runs = 10;
  std::uint64_t budget = std::numeric_limits<std::uint64_t>::max();
  std::size_t initial = 16;
  std::size_t max_pop = std::size_t{1} << 20;
  std::uint64_t seed = 1;
};

void add_bisect_flags(CLI::App* app, BisectFlags& f) {
  app->add_option("--reps", f.reps, "independent bisection repetitions");
  app->add_option("--runs", f.runs, "runs per population that must all succeed");
  app->add_option("--budget", f.budget, "total evaluation budget");
  app->add_option("--n0", f.initial, "initial population of the doubling phase");
  app->add_option("--max-pop", f.max_pop, "largest population the doubling phase may try");
  app->add_option("--seed", f.seed, "base seed");
}

mohboa_bisect_options to_options(const BisectFlags& f) {
  mohboa_bisect_options o;
  mohboa_bisect_options_init(&o);
  o.reps = f.reps;
  o.runs = f.runs;
  o.budget = f.budget;
  o.initial_population = f.initial;
  o.max_population = f.max_pop;
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multiobjective EDA laboratory: runs, population bisection, scalability sweeps"};
  app.require_subcommand(1);

  ProblemFlags run_problem;
  AlgoFlags run_algo;
  std::size_t run_pop = 0;
  std::uint64_t run_seed = 1;
  bool run_header = false;
  auto* run_cmd = app.add_subcommand("run", "single seeded run, printed as one CSV row");
  add_problem_flags(run_cmd, run_problem);
  add_algo_flags(run_cmd, run_algo);
  run_cmd->add_option("--pop", run_pop, "population size")->required();
  run_cmd->add_option("--seed", run_seed, "run seed");
  run_cmd->add_flag("--header", run_header, "print the CSV header first");

  ProblemFlags bis_problem;
  AlgoFlags bis_algo;
  BisectFlags bis_flags;
  bool bis_header = false;
  auto* bis_cmd = app.add_subcommand("bisect", "minimum population by doubling and bisection");
  add_problem_flags(bis_cmd, bis_problem);
  add_algo_flags(bis_cmd, bis_algo);
  add_bisect_flags(bis_cmd, bis_flags);
  bis_cmd->add_flag("--header", bis_header, "print the CSV header first");

  std::vector<std::size_t> sw_sizes;
  std::string sw_problem = "onemax-zeromax";
  std::string sw_partition = "contiguous";
  std::vector<std::string> sw_algos{"hboa"};
  std::vector<std::string> sw_clusterings{"auto"};
  std::vector<std::string> sw_replacements{"rtr"};
  AlgoFlags sw_common;
  BisectFlags sw_flags;
  std::string sw_out;
  auto* sw_cmd = app.add_subcommand("sweep", "bisection over problem sizes and algorithm variants");
  sw_cmd->add_option("--sizes", sw_sizes, "comma-separated problem sizes")->required()->delimiter(',');
  sw_cmd->add_option("--problem", sw_problem, "onemax-zeromax | trap5-invtrap5");
  sw_cmd->add_option("--partition", sw_partition, "trap partition: contiguous | shuffled");
  sw_cmd->add_option("--algo", sw_algos, "variant operator (repeatable)");
  sw_cmd->add_option("--clustering", sw_clusterings, "variant clustering (repeatable; one value applies to all)");
  sw_cmd->add_option("--replacement", sw_replacements, "variant replacement (repeatable; one value applies to all)");
  sw_cmd->add_option("--max-gens-mult", sw_common.max_gens_mult, "generation cap as a multiple of n");
  sw_cmd->add_option("--pc", sw_common.pc, "crossover probability");
  sw_cmd->add_option("--pm", sw_common.pm, "per-bit mutation probability or auto");
  sw_cmd->add_option("--crowding", sw_common.crowding, "raw | normalized");
  add_bisect_flags(sw_cmd, sw_flags);
  sw_cmd->add_option("--out", sw_out, "CSV output file")->required();

  ProblemFlags fr_problem;
  auto* fr_cmd = app.add_subcommand("front", "print the reference Pareto front");
  add_problem_flags(fr_cmd, fr_problem);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*run_cmd) {
      Config cfg;
      check(mohboa_config_create(cfg.out()));
      apply_problem(cfg.get(), run_problem, run_seed);
      apply_algo(cfg.get(), run_algo);
      set(cfg.get(), "pop", std::to_string(run_pop));
      Handle<mohboa_run_result, mohboa_result_destroy> result;
      check(mohboa_run_config(cfg.get(), run_seed, result.out()));
      if (run_header) std::cout << mohboa_run_csv_header() << '\n';
      std::cout << mohboa_result_csv_row(result.get()) << '\n';
      return mohboa_result_success(result.get()) ? kExitOk : kExitFailure;
    }

    if (*bis_cmd) {
      Config cfg;
      check(mohboa_config_create(cfg.out()));
      apply_problem(cfg.get(), bis_problem, bis_flags.seed);
      apply_algo(cfg.get(), bis_algo);
      const auto opts = to_options(bis_flags);
      Handle<mohboa_bisection, mohboa_bisection_destroy> result;
      check(mohboa_bisect(cfg.get(), &opts, bis_flags.seed, result.out()));
      if (bis_header) std::cout << mohboa_sweep_csv_header() << '\n';
      std::cout << mohboa_bisection_csv_row(result.get()) << '\n';
      return mohboa_bisection_success(result.get()) ? kExitOk : kExitFailure;
    }

    if (*sw_cmd) {
      std::size_t variants = std::max({sw_algos.size(), sw_clusterings.size(), sw_replacements.size()});
      auto pick = [&](const std::vector<std::string>& v, std::size_t i, const char* flag) {
        if (v.size() == 1) return v.front();
        if (v.size() != variants) {
          std::cerr << "error: " << flag << " must be given once or once per variant\n";
          throw CliError{kExitUsage};
        }
        return v[i];
      };
      Handle<mohboa_sweep, mohboa_sweep_destroy> sw;
      check(mohboa_sweep_create(sw.out()));
      for (std::size_t n : sw_sizes) check(mohboa_sweep_add_size(sw.get(), n));
      for (std::size_t i = 0; i < variants; ++i) {
        Config cfg;
        check(mohboa_config_create(cfg.out()));
        ProblemFlags p{sw_problem, sw_sizes.front(), sw_partition};
        apply_problem(cfg.get(), p, sw_flags.seed);
        AlgoFlags a = sw_common;
        a.algo = pick(sw_algos, i, "--algo");
        a.clustering = pick(sw_clusterings, i, "--clustering");
        a.replacement = pick(sw_replacements, i, "--replacement");
        apply_algo(cfg.get(), a);
        check(mohboa_sweep_add_variant(sw.get(), cfg.get()));
      }
      const auto opts = to_options(sw_flags);
      check(mohboa_sweep_execute(sw.get(), &opts, sw_flags.seed));
      check(mohboa_sweep_write_csv(sw.get(), sw_out.c_str()));
      bool all_ok = true;
      for (std::size_t r = 0; r < mohboa_sweep_row_count(sw.get()); ++r)
        all_ok = all_ok && mohboa_sweep_row_success(sw.get(), r);
      return all_ok ? kExitOk : kExitFailure;
    }

    if (*fr_cmd) {
      Config cfg;
      check(mohboa_config_create(cfg.out()));
      apply_problem(cfg.get(), fr_problem, 0);
      Handle<mohboa_front, mohboa_front_destroy> front;
      check(mohboa_front_create(cfg.get(), front.out()));
      for (std::size_t i = 0; i < mohboa_front_size(front.get()); ++i) {
        double a = 0;
        double b = 0;
        check(mohboa_front_point(front.get(), i, &a, &b));
        std::cout << static_cast<long long>(a) << ',' << static_cast<long long>(b) << '\n';
      }
      return kExitOk;
    }
  } catch (const CliError& e) {
    return e.code;
  }
  return kExitUsage;
}
