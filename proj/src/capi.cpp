#include "mohboa/mohboa.h"

#include <charconv>
#include <exception>
#include <limits>
#include <memory>
#include <new>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mohboa/engine.hpp"
#include "mohboa/errors.hpp"
#include "mohboa/harness.hpp"

using namespace mohboa;

namespace {

thread_local std::string g_last_error;

template <class T>
T parse_number(std::string_view key, std::string_view text) {
  T value{};
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || end != text.data() + text.size())
    throw InvalidArgument("invalid value '" + std::string(text) + "' for " + std::string(key));
  return value;
}

std::size_t parse_positive(std::string_view key, std::string_view text) {
  const auto v = parse_number<std::size_t>(key, text);
  if (v == 0) throw InvalidArgument(std::string(key) + " must be positive");
  return v;
}

template <class F>
mohboa_status guarded(F&& body) noexcept {
  try {
    body();
    return MOHBOA_OK;
  } catch (const InvalidArgument& e) {
    g_last_error = e.what();
    return MOHBOA_INVALID_ARGUMENT;
  } catch (const InvalidState& e) {
    g_last_error = e.what();
    return MOHBOA_INVALID_STATE;
  } catch (const IoError& e) {
    g_last_error = e.what();
    return MOHBOA_IO_ERROR;
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return MOHBOA_INTERNAL_ERROR;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return MOHBOA_INTERNAL_ERROR;
  } catch (...) {
    g_last_error = "unknown error";
    return MOHBOA_INTERNAL_ERROR;
  }
}

void require(const void* p, const char* what) {
  if (p == nullptr) throw InvalidArgument(std::string(what) + " must not be null");
}

BisectionOptions to_options(const mohboa_bisect_options* opts) {
  BisectionOptions o;
  if (opts == nullptr) return o;
  o.initial_population = opts->initial_population;
  o.max_population = opts->max_population;
  o.width = opts->width;
  o.reps = opts->reps;
  o.runs = opts->runs;
  o.budget = opts->budget;
  if (o.initial_population == 0 || o.max_population < o.initial_population)
    throw InvalidArgument("bisection needs 0 < initial_population <= max_population");
  if (o.runs == 0 || o.reps == 0) throw InvalidArgument("bisection needs positive reps and runs");
  return o;
}

}  // namespace

struct mohboa_config {
  ProblemKind problem = ProblemKind::OnemaxZeromax;
  std::size_t size = 10;
  PartitionMode partition = PartitionMode::Contiguous;
  std::uint64_t partition_seed = 0;
  AlgorithmConfig algo;

  AlgorithmConfig resolve() const {
    AlgorithmConfig c = algo;
    if (problem == ProblemKind::OnemaxZeromax) {
      c.problem = Problem::onemax_zeromax(size);
    } else {
      RandomSource rng(partition_seed);
      c.problem = Problem::trap5_invtrap5(size, make_partition(size, partition, rng));
    }
    c.validate();
    return c;
  }

  void set(std::string_view key, std::string_view value) {
    if (key == "problem") {
      const auto k = parse_problem_kind(value);
      if (!k) throw InvalidArgument("unknown problem '" + std::string(value) + "'");
      problem = *k;
    } else if (key == "size") {
      size = parse_positive(key, value);
    } else if (key == "algo") {
      const auto op = parse_operator(value);
      if (!op) throw InvalidArgument("unknown algorithm '" + std::string(value) + "'");
      algo.op = *op;
    } else if (key == "clustering") {
      const auto c = parse_clustering(value);
      if (!c) throw InvalidArgument("clustering must be auto, off or a positive integer");
      algo.clustering = *c;
    } else if (key == "replacement") {
      const auto r = parse_replacement(value);
      if (!r) throw InvalidArgument("unknown replacement '" + std::string(value) + "'");
      const auto window = algo.replacement.window;
      algo.replacement = *r;
      algo.replacement.window = window;
    } else if (key == "pop") {
      algo.population_size = parse_positive(key, value);
    } else if (key == "max-gens-mult") {
      algo.max_generations_multiplier = parse_number<double>(key, value);
    } else if (key == "max-gens") {
      algo.max_generations = parse_number<std::size_t>(key, value);
    } else if (key == "pc") {
      algo.ga.crossover_probability = parse_number<double>(key, value);
    } else if (key == "pm") {
      if (value == "auto")
        algo.ga.mutation_probability.reset();
      else
        algo.ga.mutation_probability = parse_number<double>(key, value);
    } else if (key == "partition") {
      const auto m = parse_partition_mode(value);
      if (!m) throw InvalidArgument("partition must be contiguous or shuffled");
      partition = *m;
    } else if (key == "partition-seed") {
      partition_seed = parse_number<std::uint64_t>(key, value);
    } else if (key == "rtr-window") {
      if (value == "auto")
        algo.replacement.window.reset();
      else
        algo.replacement.window = parse_positive(key, value);
    } else if (key == "crowding") {
      if (value == "raw")
        algo.crowding.normalize = false;
      else if (value == "normalized")
        algo.crowding.normalize = true;
      else
        throw InvalidArgument("crowding must be raw or normalized");
    } else if (key == "kmeans-restarts") {
      algo.kmeans.restarts = parse_positive(key, value);
    } else if (key == "kmeans-iters") {
      algo.kmeans.max_iters = parse_positive(key, value);
    } else {
      throw InvalidArgument("unknown configuration key '" + std::string(key) + "'");
    }
  }
};

struct mohboa_run_result {
  RunResult result;
  std::string csv;
};

struct mohboa_run {
  RunState state;
  std::uint64_t seed;
};

struct mohboa_bisection {
  BisectionResult result;
  std::string csv;
};

struct mohboa_sweep {
  std::vector<std::size_t> sizes;
  std::vector<mohboa_config> variants;
  SweepTable table;
  std::vector<std::string> csv;
};

struct mohboa_front {
  ReferenceFront front;
};

extern "C" {

const char* mohboa_last_error(void) { return g_last_error.c_str(); }

const char* mohboa_status_name(mohboa_status status) {
  switch (status) {
    case MOHBOA_OK:
      return "ok";
    case MOHBOA_INVALID_ARGUMENT:
      return "invalid-argument";
    case MOHBOA_INVALID_STATE:
      return "invalid-state";
    case MOHBOA_IO_ERROR:
      return "io-error";
    case MOHBOA_INTERNAL_ERROR:
      return "internal-error";
  }
  return "unknown";
}

mohboa_status mohboa_config_create(mohboa_config** out) {
  return guarded([&] {
    require(out, "out");
    *out = new mohboa_config();
  });
}

mohboa_status mohboa_config_clone(const mohboa_config* cfg, mohboa_config** out) {
  return guarded([&] {
    require(cfg, "cfg");
    require(out, "out");
    *out = new mohboa_config(*cfg);
  });
}

void mohboa_config_destroy(mohboa_config* cfg) { delete cfg; }

mohboa_status mohboa_config_set(mohboa_config* cfg, const char* key, const char* value) {
  return guarded([&] {
    require(cfg, "cfg");
    require(key, "key");
    require(value, "value");
    cfg->set(key, value);
  });
}

mohboa_status mohboa_config_validate(const mohboa_config* cfg) {
  return guarded([&] {
    require(cfg, "cfg");
    (void)cfg->resolve();
  });
}

mohboa_status mohboa_run_config(const mohboa_config* cfg, uint64_t seed, mohboa_run_result** out) {
  return guarded([&] {
    require(cfg, "cfg");
    require(out, "out");
    const AlgorithmConfig c = cfg->resolve();
    auto r = std::make_unique<mohboa_run_result>();
    r->result = run(c, seed);
    r->csv = run_csv_row(c, seed, r->result);
    *out = r.release();
  });
}

mohboa_status mohboa_run_create(const mohboa_config* cfg, uint64_t seed, mohboa_run** out) {
  return guarded([&] {
    require(cfg, "cfg");
    require(out, "out");
    *out = new mohboa_run{RunState(cfg->resolve(), seed), seed};
  });
}

void mohboa_run_destroy(mohboa_run* run) { delete run; }

mohboa_status mohboa_run_step(mohboa_run* run) {
  return guarded([&] {
    require(run, "run");
    run->state.step();
  });
}

int mohboa_run_terminated(const mohboa_run* run) { return run && run->state.terminated() ? 1 : 0; }

uint64_t mohboa_run_evaluations(const mohboa_run* run) { return run ? run->state.evaluations() : 0; }

mohboa_status mohboa_run_result_get(const mohboa_run* run, mohboa_run_result** out) {
  return guarded([&] {
    require(run, "run");
    require(out, "out");
    auto r = std::make_unique<mohboa_run_result>();
    r->result = run->state.result();
    r->csv = run_csv_row(run->state.config(), run->seed, r->result);
    *out = r.release();
  });
}

void mohboa_result_destroy(mohboa_run_result* result) { delete result; }
int mohboa_result_success(const mohboa_run_result* r) { return r && r->result.success ? 1 : 0; }
uint64_t mohboa_result_generations(const mohboa_run_result* r) { return r ? r->result.generations : 0; }
uint64_t mohboa_result_evaluations(const mohboa_run_result* r) { return r ? r->result.evaluations : 0; }
uint64_t mohboa_result_coverage(const mohboa_run_result* r) { return r ? r->result.coverage : 0; }
uint64_t mohboa_result_front_size(const mohboa_run_result* r) { return r ? r->result.front_size : 0; }
size_t mohboa_result_trajectory_length(const mohboa_run_result* r) {
  return r ? r->result.trajectory.size() : 0;
}
uint64_t mohboa_result_trajectory_at(const mohboa_run_result* r, size_t generation) {
  if (!r || generation >= r->result.trajectory.size()) return 0;
  return r->result.trajectory[generation];
}
const char* mohboa_result_csv_row(const mohboa_run_result* r) { return r ? r->csv.c_str() : ""; }
const char* mohboa_run_csv_header(void) { return kRunCsvHeader; }

void mohboa_bisect_options_init(mohboa_bisect_options* opts) {
  if (!opts) return;
  const BisectionOptions d;
  opts->initial_population = d.initial_population;
  opts->max_population = d.max_population;
  opts->width = d.width;
  opts->reps = d.reps;
  opts->runs = d.runs;
  opts->budget = d.budget;
}

mohboa_status mohboa_bisect(const mohboa_config* cfg, const mohboa_bisect_options* opts,
                            uint64_t base_seed, mohboa_bisection** out) {
  return guarded([&] {
    require(cfg, "cfg");
    require(out, "out");
    auto b = std::make_unique<mohboa_bisection>();
    b->result = bisect_population(cfg->resolve(), to_options(opts), base_seed);
    b->csv = csv_row(b->result);
    *out = b.release();
  });
}

void mohboa_bisection_destroy(mohboa_bisection* b) { delete b; }
int mohboa_bisection_success(const mohboa_bisection* b) { return b && b->result.success ? 1 : 0; }
double mohboa_bisection_min_pop(const mohboa_bisection* b) { return b ? b->result.min_pop : 0; }
size_t mohboa_bisection_last_failing(const mohboa_bisection* b) { return b ? b->result.last_failing : 0; }
double mohboa_bisection_mean_evals(const mohboa_bisection* b) { return b ? b->result.mean_evals : 0; }
double mohboa_bisection_std_evals(const mohboa_bisection* b) { return b ? b->result.std_evals : 0; }
size_t mohboa_bisection_runs(const mohboa_bisection* b) { return b ? b->result.evaluations.size() : 0; }
uint64_t mohboa_bisection_evaluations_spent(const mohboa_bisection* b) {
  return b ? b->result.evaluations_spent : 0;
}
const char* mohboa_bisection_csv_row(const mohboa_bisection* b) { return b ? b->csv.c_str() : ""; }
const char* mohboa_sweep_csv_header(void) { return kSweepCsvHeader; }

mohboa_status mohboa_sweep_create(mohboa_sweep** out) {
  return guarded([&] {
    require(out, "out");
    *out = new mohboa_sweep();
  });
}

void mohboa_sweep_destroy(mohboa_sweep* s) { delete s; }

mohboa_status mohboa_sweep_add_size(mohboa_sweep* s, size_t n) {
  return guarded([&] {
    require(s, "sweep");
    if (n == 0) throw InvalidArgument("sweep sizes must be positive");
    s->sizes.push_back(n);
  });
}

mohboa_status mohboa_sweep_add_variant(mohboa_sweep* s, const mohboa_config* cfg) {
  return guarded([&] {
    require(s, "sweep");
    require(cfg, "cfg");
    s->variants.push_back(*cfg);
  });
}

mohboa_status mohboa_sweep_execute(mohboa_sweep* s, const mohboa_bisect_options* opts,
                                   uint64_t base_seed) {
  return guarded([&] {
    require(s, "sweep");
    if (s->sizes.empty() || s->variants.empty())
      throw InvalidArgument("sweep needs at least one size and one variant");
    std::vector<AlgorithmConfig> grid;
    for (std::size_t n : s->sizes)
      for (const auto& v : s->variants) {
        mohboa_config c = v;
        c.size = n;
        grid.push_back(c.resolve());
      }
    s->table = sweep(grid, to_options(opts), base_seed);
    s->csv.clear();
    for (const auto& row : s->table.rows) s->csv.push_back(csv_row(row));
  });
}

size_t mohboa_sweep_row_count(const mohboa_sweep* s) { return s ? s->table.rows.size() : 0; }

int mohboa_sweep_row_success(const mohboa_sweep* s, size_t row) {
  return s && row < s->table.rows.size() && s->table.rows[row].success ? 1 : 0;
}

const char* mohboa_sweep_row_csv(const mohboa_sweep* s, size_t row) {
  if (!s || row >= s->csv.size()) return "";
  return s->csv[row].c_str();
}

mohboa_status mohboa_sweep_write_csv(const mohboa_sweep* s, const char* path) {
  return guarded([&] {
    require(s, "sweep");
    require(path, "path");
    emit_csv(s->table, std::filesystem::path(path));
  });
}

mohboa_status mohboa_front_create(const mohboa_config* cfg, mohboa_front** out) {
  return guarded([&] {
    require(cfg, "cfg");
    require(out, "out");
    *out = new mohboa_front{reference_front(cfg->resolve().problem)};
  });
}

void mohboa_front_destroy(mohboa_front* f) { delete f; }

size_t mohboa_front_size(const mohboa_front* f) { return f ? f->front.size() : 0; }

mohboa_status mohboa_front_point(const mohboa_front* f, size_t index, double* first, double* second) {
  return guarded([&] {
    require(f, "front");
    require(first, "first");
    require(second, "second");
    if (index >= f->front.size()) throw InvalidArgument("front index out of range");
    *first = f->front.points[index][0];
    *second = f->front.points[index][1];
  });
}

}  // extern "C"
