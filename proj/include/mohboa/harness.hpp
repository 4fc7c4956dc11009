#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "mohboa/engine.hpp"

namespace mohboa {

/// Outcome of testing one population size (normally 10 seeded runs).
struct ProbeOutcome {
  bool success = false;
  bool budget_exhausted = false;
  std::uint64_t evaluations_spent = 0;
  std::vector<std::uint64_t> run_evaluations;  // one per successful run
};

// probe(population, repetition, remaining budget)
using Probe = std::function<ProbeOutcome(std::size_t, std::size_t, std::uint64_t)>;

struct BisectionOptions {
  std::size_t initial_population = 16;
  std::size_t max_population = std::size_t{1} << 20;
  double width = 1.1;  // stop once high / low <= width
  std::size_t reps = 10;
  std::size_t runs = 10;  // runs per probe that must all succeed
  std::uint64_t budget = std::numeric_limits<std::uint64_t>::max();
};

struct BisectionResult {
  std::string problem;
  std::size_t n = 0;
  std::string algorithm;
  std::string clustering;
  std::string replacement;

  bool success = false;
  std::string failure;                      // "budget" or "population-cap" on failure
  std::vector<std::size_t> rep_populations; // final N of each completed repetition
  double min_pop = 0;                       // mean of rep_populations
  std::size_t last_failing = 0;             // largest population seen failing (0: none)
  std::vector<std::uint64_t> evaluations;   // successful runs at each repetition's final N
  double mean_evals = 0;
  double std_evals = 0;
  std::uint64_t evaluations_spent = 0;
};

// Doubling from initial_population until a probe passes, then bisection on
// [last failing, first passing] down to the requested width, repeated
// opts.reps times. Budget exhaustion and hitting max_population produce a
// failure record.
BisectionResult bisect(const Probe& probe, const BisectionOptions& opts);

// All seeded runs at population N must cover the front. Stops at the first
// failed run, or before a run once the budget is spent.
ProbeOutcome success_criterion(const AlgorithmConfig& cfg, std::size_t population,
                               std::span<const std::uint64_t> seeds,
                               std::uint64_t budget = std::numeric_limits<std::uint64_t>::max());

// Seed of a grid point; depends only on the configuration and base seed.
std::uint64_t point_seed(const AlgorithmConfig& cfg, std::uint64_t base_seed);
std::vector<std::uint64_t> run_seeds(std::uint64_t point, std::size_t rep, std::size_t runs);

BisectionResult bisect_population(const AlgorithmConfig& cfg, const BisectionOptions& opts,
                                  std::uint64_t base_seed);

struct SweepTable {
  std::vector<BisectionResult> rows;
};

// One bisection per grid point, rows ordered by (problem, n, algorithm,
// clustering, replacement).
SweepTable sweep(std::span<const AlgorithmConfig> grid, const BisectionOptions& opts,
                 std::uint64_t base_seed);

// Copies of each variant with the problem resized to each entry of sizes.
std::vector<AlgorithmConfig> make_grid(std::span<const std::size_t> sizes,
                                       std::span<const AlgorithmConfig> variants);

extern const char* const kSweepCsvHeader;
std::string csv_row(const BisectionResult& r);
void emit_csv(const SweepTable& table, std::ostream& out);
void emit_csv(const SweepTable& table, const std::filesystem::path& path);

extern const char* const kRunCsvHeader;
std::string run_csv_row(const AlgorithmConfig& cfg, std::uint64_t seed, const RunResult& r);

void fill_labels(BisectionResult& r, const AlgorithmConfig& cfg);

}  // namespace mohboa
