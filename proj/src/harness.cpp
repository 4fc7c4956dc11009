#include "mohboa/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <ostream>
#include <tuple>

#include "mohboa/errors.hpp"

namespace mohboa {

namespace {

std::string format_real(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

struct RepOutcome {
  bool success = false;
  std::string failure;
  std::size_t population = 0;
  std::size_t last_failing = 0;
  std::vector<std::uint64_t> evaluations;
};

RepOutcome bisect_once(const Probe& probe, const BisectionOptions& opts, std::size_t rep,
                       std::uint64_t& spent) {
  RepOutcome out;
  auto try_size = [&](std::size_t population, ProbeOutcome& result) {
    const std::uint64_t remaining = opts.budget > spent ? opts.budget - spent : 0;
    if (remaining == 0) return false;
    result = probe(population, rep, remaining);
    spent += result.evaluations_spent;
    return !result.budget_exhausted;
  };

  std::size_t population = std::max<std::size_t>(1, opts.initial_population);
  std::size_t high = 0;
  ProbeOutcome result;
  for (;;) {
    if (!try_size(population, result)) {
      out.failure = "budget";
      return out;
    }
    if (result.success) {
      high = population;
      out.evaluations = std::move(result.run_evaluations);
      break;
    }
    out.last_failing = population;
    if (population > opts.max_population / 2) {
      out.failure = "population-cap";
      return out;
    }
    population *= 2;
  }

  std::size_t low = out.last_failing;
  while (low > 0 && static_cast<double>(high) > opts.width * static_cast<double>(low)) {
    const std::size_t mid = low + (high - low) / 2;
    if (mid == low || mid == high) break;
    if (!try_size(mid, result)) {
      out.failure = "budget";
      return out;
    }
    if (result.success) {
      high = mid;
      out.evaluations = std::move(result.run_evaluations);
    } else {
      low = mid;
      out.last_failing = std::max(out.last_failing, mid);
    }
  }
  out.success = true;
  out.population = high;
  return out;
}

}  // namespace

BisectionResult bisect(const Probe& probe, const BisectionOptions& opts) {
  if (opts.reps == 0) throw InvalidArgument("bisect: at least one repetition required");
  if (!(opts.width > 1.0)) throw InvalidArgument("bisect: width must exceed 1");
  BisectionResult r;
  r.success = true;
  for (std::size_t rep = 0; rep < opts.reps; ++rep) {
    RepOutcome o = bisect_once(probe, opts, rep, r.evaluations_spent);
    r.last_failing = std::max(r.last_failing, o.last_failing);
    if (!o.success) {
      r.success = false;
      r.failure = o.failure;
      break;
    }
    r.rep_populations.push_back(o.population);
    r.evaluations.insert(r.evaluations.end(), o.evaluations.begin(), o.evaluations.end());
  }
  if (!r.rep_populations.empty())
    r.min_pop = std::accumulate(r.rep_populations.begin(), r.rep_populations.end(), 0.0) /
                static_cast<double>(r.rep_populations.size());
  if (!r.evaluations.empty()) {
    const double count = static_cast<double>(r.evaluations.size());
    double sum = 0;
    for (auto e : r.evaluations) sum += static_cast<double>(e);
    r.mean_evals = sum / count;
    double sq = 0;
    for (auto e : r.evaluations) sq += (static_cast<double>(e) - r.mean_evals) * (static_cast<double>(e) - r.mean_evals);
    r.std_evals = r.evaluations.size() > 1 ? std::sqrt(sq / (count - 1)) : 0.0;
  }
  return r;
}

ProbeOutcome success_criterion(const AlgorithmConfig& cfg, std::size_t population,
                               std::span<const std::uint64_t> seeds, std::uint64_t budget) {
  AlgorithmConfig c = cfg;
  c.population_size = population;
  c.validate();
  ProbeOutcome out;
  out.success = true;
  for (std::uint64_t seed : seeds) {
    if (out.evaluations_spent >= budget) {
      out.success = false;
      out.budget_exhausted = true;
      return out;
    }
    const RunResult r = run(c, seed);
    out.evaluations_spent += r.evaluations;
    if (!r.success) {
      out.success = false;
      return out;
    }
    out.run_evaluations.push_back(r.evaluations);
  }
  return out;
}

std::uint64_t point_seed(const AlgorithmConfig& cfg, std::uint64_t base_seed) {
  std::string key(cfg.problem.name());
  key += '|' + std::to_string(cfg.problem.size());
  key += '|' + cfg.algorithm_id();
  key += '|' + clustering_label(cfg.clustering);
  key += '|' + std::string(replacement_label(cfg.replacement));
  return mix_seed(base_seed, hash_key(key));
}

std::vector<std::uint64_t> run_seeds(std::uint64_t point, std::size_t rep, std::size_t runs) {
  const std::uint64_t rep_seed = mix_seed(point, rep);
  std::vector<std::uint64_t> seeds(runs);
  for (std::size_t i = 0; i < runs; ++i) seeds[i] = mix_seed(rep_seed, i);
  return seeds;
}

void fill_labels(BisectionResult& r, const AlgorithmConfig& cfg) {
  r.problem = std::string(cfg.problem.name());
  r.n = cfg.problem.size();
  r.algorithm = cfg.algorithm_id();
  r.clustering = clustering_label(cfg.clustering);
  r.replacement = std::string(replacement_label(cfg.replacement));
}

BisectionResult bisect_population(const AlgorithmConfig& cfg, const BisectionOptions& opts,
                                  std::uint64_t base_seed) {
  cfg.validate();
  const std::uint64_t point = point_seed(cfg, base_seed);
  Probe probe = [&](std::size_t population, std::size_t rep, std::uint64_t remaining) {
    return success_criterion(cfg, population, run_seeds(point, rep, opts.runs), remaining);
  };
  BisectionResult r = bisect(probe, opts);
  fill_labels(r, cfg);
  return r;
}

SweepTable sweep(std::span<const AlgorithmConfig> grid, const BisectionOptions& opts,
                 std::uint64_t base_seed) {
  SweepTable table;
  for (const auto& cfg : grid) table.rows.push_back(bisect_population(cfg, opts, base_seed));
  std::stable_sort(table.rows.begin(), table.rows.end(), [](const auto& a, const auto& b) {
    return std::tie(a.problem, a.n, a.algorithm, a.clustering, a.replacement) <
           std::tie(b.problem, b.n, b.algorithm, b.clustering, b.replacement);
  });
  return table;
}

std::vector<AlgorithmConfig> make_grid(std::span<const std::size_t> sizes,
                                       std::span<const AlgorithmConfig> variants) {
  std::vector<AlgorithmConfig> grid;
  for (std::size_t n : sizes)
    for (const auto& v : variants) {
      AlgorithmConfig c = v;
      c.problem = v.problem.kind() == ProblemKind::OnemaxZeromax ? Problem::onemax_zeromax(n)
                                                                 : Problem::trap5_invtrap5(n);
      grid.push_back(std::move(c));
    }
  return grid;
}

const char* const kSweepCsvHeader =
    "problem,n,algorithm,clustering,replacement,min_pop,mean_evals,std_evals,runs";

std::string csv_row(const BisectionResult& r) {
  std::string row = r.problem + ',' + std::to_string(r.n) + ',' + r.algorithm + ',' +
                    r.clustering + ',' + r.replacement + ',';
  if (r.success) {
    row += format_real(r.min_pop) + ',' + format_real(r.mean_evals) + ',' +
           format_real(r.std_evals) + ',' + std::to_string(r.evaluations.size());
  } else {
    row += "NA,NA,NA,0";
  }
  return row;
}

void emit_csv(const SweepTable& table, std::ostream& out) {
  out << kSweepCsvHeader << '\n';
  for (const auto& row : table.rows) out << csv_row(row) << '\n';
}

void emit_csv(const SweepTable& table, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  emit_csv(table, out);
  out.flush();
  if (!out) throw IoError("failed writing " + path.string());
}

const char* const kRunCsvHeader =
    "problem,n,algorithm,clustering,replacement,pop,seed,success,generations,evaluations,coverage,front_size";

std::string run_csv_row(const AlgorithmConfig& cfg, std::uint64_t seed, const RunResult& r) {
  return std::string(cfg.problem.name()) + ',' + std::to_string(cfg.problem.size()) + ',' +
         cfg.algorithm_id() + ',' + clustering_label(cfg.clustering) + ',' +
         std::string(replacement_label(cfg.replacement)) + ',' +
         std::to_string(cfg.population_size) + ',' + std::to_string(seed) + ',' +
         (r.success ? "1" : "0") + ',' + std::to_string(r.generations) + ',' +
         std::to_string(r.evaluations) + ',' + std::to_string(r.coverage) + ',' +
         std::to_string(r.front_size);
}

}  // namespace mohboa
