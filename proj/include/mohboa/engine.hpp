#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mohboa/clustering.hpp"
#include "mohboa/genotype.hpp"
#include "mohboa/pareto.hpp"
#include "mohboa/problems.hpp"
#include "mohboa/random.hpp"
#include "mohboa/replacement.hpp"
#include "mohboa/variation.hpp"

namespace mohboa {

enum class Operator { Umda, Ga, Hboa };

std::string_view to_string(Operator op) noexcept;
std::optional<Operator> parse_operator(std::string_view name) noexcept;

struct ClusteringConfig {
  bool enabled = true;
  std::optional<std::size_t> k;  // unset: number of reference-front points

  static ClusteringConfig off() { return {false, std::nullopt}; }
  static ClusteringConfig automatic() { return {true, std::nullopt}; }
  static ClusteringConfig fixed(std::size_t k) { return {true, k}; }
};

// "off", "auto" or a positive integer.
std::optional<ClusteringConfig> parse_clustering(std::string_view text) noexcept;
std::string clustering_label(const ClusteringConfig& cfg);

struct AlgorithmConfig {
  Problem problem = Problem::onemax_zeromax(10);
  std::size_t population_size = 100;
  Operator op = Operator::Hboa;
  ClusteringConfig clustering;
  ReplacementConfig replacement;
  // Generation cap as a multiple of n; unset means 5 (umda, hboa) or 10 (ga).
  std::optional<double> max_generations_multiplier;
  // Absolute generation cap; takes precedence over the multiplier.
  std::optional<std::size_t> max_generations;
  GAOperatorParams ga;
  KMeansOptions kmeans;
  CrowdingOptions crowding;

  std::size_t resolved_max_generations() const;
  std::size_t resolved_clusters() const;  // 1 when clustering is off
  void validate() const;                  // throws InvalidArgument
  std::string algorithm_id() const { return std::string(to_string(op)); }
};

struct RunResult {
  bool success = false;
  std::size_t generations = 0;
  std::uint64_t evaluations = 0;
  std::size_t coverage = 0;
  std::size_t front_size = 0;
  std::vector<std::size_t> trajectory;  // coverage of P(0), P(1), ...

  friend bool operator==(const RunResult&, const RunResult&) = default;
};

// Offspring quota for each of `clusters` nonempty clusters: floor(N/c), with
// the remainder given one each to the first clusters.
std::vector<std::size_t> offspring_quota(std::size_t total, std::size_t clusters);

/// One run of the generational loop, advanced a generation at a time.
class RunState {
 public:
  RunState(AlgorithmConfig cfg, std::uint64_t seed);

  // One generation: rank, select, cluster, vary, evaluate, replace.
  void step();
  bool terminated() const noexcept { return terminated_; }
  bool success() const noexcept { return success_; }

  std::size_t generation() const noexcept { return generation_; }
  std::uint64_t evaluations() const noexcept { return evaluator_.count(); }
  const Population& population() const noexcept { return population_; }
  const std::vector<std::size_t>& trajectory() const noexcept { return trajectory_; }
  const AlgorithmConfig& config() const noexcept { return cfg_; }
  const ReferenceFront& front() const noexcept { return front_; }

  RunResult result() const;

 private:
  std::vector<Genotype> vary(std::span<const Genotype> cluster, std::size_t count,
                             RandomSource& rng) const;
  void record_coverage();

  AlgorithmConfig cfg_;
  ReferenceFront front_;
  RandomSource rng_;
  Evaluator evaluator_;
  Population population_;
  std::vector<std::size_t> trajectory_;
  std::size_t generation_ = 0;
  std::size_t max_generations_;
  bool terminated_ = false;
  bool success_ = false;
};

RunResult run(const AlgorithmConfig& cfg, std::uint64_t seed);

}  // namespace mohboa
