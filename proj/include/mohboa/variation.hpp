#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "mohboa/genotype.hpp"
#include "mohboa/random.hpp"

namespace mohboa {

// Lower clamp for every sampled probability: 1 / (2 * cluster size).
double probability_floor(std::size_t cluster_size) noexcept;

// ---------------------------------------------------------------------------
// UMDA

struct UnivariateModel {
  std::vector<double> p;  // probability of a 1 at each position
};

// Raw ones frequency per position, before clamping.
std::vector<double> bit_frequencies(std::span<const Genotype> cluster);

UnivariateModel umda_build(std::span<const Genotype> cluster);
std::vector<Genotype> umda_sample(const UnivariateModel& model, std::size_t count,
                                  RandomSource& rng);

// ---------------------------------------------------------------------------
// Two-point crossover and bit-flip mutation

struct GAOperatorParams {
  double crossover_probability = 0.6;
  // Per-bit flip probability; unset means 1/n.
  std::optional<double> mutation_probability;

  double resolved_mutation(std::size_t n) const noexcept {
    return mutation_probability ? *mutation_probability : 1.0 / static_cast<double>(n);
  }
};

// Cuts c1 < c2 in 1..n-1 exchange the one-based positions c1+1..c2, that is
// the zero-based range [c1, c2).
std::pair<Genotype, Genotype> two_point_crossover(const Genotype& a, const Genotype& b,
                                                  std::size_t c1, std::size_t c2);

std::vector<Genotype> ga_variation(std::span<const Genotype> parents, std::size_t count,
                                   const GAOperatorParams& params, RandomSource& rng);

// ---------------------------------------------------------------------------
// Bayesian network with decision-tree local structures

struct DecisionNode {
  int split = -1;     // variable tested at an internal node; -1 for a leaf
  int if_zero = -1;   // child taken when the tested variable is 0
  int if_one = -1;
  double p_one = 0.5; // leaf probability that the modelled variable is 1
  bool leaf() const noexcept { return split < 0; }
};

/// Conditional distribution of one variable. Node 0 is the root.
struct DecisionTree {
  std::vector<DecisionNode> nodes{DecisionNode{}};

  // Variables tested anywhere in the tree, ascending, without duplicates.
  std::vector<std::size_t> tested_variables() const;
  std::size_t leaf_count() const noexcept;
  double probability(const Genotype& x) const noexcept;
};

class BayesNetLocal {
 public:
  BayesNetLocal() = default;
  explicit BayesNetLocal(std::vector<DecisionTree> trees) : trees_(std::move(trees)) {}

  std::size_t size() const noexcept { return trees_.size(); }
  const DecisionTree& tree(std::size_t var) const { return trees_.at(var); }
  std::span<const DecisionTree> trees() const noexcept { return trees_; }

  // Parents of a variable: the variables its tree tests.
  std::vector<std::size_t> parents(std::size_t var) const { return tree(var).tested_variables(); }
  // Directed edge count of the induced parent graph.
  std::size_t edge_count() const;
  // Topological order of the parent graph, or nullopt if it has a cycle.
  std::optional<std::vector<std::size_t>> topological_order() const;
  bool acyclic() const { return topological_order().has_value(); }

 private:
  std::vector<DecisionTree> trees_;
};

struct HboaBuildTrace {
  std::vector<double> scores;  // penalized score before and after each accepted split
};

// Greedy split-by-split construction under the BDe metric (uniform unit
// prior) with a 0.5*log2(N) penalty per added leaf.
BayesNetLocal hboa_build(std::span<const Genotype> cluster, HboaBuildTrace* trace = nullptr);

// Penalized log2 score of a network on a cluster.
double hboa_score(const BayesNetLocal& model, std::span<const Genotype> cluster);

// Single-leaf trees carrying the clamped marginal frequencies. Also what
// hboa_build returns when no split pays for itself.
BayesNetLocal independent_network(std::span<const Genotype> cluster);

std::vector<Genotype> hboa_sample(const BayesNetLocal& model, std::size_t count,
                                  RandomSource& rng);

}  // namespace mohboa
