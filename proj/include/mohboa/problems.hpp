#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "mohboa/genotype.hpp"
#include "mohboa/random.hpp"

namespace mohboa {

enum class ProblemKind { OnemaxZeromax, Trap5Invtrap5 };

std::string_view to_string(ProblemKind kind) noexcept;
std::optional<ProblemKind> parse_problem_kind(std::string_view name) noexcept;

inline constexpr std::size_t kTrapBlockSize = 5;

// Zero-based bit positions of one trap block.
using Block = std::array<std::size_t, kTrapBlockSize>;
using Partition = std::vector<Block>;

enum class PartitionMode { Contiguous, Shuffled };

std::optional<PartitionMode> parse_partition_mode(std::string_view name) noexcept;

// Blocks of 5 disjoint positions covering [0, n). Contiguous mode yields
// {0..4}, {5..9}, ...; shuffled mode deals a random permutation into blocks.
Partition make_partition(std::size_t n, PartitionMode mode, RandomSource& rng);
Partition contiguous_partition(std::size_t n);

int onemax(const Genotype& x) noexcept;
int zeromax(const Genotype& x) noexcept;
int trap5_block(int ones);
int invtrap5_block(int ones);

/// One of the two bi-objective benchmarks. Immutable after construction.
class Problem {
 public:
  static Problem onemax_zeromax(std::size_t n);
  static Problem trap5_invtrap5(std::size_t n);
  static Problem trap5_invtrap5(std::size_t n, Partition partition);

  ProblemKind kind() const noexcept { return kind_; }
  std::string_view name() const noexcept { return to_string(kind_); }
  std::size_t size() const noexcept { return n_; }
  std::size_t objective_count() const noexcept { return 2; }
  const Partition& partition() const noexcept { return partition_; }

  ObjectiveVector evaluate(const Genotype& x) const;

 private:
  Problem(ProblemKind kind, std::size_t n, Partition partition)
      : kind_(kind), n_(n), partition_(std::move(partition)) {}

  ProblemKind kind_;
  std::size_t n_;
  Partition partition_;
};

struct ReferenceFront {
  std::vector<ObjectiveVector> points;  // sorted ascending by first objective
  std::size_t size() const noexcept { return points.size(); }
};

// Closed-form front: (i, n-i) for onemax-zeromax, (4b+j, 5b-j) for the trap
// pair with b = n/5 blocks.
ReferenceFront reference_front(const Problem& problem);

/// Evaluates individuals against a problem and counts every objective
/// computation. One counter per run.
class Evaluator {
 public:
  explicit Evaluator(const Problem& problem) : problem_(&problem) {}

  void evaluate(Individual& ind);
  void evaluate(std::span<Individual> pop);

  std::uint64_t count() const noexcept { return count_; }
  const Problem& problem() const noexcept { return *problem_; }

 private:
  const Problem* problem_;
  std::uint64_t count_ = 0;
};

inline void evaluate_population(std::span<Individual> pop, Evaluator& evaluator) {
  evaluator.evaluate(pop);
}

}  // namespace mohboa
