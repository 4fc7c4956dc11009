#include "mohboa/problems.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "mohboa/errors.hpp"

namespace mohboa {

std::string_view to_string(ProblemKind kind) noexcept {
  switch (kind) {
    case ProblemKind::OnemaxZeromax:
      return "onemax-zeromax";
    case ProblemKind::Trap5Invtrap5:
      return "trap5-invtrap5";
  }
  return "unknown";
}

std::optional<ProblemKind> parse_problem_kind(std::string_view name) noexcept {
  if (name == "onemax-zeromax") return ProblemKind::OnemaxZeromax;
  if (name == "trap5-invtrap5") return ProblemKind::Trap5Invtrap5;
  return std::nullopt;
}

std::optional<PartitionMode> parse_partition_mode(std::string_view name) noexcept {
  if (name == "contiguous") return PartitionMode::Contiguous;
  if (name == "shuffled") return PartitionMode::Shuffled;
  return std::nullopt;
}

Partition contiguous_partition(std::size_t n) {
  if (n == 0 || n % kTrapBlockSize != 0)
    throw InvalidArgument("trap partition: size must be a positive multiple of 5, got " +
                          std::to_string(n));
  Partition blocks(n / kTrapBlockSize);
  for (std::size_t b = 0; b < blocks.size(); ++b)
    for (std::size_t k = 0; k < kTrapBlockSize; ++k) blocks[b][k] = b * kTrapBlockSize + k;
  return blocks;
}

Partition make_partition(std::size_t n, PartitionMode mode, RandomSource& rng) {
  Partition blocks = contiguous_partition(n);
  if (mode == PartitionMode::Contiguous) return blocks;
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  rng.shuffle(std::span<std::size_t>(order));
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (std::size_t k = 0; k < kTrapBlockSize; ++k) blocks[b][k] = order[b * kTrapBlockSize + k];
    std::sort(blocks[b].begin(), blocks[b].end());
  }
  return blocks;
}

int onemax(const Genotype& x) noexcept { return static_cast<int>(x.count_ones()); }

int zeromax(const Genotype& x) noexcept { return static_cast<int>(x.size()) - onemax(x); }

int trap5_block(int ones) {
  if (ones < 0 || ones > 5) throw InvalidArgument("trap5_block: ones count outside 0..5");
  return ones == 5 ? 5 : 4 - ones;
}

int invtrap5_block(int ones) {
  if (ones < 0 || ones > 5) throw InvalidArgument("invtrap5_block: ones count outside 0..5");
  return ones == 0 ? 5 : ones - 1;
}

Problem Problem::onemax_zeromax(std::size_t n) {
  if (n == 0) throw InvalidArgument("onemax-zeromax: size must be at least 1");
  return Problem(ProblemKind::OnemaxZeromax, n, {});
}

Problem Problem::trap5_invtrap5(std::size_t n) {
  return Problem(ProblemKind::Trap5Invtrap5, n, contiguous_partition(n));
}

Problem Problem::trap5_invtrap5(std::size_t n, Partition partition) {
  if (n == 0 || n % kTrapBlockSize != 0)
    throw InvalidArgument("trap5-invtrap5: size must be a positive multiple of 5");
  if (partition.size() != n / kTrapBlockSize)
    throw InvalidArgument("trap5-invtrap5: partition has the wrong number of blocks");
  std::vector<bool> seen(n, false);
  for (const auto& block : partition)
    for (std::size_t pos : block) {
      if (pos >= n || seen[pos])
        throw InvalidArgument("trap5-invtrap5: partition blocks must be disjoint and cover 0..n-1");
      seen[pos] = true;
    }
  return Problem(ProblemKind::Trap5Invtrap5, n, std::move(partition));
}

ObjectiveVector Problem::evaluate(const Genotype& x) const {
  if (x.size() != n_)
    throw InvalidArgument("evaluate: genotype length " + std::to_string(x.size()) +
                          " does not match problem size " + std::to_string(n_));
  if (kind_ == ProblemKind::OnemaxZeromax) {
    const int ones = onemax(x);
    return ObjectiveVector{static_cast<double>(ones), static_cast<double>(static_cast<int>(n_) - ones)};
  }
  int trap = 0;
  int inv = 0;
  for (const auto& block : partition_) {
    int u = 0;
    for (std::size_t pos : block) u += x[pos] ? 1 : 0;
    trap += trap5_block(u);
    inv += invtrap5_block(u);
  }
  return ObjectiveVector{static_cast<double>(trap), static_cast<double>(inv)};
}

ReferenceFront reference_front(const Problem& problem) {
  ReferenceFront front;
  const auto n = static_cast<double>(problem.size());
  if (problem.kind() == ProblemKind::OnemaxZeromax) {
    for (std::size_t i = 0; i <= problem.size(); ++i)
      front.points.push_back(ObjectiveVector{static_cast<double>(i), n - static_cast<double>(i)});
  } else {
    const std::size_t blocks = problem.size() / kTrapBlockSize;
    const auto b = static_cast<double>(blocks);
    for (std::size_t j = 0; j <= blocks; ++j) {
      const auto jj = static_cast<double>(j);
      front.points.push_back(ObjectiveVector{4 * b + jj, 5 * b - jj});
    }
  }
  return front;
}

void Evaluator::evaluate(Individual& ind) {
  ind.objectives = problem_->evaluate(ind.genotype);
  ++count_;
}

void Evaluator::evaluate(std::span<Individual> pop) {
  for (auto& ind : pop) evaluate(ind);
}

}  // namespace mohboa
