#pragma once

#include <span>
#include <vector>

#include "mohboa/genotype.hpp"
#include "mohboa/problems.hpp"
#include "mohboa/random.hpp"

namespace mohboa {

// a dominates b: no worse in every objective, strictly better in one.
bool dominates(const ObjectiveVector& a, const ObjectiveVector& b);

// Nondominated ranks (1 = nondominated) using the dominance-count algorithm,
// O(N^2 m). Works for any objective count.
std::vector<unsigned> nondominated_ranks_quadratic(std::span<const ObjectiveVector> points);

// Same ranks. Two-objective inputs take an O(N log N) sweep; anything else
// falls back to the quadratic algorithm.
std::vector<unsigned> nondominated_ranks(std::span<const ObjectiveVector> points);

struct CrowdingOptions {
  // Divide each objective's neighbor gap by that objective's range within
  // the rank, as standard NSGA-II does. Off by default.
  bool normalize = false;
};

// Crowding distance per point, computed within each rank separately. Ties
// in the per-objective sort keep input order.
std::vector<double> crowding_distances(std::span<const ObjectiveVector> points,
                                       std::span<const unsigned> ranks,
                                       CrowdingOptions options = {});

void nondominated_sort(std::span<Individual> pop);
void crowding_assign(std::span<Individual> pop, CrowdingOptions options = {});
// Both of the above in one pass.
void rank_and_crowd(std::span<Individual> pop, CrowdingOptions options = {});

enum class Winner { First, Second };

// Nondominated crowding comparison: lower rank, then larger crowding, then a
// fair coin.
Winner compare(const Individual& a, const Individual& b, RandomSource& rng);

// count binary tournaments between uniformly drawn (with replacement) members.
Population tournament_select(std::span<const Individual> pop, std::size_t count,
                             RandomSource& rng);

struct Coverage {
  std::size_t covered = 0;
  bool full = false;
};

// How many reference points occur exactly among the population's objectives.
Coverage front_coverage(std::span<const Individual> pop, const ReferenceFront& front);

}  // namespace mohboa
