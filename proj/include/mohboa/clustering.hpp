#pragma once

#include <span>
#include <vector>

#include "mohboa/genotype.hpp"
#include "mohboa/random.hpp"

namespace mohboa {

struct KMeansOptions {
  std::size_t max_iters = 100;
  std::size_t restarts = 3;
};

/// Result of k-means in objective space. Empty clusters are kept (their
/// center stays where it last was) and listed nowhere in `nonempty`.
struct Clustering {
  std::size_t k = 0;
  std::vector<std::size_t> assignment;  // cluster index per input point
  std::vector<ObjectiveVector> centers;
  std::vector<std::size_t> nonempty;    // ascending cluster indices
  double wcss = 0.0;                    // within-cluster sum of squared distances
  std::size_t iterations = 0;
  bool converged = false;
  std::vector<double> wcss_trace;       // after each assignment step

  std::vector<std::vector<std::size_t>> members() const;
};

// Indices (into `points`) of the ordered initial centers: sort by first
// objective (then second, then input index) and take ranks
// floor(N/(2k)) + i*floor(N/k), clamped to N-1.
std::vector<std::size_t> ordered_center_indices(std::span<const ObjectiveVector> points,
                                                std::size_t k);
std::vector<ObjectiveVector> init_centers_ordered(std::span<const ObjectiveVector> points,
                                                  std::size_t k);

// One Lloyd attempt from the given centers. Nearest center by Euclidean
// distance, ties to the lowest index.
Clustering kmeans_from(std::span<const ObjectiveVector> points,
                       std::vector<ObjectiveVector> centers, std::size_t max_iters);

// First attempt from ordered centers, further attempts from random distinct
// points; the attempt with the lowest WCSS wins (earliest on ties).
Clustering kmeans(std::span<const ObjectiveVector> points, std::size_t k, RandomSource& rng,
                  KMeansOptions options = {});

}  // namespace mohboa
