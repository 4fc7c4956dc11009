#pragma once

#include <optional>
#include <string_view>

#include "mohboa/genotype.hpp"
#include "mohboa/pareto.hpp"
#include "mohboa/random.hpp"

namespace mohboa {

enum class ReplacementScheme { Elitist, Rtr };
enum class RtrMetric { Hamming, EuclideanObjective };

struct ReplacementConfig {
  ReplacementScheme scheme = ReplacementScheme::Rtr;
  std::optional<std::size_t> window;  // unset: default_rtr_window
  RtrMetric metric = RtrMetric::Hamming;
};

// max(1, min(n, N/20)).
std::size_t default_rtr_window(std::size_t n_bits, std::size_t population_size) noexcept;

// CLI spelling: "elitist", "rtr" (Hamming) or "rtr-objective".
std::optional<ReplacementConfig> parse_replacement(std::string_view name) noexcept;
std::string_view replacement_label(const ReplacementConfig& cfg) noexcept;

// Keep the parents.size() best of parents + offspring by (rank ascending,
// crowding descending), ranked on the merged set; remaining ties random.
Population elitist_replace(const Population& parents, const Population& offspring,
                           RandomSource& rng, CrowdingOptions crowding = {});

// Restricted tournament replacement. Ranks and crowding come from the merged
// parents + offspring and stay fixed for the whole pass. Each offspring, in
// order, meets the nearest of `window` distinct random members and replaces
// it if it wins the nondominated crowding comparison.
Population rtr_replace(const Population& parents, const Population& offspring,
                       std::size_t window, RtrMetric metric, RandomSource& rng,
                       CrowdingOptions crowding = {});

Population replace(const Population& parents, const Population& offspring,
                   const ReplacementConfig& cfg, RandomSource& rng,
                   CrowdingOptions crowding = {});

}  // namespace mohboa
