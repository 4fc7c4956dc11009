#include "mohboa/replacement.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "mohboa/errors.hpp"

namespace mohboa {

std::size_t default_rtr_window(std::size_t n_bits, std::size_t population_size) noexcept {
  return std::max<std::size_t>(1, std::min(n_bits, population_size / 20));
}

std::optional<ReplacementConfig> parse_replacement(std::string_view name) noexcept {
  if (name == "elitist") return ReplacementConfig{ReplacementScheme::Elitist, std::nullopt, RtrMetric::Hamming};
  if (name == "rtr") return ReplacementConfig{ReplacementScheme::Rtr, std::nullopt, RtrMetric::Hamming};
  if (name == "rtr-objective")
    return ReplacementConfig{ReplacementScheme::Rtr, std::nullopt, RtrMetric::EuclideanObjective};
  return std::nullopt;
}

std::string_view replacement_label(const ReplacementConfig& cfg) noexcept {
  if (cfg.scheme == ReplacementScheme::Elitist) return "elitist";
  return cfg.metric == RtrMetric::Hamming ? "rtr" : "rtr-objective";
}

namespace {

Population merged(const Population& parents, const Population& offspring) {
  Population all;
  all.reserve(parents.size() + offspring.size());
  all.insert(all.end(), parents.begin(), parents.end());
  all.insert(all.end(), offspring.begin(), offspring.end());
  return all;
}

}  // namespace

Population elitist_replace(const Population& parents, const Population& offspring,
                           RandomSource& rng, CrowdingOptions crowding) {
  Population all = merged(parents, offspring);
  if (all.empty()) return all;
  rank_and_crowd(all, crowding);
  std::vector<std::uint64_t> tiebreak(all.size());
  for (auto& t : tiebreak) t = rng.next();
  std::vector<std::size_t> order(all.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (*all[a].rank != *all[b].rank) return *all[a].rank < *all[b].rank;
    if (*all[a].crowding != *all[b].crowding) return *all[a].crowding > *all[b].crowding;
    if (tiebreak[a] != tiebreak[b]) return tiebreak[a] < tiebreak[b];
    return a < b;
  });
  Population next;
  next.reserve(parents.size());
  for (std::size_t i = 0; i < parents.size(); ++i) next.push_back(std::move(all[order[i]]));
  return next;
}

Population rtr_replace(const Population& parents, const Population& offspring,
                       std::size_t window, RtrMetric metric, RandomSource& rng,
                       CrowdingOptions crowding) {
  if (window == 0) throw InvalidArgument("rtr_replace: window must be at least 1");
  if (window > parents.size())
    throw InvalidArgument("rtr_replace: window " + std::to_string(window) +
                          " exceeds population size " + std::to_string(parents.size()));
  Population current = merged(parents, offspring);
  rank_and_crowd(current, crowding);
  const std::size_t n_parents = parents.size();
  std::vector<Individual> incoming(std::make_move_iterator(current.begin() + static_cast<std::ptrdiff_t>(n_parents)),
                                   std::make_move_iterator(current.end()));
  current.resize(n_parents);

  for (auto& x : incoming) {
    std::size_t nearest = 0;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t idx : rng.sample_distinct(n_parents, window)) {
      const double d = metric == RtrMetric::Hamming
                           ? static_cast<double>(hamming_distance(x.genotype, current[idx].genotype))
                           : euclidean_distance(x.objectives, current[idx].objectives);
      if (d < best) {
        best = d;
        nearest = idx;
      }
    }
    if (compare(x, current[nearest], rng) == Winner::First) current[nearest] = std::move(x);
  }
  return current;
}

Population replace(const Population& parents, const Population& offspring,
                   const ReplacementConfig& cfg, RandomSource& rng, CrowdingOptions crowding) {
  if (cfg.scheme == ReplacementScheme::Elitist)
    return elitist_replace(parents, offspring, rng, crowding);
  const std::size_t n_bits = parents.empty() ? 0 : parents.front().genotype.size();
  const std::size_t w = cfg.window ? *cfg.window : default_rtr_window(n_bits, parents.size());
  return rtr_replace(parents, offspring, w, cfg.metric, rng, crowding);
}

}  // namespace mohboa
