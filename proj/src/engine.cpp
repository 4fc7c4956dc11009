#include "mohboa/engine.hpp"

#include <charconv>
#include <cmath>

#include "mohboa/errors.hpp"

namespace mohboa {

std::string_view to_string(Operator op) noexcept {
  switch (op) {
    case Operator::Umda:
      return "umda";
    case Operator::Ga:
      return "ga";
    case Operator::Hboa:
      return "hboa";
  }
  return "unknown";
}

std::optional<Operator> parse_operator(std::string_view name) noexcept {
  if (name == "umda") return Operator::Umda;
  if (name == "ga") return Operator::Ga;
  if (name == "hboa") return Operator::Hboa;
  return std::nullopt;
}

std::optional<ClusteringConfig> parse_clustering(std::string_view text) noexcept {
  if (text == "off") return ClusteringConfig::off();
  if (text == "auto") return ClusteringConfig::automatic();
  std::size_t k = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), k);
  if (ec != std::errc{} || end != text.data() + text.size() || k == 0) return std::nullopt;
  return ClusteringConfig::fixed(k);
}

std::string clustering_label(const ClusteringConfig& cfg) {
  if (!cfg.enabled) return "off";
  return cfg.k ? std::to_string(*cfg.k) : "auto";
}

std::size_t AlgorithmConfig::resolved_max_generations() const {
  if (max_generations) return *max_generations;
  const double mult = max_generations_multiplier ? *max_generations_multiplier
                                                 : (op == Operator::Ga ? 10.0 : 5.0);
  return static_cast<std::size_t>(std::llround(mult * static_cast<double>(problem.size())));
}

std::size_t AlgorithmConfig::resolved_clusters() const {
  if (!clustering.enabled) return 1;
  if (clustering.k) return *clustering.k;
  return reference_front(problem).size();
}

void AlgorithmConfig::validate() const {
  if (population_size == 0) throw InvalidArgument("population size must be at least 1");
  if (clustering.enabled && clustering.k && *clustering.k == 0)
    throw InvalidArgument("cluster count must be at least 1");
  if (max_generations_multiplier && !(*max_generations_multiplier >= 0))
    throw InvalidArgument("generation multiplier must be nonnegative");
  const double pc = ga.crossover_probability;
  const double pm = ga.resolved_mutation(problem.size());
  if (!(pc >= 0 && pc <= 1)) throw InvalidArgument("crossover probability must lie in [0, 1]");
  if (!(pm >= 0 && pm <= 1)) throw InvalidArgument("mutation probability must lie in [0, 1]");
  if (replacement.scheme == ReplacementScheme::Rtr && replacement.window) {
    if (*replacement.window == 0) throw InvalidArgument("RTR window must be at least 1");
    if (*replacement.window > population_size)
      throw InvalidArgument("RTR window exceeds population size");
  }
  if (kmeans.max_iters == 0 || kmeans.restarts == 0)
    throw InvalidArgument("k-means needs at least one iteration and one attempt");
}

std::vector<std::size_t> offspring_quota(std::size_t total, std::size_t clusters) {
  if (clusters == 0) throw InvalidArgument("offspring_quota: no clusters");
  std::vector<std::size_t> quota(clusters, total / clusters);
  for (std::size_t i = 0; i < total % clusters; ++i) ++quota[i];
  return quota;
}

RunState::RunState(AlgorithmConfig cfg, std::uint64_t seed)
    : cfg_((cfg.validate(), std::move(cfg))),
      front_(reference_front(cfg_.problem)),
      rng_(seed),
      evaluator_(cfg_.problem),
      max_generations_(cfg_.resolved_max_generations()) {
  population_ = random_population(cfg_.population_size, cfg_.problem.size(), rng_);
  evaluator_.evaluate(population_);
  record_coverage();
  if (!success_ && generation_ >= max_generations_) terminated_ = true;
}

void RunState::record_coverage() {
  const Coverage c = front_coverage(population_, front_);
  trajectory_.push_back(c.covered);
  if (c.full) {
    success_ = true;
    terminated_ = true;
  }
}

std::vector<Genotype> RunState::vary(std::span<const Genotype> cluster, std::size_t count,
                                     RandomSource& rng) const {
  switch (cfg_.op) {
    case Operator::Umda:
      return umda_sample(umda_build(cluster), count, rng);
    case Operator::Ga:
      return ga_variation(cluster, count, cfg_.ga, rng);
    case Operator::Hboa:
      // A single member carries no dependency information to learn.
      if (cluster.size() < 2) return hboa_sample(independent_network(cluster), count, rng);
      return hboa_sample(hboa_build(cluster), count, rng);
  }
  return {};
}

void RunState::step() {
  if (terminated_) throw InvalidState("step: run has already terminated");
  const std::size_t N = cfg_.population_size;

  rank_and_crowd(population_, cfg_.crowding);
  Population selected = tournament_select(population_, N, rng_);

  std::vector<std::vector<Genotype>> clusters;
  if (cfg_.clustering.enabled) {
    std::vector<ObjectiveVector> points;
    points.reserve(selected.size());
    for (const auto& ind : selected) points.push_back(ind.objectives);
    const Clustering c = kmeans(points, cfg_.resolved_clusters(), rng_, cfg_.kmeans);
    const auto members = c.members();
    for (std::size_t idx : c.nonempty) {
      std::vector<Genotype> cluster;
      cluster.reserve(members[idx].size());
      for (std::size_t i : members[idx]) cluster.push_back(selected[i].genotype);
      clusters.push_back(std::move(cluster));
    }
  } else {
    std::vector<Genotype> all;
    all.reserve(selected.size());
    for (auto& ind : selected) all.push_back(std::move(ind.genotype));
    clusters.push_back(std::move(all));
  }

  const auto quota = offspring_quota(N, clusters.size());
  Population offspring;
  offspring.reserve(N);
  for (std::size_t c = 0; c < clusters.size(); ++c) {
    RandomSource cluster_rng = rng_.split();
    if (quota[c] == 0) continue;
    for (auto& g : vary(clusters[c], quota[c], cluster_rng)) offspring.emplace_back(std::move(g));
  }
  evaluator_.evaluate(offspring);

  population_ = replace(population_, offspring, cfg_.replacement, rng_, cfg_.crowding);
  ++generation_;
  record_coverage();
  if (!success_ && generation_ >= max_generations_) terminated_ = true;
}

RunResult RunState::result() const {
  RunResult r;
  r.success = success_;
  r.generations = generation_;
  r.evaluations = evaluator_.count();
  r.coverage = trajectory_.back();
  r.front_size = front_.size();
  r.trajectory = trajectory_;
  return r;
}

RunResult run(const AlgorithmConfig& cfg, std::uint64_t seed) {
  RunState state(cfg, seed);
  while (!state.terminated()) state.step();
  return state.result();
}

}  // namespace mohboa
